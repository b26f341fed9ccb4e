#ifndef DESSINFORGE_DESSIN_HPP
#define DESSINFORGE_DESSIN_HPP

#include <array>
#include <vector>

#include "dessinforge/group.hpp"

namespace dessinforge {

// A regular dessin in algebraic form: a finite group together with an ordered
// generating pair. x generates a white-vertex stabilizer, y a black-vertex
// stabilizer; edges are the group elements.
struct RegularDessin {
    GroupPtr group;
    Element x{0};
    Element y{0};
};

struct DessinInvariants {
    std::array<long long, 3> type{1, 1, 1}; // (o(x), o(y), o(xy))
    long long black_vertices = 1;
    long long white_vertices = 1;
    long long edges = 1;
    long long faces = 1;
    long long euler_characteristic = 2;
    long long genus = 0;
    long long multiplicity = 1; // |<x> n <y>|
    bool symmetric = false;
    bool reflexible = false;
    bool totally_symmetric = false;
};

// Generator substitutions inducing the dessin operations:
//   sigma1: (x,y) -> (y,x)      sigma2: (x,y) -> (y,x^-1)
//   sigma3: (x,y) -> (yx,x^-1)  iota:   (x,y) -> (x^-1,y^-1)
enum class DessinOperation { Sigma1, Sigma2, Sigma3, Iota };

// Throws UnsupportedInputError when (x, y) does not generate.
RegularDessin make_dessin(GroupPtr group, Element x, Element y);

DessinInvariants invariants(const RegularDessin& D);
long long multiplicity(const RegularDessin& D);

RegularDessin apply_operation(const RegularDessin& D, DessinOperation op);

// True iff some group isomorphism carries (x1, y1) to (x2, y2).
bool are_isomorphic(const RegularDessin& D1, const RegularDessin& D2);

bool is_symmetric(const RegularDessin& D);         // D = D^sigma1
bool is_reflexible(const RegularDessin& D);        // D = D^iota
bool is_totally_symmetric(const RegularDessin& D); // invariant under sigma1..3

// One canonical representative (lexicographically least pair) per orbit of
// Aut(G) on the generating pairs. The action is free, so all orbit sizes
// equal |Aut(G)|.
struct DessinEnumeration {
    std::vector<RegularDessin> representatives;
    std::vector<long long> orbit_sizes;
    long long generating_pairs = 0;

    std::size_t classes() const { return representatives.size(); }
};
DessinEnumeration enumerate_dessins(const GroupPtr& G, int workers = 1);

// |Aut(G)| for 2-generated G, as generating pairs / dessin classes.
long long count_automorphisms(const GroupPtr& G, int workers = 1);

// Monodromy permutations: rho = left multiplication by x, lambda = left
// multiplication by y, acting on the |G| edges.
struct EdgePermutations {
    std::vector<int> rho;
    std::vector<int> lambda;
};
EdgePermutations edge_permutations(const RegularDessin& D);
int cycle_count(const std::vector<int>& perm);

} // namespace dessinforge

#endif
