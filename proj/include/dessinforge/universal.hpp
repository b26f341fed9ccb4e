#ifndef DESSINFORGE_UNIVERSAL_HPP
#define DESSINFORGE_UNIVERSAL_HPP

#include <string>
#include <vector>

#include "dessinforge/dessin.hpp"
#include "dessinforge/group_spec.hpp"

namespace dessinforge {

// A dessin living inside a direct product of previously built groups: the
// carrier is the subgroup generated by the paired generators, re-indexed as
// a standalone group.
struct ProductDessin {
    std::vector<std::string> ambient_factors; // labels of the folded factors
    RegularDessin carrier;
};

// The parallel product D1 v D2: the dessin on the subgroup of G1 x G2
// generated by (x1, x2) and (y1, y2). Commutative and associative up to
// isomorphism. Throws OrderCapError when the closure exceeds the cap.
ProductDessin parallel_product(const RegularDessin& D1, const RegularDessin& D2,
                               long long order_cap = kDefaultOrderCap);
ProductDessin parallel_product(const ProductDessin& P, const RegularDessin& D,
                               long long order_cap = kDefaultOrderCap);

// The universal cover U(G): the left fold of the parallel product over the
// canonical enumeration of dessin classes on G. Its automorphism group
// underlies exactly one dessin class and that dessin is totally symmetric;
// both facts are recomputed and reported, not assumed.
struct UniversalCover {
    ProductDessin dessin;
    int classes_folded = 0;
    std::vector<long long> factor_orbit_sizes; // orbit data of the input group
    bool unique = false;                       // carrier has exactly 1 dessin class
    bool totally_symmetric = false;
};
UniversalCover universal_dessin(const GroupPtr& G, long long order_cap = kDefaultOrderCap,
                                int workers = 1);

// |R(G)| = 1, i.e. Aut(G) is transitive on generating pairs.
bool is_unique_dessin_group(const GroupPtr& G, int workers = 1);

// Splits a dessin on a nilpotent group into its Sylow parts (the p-parts of
// the generators acting on the Sylow subgroup), one dessin per prime,
// ascending. The parallel product of the parts is isomorphic to the input.
std::vector<RegularDessin> sylow_decompose(const RegularDessin& D);

} // namespace dessinforge

#endif
