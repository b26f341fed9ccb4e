#ifndef DESSINFORGE_GROUP_HPP
#define DESSINFORGE_GROUP_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dessinforge/report.hpp"

namespace dessinforge {

// An element of a specific FiniteGroup, identified by its dense index in
// [0, |G|). Only meaningful relative to its owning group.
struct Element {
    int index = 0;
    friend constexpr auto operator<=>(Element, Element) = default;
};

// A finite group with total multiplication, identity, inverses and cached
// element orders. Groups of order <= kTableCap materialize their Cayley
// table; larger groups multiply through the collection rule they were built
// from. Immutable after construction; all operations are const and safe for
// concurrent use.
class FiniteGroup {
public:
    static constexpr int kTableCap = 4096;

    using MulFn = std::function<int(int, int)>;
    using InvFn = std::function<int(int)>;
    using RelationChecker = std::function<void(const FiniteGroup&, VerificationReport&)>;

    static std::shared_ptr<FiniteGroup>
    from_table(int order, std::vector<std::uint16_t> table, int identity,
               Element gen_x, Element gen_y, std::string label);

    // Builds from a multiplication rule; materializes the table when the
    // order fits under kTableCap. `inv` may be null (falls back to powers).
    static std::shared_ptr<FiniteGroup>
    from_rule(long long order, int identity, MulFn mul, InvFn inv,
              Element gen_x, Element gen_y, std::string label);

    long long order() const { return order_; }
    int order_i() const { return static_cast<int>(order_); }
    Element identity() const { return Element{identity_}; }
    Element gen_x() const { return gen_x_; }
    Element gen_y() const { return gen_y_; }
    const std::string& label() const { return label_; }

    Element mul(Element a, Element b) const {
        if (!table_.empty())
            return Element{table_[static_cast<std::size_t>(a.index) * order_ + b.index]};
        return Element{mul_fn_(a.index, b.index)};
    }
    Element inverse(Element g) const;
    Element power(Element g, long long n) const; // n may be negative
    Element commutator(Element g, Element h) const; // g^-1 h^-1 g h
    long long element_order(Element g) const;
    long long exponent() const; // lcm of all element orders

    bool has_table() const { return !table_.empty(); }
    const std::uint16_t* table_data() const { return table_.data(); }
    const std::vector<long long>& cached_orders() const { return elt_order_; }

    // Prime factorization of |G| as (p, multiplicity), ascending.
    const std::vector<std::pair<long long, int>>& order_factorization() const {
        return order_factors_;
    }
    // True iff |G| = p^k for a single prime; sets *p_out to p when non-null.
    bool is_p_group(long long* p_out = nullptr) const;
    bool is_abelian() const;

    // Set by builders that know the answer (spec-built groups, products).
    void set_abelian_hint(bool v) { abelian_hint_ = v; }
    void set_relation_checker(RelationChecker rc) { relation_checker_ = std::move(rc); }
    const RelationChecker& relation_checker() const { return relation_checker_; }

    // Lazily computed, cached Frattini-quotient coordinates for p-groups with
    // a materialized table. Used by the generating-pair shortcut.
    struct FrattiniCoords {
        long long p = 0;
        int rank = 0;                           // rank of G/Phi(G)
        std::vector<std::array<int, 2>> coords; // per-element, valid for rank <= 2
    };
    const FrattiniCoords& frattini_coords() const;

private:
    FiniteGroup() = default;
    void finalize(); // factorization + per-element caches for table groups

    long long order_ = 1;
    int identity_ = 0;
    Element gen_x_{0}, gen_y_{0};
    std::string label_;
    std::vector<std::uint16_t> table_; // empty for rule-backed groups
    MulFn mul_fn_;
    InvFn inv_fn_;
    std::vector<std::uint16_t> inverse_;   // table groups
    std::vector<long long> elt_order_;     // table groups
    std::vector<std::pair<long long, int>> order_factors_;
    std::optional<bool> abelian_hint_;
    RelationChecker relation_checker_;

    mutable std::once_flag frattini_once_;
    mutable std::unique_ptr<FrattiniCoords> frattini_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Least subset of G closed under multiplication and inverse containing the
// generators; ascending index order.
std::vector<Element> subgroup_closure(const FiniteGroup& G, std::span<const Element> generators);

// True iff <x, y> = G. p-groups with a table go through the Frattini-quotient
// shortcut; everything else falls back to closure. Both routes agree.
bool is_generating_pair(const FiniteGroup& G, Element x, Element y);
bool is_generating_pair_closure(const FiniteGroup& G, Element x, Element y);
bool is_generating_pair_frattini(const FiniteGroup& G, Element x, Element y);

// Derived subgroup <[g,h] : g,h in G>.
std::vector<Element> derived_subgroup(const FiniteGroup& G);
// Derived subgroup as the closure of the conjugates of [x,y]; requires that
// (x, y) generates G.
std::vector<Element> derived_subgroup_from_pair(const FiniteGroup& G, Element x, Element y);

// Frattini subgroup of a p-group, computed as the closure of G' and the p-th
// powers. Throws UnsupportedInputError for non-prime-power orders.
std::vector<Element> frattini_subgroup(const FiniteGroup& G);

// Invariant-factor decomposition d1 | d2 | ... of an abelian group.
std::vector<long long> abelian_invariants(const FiniteGroup& G);
std::vector<long long> abelian_invariants_quotient(const FiniteGroup& G,
                                                   std::span<const Element> normal_subgroup);

// The unique homomorphism G -> H with x0 -> x1, y0 -> y1 when it exists and
// is bijective; empty otherwise. (x0, y0) must generate G.
struct GeneratorMap {
    std::vector<int> image; // image[g.index] for every source element
    Element x_image{0}, y_image{0};
    Element apply(Element g) const { return Element{image[g.index]}; }
};
std::optional<GeneratorMap> extend_generator_map(const FiniteGroup& G, Element x0, Element y0,
                                                 const FiniteGroup& H, Element x1, Element y1);

// Searches for any isomorphism G -> H by trying order-compatible images of a
// generating pair of G. Exhaustive; intended for small orders.
bool groups_isomorphic(const FiniteGroup& G, const FiniteGroup& H);

// Re-indexes a multiplicatively closed subset as a standalone group.
// gen_x/gen_y are elements of G and must lie in the subset.
GroupPtr subgroup_as_group(const FiniteGroup& G, std::span<const Element> elements,
                           Element gen_x, Element gen_y, std::string label);

// Quotient by a normal subgroup (given as its element set). Optionally
// reports each element's coset index via *coset_of.
GroupPtr quotient_group(const FiniteGroup& G, std::span<const Element> normal_subgroup,
                        std::vector<int>* coset_of = nullptr);

// Nilpotency class via the lower central series: 0 trivial, 1 abelian,
// 2 when [[G,G],G] = 1 < [G,G], ... Returns -1 if the series stabilizes
// above the trivial subgroup (non-nilpotent).
int nilpotency_class(const FiniteGroup& G);

// {g : o(g) is a power of p}. A subgroup exactly when G is nilpotent.
std::vector<Element> sylow_subset(const FiniteGroup& G, long long p);

// Every Sylow subset is closed under multiplication.
bool is_nilpotent(const FiniteGroup& G);

// Identity/inverse laws, associativity (complete generator-based check for
// table groups, sampled for larger ones) and the defining relations recorded
// by the builder.
VerificationReport validate_group(const FiniteGroup& G);

} // namespace dessinforge

#endif
