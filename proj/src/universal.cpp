#include "dessinforge/universal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "dessinforge/error.hpp"

namespace dessinforge {

namespace {

std::uint64_t pack(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

// Shared state for carriers too large to materialize as a table.
struct PairCarrier {
    GroupPtr g1, g2;
    std::vector<std::uint64_t> codes; // ascending
    std::unordered_map<std::uint64_t, int> index_of;
};

RegularDessin build_carrier(const RegularDessin& D1, const RegularDessin& D2,
                            long long order_cap, const std::string& label) {
    const GroupPtr& G1 = D1.group;
    const GroupPtr& G2 = D2.group;
    const std::uint64_t start = pack(G1->identity().index, G2->identity().index);
    const std::uint64_t cx = pack(D1.x.index, D2.x.index);
    const std::uint64_t cy = pack(D1.y.index, D2.y.index);

    std::vector<std::uint64_t> frontier{start};
    std::unordered_set<std::uint64_t> seen{start};
    const std::array<std::pair<Element, Element>, 2> gens{
        std::pair{D1.x, D2.x}, std::pair{D1.y, D2.y}};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const std::uint64_t c = frontier[head];
        const Element a{static_cast<int>(c >> 32)};
        const Element b{static_cast<int>(c & 0xFFFFFFFFu)};
        for (const auto& [s1, s2] : gens) {
            const std::uint64_t t = pack(G1->mul(a, s1).index, G2->mul(b, s2).index);
            if (seen.insert(t).second) {
                if (static_cast<long long>(seen.size()) > order_cap)
                    throw OrderCapError(label + ": closure exceeded the order cap", order_cap);
                frontier.push_back(t);
            }
        }
    }
    std::sort(frontier.begin(), frontier.end()); // deterministic re-indexing
    const long long m = static_cast<long long>(frontier.size());

    auto state = std::make_shared<PairCarrier>();
    state->g1 = G1;
    state->g2 = G2;
    state->codes = std::move(frontier);
    state->index_of.reserve(state->codes.size() * 2);
    for (std::size_t i = 0; i < state->codes.size(); ++i)
        state->index_of.emplace(state->codes[i], static_cast<int>(i));

    auto mul = [state](int u, int v) {
        const std::uint64_t cu = state->codes[u], cv = state->codes[v];
        const Element a = state->g1->mul(Element{static_cast<int>(cu >> 32)},
                                         Element{static_cast<int>(cv >> 32)});
        const Element b = state->g2->mul(Element{static_cast<int>(cu & 0xFFFFFFFFu)},
                                         Element{static_cast<int>(cv & 0xFFFFFFFFu)});
        return state->index_of.at(pack(a.index, b.index));
    };
    auto inv = [state](int u) {
        const std::uint64_t cu = state->codes[u];
        const Element a = state->g1->inverse(Element{static_cast<int>(cu >> 32)});
        const Element b = state->g2->inverse(Element{static_cast<int>(cu & 0xFFFFFFFFu)});
        return state->index_of.at(pack(a.index, b.index));
    };
    const int id = state->index_of.at(start);
    const Element x{state->index_of.at(cx)};
    const Element y{state->index_of.at(cy)};
    auto C = FiniteGroup::from_rule(m, id, mul, inv, x, y, label);
    if (G1->is_abelian() && G2->is_abelian()) C->set_abelian_hint(true);
    return make_dessin(std::move(C), x, y);
}

} // namespace

ProductDessin parallel_product(const RegularDessin& D1, const RegularDessin& D2,
                               long long order_cap) {
    ProductDessin out;
    out.ambient_factors = {D1.group->label(), D2.group->label()};
    const std::string label = "(" + D1.group->label() + ")v(" + D2.group->label() + ")";
    out.carrier = build_carrier(D1, D2, order_cap, label);
    return out;
}

ProductDessin parallel_product(const ProductDessin& P, const RegularDessin& D,
                               long long order_cap) {
    ProductDessin out;
    out.ambient_factors = P.ambient_factors;
    out.ambient_factors.push_back(D.group->label());
    const std::string label = "(" + P.carrier.group->label() + ")v(" + D.group->label() + ")";
    out.carrier = build_carrier(P.carrier, D, order_cap, label);
    return out;
}

UniversalCover universal_dessin(const GroupPtr& G, long long order_cap, int workers) {
    DessinEnumeration classes = enumerate_dessins(G, workers);
    if (classes.representatives.empty())
        throw UnsupportedInputError(G->label() + ": not a 2-generated group");
    UniversalCover out;
    out.classes_folded = static_cast<int>(classes.classes());
    out.factor_orbit_sizes = classes.orbit_sizes;
    out.dessin.ambient_factors.assign(classes.classes(), G->label());
    out.dessin.carrier = classes.representatives.front();
    for (std::size_t i = 1; i < classes.representatives.size(); ++i) {
        const std::string label = "U(" + G->label() + ")#" + std::to_string(i + 1);
        out.dessin.carrier =
            build_carrier(out.dessin.carrier, classes.representatives[i], order_cap, label);
    }
    out.unique = is_unique_dessin_group(out.dessin.carrier.group, workers);
    out.totally_symmetric = is_totally_symmetric(out.dessin.carrier);
    return out;
}

bool is_unique_dessin_group(const GroupPtr& G, int workers) {
    return enumerate_dessins(G, workers).classes() == 1;
}

namespace {

long long mod_inverse(long long a, long long m) {
    long long old_r = a % m, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        const long long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return ((old_s % m) + m) % m;
}

// The p-part of g: the power of g of p-power order whose complement part is
// trivial (CRT on the exponent).
Element p_part(const FiniteGroup& G, Element g, long long p) {
    long long o = G.element_order(g);
    long long pe = 1;
    while (o % p == 0) { o /= p; pe *= p; }
    const long long m = o; // p'-part of the order
    if (pe == 1) return G.identity();
    if (m == 1) return g;
    return G.power(g, m * mod_inverse(m % pe, pe));
}

} // namespace

std::vector<RegularDessin> sylow_decompose(const RegularDessin& D) {
    const GroupPtr& G = D.group;
    if (!is_nilpotent(*G))
        throw UnsupportedInputError(G->label() + ": Sylow decomposition needs a nilpotent group");
    if (G->order_factorization().size() <= 1) return {D};
    std::vector<RegularDessin> parts;
    for (auto [p, e] : G->order_factorization()) {
        std::vector<Element> sp = sylow_subset(*G, p);
        const Element xp = p_part(*G, D.x, p);
        const Element yp = p_part(*G, D.y, p);
        GroupPtr Sp = subgroup_as_group(*G, sp, xp, yp,
                                        "sylow" + std::to_string(p) + "(" + G->label() + ")");
        parts.push_back(make_dessin(Sp, Sp->gen_x(), Sp->gen_y()));
    }
    return parts;
}

} // namespace dessinforge
