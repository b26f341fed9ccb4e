#include "dessinforge/dessin.hpp"

#include <algorithm>

#include "dessinforge/error.hpp"
#include "dessinforge/parallel.hpp"

namespace dessinforge {

RegularDessin make_dessin(GroupPtr group, Element x, Element y) {
    if (!group) throw std::invalid_argument("make_dessin: null group");
    if (x.index < 0 || x.index >= group->order() || y.index < 0 || y.index >= group->order())
        throw std::invalid_argument("make_dessin: element outside the group");
    if (!is_generating_pair(*group, x, y))
        throw UnsupportedInputError(group->label() + ": the pair does not generate the group");
    return RegularDessin{std::move(group), x, y};
}

long long multiplicity(const RegularDessin& D) {
    const FiniteGroup& G = *D.group;
    std::vector<Element> cx = subgroup_closure(G, std::array{D.x});
    std::vector<Element> cy = subgroup_closure(G, std::array{D.y});
    std::vector<Element> common;
    std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(common));
    return static_cast<long long>(common.size());
}

RegularDessin apply_operation(const RegularDessin& D, DessinOperation op) {
    const FiniteGroup& G = *D.group;
    Element nx = D.x, ny = D.y;
    switch (op) {
    case DessinOperation::Sigma1: nx = D.y; ny = D.x; break;
    case DessinOperation::Sigma2: nx = D.y; ny = G.inverse(D.x); break;
    case DessinOperation::Sigma3: nx = G.mul(D.y, D.x); ny = G.inverse(D.x); break;
    case DessinOperation::Iota: nx = G.inverse(D.x); ny = G.inverse(D.y); break;
    }
    return make_dessin(D.group, nx, ny);
}

bool are_isomorphic(const RegularDessin& D1, const RegularDessin& D2) {
    const FiniteGroup& G = *D1.group;
    const FiniteGroup& H = *D2.group;
    if (G.order() != H.order()) return false;
    if (G.element_order(D1.x) != H.element_order(D2.x)) return false;
    if (G.element_order(D1.y) != H.element_order(D2.y)) return false;
    if (G.element_order(G.mul(D1.x, D1.y)) != H.element_order(H.mul(D2.x, D2.y))) return false;
    return extend_generator_map(G, D1.x, D1.y, H, D2.x, D2.y).has_value();
}

bool is_symmetric(const RegularDessin& D) {
    return are_isomorphic(D, apply_operation(D, DessinOperation::Sigma1));
}

bool is_reflexible(const RegularDessin& D) {
    return are_isomorphic(D, apply_operation(D, DessinOperation::Iota));
}

bool is_totally_symmetric(const RegularDessin& D) {
    for (DessinOperation op :
         {DessinOperation::Sigma1, DessinOperation::Sigma2, DessinOperation::Sigma3})
        if (!are_isomorphic(D, apply_operation(D, op))) return false;
    return true;
}

DessinInvariants invariants(const RegularDessin& D) {
    const FiniteGroup& G = *D.group;
    DessinInvariants inv;
    const long long n = G.order();
    inv.type = {G.element_order(D.x), G.element_order(D.y), G.element_order(G.mul(D.x, D.y))};
    inv.edges = n;
    inv.black_vertices = n / inv.type[0];
    inv.white_vertices = n / inv.type[1];
    inv.faces = n / inv.type[2];
    inv.euler_characteristic =
        inv.black_vertices + inv.white_vertices - inv.edges + inv.faces;
    if (inv.euler_characteristic % 2 != 0 || inv.euler_characteristic > 2)
        throw ValidationError(G.label() + ": Euler characteristic " +
                              std::to_string(inv.euler_characteristic) + " is not of the form 2-2g");
    inv.genus = (2 - inv.euler_characteristic) / 2;
    inv.multiplicity = multiplicity(D);
    inv.symmetric = is_symmetric(D);
    inv.reflexible = is_reflexible(D);
    inv.totally_symmetric = inv.symmetric && is_totally_symmetric(D);
    return inv;
}

namespace {

// Hot path of enumerate_dessins for table-backed groups: BFS skeleton from a
// fixed base pair, then an O(|G|) membership test per candidate pair. The map
// built from the skeleton is an automorphism iff it is injective and respects
// every Cayley edge (any relation is a closed walk of such edges).
struct OrbitTester {
    const std::uint16_t* T = nullptr;
    int n = 0;
    int id = 0;
    std::vector<int> seq, pred; // discovery order (identity excluded)
    std::vector<std::uint8_t> via;
    std::vector<int> gx, gy; // right-multiplication edges by the base pair

    void rebase(const FiniteGroup& G, int x0, int y0) {
        n = G.order_i();
        T = G.table_data();
        id = G.identity().index;
        gx.resize(n);
        gy.resize(n);
        for (int g = 0; g < n; ++g) {
            gx[g] = T[static_cast<std::size_t>(g) * n + x0];
            gy[g] = T[static_cast<std::size_t>(g) * n + y0];
        }
        seq.clear();
        pred.clear();
        via.clear();
        std::vector<char> vis(n, 0);
        std::vector<int> frontier{id};
        vis[id] = 1;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const int g = frontier[head];
            if (const int t = gx[g]; !vis[t]) {
                vis[t] = 1;
                seq.push_back(t);
                pred.push_back(g);
                via.push_back(0);
                frontier.push_back(t);
            }
            if (const int t = gy[g]; !vis[t]) {
                vis[t] = 1;
                seq.push_back(t);
                pred.push_back(g);
                via.push_back(1);
                frontier.push_back(t);
            }
        }
    }

    bool spans_group() const { return static_cast<int>(seq.size()) == n - 1; }

    struct Scratch {
        std::vector<int> img, seen;
        int tag = 0;
    };

    bool maps_to(int x1, int y1, Scratch& s) const {
        if (static_cast<int>(s.img.size()) != n) {
            s.img.assign(n, 0);
            s.seen.assign(n, 0);
            s.tag = 0;
        }
        const int tag = ++s.tag;
        s.img[id] = id;
        s.seen[id] = tag;
        for (std::size_t t = 0; t < seq.size(); ++t) {
            const int v = T[static_cast<std::size_t>(s.img[pred[t]]) * n + (via[t] ? y1 : x1)];
            if (s.seen[v] == tag) return false; // image collision
            s.seen[v] = tag;
            s.img[seq[t]] = v;
        }
        for (int g = 0; g < n; ++g) {
            const std::size_t row = static_cast<std::size_t>(s.img[g]) * n;
            if (s.img[gx[g]] != T[row + x1]) return false;
            if (s.img[gy[g]] != T[row + y1]) return false;
        }
        return true;
    }
};

std::vector<std::pair<int, int>> generating_pairs(const FiniteGroup& G, int workers) {
    const int n = G.order_i();
    std::vector<std::pair<int, int>> pairs;
    if (n == 1) {
        pairs.emplace_back(0, 0);
        return pairs;
    }
    // Chunks write disjoint rows of the flag matrix; the lex-ordered pair list
    // is collected serially afterwards.
    std::vector<std::uint8_t> is_gen(static_cast<std::size_t>(n) * n, 0);
    if (G.is_p_group() && G.has_table()) {
        const auto& fc = G.frattini_coords();
        if (fc.rank > 2) return pairs;
        const long long p = fc.p;
        parallel_for_chunks(n, workers, [&](std::int64_t lo, std::int64_t hi) {
            for (int x = static_cast<int>(lo); x < hi; ++x) {
                const auto cx = fc.coords[x];
                std::uint8_t* row = is_gen.data() + static_cast<std::size_t>(x) * n;
                for (int y = 0; y < n; ++y) {
                    const auto cy = fc.coords[y];
                    if (fc.rank == 1) row[y] = cx[0] != 0 || cy[0] != 0;
                    else
                        row[y] = (static_cast<long long>(cx[0]) * cy[1] -
                                  static_cast<long long>(cx[1]) * cy[0]) % p != 0;
                }
            }
        });
    } else {
        parallel_for_chunks(n, workers, [&](std::int64_t lo, std::int64_t hi) {
            std::vector<int> seen(n, 0), frontier;
            int tag = 0;
            for (int x = static_cast<int>(lo); x < hi; ++x) {
                std::uint8_t* row = is_gen.data() + static_cast<std::size_t>(x) * n;
                for (int y = 0; y < n; ++y) {
                    ++tag;
                    frontier.assign(1, G.identity().index);
                    seen[frontier[0]] = tag;
                    int count = 1;
                    for (std::size_t head = 0; head < frontier.size() && count < n; ++head) {
                        for (int s : {x, y}) {
                            const int t = G.mul(Element{frontier[head]}, Element{s}).index;
                            if (seen[t] != tag) {
                                seen[t] = tag;
                                frontier.push_back(t);
                                ++count;
                            }
                        }
                    }
                    row[y] = count == n;
                }
            }
        });
    }
    for (int x = 0; x < n; ++x) {
        const std::uint8_t* row = is_gen.data() + static_cast<std::size_t>(x) * n;
        for (int y = 0; y < n; ++y)
            if (row[y]) pairs.emplace_back(x, y);
    }
    return pairs;
}

} // namespace

DessinEnumeration enumerate_dessins(const GroupPtr& G, int workers) {
    if (!G) throw std::invalid_argument("enumerate_dessins: null group");
    if (!G->has_table())
        throw OrderCapError(G->label() + ": enumeration needs a materialized table (order <= " +
                                std::to_string(FiniteGroup::kTableCap) + ")",
                            FiniteGroup::kTableCap);
    if (workers < 1) workers = 1;
    const FiniteGroup& g = *G;
    const int n = g.order_i();

    DessinEnumeration out;
    std::vector<std::pair<int, int>> pairs = generating_pairs(g, workers);
    out.generating_pairs = static_cast<long long>(pairs.size());
    if (pairs.empty()) return out;

    if (n == 1) {
        out.representatives.push_back(make_dessin(G, g.identity(), g.identity()));
        out.orbit_sizes.push_back(1);
        return out;
    }

    const long long* ord = g.cached_orders().data();
    const std::uint16_t* T = g.table_data();
    auto pair_signature = [&](int x, int y) {
        const int xy = T[static_cast<std::size_t>(x) * n + y];
        const int z = g.commutator(Element{x}, Element{y}).index;
        return std::array<long long, 4>{ord[x], ord[y], ord[xy], ord[z]};
    };

    std::vector<std::int32_t> orbit(pairs.size(), -1);
    OrbitTester tester;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (orbit[i] >= 0) continue;
        const int rep_id = static_cast<int>(out.representatives.size());
        orbit[i] = rep_id;
        const auto [x0, y0] = pairs[i];
        out.representatives.push_back(make_dessin(G, Element{x0}, Element{y0}));
        tester.rebase(g, x0, y0);
        if (!tester.spans_group())
            throw ValidationError(g.label() + ": generating-pair scan produced a non-generating pair");
        const auto sig0 = pair_signature(x0, y0);
        parallel_for_chunks(static_cast<std::int64_t>(pairs.size()) - static_cast<std::int64_t>(i) - 1,
                            workers, [&](std::int64_t lo, std::int64_t hi) {
                                OrbitTester::Scratch scratch;
                                for (std::int64_t k = lo; k < hi; ++k) {
                                    const std::size_t j = i + 1 + static_cast<std::size_t>(k);
                                    if (orbit[j] >= 0) continue;
                                    const auto [x1, y1] = pairs[j];
                                    if (pair_signature(x1, y1) != sig0) continue;
                                    if (tester.maps_to(x1, y1, scratch)) orbit[j] = rep_id;
                                }
                            });
    }
    out.orbit_sizes.assign(out.representatives.size(), 0);
    for (std::int32_t id : orbit) ++out.orbit_sizes[id];
    return out;
}

long long count_automorphisms(const GroupPtr& G, int workers) {
    DessinEnumeration e = enumerate_dessins(G, workers);
    if (e.representatives.empty())
        throw UnsupportedInputError(G->label() + ": not a 2-generated group");
    for (long long s : e.orbit_sizes)
        if (s != e.orbit_sizes.front())
            throw ValidationError(G->label() + ": orbit sizes differ; the action should be free");
    return e.generating_pairs / static_cast<long long>(e.classes());
}

EdgePermutations edge_permutations(const RegularDessin& D) {
    const FiniteGroup& G = *D.group;
    const long long n = G.order();
    EdgePermutations out;
    out.rho.resize(static_cast<std::size_t>(n));
    out.lambda.resize(static_cast<std::size_t>(n));
    for (long long e = 0; e < n; ++e) {
        out.rho[e] = G.mul(D.x, Element{static_cast<int>(e)}).index;
        out.lambda[e] = G.mul(D.y, Element{static_cast<int>(e)}).index;
    }
    return out;
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<char> vis(perm.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (vis[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!vis[j]) {
            vis[j] = 1;
            j = static_cast<std::size_t>(perm[j]);
        }
    }
    return cycles;
}

} // namespace dessinforge
