#include "dessinforge/classification.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <utility>

#include "dessinforge/error.hpp"
#include "dessinforge/universal.hpp"

namespace dessinforge {

namespace {

long long ipow(long long p, int e) {
    long long r = 1;
    for (int t = 0; t < e; ++t) r *= p;
    return r;
}

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

// 2^e scaled strings for the family (iii) columns whose printed exponents go
// negative at a = 2.
std::string pow2_times(long long factor, int e) {
    if (e >= 0) return std::to_string(factor * ipow(2, e));
    const long long den = ipow(2, -e);
    if (factor % den == 0) return std::to_string(factor / den);
    return std::to_string(factor) + "/" + std::to_string(den);
}

std::string pow2_times_plus_1(long long factor, int e) {
    if (e >= 0) return std::to_string(factor * ipow(2, e) + 1);
    const long long den = ipow(2, -e);
    if (factor % den == 0) return std::to_string(factor / den + 1);
    return std::to_string(factor + den) + "/" + std::to_string(den);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

} // namespace

long long lift_unit(long long s, long long m, long long n) {
    if (m < 1 || n < 1 || n % m != 0)
        throw std::invalid_argument("lift_unit: m must divide n");
    if (s < 1 || s >= m) throw std::invalid_argument("lift_unit: s must satisfy 1 <= s < m");
    if (std::gcd(s, m) != 1) throw std::invalid_argument("lift_unit: gcd(s, m) must be 1");
    long long nprime = n;
    for (long long g = std::gcd(nprime, m); g > 1; g = std::gcd(nprime, m)) nprime /= g;
    if (nprime == 1) return s; // same prime support: s is already a unit mod n
    const long long t = ((s - 1) % m + m) % m * mod_inverse(nprime % m, m) % m;
    return 1 + nprime * t; // least solution of x=1 (mod n'), x=s (mod m)
}

long long dedekind_psi(long long n) {
    if (n < 1) throw std::invalid_argument("dedekind_psi: n must be positive");
    long long psi = n;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        psi = psi / p * (p + 1);
    }
    if (rest > 1) psi = psi / rest * (rest + 1);
    return psi;
}

std::string corollary_order_printed(const FamilyParams& fp) {
    if (fp.family == Family::III) return pow2_times(1, 3 * fp.a - 4);
    return std::to_string(ipow(fp.p, 2 * fp.a + fp.b));
}

std::string corollary_aut_printed(const FamilyParams& fp) {
    if (fp.family == Family::I)
        return std::to_string((fp.p + 1) * (fp.p - 1) * (fp.p - 1) *
                              ipow(fp.p, 4 * fp.a + 2 * fp.b - 3));
    if (fp.family == Family::II) return pow2_times(3, 4 * fp.a + 2 * fp.b - 3);
    return pow2_times(3, 6 * fp.a - 9);
}

std::string corollary_type_printed(const FamilyParams& fp) {
    const long long pa = ipow(fp.p, fp.a);
    return format_type({pa, pa, pa});
}

std::string corollary_genus_printed(const FamilyParams& fp) {
    if (fp.family == Family::I) {
        const long long pa = ipow(fp.p, fp.a);
        return std::to_string(ipow(fp.p, fp.a + fp.b) * (pa - 3) / 2 + 1);
    }
    if (fp.family == Family::II) return pow2_times_plus_1(ipow(2, fp.a) - 3, fp.a + fp.b - 1);
    return pow2_times_plus_1(ipow(2, fp.a) - 3, 2 * fp.a - 5);
}

long long family_order_derived(const FamilyParams& fp) {
    if (fp.family == Family::III) return ipow(2, 3 * fp.a - 3);
    return ipow(fp.p, 2 * fp.a + fp.b);
}

std::string format_invariants(const std::vector<long long>& inv) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < inv.size(); ++i) os << (i ? ", " : "") << inv[i];
    os << "]";
    return os.str();
}

std::string format_type(const std::array<long long, 3>& t) {
    std::ostringstream os;
    os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
    return os.str();
}

namespace {

// Shared per-family computation for verify_family / corollary_row /
// theorem_sweep, so the orbit enumeration runs once.
struct FamilyAnalysis {
    FamilyParams params;
    GroupPtr group;
    DessinEnumeration enumeration;
    DessinInvariants inv0; // invariants of the canonical class
    VerificationReport validation;
    int nil_class = 0;
    bool free_action = true;
};

FamilyAnalysis analyze_family(const FamilyParams& fp, long long order_cap, int workers) {
    FamilyAnalysis fa;
    fa.params = fp;
    fa.group = build_group(GroupSpec{fp}, order_cap);
    fa.validation = validate_group(*fa.group);
    fa.enumeration = enumerate_dessins(fa.group, workers);
    if (fa.enumeration.representatives.empty())
        throw ValidationError(fa.group->label() + ": no generating pair found");
    fa.inv0 = invariants(fa.enumeration.representatives.front());
    fa.nil_class = nilpotency_class(*fa.group);
    for (long long s : fa.enumeration.orbit_sizes)
        if (s != fa.enumeration.orbit_sizes.front()) fa.free_action = false;
    return fa;
}

CorollaryRow corollary_row_from(const FamilyAnalysis& fa) {
    CorollaryRow row;
    row.params = fa.params;
    row.order_paper = corollary_order_printed(fa.params);
    row.aut_paper = corollary_aut_printed(fa.params);
    row.type_paper = corollary_type_printed(fa.params);
    row.genus_paper = corollary_genus_printed(fa.params);
    row.order_computed = fa.group->order();
    row.aut_computed = fa.enumeration.generating_pairs /
                       static_cast<long long>(fa.enumeration.classes());
    row.type_computed = fa.inv0.type;
    row.genus_computed = fa.inv0.genus;
    const bool iii = fa.params.family == Family::III;
    auto verdict = [](const std::string& paper, const std::string& computed, bool allow) {
        if (paper == computed) return Verdict::Match;
        return allow ? Verdict::PaperDiscrepancy : Verdict::Mismatch;
    };
    // The printed (iii) order and genus columns are the two documented
    // Corollary discrepancies; everything else must match exactly.
    row.order_verdict = verdict(row.order_paper, std::to_string(row.order_computed), iii);
    row.aut_verdict = verdict(row.aut_paper, std::to_string(row.aut_computed), false);
    row.type_verdict = verdict(row.type_paper, format_type(row.type_computed), false);
    row.genus_verdict = verdict(row.genus_paper, std::to_string(row.genus_computed), iii);
    return row;
}

VerificationReport verify_family_from(const FamilyAnalysis& fa) {
    VerificationReport rep;
    rep.subject = fa.group->label();
    rep.append(fa.validation);
    rep.add_match("nilpotency class", "2", std::to_string(fa.nil_class));
    rep.add_match("dessin classes", "1", std::to_string(fa.enumeration.classes()));
    rep.add_match("Aut acts freely (equal orbit sizes)", "true",
                  fa.free_action ? "true" : "false");
    rep.add_match("|Aut| = generating pairs", "true",
                  fa.enumeration.classes() == 1 &&
                          fa.enumeration.orbit_sizes.front() == fa.enumeration.generating_pairs
                      ? "true"
                      : "false");
    rep.add_match("totally symmetric", "true", fa.inv0.totally_symmetric ? "true" : "false");
    const long long expected_mult = fa.params.family == Family::III ? 2 : 1;
    rep.add_match("multiplicity", std::to_string(expected_mult),
                  std::to_string(fa.inv0.multiplicity));
    rep.add_match("multiplicity <= 2", "true", fa.inv0.multiplicity <= 2 ? "true" : "false");
    rep.add_silent("type", format_type(fa.inv0.type));
    rep.add_silent("genus", std::to_string(fa.inv0.genus));
    return rep;
}

} // namespace

CorollaryRow corollary_row(const FamilyParams& fp, long long order_cap, int workers) {
    return corollary_row_from(analyze_family(fp, order_cap, workers));
}

VerificationReport corollary_row_report(const CorollaryRow& row) {
    VerificationReport rep;
    rep.subject = to_string(GroupSpec{row.params});
    rep.claims.push_back({"|G|", row.order_paper, std::to_string(row.order_computed), row.order_verdict});
    rep.claims.push_back({"|Aut(G)|", row.aut_paper, std::to_string(row.aut_computed), row.aut_verdict});
    rep.claims.push_back({"type of U", row.type_paper, format_type(row.type_computed), row.type_verdict});
    rep.claims.push_back({"genus of U", row.genus_paper, std::to_string(row.genus_computed), row.genus_verdict});
    return rep;
}

VerificationReport verify_family(const FamilyParams& fp, long long order_cap, int workers) {
    Timer t;
    VerificationReport rep = verify_family_from(analyze_family(fp, order_cap, workers));
    rep.elapsed_ms = t.ms();
    return rep;
}

VerificationReport noniso_table(const std::vector<FamilyParams>& list, long long order_cap) {
    Timer t;
    VerificationReport rep;
    rep.subject = "non-isomorphism table";
    struct Entry {
        FamilyParams params;
        GroupPtr group;
        std::vector<long long> derived_inv, ab_inv;
    };
    std::vector<Entry> entries;
    for (const FamilyParams& fp : list) {
        Entry e;
        e.params = fp;
        e.group = build_group(GroupSpec{fp}, order_cap);
        std::vector<Element> der = derived_subgroup(*e.group);
        GroupPtr derived =
            subgroup_as_group(*e.group, der, der.front(), der.front(), e.group->label() + "'");
        e.derived_inv = abelian_invariants(*derived);
        e.ab_inv = abelian_invariants_quotient(*e.group, der);
        const std::string spec = e.group->label();
        // Printed proof-table rows: (ii) disagrees with the presentation and is
        // the documented discrepancy; (iii) matches; the printed (i) derived
        // column is not adjudicated here.
        switch (fp.family) {
        case Family::I:
            rep.add_silent(spec + ": G' invariants", format_invariants(e.derived_inv));
            rep.add_match(spec + ": G^ab invariants",
                          format_invariants({ipow(fp.p, fp.a), ipow(fp.p, fp.a)}),
                          format_invariants(e.ab_inv));
            break;
        case Family::II:
            rep.add_match(spec + ": G' invariants", format_invariants({ipow(2, fp.b + 1)}),
                          format_invariants(e.derived_inv), /*allow_discrepancy=*/true);
            rep.add_match(spec + ": G^ab invariants",
                          format_invariants({ipow(2, fp.a - 1), ipow(2, fp.a)}),
                          format_invariants(e.ab_inv), /*allow_discrepancy=*/true);
            break;
        case Family::III:
            rep.add_match(spec + ": G' invariants", format_invariants({ipow(2, fp.a - 1)}),
                          format_invariants(e.derived_inv));
            rep.add_match(spec + ": G^ab invariants",
                          format_invariants({ipow(2, fp.a - 1), ipow(2, fp.a - 1)}),
                          format_invariants(e.ab_inv));
            break;
        }
        entries.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Entry& a = entries[i];
            const Entry& b = entries[j];
            if (a.group->order() != b.group->order()) continue;
            const std::string claim =
                "distinct: " + a.group->label() + " vs " + b.group->label();
            if (a.derived_inv != b.derived_inv || a.ab_inv != b.ab_inv) {
                rep.add_match(claim + " (signature)", "true", "true");
            } else {
                const bool iso = groups_isomorphic(*a.group, *b.group);
                rep.add_match(claim + " (exhaustive isomorphism search)", "true",
                              iso ? "false" : "true");
            }
        }
    rep.elapsed_ms = t.ms();
    return rep;
}

VerificationReport abelian_baseline(long long p, int a, long long order_cap, int workers) {
    Timer t;
    if (a < 1) throw std::invalid_argument("abelian_baseline: a must be >= 1");
    VerificationReport rep;
    rep.subject = "abelian baseline p=" + std::to_string(p) + ", a=" + std::to_string(a);
    GroupPtr square = build_group(GroupSpec{AbelianSquareSpec{p, a}}, order_cap);
    DessinEnumeration e = enumerate_dessins(square, workers);
    rep.add_match(square->label() + ": dessin classes", "1", std::to_string(e.classes()));
    if (e.classes() == 1) {
        DessinInvariants inv = invariants(e.representatives.front());
        rep.add_silent(square->label() + ": type", format_type(inv.type));
        rep.add_silent(square->label() + ": genus", std::to_string(inv.genus));
        rep.add_match(square->label() + ": totally symmetric", "true",
                      inv.totally_symmetric ? "true" : "false");
    }
    const long long pa = ipow(p, a);
    GroupPtr cyc = build_group(GroupSpec{CyclicSpec{pa}}, order_cap);
    DessinEnumeration ec = enumerate_dessins(cyc, workers);
    rep.add_match(cyc->label() + ": dessin classes = psi", std::to_string(dedekind_psi(pa)),
                  std::to_string(ec.classes()));
    rep.add_match(cyc->label() + ": control has several classes", "true",
                  ec.classes() != 1 ? "true" : "false");
    auto rect_spec = DirectProductSpec{std::make_shared<GroupSpec>(CyclicSpec{pa}),
                                       std::make_shared<GroupSpec>(CyclicSpec{ipow(p, a - 1)})};
    GroupPtr rect = build_group(GroupSpec{rect_spec}, order_cap);
    DessinEnumeration er = enumerate_dessins(rect, workers);
    rep.add_match(rect->label() + ": control has several classes", "true",
                  er.classes() != 1 ? "true" : "false");
    rep.elapsed_ms = t.ms();
    return rep;
}

VerificationReport decom_check(const GroupSpec& spec, long long order_cap, int workers) {
    Timer t;
    VerificationReport rep;
    GroupPtr G = build_group(spec, order_cap);
    rep.subject = "Sylow decomposition of " + G->label();
    rep.add_match("nilpotent", "true", is_nilpotent(*G) ? "true" : "false");
    DessinEnumeration e = enumerate_dessins(G, workers);
    if (e.representatives.empty())
        throw UnsupportedInputError(G->label() + ": not a 2-generated group");
    RegularDessin D = is_generating_pair(*G, G->gen_x(), G->gen_y())
                          ? make_dessin(G, G->gen_x(), G->gen_y())
                          : e.representatives.front();
    std::vector<RegularDessin> parts = sylow_decompose(D);
    long long product_classes = 1;
    for (const RegularDessin& part : parts) {
        DessinEnumeration pe = enumerate_dessins(part.group, workers);
        product_classes *= static_cast<long long>(pe.classes());
        rep.add_silent(part.group->label() + ": order / classes",
                       std::to_string(part.group->order()) + " / " + std::to_string(pe.classes()));
    }
    rep.add_match("|R(G)| multiplies over Sylow parts", std::to_string(e.classes()),
                  std::to_string(product_classes));
    RegularDessin rebuilt = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        rebuilt = parallel_product(rebuilt, parts[i], order_cap).carrier;
    rep.add_match("parallel product of parts reconstructs the dessin", "true",
                  are_isomorphic(rebuilt, D) ? "true" : "false");
    rep.elapsed_ms = t.ms();
    return rep;
}

std::vector<FamilyParams> admissible_family_params(long long max_order) {
    std::vector<FamilyParams> out;
    auto is_prime = [](long long p) {
        if (p < 2) return false;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    for (long long p = 3; p * p * p <= max_order; p += 2) {
        if (!is_prime(p)) continue;
        for (int a = 1; ipow(p, 2 * a + 1) <= max_order; ++a)
            for (int b = 1; b <= a && ipow(p, 2 * a + b) <= max_order; ++b)
                out.push_back(FamilyParams{Family::I, p, a, b});
    }
    for (int a = 2; ipow(2, 2 * a + 1) <= max_order; ++a)
        for (int b = 1; b <= a - 1 && ipow(2, 2 * a + b) <= max_order; ++b)
            out.push_back(FamilyParams{Family::II, 2, a, b});
    for (int a = 2; ipow(2, 3 * a - 3) <= max_order; ++a)
        out.push_back(FamilyParams{Family::III, 2, a, 0});
    return out;
}

SweepResult theorem_sweep(long long max_order, long long order_cap, int workers) {
    Timer t;
    SweepResult result;
    result.report.subject = "theorem sweep (order <= " + std::to_string(max_order) + ")";
    std::vector<FamilyParams> params = admissible_family_params(max_order);
    for (const FamilyParams& fp : params) {
        FamilyAnalysis fa = analyze_family(fp, order_cap, workers);
        result.report.append(verify_family_from(fa));
        CorollaryRow row = corollary_row_from(fa);
        result.report.append(corollary_row_report(row));
        result.rows.push_back(std::move(row));
    }
    result.report.append(noniso_table(params, order_cap));
    result.report.elapsed_ms = t.ms();
    return result;
}

} // namespace dessinforge
