#include "dessinforge/cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dessinforge/catalog.hpp"
#include "dessinforge/classification.hpp"
#include "dessinforge/error.hpp"
#include "dessinforge/parallel.hpp"
#include "dessinforge/universal.hpp"
#include "dessinforge/version.hpp"

namespace dessinforge {

namespace {

using nlohmann::json;

struct CliConfig {
    long long order_cap = kDefaultOrderCap;
    int workers = 1;
    std::string output = "text";
    std::string catalog_path;

    bool json_mode() const { return output == "json-lines"; }
};

// Flag beats environment beats default; indices must stay addressable.
long long resolve_order_cap(std::optional<long long> flag) {
    long long cap = kDefaultOrderCap;
    if (const char* env = std::getenv("DESSIN_FORGE_ORDER_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = v;
    }
    if (flag) cap = *flag;
    return std::min(cap, 1LL << 30);
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

json claim_json(const std::string& scope, const std::string& subject, const Claim& c) {
    json j;
    j["command"] = "verify";
    j["scope"] = scope;
    j["subject"] = subject;
    j["claim"] = c.claim;
    j["paper_value"] = c.paper_value;
    j["computed_value"] = c.computed_value;
    j["verdict"] = verdict_name(c.verdict);
    return j;
}

void render_report(const VerificationReport& rep, const CliConfig& cfg, std::ostream& out,
                   const std::string& scope) {
    if (cfg.json_mode()) {
        for (const Claim& c : rep.claims) out << claim_json(scope, rep.subject, c).dump() << "\n";
        json summary;
        summary["command"] = "verify-summary";
        summary["scope"] = scope;
        summary["subject"] = rep.subject;
        summary["claims"] = rep.claims.size();
        summary["mismatches"] = rep.mismatch_count();
        summary["paper_discrepancies"] = rep.discrepancy_count();
        out << summary.dump() << "\n";
        return;
    }
    out << "== " << rep.subject << "\n";
    for (const Claim& c : rep.claims) {
        out << "  [" << verdict_name(c.verdict) << "] " << c.claim;
        if (!c.paper_value.empty()) out << " | paper=" << c.paper_value;
        out << " | computed=" << c.computed_value << "\n";
    }
    out << "  summary: " << rep.claims.size() << " claims, " << rep.mismatch_count()
        << " mismatches, " << rep.discrepancy_count() << " paper-discrepancies\n";
    if (rep.elapsed_ms > 0)
        out << "  elapsed: " << rep.elapsed_ms << " ms (non-deterministic)\n";
}

int report_exit(const VerificationReport& rep) { return rep.ok() ? 0 : 1; }

int cmd_group(const std::string& spec_text, const CliConfig& cfg, std::ostream& out) {
    GroupSpec spec = parse_group_spec(spec_text);
    GroupPtr G = build_group(spec, cfg.order_cap);
    VerificationReport validation = validate_group(*G);

    std::optional<long long> exponent;
    if (G->has_table()) exponent = G->exponent();
    std::optional<int> nil_class;
    std::optional<std::vector<long long>> derived_inv, ab_inv;
    try {
        std::vector<Element> der = derived_subgroup(*G);
        nil_class = nilpotency_class(*G);
        GroupPtr derived = subgroup_as_group(*G, der, der.front(), der.front(), G->label() + "'");
        derived_inv = abelian_invariants(*derived);
        ab_inv = abelian_invariants_quotient(*G, der);
    } catch (const OrderCapError&) {
        // Left unreported above the table cap.
    } catch (const UnsupportedInputError&) {
    }

    if (cfg.json_mode()) {
        json j;
        j["command"] = "group";
        j["spec"] = to_string(spec);
        j["order"] = G->order();
        if (exponent) j["exponent"] = *exponent;
        if (nil_class) j["nilpotency_class"] = *nil_class;
        if (derived_inv) j["derived_invariants"] = *derived_inv;
        if (ab_inv) j["abelianization_invariants"] = *ab_inv;
        j["validation_ok"] = validation.ok();
        out << j.dump() << "\n";
        return 0;
    }
    out << "group: " << to_string(spec) << "\n";
    out << "order: " << G->order() << "\n";
    out << "exponent: " << (exponent ? std::to_string(*exponent) : "-") << "\n";
    out << "nilpotency class: " << (nil_class ? std::to_string(*nil_class) : "-") << "\n";
    out << "derived subgroup invariants: "
        << (derived_inv ? format_invariants(*derived_inv) : "-") << "\n";
    out << "abelianization invariants: " << (ab_inv ? format_invariants(*ab_inv) : "-") << "\n";
    out << "validation: " << (validation.ok() ? "pass" : "FAIL") << "\n";
    return 0;
}

int cmd_dessins(const std::string& spec_text, const CliConfig& cfg, std::ostream& out) {
    GroupSpec spec = parse_group_spec(spec_text);
    GroupPtr G = build_group(spec, cfg.order_cap);
    DessinEnumeration e = enumerate_dessins(G, cfg.workers);
    if (e.representatives.empty())
        throw UnsupportedInputError(G->label() + ": not a 2-generated group");
    const long long aut = e.generating_pairs / static_cast<long long>(e.classes());
    if (!cfg.json_mode())
        out << "dessins on " << to_string(spec) << ": " << e.classes() << " classes, "
            << e.generating_pairs << " generating pairs, |Aut| = " << aut << "\n";
    for (std::size_t k = 0; k < e.representatives.size(); ++k) {
        const RegularDessin& D = e.representatives[k];
        DessinInvariants inv = invariants(D);
        if (cfg.json_mode()) {
            json j;
            j["command"] = "dessins";
            j["spec"] = to_string(spec);
            j["class_index"] = k;
            j["x_index"] = D.x.index;
            j["y_index"] = D.y.index;
            j["type"] = inv.type;
            j["genus"] = inv.genus;
            j["multiplicity"] = inv.multiplicity;
            j["symmetric"] = inv.symmetric;
            j["reflexible"] = inv.reflexible;
            j["totally_symmetric"] = inv.totally_symmetric;
            j["orbit_size"] = e.orbit_sizes[k];
            out << j.dump() << "\n";
        } else {
            out << "  class " << k << ": pair (" << D.x.index << ", " << D.y.index << "), type "
                << format_type(inv.type) << ", genus " << inv.genus << ", multiplicity "
                << inv.multiplicity << ", symmetric " << bool_str(inv.symmetric) << ", reflexible "
                << bool_str(inv.reflexible) << ", totally symmetric "
                << bool_str(inv.totally_symmetric) << ", orbit " << e.orbit_sizes[k] << "\n";
        }
    }
    if (cfg.json_mode()) {
        json j;
        j["command"] = "dessins-summary";
        j["spec"] = to_string(spec);
        j["classes"] = e.classes();
        j["generating_pairs"] = e.generating_pairs;
        j["aut_order"] = aut;
        out << j.dump() << "\n";
    }
    return 0;
}

int cmd_universal(const std::string& spec_text, const CliConfig& cfg, std::ostream& out) {
    GroupSpec spec = parse_group_spec(spec_text);
    GroupPtr G = build_group(spec, cfg.order_cap);
    UniversalCover u = universal_dessin(G, cfg.order_cap, cfg.workers);
    DessinInvariants inv = invariants(u.dessin.carrier);
    if (cfg.json_mode()) {
        json j;
        j["command"] = "universal";
        j["spec"] = to_string(spec);
        j["classes_folded"] = u.classes_folded;
        j["order"] = u.dessin.carrier.group->order();
        j["type"] = inv.type;
        j["genus"] = inv.genus;
        j["unique"] = u.unique;
        j["totally_symmetric"] = u.totally_symmetric;
        j["factor_orbit_sizes"] = u.factor_orbit_sizes;
        out << j.dump() << "\n";
        return 0;
    }
    out << "universal cover of " << to_string(spec) << "\n";
    out << "classes folded: " << u.classes_folded << "\n";
    out << "order: " << u.dessin.carrier.group->order() << "\n";
    out << "type: " << format_type(inv.type) << "\n";
    out << "genus: " << inv.genus << "\n";
    out << "unique dessin class: " << bool_str(u.unique) << "\n";
    out << "totally symmetric: " << bool_str(u.totally_symmetric) << "\n";
    out << "factor orbit sizes: " << format_invariants(u.factor_orbit_sizes) << "\n";
    return 0;
}

int cmd_catalog_build(const std::vector<std::string>& spec_texts,
                      std::optional<long long> max_order, const CliConfig& cfg,
                      std::ostream& out) {
    if (cfg.catalog_path.empty())
        throw SpecParseError("catalog build requires --catalog PATH", 0);
    std::vector<GroupSpec> specs;
    for (const std::string& s : spec_texts) specs.push_back(parse_group_spec(s));
    if (max_order)
        for (const FamilyParams& fp : admissible_family_params(*max_order))
            specs.push_back(GroupSpec{fp});
    if (specs.empty())
        throw SpecParseError("catalog build requires --spec entries or --max-order", 0);
    std::vector<CatalogRecord> records = build_catalog_records(specs, cfg.order_cap, cfg.workers);
    write_catalog_file(cfg.catalog_path, records);
    if (cfg.json_mode()) {
        json j;
        j["command"] = "catalog-build";
        j["records"] = records.size();
        j["path"] = cfg.catalog_path;
        out << j.dump() << "\n";
    } else {
        out << "wrote " << records.size() << " records to " << cfg.catalog_path << "\n";
    }
    return 0;
}

int cmd_catalog_query(const CatalogQuery& q, const CliConfig& cfg, std::ostream& out) {
    if (cfg.catalog_path.empty())
        throw SpecParseError("catalog query requires --catalog PATH", 0);
    std::vector<CatalogRecord> records = read_catalog_file(cfg.catalog_path);
    std::vector<CatalogRecord> hits = query_catalog(records, q);
    for (const CatalogRecord& r : hits) {
        if (cfg.json_mode()) {
            out << record_to_json_line(r) << "\n";
        } else {
            out << r.group_spec << ": pair (" << r.x_index << ", " << r.y_index << "), type "
                << format_type(r.inv.type) << ", genus " << r.inv.genus << ", multiplicity "
                << r.inv.multiplicity << ", totally symmetric "
                << bool_str(r.inv.totally_symmetric) << ", orbit " << r.orbit_size << ", classes "
                << r.class_count << "\n";
        }
    }
    if (!cfg.json_mode()) out << hits.size() << " of " << records.size() << " records matched\n";
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"regular dessins d'enfants as finite groups with generating pairs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CliConfig cfg;
    std::optional<long long> cap_flag;
    cfg.workers = default_workers();
    app.add_option("--order-cap", cap_flag, "cap on group/closure orders");
    app.add_option("--workers", cfg.workers, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "output mode")
        ->check(CLI::IsMember({"text", "json-lines"}))
        ->capture_default_str();
    app.add_option("--catalog", cfg.catalog_path, "catalog file path");

    std::string spec_text;
    auto* c_group = app.add_subcommand("group", "build a group and print its basic data");
    c_group->add_option("spec", spec_text, "group spec")->required();
    auto* c_dessins = app.add_subcommand("dessins", "enumerate dessin classes on a group");
    c_dessins->add_option("spec", spec_text, "group spec")->required();
    auto* c_universal = app.add_subcommand("universal", "compute the universal cover U(G)");
    c_universal->add_option("spec", spec_text, "group spec")->required();

    auto* c_verify = app.add_subcommand("verify", "run a verification scope");
    std::string scope;
    c_verify->add_option("scope", scope, "theorem | corollary | abelian | decom")->required();
    c_verify->add_option("spec", spec_text, "group spec (decom scope)");
    std::optional<long long> max_order;
    std::optional<std::string> family_opt;
    std::optional<long long> p_opt;
    std::optional<int> a_opt, b_opt;
    c_verify->add_option("--max-order", max_order, "sweep bound on the group order");
    c_verify->add_option("--family", family_opt, "family selector: i | ii | iii");
    c_verify->add_option("--p", p_opt, "prime parameter");
    c_verify->add_option("--a", a_opt, "parameter a");
    c_verify->add_option("--b", b_opt, "parameter b");

    auto* c_catalog = app.add_subcommand("catalog", "build or query a dessin catalog");
    c_catalog->require_subcommand(1);
    auto* c_build = c_catalog->add_subcommand("build", "write catalog records");
    std::vector<std::string> spec_list;
    std::optional<long long> build_max_order;
    c_build->add_option("--spec", spec_list, "group spec (repeatable)");
    c_build->add_option("--max-order", build_max_order, "sweep family groups up to this order");
    auto* c_query = c_catalog->add_subcommand("query", "filter catalog records");
    CatalogQuery query;
    std::optional<std::string> type_filter;
    std::optional<long long> genus_min, genus_max;
    c_query->add_option("--genus-min", genus_min, "minimum genus");
    c_query->add_option("--genus-max", genus_max, "maximum genus");
    c_query->add_option("--type", type_filter, "type triple l,m,n");
    c_query->add_flag("--symmetric", query.require_symmetric, "only symmetric dessins");
    c_query->add_flag("--reflexible", query.require_reflexible, "only reflexible dessins");
    c_query->add_flag("--totally-symmetric", query.require_totally_symmetric,
                      "only totally symmetric dessins");
    c_query->add_flag("--unique", query.require_unique, "only unique-dessin groups");

    auto* c_psi = app.add_subcommand("psi", "Dedekind psi function");
    long long psi_n = 1;
    c_psi->add_option("n", psi_n, "argument")->required();

    auto* c_lift = app.add_subcommand("lift-unit", "lift a unit mod m to a unit mod n");
    long long lift_s = 1, lift_m = 1, lift_n = 1;
    c_lift->add_option("s", lift_s, "unit mod m")->required();
    c_lift->add_option("m", lift_m, "modulus m (divides n)")->required();
    c_lift->add_option("n", lift_n, "modulus n")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    cfg.order_cap = resolve_order_cap(cap_flag);

    try {
        if (c_group->parsed()) return cmd_group(spec_text, cfg, out);
        if (c_dessins->parsed()) return cmd_dessins(spec_text, cfg, out);
        if (c_universal->parsed()) return cmd_universal(spec_text, cfg, out);
        if (c_verify->parsed()) {
            if (scope == "theorem") {
                SweepResult sweep = theorem_sweep(max_order.value_or(512), cfg.order_cap, cfg.workers);
                render_report(sweep.report, cfg, out, "theorem");
                return report_exit(sweep.report);
            }
            if (scope == "corollary") {
                std::vector<FamilyParams> params;
                if (family_opt) {
                    FamilyParams fp;
                    if (*family_opt == "i") fp.family = Family::I;
                    else if (*family_opt == "ii") fp.family = Family::II;
                    else if (*family_opt == "iii") fp.family = Family::III;
                    else throw SpecParseError("unknown family '" + *family_opt + "'", 0);
                    fp.p = p_opt.value_or(fp.family == Family::I ? 3 : 2);
                    if (!a_opt) throw SpecParseError("corollary with --family requires --a", 0);
                    fp.a = *a_opt;
                    fp.b = b_opt.value_or(fp.family == Family::III ? 0 : 1);
                    params.push_back(fp);
                } else {
                    params = admissible_family_params(max_order.value_or(512));
                }
                VerificationReport all;
                all.subject = "corollary table";
                for (const FamilyParams& fp : params)
                    all.append(corollary_row_report(corollary_row(fp, cfg.order_cap, cfg.workers)));
                render_report(all, cfg, out, "corollary");
                return report_exit(all);
            }
            if (scope == "abelian") {
                if (!p_opt || !a_opt)
                    throw SpecParseError("abelian scope requires --p and --a", 0);
                VerificationReport rep = abelian_baseline(*p_opt, *a_opt, cfg.order_cap, cfg.workers);
                render_report(rep, cfg, out, "abelian");
                return report_exit(rep);
            }
            if (scope == "decom") {
                if (spec_text.empty()) throw SpecParseError("decom scope requires a group spec", 0);
                VerificationReport rep =
                    decom_check(parse_group_spec(spec_text), cfg.order_cap, cfg.workers);
                render_report(rep, cfg, out, "decom");
                return report_exit(rep);
            }
            throw SpecParseError("unknown verify scope '" + scope + "'", 0);
        }
        if (c_build->parsed()) return cmd_catalog_build(spec_list, build_max_order, cfg, out);
        if (c_query->parsed()) {
            query.genus_min = genus_min;
            query.genus_max = genus_max;
            if (type_filter) {
                std::array<long long, 3> t{};
                char comma = 0;
                std::istringstream is(*type_filter);
                if (!(is >> t[0] >> comma >> t[1] >> comma >> t[2]))
                    throw SpecParseError("bad --type filter, expected l,m,n", 0);
                query.type = t;
            }
            return cmd_catalog_query(query, cfg, out);
        }
        if (c_psi->parsed()) {
            const long long v = dedekind_psi(psi_n);
            if (cfg.json_mode())
                out << json{{"command", "psi"}, {"n", psi_n}, {"value", v}}.dump() << "\n";
            else out << "psi(" << psi_n << ") = " << v << "\n";
            return 0;
        }
        if (c_lift->parsed()) {
            const long long v = lift_unit(lift_s, lift_m, lift_n);
            if (cfg.json_mode())
                out << json{{"command", "lift-unit"}, {"s", lift_s}, {"m", lift_m}, {"n", lift_n},
                            {"value", v}}
                           .dump()
                    << "\n";
            else
                out << "lift of " << lift_s << " (mod " << lift_m << ") to a unit mod " << lift_n
                    << " = " << v << "\n";
            return 0;
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const SpecParseError& e) {
        err << "parse error: " << e.what() << " (at position " << e.pos << ")\n";
        return 2;
    } catch (const OrderCapError& e) {
        err << "order cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedInputError& e) {
        err << "unsupported input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dessinforge
