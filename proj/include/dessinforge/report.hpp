#ifndef DESSINFORGE_REPORT_HPP
#define DESSINFORGE_REPORT_HPP

#include <string>
#include <vector>

namespace dessinforge {

// Verdict for one checked claim.
//   Match            computed value equals the published value
//   Mismatch         unexpected disagreement (treated as a failure)
//   PaperSilent      no published value to compare against; computed only
//   PaperDiscrepancy computed value disagrees with a published value that is
//                    on the documented-discrepancy allowlist (not a failure)
enum class Verdict { Match, Mismatch, PaperSilent, PaperDiscrepancy };

const char* verdict_name(Verdict v);

struct Claim {
    std::string claim;
    std::string paper_value;    // empty when the source is silent
    std::string computed_value;
    Verdict verdict = Verdict::PaperSilent;
};

// Append-only record of claims checked for one subject.
struct VerificationReport {
    std::string subject;
    std::vector<Claim> claims;
    double elapsed_ms = 0.0; // wall time; excluded from machine-readable output

    void add_match(std::string claim, std::string expected, std::string computed,
                   bool allow_discrepancy = false);
    void add_silent(std::string claim, std::string computed);
    void append(const VerificationReport& other);

    // True when no claim carries a plain Mismatch verdict.
    bool ok() const;
    std::size_t mismatch_count() const;
    std::size_t discrepancy_count() const;
};

} // namespace dessinforge

#endif
