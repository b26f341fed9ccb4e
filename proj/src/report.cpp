#include "dessinforge/report.hpp"

namespace dessinforge {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::PaperSilent: return "paper-silent";
    case Verdict::PaperDiscrepancy: return "paper-discrepancy";
    }
    return "?";
}

void VerificationReport::add_match(std::string claim, std::string expected,
                                   std::string computed, bool allow_discrepancy) {
    Verdict v = Verdict::Match;
    if (expected != computed)
        v = allow_discrepancy ? Verdict::PaperDiscrepancy : Verdict::Mismatch;
    claims.push_back({std::move(claim), std::move(expected), std::move(computed), v});
}

void VerificationReport::add_silent(std::string claim, std::string computed) {
    claims.push_back({std::move(claim), std::string{}, std::move(computed), Verdict::PaperSilent});
}

void VerificationReport::append(const VerificationReport& other) {
    for (const auto& c : other.claims) {
        Claim prefixed = c;
        if (!other.subject.empty())
            prefixed.claim = other.subject + ": " + prefixed.claim;
        claims.push_back(std::move(prefixed));
    }
}

bool VerificationReport::ok() const { return mismatch_count() == 0; }

std::size_t VerificationReport::mismatch_count() const {
    std::size_t n = 0;
    for (const auto& c : claims)
        if (c.verdict == Verdict::Mismatch) ++n;
    return n;
}

std::size_t VerificationReport::discrepancy_count() const {
    std::size_t n = 0;
    for (const auto& c : claims)
        if (c.verdict == Verdict::PaperDiscrepancy) ++n;
    return n;
}

} // namespace dessinforge
