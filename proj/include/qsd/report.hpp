#ifndef QSD_REPORT_HPP
#define QSD_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsd/design.hpp"

namespace qsd {

// Verdict vocabulary for a report entry.
inline constexpr const char* kEliminated = "eliminated";
inline constexpr const char* kSurvivor = "survivor";
inline constexpr const char* kUnresolved = "unresolved";
inline constexpr const char* kRoutedSpecial = "routed-to-special";

struct ReportEntry {
    std::string case_id;
    std::string family;
    std::string subgroup;
    std::string stage;  // symbolic-bound | exact-gcd | param-search | special
    std::optional<unsigned long> q;
    std::string h;           // certificate gcd polynomial, printed
    std::optional<Int> c;    // denominator-clearing multiplier
    std::optional<Int> a;    // exact gcd value at q
    std::vector<DesignParams> params;  // surviving quintuples, normally empty
    std::string verdict;
    std::vector<std::string> annotations;
};

struct EliminationReport {
    std::vector<ReportEntry> entries;

    void sort_entries();
    std::size_t count(const std::string& verdict) const;
    bool clean() const;  // no survivor and no unresolved entries

    // jsonl: one object per entry, fixed key order (case_id, family,
    // subgroup, stage, q, h, c, a, params, verdict, annotations); large
    // integers serialized as decimal strings.
    std::string to_jsonl() const;
    std::string to_table() const;
};

/// Inverse of to_jsonl, used for round-trip checks.
EliminationReport report_from_jsonl(const std::string& text);

}  // namespace qsd

#endif
