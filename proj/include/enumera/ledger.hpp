#ifndef ENUMERA_LEDGER_HPP
#define ENUMERA_LEDGER_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace enumera {

struct LedgerEntry {
    std::string label;
    long long count = 0;
    long long multiplicity = 1;
    std::string provenance;
};

// Itemized decomposition of an enumerative degree: the weighted total
// of the entries must equal target_degree.
struct ComponentLedger {
    std::string target_name;
    long long target_degree = 0;
    std::vector<LedgerEntry> entries;

    long long weighted_total() const;
    // Throws std::logic_error if the total mismatches or an entry has a
    // non-positive count or multiplicity.
    void validate() const;

    nlohmann::ordered_json to_json() const;
    std::string to_tsv() const;
    static ComponentLedger from_json(const nlohmann::json& j);
};

}  // namespace enumera

#endif
