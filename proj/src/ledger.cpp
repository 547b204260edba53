#include "enumera/ledger.hpp"

#include <sstream>
#include <stdexcept>

namespace enumera {

long long ComponentLedger::weighted_total() const {
    long long t = 0;
    for (const auto& e : entries) t += e.count * e.multiplicity;
    return t;
}

void ComponentLedger::validate() const {
    for (const auto& e : entries) {
        if (e.count <= 0 || e.multiplicity <= 0)
            throw std::logic_error("ledger '" + target_name + "': entry '" + e.label +
                                   "' has non-positive count or multiplicity");
    }
    if (weighted_total() != target_degree)
        throw std::logic_error("ledger '" + target_name + "': weighted total " +
                               std::to_string(weighted_total()) + " != target " +
                               std::to_string(target_degree));
}

nlohmann::ordered_json ComponentLedger::to_json() const {
    nlohmann::ordered_json j;
    j["target_name"] = target_name;
    j["target_degree"] = target_degree;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["label"] = e.label;
        je["count"] = e.count;
        je["multiplicity"] = e.multiplicity;
        je["provenance"] = e.provenance;
        j["entries"].push_back(je);
    }
    return j;
}

std::string ComponentLedger::to_tsv() const {
    std::ostringstream out;
    out << "label\tcount\tmultiplicity\tprovenance\n";
    for (const auto& e : entries)
        out << e.label << "\t" << e.count << "\t" << e.multiplicity << "\t" << e.provenance
            << "\n";
    out << "TOTAL\t" << target_degree << "\t\t" << target_name << "\n";
    return out.str();
}

ComponentLedger ComponentLedger::from_json(const nlohmann::json& j) {
    ComponentLedger l;
    l.target_name = j.at("target_name").get<std::string>();
    l.target_degree = j.at("target_degree").get<long long>();
    for (const auto& je : j.at("entries")) {
        LedgerEntry e;
        e.label = je.at("label").get<std::string>();
        e.count = je.at("count").get<long long>();
        e.multiplicity = je.at("multiplicity").get<long long>();
        e.provenance = je.at("provenance").get<std::string>();
        l.entries.push_back(std::move(e));
    }
    l.validate();
    return l;
}

}  // namespace enumera
