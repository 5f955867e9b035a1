#include "hqm/report.hpp"

namespace hqm {

void PropertyReport::absorb(const PropertyReport& other) {
    samples += other.samples;
    skipped += other.skipped;
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
        if (failures.size() < max_recorded) failures.push_back(f);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::json to_json(const PropertyReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"sublaw", f.sublaw}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    nlohmann::json j = {
        {"law", r.law},
        {"samples", r.samples},
        {"skipped", r.skipped},
        {"failure_count", r.failure_count},
        {"failures", failures},
        {"verdict", r.verdict()},
    };
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

} // namespace hqm
