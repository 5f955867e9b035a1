#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hqm {

/// One counterexample: the inputs and both sides of the law as evaluated.
struct Failure {
    std::string sublaw;
    std::vector<std::string> inputs;
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one law over a batch of samples.
struct PropertyReport {
    static constexpr std::size_t max_recorded = 32;

    std::string law;
    std::size_t samples = 0;
    std::size_t skipped = 0;  // samples excluded by a precondition
    std::size_t failure_count = 0;
    std::vector<Failure> failures;  // first max_recorded counterexamples
    std::vector<std::string> notes;

    bool passed() const { return failure_count == 0; }
    std::string verdict() const { return passed() ? "pass" : "fail"; }

    void add_failure(Failure f) {
        ++failure_count;
        if (failures.size() < max_recorded) failures.push_back(std::move(f));
    }

    /// Merge another report for the same law (e.g. a parallel chunk).
    void absorb(const PropertyReport& other);
};

nlohmann::json to_json(const PropertyReport& r);

} // namespace hqm
