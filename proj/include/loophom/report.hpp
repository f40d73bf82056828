#pragma once
// Failure lists returned by the verification passes.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loophom {

struct CheckFailure {
    std::string check;    // short name of the sub-check, e.g. "relation"
    int degree = 0;
    std::string witness;  // human-readable description of what disagreed
};

struct CheckReport {
    std::size_t items_checked = 0;
    std::vector<CheckFailure> failures;

    bool pass() const { return failures.empty(); }
    void fail(std::string check, int degree, std::string witness)
    {
        failures.push_back({std::move(check), degree, std::move(witness)});
    }
    void merge(const CheckReport& other)
    {
        items_checked += other.items_checked;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
    void sort()
    {
        std::stable_sort(failures.begin(), failures.end(),
                         [](const CheckFailure& a, const CheckFailure& b) { return a.degree < b.degree; });
    }
    std::optional<CheckFailure> first() const
    {
        if (failures.empty())
            return std::nullopt;
        return *std::min_element(failures.begin(), failures.end(),
                                 [](const CheckFailure& a, const CheckFailure& b) { return a.degree < b.degree; });
    }
};

}  // namespace loophom
