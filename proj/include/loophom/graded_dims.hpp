#pragma once
// Degreewise dimensions (a truncated Poincare series).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loophom {

class GradedDims {
public:
    GradedDims() = default;
    explicit GradedDims(int cap) : dims_(static_cast<std::size_t>(cap + 1), 0) {}
    explicit GradedDims(std::vector<std::uint64_t> dims) : dims_(std::move(dims)) {}

    int cap() const { return static_cast<int>(dims_.size()) - 1; }
    std::uint64_t operator[](int n) const { return dims_.at(static_cast<std::size_t>(n)); }
    std::uint64_t& operator[](int n) { return dims_.at(static_cast<std::size_t>(n)); }
    const std::vector<std::uint64_t>& values() const { return dims_; }

    GradedDims truncated(int cap) const;
    // Coefficientwise product of series, truncated to the smaller cap.
    GradedDims operator*(const GradedDims& other) const;

    // Compares through min(cap); returns the first differing degree.
    std::optional<int> first_difference(const GradedDims& other) const;
    bool agrees_with(const GradedDims& other) const { return !first_difference(other).has_value(); }

    // Series 1 + t^deg + ... + t^{deg(height-1)}; height 0 means polynomial.
    static GradedDims truncated_polynomial(int deg, int height, int cap);
    static GradedDims exterior(int deg, int cap) { return truncated_polynomial(deg, 2, cap); }
    static GradedDims polynomial(int deg, int cap) { return truncated_polynomial(deg, 0, cap); }
    static GradedDims unit(int cap);

    std::string to_string() const;
    friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
    std::vector<std::uint64_t> dims_;
};

}  // namespace loophom
