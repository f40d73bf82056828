#pragma once
// The explicit free resolution of F_2 over H^*(DI(4)) = P[x7]/(x^4) (x) E[y11, z13].
//
// Cells are  x^i y^j z^k * A * prod gamma_{2^n}(b) * prod gamma_{2^n}(t) * prod gamma_{2^n}(e)
// where A ranges over 1, a, a^2, a^3 (bit 0 = a, bit 1 = a^2) and each divided
// family is stored as a bitmask over n.  The differential raises degree by 1.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "loophom/graded_dims.hpp"
#include "loophom/report.hpp"

namespace loophom {

class DegreeInhomogeneous : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InducedDifferentialNonzero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Cell {
    std::uint8_t x = 0;  // exponent < 4
    std::uint8_t y = 0;
    std::uint8_t z = 0;
    std::uint8_t a = 0;  // bit 0: a, bit 1: a^2
    std::uint32_t b = 0, t = 0, e = 0;

    int degree() const;
    bool lambda_trivial() const { return x == 0 && y == 0 && z == 0; }
    auto key() const { return std::tie(x, y, z, a, b, t, e); }
    friend bool operator<(const Cell& l, const Cell& r) { return l.key() < r.key(); }
    friend bool operator==(const Cell& l, const Cell& r) { return l.key() == r.key(); }
    std::string to_string() const;
};


enum class TRule {
    t_family,  // d gamma_{2^n}(t) = z a^2 gamma_{2^n - 1}(t)
    b_family,  // misreading with the b family in the tail; fails degree bookkeeping
};

/// Generators admitted into a (sub)complex.
struct Factors {
    bool x = true, y = true, z = true, a = true, a2 = true, b = true, t = true, e = true;
    static Factors all() { return {}; }
    static Factors left() { return {true, false, true, true, true, false, true, true}; }
    static Factors right() { return {false, true, false, false, false, true, false, false}; }
};

class Resolution {
public:
    Resolution(int cap, TRule rule = TRule::t_family, Factors factors = Factors::all());

    int cap() const { return cap_; }
    const std::vector<Cell>& cells(int n) const { return cells_.at(static_cast<std::size_t>(n)); }
    std::vector<Cell> differential(const Cell& c) const;  // GF(2) sum as a list
    std::vector<Cell> differential(const std::vector<Cell>& s) const;

    CheckReport verify() const;  // d^2 = 0 and homology = F_2 in degree 0
    // Homology dims through cap of the cochain complex.
    GradedDims homology() const;

private:
    int cap_;
    TRule rule_;
    Factors factors_;
    std::vector<std::vector<Cell>> cells_;  // degrees 0..cap+1
};

Resolution build_resolution(int cap, TRule rule = TRule::t_family);
CheckReport verify_resolution(int cap);
GradedDims ext_dims(int cap);

}  // namespace loophom
