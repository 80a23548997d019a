#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "petrie/checked.hpp"

namespace petrie {

/// Dense exponent vector for up to kMaxVariables variables. Comparison is
/// lexicographic with x_1 most significant.
class Monomial {
public:
    static constexpr int kMaxVariables = 16;
    static constexpr int kMaxExponent = 255;

    Monomial() = default;

    int exponent(int var) const { return exps_.at(static_cast<std::size_t>(var)); }
    void set_exponent(int var, int e);
    int degree() const noexcept;

    Monomial operator*(const Monomial& other) const;
    Monomial swapped(int a, int b) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::array<std::uint8_t, kMaxVariables> exps_{};
};

/// Polynomial with integer coefficients in x_1..x_N. No zero coefficient is
/// ever stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Coeff>;

    explicit MultiPoly(int nvars = 1);

    static MultiPoly constant(int nvars, Coeff c);
    static MultiPoly variable(int nvars, int var);

    int variables() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Coeff coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, Coeff c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(Coeff c);
    /// this -= c * o
    void subtract_scaled(const MultiPoly& o, Coeff c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, Coeff c) { return a *= c; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// -1 for the zero polynomial or when terms have different degrees.
    int homogeneous_degree() const noexcept;
    /// Invariant under every swap of adjacent variables.
    bool is_symmetric() const;

    /// x_i -> x_i^k for every variable.
    MultiPoly substitute_powers(int k) const;

    std::string to_string() const;

private:
    void check_same_ring(const MultiPoly& o) const;

    int nvars_;
    Terms terms_;
};

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);

}  // namespace petrie
