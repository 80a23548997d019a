#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petrie/checked.hpp"

namespace petrie {

/// Coefficients of the k-th cyclotomic polynomial, constant term first.
/// Built by exact division of z^k - 1 by the lower cyclotomic factors.
std::vector<Coeff> cyclotomic_polynomial(int k);

/// Element of Z[w] for a primitive k-th root of unity w, kept reduced modulo
/// the k-th cyclotomic polynomial so equality is coefficientwise.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int k);

    /// sum_e coeffs[e] * w^e for any number of coefficients.
    static CyclotomicInt from_powers(int k, const std::vector<Coeff>& coeffs);
    static CyclotomicInt root_power(int k, long long e);

    int order() const noexcept { return k_; }
    const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

    bool is_rational_integer() const noexcept;
    std::optional<Coeff> to_integer() const;

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);

    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

    std::string to_string() const;

private:
    void reduce(std::vector<Coeff> raw);

    int k_;
    std::vector<Coeff> coeffs_;
};

}  // namespace petrie
