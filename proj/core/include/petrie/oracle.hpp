#pragma once

#include <stdexcept>

#include "petrie/cyclotomic.hpp"
#include "petrie/multipoly.hpp"
#include "petrie/partition.hpp"
#include "petrie/schur_expansion.hpp"

// Brute-force symmetric polynomials in finitely many variables. Everything
// here is computed from definitions and is deliberately independent of the
// tiling and determinant code it is used to check.
namespace petrie::oracle {

class NotSymmetric : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sum over semistandard fillings of the skew shape with entries 1..nvars.
/// Results are memoized per (shape, nvars).
MultiPoly schur_polynomial(const SkewShape& shape, int nvars);

/// det(h_{lambda_i - mu_j - i + j}) with h_0 = 1 and h_negative = 0.
MultiPoly jacobi_trudi_polynomial(const SkewShape& shape, int nvars);

enum class BaseKind { Elementary, Complete, PowerSum, Monomial };

/// e_lambda, h_lambda, p_lambda (products over the parts) or m_lambda.
MultiPoly base_polynomial(BaseKind kind, const Partition& index, int nvars);
/// e_r, h_r, p_r, or m_(r).
MultiPoly base_polynomial(BaseKind kind, int r, int nvars);

/// G(k, m) as the sum of m_lambda over lambda |- m with lambda_1 < k.
MultiPoly g_polynomial(int k, int m, int nvars);
/// G(k, m) as the degree-m part of prod_i (1 + x_i + ... + x_i^{k-1}).
MultiPoly g_polynomial_generating(int k, int m, int nvars);

/// h_n(x_1^k, ..., x_N^k).
MultiPoly plethysm_poly(int k, int n, int nvars);

/// Peels the lexicographically greatest monomial, subtracting the matching
/// Schur polynomial, until nothing is left. Throws NotSymmetric on
/// non-symmetric input and std::invalid_argument if the input is not
/// homogeneous or has fewer variables than its degree.
SchurExpansion extract_schur_expansion(const MultiPoly& p);

/// s_{lambda/mu}(w, w^2, ..., w^{k-1}) for w a primitive k-th root of unity.
CyclotomicInt cyclotomic_eval_schur(int k, const SkewShape& shape);

}  // namespace petrie::oracle
