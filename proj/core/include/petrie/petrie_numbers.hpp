#pragma once

#include <string_view>

#include "petrie/partition.hpp"
#include "petrie/schur_expansion.hpp"
#include "petrie/tilings.hpp"

namespace petrie {

/// How a k-Petrie number is evaluated.
enum class Method {
    Determinant,  ///< 0/1 matrix determinant
    Tiling,       ///< sign of the unique proper tiling per component
    Core,         ///< k-core ribbon decomposition; mu must be empty
};

std::string_view to_string(Method m);

/// Exact determinant of a square integer matrix (fraction-free elimination
/// with checked arithmetic).
Coeff integer_determinant(std::vector<std::vector<Coeff>> m);

/// det(chi(0 <= lambda_i - mu_j - i + j < k)) over 1 <= i, j <= l(lambda).
/// Zero unless mu is contained in lambda.
int petrie_det(int k, const Partition& lambda, const Partition& mu = {});

/// Product over connected components of the sign of their unique proper
/// tiling; zero if any row of lambda/mu has k or more cells or any component
/// has other than exactly one proper tiling.
int petrie_tiling(int k, const Partition& lambda, const Partition& mu = {});

/// Pet_k(lambda, empty) from the k-core: zero unless lambda_1 < k and the
/// core has at most one row, else the product of (-1)^rows over a ribbon
/// decomposition.
int petrie_core(int k, const Partition& lambda);

int petrie_number(Method method, int k, const Partition& lambda, const Partition& mu = {});

/// Schur expansion of G(k, m) * s_mu. Candidates are mu plus m boxes with
/// fewer than k boxes added to any row.
SchurExpansion pieri_expand(int k, int m, const Partition& mu = {}, Method method = Method::Tiling);

/// Schur expansion of (p_k o h_n) * s_nu by signed horizontal k-tilings.
SchurExpansion plethystic_mn_expand(int k, int n, const Partition& nu = {});

/// s_{lambda/mu}(w, w^2, ..., w^{k-1}) for a primitive k-th root of unity w,
/// from the unique proper dual tiling. Always -1, 0 or 1.
int specialize_roots(int k, const SkewShape& shape);

enum class ClosedForm {
    Gkk,         ///< G(k, k)
    Gk2km1,      ///< G(k, 2k-1)
    GkkHr,       ///< G(k, k) h_r
    Gk2km1Hr,    ///< G(k, 2k-1) h_r
};

std::string_view to_string(ClosedForm f);

/// The closed-form Schur sums for G(k,k), G(k,2k-1) and their products with
/// h_r, summed term by term with the published bounds. Index sequences that
/// are not partitions are straightened through Jacobi-Trudi; terms asking
/// for a negative number of 1s are empty. r is ignored for Gkk and Gk2km1.
SchurExpansion closed_form(int k, ClosedForm which, int r = 0);

}  // namespace petrie
