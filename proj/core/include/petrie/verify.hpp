#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Exhaustive small-case sweeps comparing the combinatorial rules with each
// other and with the polynomial oracle. Shared by `petrie verify` and the
// acceptance suite.
namespace petrie::verify {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    /// First few failure descriptions.
    std::vector<std::string> failures;

    bool passed() const noexcept { return failure_count == 0 && cases > 0; }
    void fail(std::string what);
    std::string summary() const;
};

/// det = tiling for every mu inside lambda with |lambda| <= max_size and
/// 2 <= k <= max_k, and det = core for empty mu. The second result checks
/// that every value seen is -1, 0 or 1.
std::vector<CheckResult> method_agreement(int max_size, int max_k);

/// pieri_expand against the oracle's Schur extraction of G(k,m) s_mu, for
/// 1 <= k <= max_k, |mu| <= max_mu and m + |mu| <= max_total.
CheckResult pieri_vs_oracle(int max_total, int max_k, int max_mu);

/// Odd/even balance and power-of-two counts on connected shapes, the
/// three-tiling instance on a disconnected shape, and the convolution law
/// for disconnected shapes.
std::vector<CheckResult> census_laws(int max_size, int max_k);

/// Straight shapes: at most one proper tiling per n, and for lambda_1 < k a
/// tiling exists iff the k-core has at most one row.
CheckResult empty_mu_structure(int max_size, int max_k);

/// Abacus k-core against every removal order, and the ribbon sign compared
/// across up to max_chains decomposition chains (at least min_chains when
/// that many exist).
CheckResult core_order_independence(int max_size, int max_k, std::size_t min_chains = 3,
                                    std::size_t max_chains = 24);

/// plethystic_mn_expand against the oracle for k*n + |nu| <= max_total.
CheckResult mn_vs_oracle(int max_total, int max_k);

/// specialize_roots against cyclotomic evaluation for |lambda| <= max_size.
CheckResult specializations(int max_size, const std::vector<int>& ks);

/// closed_form against pieri_expand.
CheckResult closed_forms(int max_k_plain, int max_k_row, int max_r);

/// Jacobi-Trudi against tableaux for |lambda| <= max_jt_size, and the two
/// Petrie polynomial constructions for k <= max_g_k, m <= max_g_m with
/// 1..max_g_vars variables.
std::vector<CheckResult> oracle_consistency(int max_jt_size, int max_g_k, int max_g_m, int max_g_vars);

}  // namespace petrie::verify
