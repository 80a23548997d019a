#include "petrie/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <set>
#include <sstream>
#include <thread>

#include "petrie/oracle.hpp"
#include "petrie/petrie_numbers.hpp"
#include "petrie/tilings.hpp"

namespace petrie::verify {

void CheckResult::fail(std::string what) {
    ++failure_count;
    if (failures.size() < 10) failures.push_back(std::move(what));
}

std::string CheckResult::summary() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << "  " << name << "  (" << cases << " cases, " << failure_count
       << " failures)";
    for (const auto& f : failures) os << "\n      " << f;
    return os.str();
}

namespace {

// Runs job(i) for i in [0, count) on a few threads. Each job owns its own
// result slot, so the merged output does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_lock;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard g(error_lock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

// Per-slot partial results, merged in slot order.
struct Partial {
    std::size_t cases = 0;
    std::vector<std::string> failures;
};

CheckResult merge(std::string name, const std::vector<Partial>& parts) {
    CheckResult r;
    r.name = std::move(name);
    for (const auto& p : parts) {
        r.cases += p.cases;
        for (const auto& f : p.failures) r.fail(f);
    }
    return r;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (auto& p : enumerate_partitions(n)) out.push_back(std::move(p));
    return out;
}

std::string pair_text(const Partition& lambda, const Partition& mu) {
    return to_string(lambda) + "/" + to_string(mu);
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

template <typename Fn>
void guarded(Partial& p, const std::string& where, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        p.failures.push_back(where + ": exception: " + e.what());
    }
}

}  // namespace

std::vector<CheckResult> method_agreement(int max_size, int max_k) {
    const auto lambdas = partitions_up_to(max_size);
    std::vector<Partial> agree(lambdas.size()), range(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t idx) {
        const Partition& lambda = lambdas[idx];
        for (const Partition& mu : enumerate_subpartitions(lambda)) {
            for (int k = 2; k <= max_k; ++k) {
                const std::string where = "k=" + std::to_string(k) + " " + pair_text(lambda, mu);
                guarded(agree[idx], where, [&] {
                    std::vector<int> values{petrie_det(k, lambda, mu), petrie_tiling(k, lambda, mu)};
                    ++agree[idx].cases;
                    if (values[0] != values[1])
                        agree[idx].failures.push_back(where + ": det " + std::to_string(values[0]) +
                                                      " vs tiling " + std::to_string(values[1]));
                    if (mu.empty()) {
                        values.push_back(petrie_core(k, lambda));
                        if (values[2] != values[0])
                            agree[idx].failures.push_back(where + ": det " + std::to_string(values[0]) +
                                                          " vs core " + std::to_string(values[2]));
                    }
                    for (int v : values) {
                        ++range[idx].cases;
                        if (v < -1 || v > 1)
                            range[idx].failures.push_back(where + ": value " + std::to_string(v));
                    }
                });
            }
        }
    });
    return {merge("three-method agreement", agree), merge("value range {-1,0,1}", range)};
}

CheckResult pieri_vs_oracle(int max_total, int max_k, int max_mu) {
    struct Case {
        int k, m;
        Partition mu;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= max_k; ++k)
        for (const Partition& mu : partitions_up_to(std::min(max_mu, max_total)))
            for (int m = 0; m + mu.size() <= max_total; ++m) cases.push_back({k, m, mu});

    std::vector<Partial> parts(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
        const auto& [k, m, mu] = cases[i];
        const std::string where = "k=" + std::to_string(k) + " m=" + std::to_string(m) + " mu=" + to_string(mu);
        guarded(parts[i], where, [&] {
            const int nvars = std::max(1, m + mu.size());
            const SchurExpansion expected = oracle::extract_schur_expansion(
                oracle::g_polynomial(k, m, nvars) * oracle::schur_polynomial(SkewShape(mu), nvars));
            ++parts[i].cases;
            for (Method method : {Method::Tiling, Method::Determinant}) {
                const SchurExpansion got = pieri_expand(k, m, mu, method);
                if (got != expected)
                    parts[i].failures.push_back(where + " (" + std::string(to_string(method)) + "): got " +
                                                to_text(got) + " expected " + to_text(expected));
            }
        });
    });
    return merge("Pieri rule vs oracle", parts);
}

std::vector<CheckResult> census_laws(int max_size, int max_k) {
    const auto lambdas = partitions_up_to(max_size);
    std::vector<Partial> laws(lambdas.size()), product(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t idx) {
        const Partition& lambda = lambdas[idx];
        for (const Partition& mu : enumerate_subpartitions(lambda)) {
            const SkewShape shape(lambda, mu);
            const auto components = connected_components(shape);
            for (int k = 2; k <= max_k; ++k) {
                const std::string where = "k=" + std::to_string(k) + " " + pair_text(lambda, mu);
                if (components.size() == 1) {
                    guarded(laws[idx], where, [&] {
                        for (const auto& [n, e] : census(k, shape).by_n) {
                            if (e.total <= 1) continue;
                            ++laws[idx].cases;
                            if (e.odd != e.even || !is_power_of_two(e.total))
                                laws[idx].failures.push_back(where + " n=" + std::to_string(n) + ": total " +
                                                             std::to_string(e.total) + " odd " +
                                                             std::to_string(e.odd) + " even " +
                                                             std::to_string(e.even));
                        }
                    });
                } else if (components.size() > 1) {
                    guarded(product[idx], where, [&] {
                        // Convolve the per-component counts over n.
                        std::map<int, std::size_t> conv{{0, 1}};
                        for (const SkewShape& c : components) {
                            std::map<int, std::size_t> next;
                            for (const auto& [n1, t1] : conv)
                                for (const auto& [n2, e2] : census(k, c).by_n) next[n1 + n2] += t1 * e2.total;
                            conv = std::move(next);
                        }
                        std::map<int, std::size_t> direct;
                        for (const auto& [n, e] : census(k, shape).by_n) direct[n] = e.total;
                        ++product[idx].cases;
                        if (conv != direct) product[idx].failures.push_back(where + ": convolution mismatch");
                    });
                }
            }
        }
    });
    CheckResult laws_result = merge("census odd/even and power-of-two laws", laws);

    // The disconnected shape with exactly three proper tilings at n = 2.
    CheckResult instance;
    instance.name = "three proper tilings of (9,8,6,5,3,2)/(7,6,4,3,1), k=2, n=2";
    instance.cases = 1;
    try {
        const auto c = census(2, SkewShape(Partition{9, 8, 6, 5, 3, 2}, Partition{7, 6, 4, 3, 1}));
        const auto it = c.by_n.find(2);
        const std::size_t total = it == c.by_n.end() ? 0 : it->second.total;
        if (total != 3) instance.fail("found " + std::to_string(total) + " tilings");
    } catch (const std::exception& e) {
        instance.fail(std::string("exception: ") + e.what());
    }
    return {laws_result, instance, merge("census convolution over components", product)};
}

CheckResult empty_mu_structure(int max_size, int max_k) {
    const auto lambdas = partitions_up_to(max_size);
    std::vector<Partial> parts(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t idx) {
        const Partition& lambda = lambdas[idx];
        for (int k = 1; k <= max_k; ++k) {
            const std::string where = "k=" + std::to_string(k) + " lambda=" + to_string(lambda);
            guarded(parts[idx], where, [&] {
                const Census c = census(k, SkewShape(lambda));
                ++parts[idx].cases;
                for (const auto& [n, e] : c.by_n)
                    if (e.total > 1)
                        parts[idx].failures.push_back(where + " n=" + std::to_string(n) + ": " +
                                                      std::to_string(e.total) + " tilings");
                if (lambda.largest() < k) {
                    const bool has_tiling = c.total() > 0;
                    const bool flat_core = k_core(lambda, k).length() <= 1;
                    if (has_tiling != flat_core)
                        parts[idx].failures.push_back(where + ": tiling exists " + std::to_string(has_tiling) +
                                                      " but core has " +
                                                      std::to_string(k_core(lambda, k).length()) + " rows");
                }
            });
        }
    });
    return merge("straight shapes: <=1 tiling per n, existence iff flat core", parts);
}

namespace {

void reachable_cores(const Partition& p, int k, std::set<Partition>& seen, std::set<Partition>& cores) {
    if (!seen.insert(p).second) return;
    const auto options = removable_ribbons(p, k);
    if (options.empty()) cores.insert(p);
    for (const Ribbon& r : options) reachable_cores(remove_ribbon(p, r), k, seen, cores);
}

void collect_chain_signs(const Partition& p, int k, int sign, std::size_t cap, std::vector<int>& signs) {
    if (signs.size() >= cap) return;
    const auto options = removable_ribbons(p, k);
    if (options.empty()) {
        signs.push_back(sign);
        return;
    }
    for (const Ribbon& r : options) {
        collect_chain_signs(remove_ribbon(p, r), k, r.rows() % 2 ? -sign : sign, cap, signs);
        if (signs.size() >= cap) return;
    }
}

}  // namespace

CheckResult core_order_independence(int max_size, int max_k, std::size_t min_chains, std::size_t max_chains) {
    // Every available chain is compared up to max_chains, so whenever at
    // least min_chains exist, at least min_chains are compared.
    if (max_chains < min_chains) throw std::invalid_argument("max_chains must be at least min_chains");
    const auto lambdas = partitions_up_to(max_size);
    std::vector<Partial> parts(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t idx) {
        const Partition& lambda = lambdas[idx];
        for (int k = 1; k <= max_k; ++k) {
            const std::string where = "k=" + std::to_string(k) + " lambda=" + to_string(lambda);
            guarded(parts[idx], where, [&] {
                ++parts[idx].cases;
                std::set<Partition> seen, cores;
                reachable_cores(lambda, k, seen, cores);
                const Partition abacus = k_core(lambda, k);
                if (cores != std::set<Partition>{abacus})
                    parts[idx].failures.push_back(where + ": removal orders reach " + std::to_string(cores.size()) +
                                                  " cores, abacus gives " + to_string(abacus));

                std::vector<int> signs;
                collect_chain_signs(lambda, k, 1, max_chains, signs);
                int reference = 1;
                for (const SkewShape& step : ribbon_decomposition(lambda, k))
                    if (step.rows() % 2) reference = -reference;
                for (int s : signs)
                    if (s != reference) {
                        parts[idx].failures.push_back(where + ": chain sign differs from decomposition sign");
                        break;
                    }
            });
        }
    });
    return merge("k-core order independence and chain sign invariance", parts);
}

CheckResult mn_vs_oracle(int max_total, int max_k) {
    struct Case {
        int k, n;
        Partition nu;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= max_k; ++k)
        for (int n = 0; k * n <= max_total; ++n)
            for (const Partition& nu : partitions_up_to(max_total - k * n)) cases.push_back({k, n, nu});

    std::vector<Partial> parts(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
        const auto& [k, n, nu] = cases[i];
        const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " nu=" + to_string(nu);
        guarded(parts[i], where, [&] {
            const int nvars = std::max(1, k * n + nu.size());
            const SchurExpansion expected = oracle::extract_schur_expansion(
                oracle::plethysm_poly(k, n, nvars) * oracle::schur_polynomial(SkewShape(nu), nvars));
            const SchurExpansion got = plethystic_mn_expand(k, n, nu);
            ++parts[i].cases;
            if (got != expected)
                parts[i].failures.push_back(where + ": got " + to_text(got) + " expected " + to_text(expected));
        });
    });
    return merge("plethystic Murnaghan-Nakayama vs oracle", parts);
}

CheckResult specializations(int max_size, const std::vector<int>& ks) {
    const auto lambdas = partitions_up_to(max_size);
    std::vector<Partial> parts(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t idx) {
        const Partition& lambda = lambdas[idx];
        for (const Partition& mu : enumerate_subpartitions(lambda)) {
            const SkewShape shape(lambda, mu);
            for (int k : ks) {
                const std::string where = "k=" + std::to_string(k) + " " + pair_text(lambda, mu);
                guarded(parts[idx], where, [&] {
                    const CyclotomicInt value = oracle::cyclotomic_eval_schur(k, shape);
                    const int combinatorial = specialize_roots(k, shape);
                    ++parts[idx].cases;
                    const auto integer = value.to_integer();
                    if (!integer || *integer != combinatorial)
                        parts[idx].failures.push_back(where + ": oracle " + value.to_string() + " vs " +
                                                      std::to_string(combinatorial));
                    if (shape.longest_column() < k && (!integer || *integer < -1 || *integer > 1))
                        parts[idx].failures.push_back(where + ": oracle value " + value.to_string() +
                                                      " outside {-1,0,1}");
                });
            }
        }
    });
    return merge("root-of-unity specializations vs cyclotomic oracle", parts);
}

CheckResult closed_forms(int max_k_plain, int max_k_row, int max_r) {
    CheckResult r;
    r.name = "closed forms vs Pieri expansion";
    auto check = [&](const std::string& where, const SchurExpansion& closed, const SchurExpansion& expected) {
        ++r.cases;
        if (closed != expected) r.fail(where + ": closed " + to_text(closed) + " vs " + to_text(expected));
    };
    try {
        for (int k = 2; k <= max_k_plain; ++k) {
            const std::string ks = "k=" + std::to_string(k);
            check("G(k,k) " + ks, closed_form(k, ClosedForm::Gkk), pieri_expand(k, k));
            check("G(k,2k-1) " + ks, closed_form(k, ClosedForm::Gk2km1), pieri_expand(k, 2 * k - 1));
        }
        for (int k = 2; k <= max_k_row; ++k) {
            for (int row = 0; row <= max_r; ++row) {
                const std::string where = "k=" + std::to_string(k) + " r=" + std::to_string(row);
                const Partition h{row};
                check("G(k,k)h_r " + where, closed_form(k, ClosedForm::GkkHr, row), pieri_expand(k, k, h));
                check("G(k,2k-1)h_r " + where, closed_form(k, ClosedForm::Gk2km1Hr, row),
                      pieri_expand(k, 2 * k - 1, h));
            }
            check("G(k,k)h_0 collapse k=" + std::to_string(k), closed_form(k, ClosedForm::GkkHr, 0),
                  closed_form(k, ClosedForm::Gkk));
            check("G(k,2k-1)h_0 collapse k=" + std::to_string(k), closed_form(k, ClosedForm::Gk2km1Hr, 0),
                  closed_form(k, ClosedForm::Gk2km1));
        }
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    return r;
}

std::vector<CheckResult> oracle_consistency(int max_jt_size, int max_g_k, int max_g_m, int max_g_vars) {
    struct JtCase {
        Partition lambda;
        int nvars;
    };
    std::vector<JtCase> jt_cases;
    for (const Partition& lambda : partitions_up_to(max_jt_size))
        for (int nvars : {lambda.size(), lambda.size() + 1})
            if (nvars >= 1) jt_cases.push_back({lambda, nvars});

    std::vector<Partial> jt(jt_cases.size());
    parallel_for(jt_cases.size(), [&](std::size_t i) {
        const auto& [lambda, nvars] = jt_cases[i];
        const std::string where = "lambda=" + to_string(lambda) + " N=" + std::to_string(nvars);
        guarded(jt[i], where, [&] {
            ++jt[i].cases;
            if (oracle::jacobi_trudi_polynomial(SkewShape(lambda), nvars) !=
                oracle::schur_polynomial(SkewShape(lambda), nvars))
                jt[i].failures.push_back(where + ": Jacobi-Trudi differs from tableaux");
        });
    });

    struct GCase {
        int k, m, nvars;
    };
    std::vector<GCase> g_cases;
    for (int k = 1; k <= max_g_k; ++k)
        for (int m = 0; m <= max_g_m; ++m)
            for (int nvars = 1; nvars <= max_g_vars; ++nvars) g_cases.push_back({k, m, nvars});
    std::vector<Partial> g(g_cases.size());
    parallel_for(g_cases.size(), [&](std::size_t i) {
        const auto& [k, m, nvars] = g_cases[i];
        const std::string where =
            "k=" + std::to_string(k) + " m=" + std::to_string(m) + " N=" + std::to_string(nvars);
        guarded(g[i], where, [&] {
            ++g[i].cases;
            if (oracle::g_polynomial(k, m, nvars) != oracle::g_polynomial_generating(k, m, nvars))
                g[i].failures.push_back(where + ": monomial sum differs from generating product");
        });
    });
    return {merge("Jacobi-Trudi vs tableaux Schur polynomials", jt),
            merge("Petrie polynomial: monomial sum vs generating product", g)};
}

}  // namespace petrie::verify
