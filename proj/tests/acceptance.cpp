// Acceptance sweeps at their pinned bounds: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "petrie/verify.hpp"

using namespace petrie::verify;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
    std::vector<CheckResult> agreement;
    const std::vector<Criterion> criteria = {
        {1, "det = tiling, det = core (|lambda| <= 10, k <= 5)",
         [&] {
             agreement = method_agreement(10, 5);
             return std::vector{agreement.at(0)};
         }},
        {2, "every value in {-1, 0, 1}", [&] { return std::vector{agreement.at(1)}; }},
        {3, "Pieri rule vs oracle (k <= 5, m + |mu| <= 9, |mu| <= 4)",
         [] { return std::vector{pieri_vs_oracle(9, 5, 4)}; }},
        {4, "census laws (|lambda| <= 10, k <= 4)", [] { return census_laws(10, 4); }},
        {5, "empty-mu structure (|lambda| <= 10, k <= 5)", [] { return std::vector{empty_mu_structure(10, 5)}; }},
        {6, "k-core order independence (|lambda| <= 12, k <= 5)",
         [] { return std::vector{core_order_independence(12, 5, 3, 24)}; }},
        {7, "plethystic Murnaghan-Nakayama vs oracle (kn + |nu| <= 9)", [] { return std::vector{mn_vs_oracle(9, 9)}; }},
        {8, "root-of-unity specializations (|lambda| <= 8, k in {2,3,4,6})",
         [] { return std::vector{specializations(8, {2, 3, 4, 6})}; }},
        {9, "closed forms (k <= 6 plain, k <= 5 and r <= 4 with h_r)", [] { return std::vector{closed_forms(6, 5, 4)}; }},
        {10, "oracle self-consistency (JT |lambda| <= 8, G k <= 5, m <= 8)",
         [] { return oracle_consistency(8, 5, 8, 8); }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        try {
            for (const CheckResult& r : c.run()) {
                ok = ok && r.passed();
                detail += "\n    " + r.summary();
            }
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string("\n    exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << secs
                  << "s]" << detail << '\n';
        if (!ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
