#include <doctest.h>

#include <random>

#include "petrie/cyclotomic.hpp"
#include "petrie/multipoly.hpp"
#include "petrie/oracle.hpp"

using namespace petrie;
using namespace petrie::oracle;

namespace {

MultiPoly x(int nvars, int var) { return MultiPoly::variable(nvars, var); }

Coeff coefficient_sum(const MultiPoly& p) {
    Coeff s = 0;
    for (const auto& [m, c] : p.terms()) s += c;
    return s;
}

}  // namespace

TEST_SUITE("multipoly") {

TEST_CASE("arithmetic") {
    const MultiPoly a = x(2, 0) + x(2, 1);
    const MultiPoly sq = a * a;
    CHECK(sq.term_count() == 3);
    Monomial mixed;
    mixed.set_exponent(0, 1);
    mixed.set_exponent(1, 1);
    CHECK(sq.coefficient(mixed) == 2);
    CHECK((sq - sq).is_zero());
    CHECK(multiply(a, MultiPoly::constant(2, 3)) == a * 3);
    CHECK(sq.homogeneous_degree() == 2);
    CHECK((sq + MultiPoly::constant(2, 1)).homogeneous_degree() == -1);
    CHECK(sq.is_symmetric());
    CHECK_FALSE((sq + x(2, 0)).is_symmetric());
    CHECK(a.to_string() == "x1 + x2");
    CHECK_THROWS_AS(MultiPoly(0), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly(17), std::invalid_argument);
    CHECK_THROWS_AS(x(2, 2), std::out_of_range);
}

TEST_CASE("overflow fails loudly") {
    MultiPoly big = MultiPoly::constant(1, std::numeric_limits<Coeff>::max());
    CHECK_THROWS_AS(big += MultiPoly::constant(1, 1), std::overflow_error);
    Monomial m;
    CHECK_THROWS_AS(m.set_exponent(0, 256), std::overflow_error);
}

}  // TEST_SUITE

TEST_SUITE("oracle") {

TEST_CASE("schur polynomials from tableaux") {
    CHECK(schur_polynomial(SkewShape({1}), 2) == x(2, 0) + x(2, 1));
    CHECK(schur_polynomial(SkewShape({1, 1, 1}), 2).is_zero());
    CHECK(coefficient_sum(schur_polynomial(SkewShape({2, 1}), 3)) == 8);
    CHECK(schur_polynomial(SkewShape({2, 1}, {1}), 2) ==
          schur_polynomial(SkewShape({1}), 2) * schur_polynomial(SkewShape({1}), 2));
}

TEST_CASE("base polynomials") {
    CHECK(base_polynomial(BaseKind::Elementary, 2, 2) == x(2, 0) * x(2, 1));
    CHECK(base_polynomial(BaseKind::Complete, 2, 2) == x(2, 0) * x(2, 0) + x(2, 0) * x(2, 1) + x(2, 1) * x(2, 1));
    CHECK(base_polynomial(BaseKind::Monomial, Partition{2, 1}, 2) ==
          x(2, 0) * x(2, 0) * x(2, 1) + x(2, 0) * x(2, 1) * x(2, 1));
    CHECK(base_polynomial(BaseKind::PowerSum, 3, 2) == x(2, 0) * x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1) * x(2, 1));
    CHECK(base_polynomial(BaseKind::Complete, Partition{2, 1}, 3) ==
          base_polynomial(BaseKind::Complete, 2, 3) * base_polynomial(BaseKind::Complete, 1, 3));
    CHECK(base_polynomial(BaseKind::Complete, -1, 3).is_zero());
    CHECK(base_polynomial(BaseKind::Elementary, 0, 3) == MultiPoly::constant(3, 1));
}

TEST_CASE("symmetry of every constructor") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 6; ++d) {
            for (const Partition& p : enumerate_partitions(d)) {
                CHECK(schur_polynomial(SkewShape(p), n).is_symmetric());
                for (BaseKind kind : {BaseKind::Elementary, BaseKind::Complete, BaseKind::PowerSum, BaseKind::Monomial})
                    CHECK(base_polynomial(kind, p, n).is_symmetric());
            }
            for (int k = 1; k <= 4; ++k) CHECK(g_polynomial(k, d, n).is_symmetric());
        }
}

TEST_CASE("Petrie polynomials specialize to classical families") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= 6; ++m) {
            CHECK(g_polynomial(m + 1, m, n) == base_polynomial(BaseKind::Complete, m, n));
            CHECK(g_polynomial(2, m, n) == base_polynomial(BaseKind::Elementary, m, n));
            if (m >= 1)
                CHECK(g_polynomial(m, m, n) ==
                      base_polynomial(BaseKind::Complete, m, n) - base_polynomial(BaseKind::PowerSum, m, n));
            for (int k = 1; k <= 5; ++k) CHECK(g_polynomial(k, m, n) == g_polynomial_generating(k, m, n));
        }
}

TEST_CASE("plethysm polynomial") {
    CHECK(plethysm_poly(2, 0, 3) == MultiPoly::constant(3, 1));
    CHECK(plethysm_poly(2, 1, 2) == base_polynomial(BaseKind::PowerSum, 2, 2));
    CHECK(plethysm_poly(3, 1, 2) == x(2, 0) * x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1) * x(2, 1));
}

TEST_CASE("Jacobi-Trudi agrees with tableaux") {
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lambda : enumerate_partitions(d))
            for (const Partition& mu : enumerate_subpartitions(lambda)) {
                const SkewShape s(lambda, mu);
                const int n = std::max(1, s.size());
                CHECK(jacobi_trudi_polynomial(s, n) == schur_polynomial(s, n));
            }
}

TEST_CASE("Schur extraction") {
    SchurExpansion one;
    one.add({2, 1}, 1);
    CHECK(extract_schur_expansion(schur_polynomial(SkewShape({2, 1}), 3)) == one);
    CHECK(to_text(extract_schur_expansion(base_polynomial(BaseKind::PowerSum, 2, 3))) == "+1*s[2] -1*s[1,1]");
    CHECK(to_text(extract_schur_expansion(g_polynomial(3, 3, 4))) == "+1*s[2,1] -1*s[1,1,1]");

    CHECK_THROWS_AS(extract_schur_expansion(x(2, 0)), NotSymmetric);
    CHECK_THROWS_AS(extract_schur_expansion(x(2, 0) + MultiPoly::constant(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(extract_schur_expansion(base_polynomial(BaseKind::Complete, 3, 2)), std::invalid_argument);

    SUBCASE("random combinations round trip") {
        std::mt19937 rng(20240611);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int d = 1; d <= 6; ++d)
            for (int trial = 0; trial < 5; ++trial) {
                SchurExpansion expected;
                MultiPoly p(d);
                for (const Partition& lambda : enumerate_partitions(d)) {
                    const int c = coeff(rng);
                    if (c == 0) continue;
                    expected.add(lambda, c);
                    p.subtract_scaled(schur_polynomial(SkewShape(lambda), d), -c);
                }
                CHECK(extract_schur_expansion(p) == expected);
            }
    }

    SUBCASE("stable under extra variables") {
        for (int k = 2; k <= 4; ++k)
            for (int d = 1; d <= 5; ++d)
                CHECK(extract_schur_expansion(g_polynomial(k, d, d)) == extract_schur_expansion(g_polynomial(k, d, d + 2)));
    }
}

TEST_CASE("cyclotomic evaluation of Schur polynomials") {
    CHECK(cyclotomic_eval_schur(2, SkewShape({1})).to_integer() == -1);
    CHECK(cyclotomic_eval_schur(3, SkewShape({1, 1})).to_integer() == 1);
    CHECK(cyclotomic_eval_schur(3, SkewShape({2})).to_integer() == 0);
    CHECK(cyclotomic_eval_schur(5, SkewShape({1})).to_integer() == -1);
    CHECK_THROWS_AS(cyclotomic_eval_schur(1, SkewShape({1})), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Coeff>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Coeff>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Coeff>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Coeff>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Coeff>{1, 0, -1, 0, 1});
}

TEST_CASE("arithmetic in Z[w]") {
    const CyclotomicInt w = CyclotomicInt::root_power(3, 1);
    CHECK((w * w * w).to_integer() == 1);
    CHECK((CyclotomicInt::root_power(3, 0) + w + w * w).to_integer() == 0);
    CHECK(CyclotomicInt::root_power(4, 2).to_integer() == -1);
    CHECK(CyclotomicInt::root_power(6, 3).to_integer() == -1);
    CHECK(CyclotomicInt::root_power(5, -1) == CyclotomicInt::root_power(5, 4));
    CHECK(CyclotomicInt::from_powers(6, {0, 1, 0, 0, 0, 1}) == CyclotomicInt::from_powers(6, {1}));
    CHECK_FALSE(w.to_integer().has_value());
}

}  // TEST_SUITE
