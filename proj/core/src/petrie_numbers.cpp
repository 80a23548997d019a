#include "petrie/petrie_numbers.hpp"

#include <stdexcept>

namespace petrie {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Determinant: return "det";
        case Method::Tiling: return "tiling";
        case Method::Core: return "core";
    }
    return "?";
}

std::string_view to_string(ClosedForm f) {
    switch (f) {
        case ClosedForm::Gkk: return "G_kk";
        case ClosedForm::Gk2km1: return "G_k_2km1";
        case ClosedForm::GkkHr: return "G_kk_hr";
        case ClosedForm::Gk2km1Hr: return "G_k2km1_hr";
    }
    return "?";
}

Coeff integer_determinant(std::vector<std::vector<Coeff>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;
    Coeff sign = 1;
    Coeff prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p] == 0) {
            std::size_t swap = p + 1;
            while (swap < n && m[swap][p] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[p], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                // Bareiss: the division by the previous pivot is exact.
                const Coeff num = checked_sub(checked_mul(m[i][j], m[p][p]), checked_mul(m[i][p], m[p][j]));
                m[i][j] = num / prev;
            }
            m[i][p] = 0;
        }
        prev = m[p][p];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

int petrie_det(int k, const Partition& lambda, const Partition& mu) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (!contains(mu, lambda)) return 0;
    const std::size_t n = lambda.length();
    std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const long long a = static_cast<long long>(lambda.part(i)) - mu.part(j) -
                                static_cast<long long>(i) + static_cast<long long>(j);
            m[i - 1][j - 1] = (0 <= a && a < k) ? 1 : 0;
        }
    }
    return static_cast<int>(integer_determinant(std::move(m)));
}

int petrie_tiling(int k, const Partition& lambda, const Partition& mu) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (!contains(mu, lambda)) return 0;
    const SkewShape shape(lambda, mu);
    if (shape.longest_row() >= k) return 0;
    int sign = 1;
    for (const SkewShape& component : connected_components(shape)) {
        const auto tilings = enumerate_proper_tilings(k, component.normalized());
        if (tilings.size() != 1) return 0;
        if (tilings.front().odd()) sign = -sign;
    }
    return sign;
}

int petrie_core(int k, const Partition& lambda) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (lambda.largest() >= k) return 0;
    const Partition core = k_core(lambda, k);
    if (core.length() >= 2) return 0;
    if (core == lambda) return 1;
    int sign = 1;
    for (const SkewShape& step : ribbon_decomposition(lambda, k))
        if (step.rows() % 2 != 0) sign = -sign;
    return sign;
}

int petrie_number(Method method, int k, const Partition& lambda, const Partition& mu) {
    switch (method) {
        case Method::Determinant: return petrie_det(k, lambda, mu);
        case Method::Tiling: return petrie_tiling(k, lambda, mu);
        case Method::Core:
            if (!mu.empty()) throw std::invalid_argument("the core method needs an empty mu");
            return petrie_core(k, lambda);
    }
    throw std::invalid_argument("unknown method");
}

SchurExpansion pieri_expand(int k, int m, const Partition& mu, Method method) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (method == Method::Core && !mu.empty()) throw std::invalid_argument("the core method needs an empty mu");
    SchurExpansion out;
    for (const Partition& lambda : add_boxes(mu, m, k - 1))
        out.add(lambda, petrie_number(method, k, lambda, mu));
    return out;
}

SchurExpansion plethystic_mn_expand(int k, int n, const Partition& nu) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    SchurExpansion out;
    for (const Partition& lambda : add_boxes(nu, k * n))
        if (auto sign = horizontal_tileable_sign(k, lambda, nu)) out.add(lambda, *sign);
    return out;
}

int specialize_roots(int k, const SkewShape& shape) {
    if (k < 2) throw std::invalid_argument("specialization needs k >= 2");
    if (shape.longest_column() >= k) return 0;
    const auto dual = enumerate_proper_dual_tilings(k, shape);
    if (dual.size() != 1) return 0;
    const ProperTiling& t = dual.front();
    const int strip = t.nu.size() - shape.inner().size();
    return sign_of_parity(strip + t.total_height());
}

namespace {

std::vector<int> seq(std::initializer_list<int> head, int ones) {
    std::vector<int> v(head);
    v.insert(v.end(), static_cast<std::size_t>(ones), 1);
    return v;
}

void add_term(SchurExpansion& out, std::vector<int> alpha, int coeff) {
    if (auto s = straighten(std::move(alpha))) out.add(s->first, s->second * coeff);
}

}  // namespace

SchurExpansion closed_form(int k, ClosedForm which, int r) {
    if (k < 2) throw std::invalid_argument("closed forms need k >= 2");
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    SchurExpansion out;
    switch (which) {
        case ClosedForm::Gkk:
            for (int i = 0; i <= k - 2; ++i) add_term(out, seq({k - 1 - i}, i + 1), sign_of_parity(i));
            break;
        case ClosedForm::Gk2km1:
            for (int i = 0; i <= k - 2; ++i) add_term(out, seq({k - 1, k - 1 - i}, i + 1), sign_of_parity(i));
            break;
        case ClosedForm::GkkHr:
            for (int i = 1; i <= r; ++i) add_term(out, {r + k - i, i}, 1);
            for (int i = 0; i <= k - r - 2; ++i) add_term(out, seq({k - i - 1, r + 1}, i), sign_of_parity(i));
            for (int i = 1; i <= r; ++i) {
                if (k - i < 0) continue;
                add_term(out, seq({r, i}, k - i), sign_of_parity(k - i + 1));
            }
            break;
        case ClosedForm::Gk2km1Hr:
            for (int i = 1; i <= std::min(k - 1, r); ++i)
                for (int j = 1; j <= i; ++j)
                    add_term(out, seq({r + k - 1 - i, i, j}, k - j), sign_of_parity(k - j + 1));
            for (int i = 0; i <= std::min(k - 2, r); ++i)
                for (int j = 0; j <= k - 2 - i; ++j)
                    add_term(out, seq({r + k - 1 - i, k - 1 - j, i + 1}, j), sign_of_parity(j));
            break;
    }
    return out;
}

}  // namespace petrie
