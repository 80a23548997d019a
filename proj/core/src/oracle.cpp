#include "petrie/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace petrie::oracle {

namespace {

void require_vars(int nvars) {
    if (nvars < 1) throw std::invalid_argument("need at least one variable");
}

class SsytFiller {
public:
    SsytFiller(const SkewShape& shape, int nvars)
        : shape_(shape), nvars_(nvars), cells_(shape.cells()), out_(nvars) {
        grid_.resize(shape.outer().length() + 1);
        for (std::size_t i = 1; i <= shape.outer().length(); ++i)
            grid_[i].assign(static_cast<std::size_t>(shape.outer().part(i)) + 1, 0);
    }

    MultiPoly run() {
        fill(0);
        return std::move(out_);
    }

private:
    void fill(std::size_t idx) {
        if (idx == cells_.size()) {
            out_.add_term(content_, 1);
            return;
        }
        const Cell c = cells_[idx];
        const auto row = static_cast<std::size_t>(c.row);
        const auto col = static_cast<std::size_t>(c.col);
        int lo = 1;
        if (shape_.contains_cell({c.row, c.col - 1})) lo = std::max(lo, grid_[row][col - 1]);
        if (shape_.contains_cell({c.row - 1, c.col})) lo = std::max(lo, grid_[row - 1][col] + 1);
        for (int v = lo; v <= nvars_; ++v) {
            grid_[row][col] = v;
            content_.set_exponent(v - 1, content_.exponent(v - 1) + 1);
            fill(idx + 1);
            content_.set_exponent(v - 1, content_.exponent(v - 1) - 1);
        }
        grid_[row][col] = 0;
    }

    const SkewShape& shape_;
    int nvars_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> grid_;
    Monomial content_;
    MultiPoly out_;
};

const MultiPoly& schur_cached(const SkewShape& shape, int nvars) {
    static std::mutex lock;
    static std::map<std::pair<SkewShape, int>, MultiPoly> memo;
    auto key = std::pair{shape, nvars};
    {
        std::lock_guard guard(lock);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    MultiPoly p = SsytFiller(shape, nvars).run();
    std::lock_guard guard(lock);
    return memo.try_emplace(std::move(key), std::move(p)).first->second;
}

void weak_compositions(int remaining, int var, int nvars, Monomial& cur, MultiPoly& out) {
    if (var == nvars - 1) {
        cur.set_exponent(var, remaining);
        out.add_term(cur, 1);
        cur.set_exponent(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set_exponent(var, e);
        weak_compositions(remaining - e, var + 1, nvars, cur, out);
    }
    cur.set_exponent(var, 0);
}

MultiPoly monomial_symmetric(const Partition& lambda, int nvars) {
    MultiPoly out(nvars);
    if (static_cast<int>(lambda.length()) > nvars) return out;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
        Monomial m;
        for (int i = 0; i < nvars; ++i) m.set_exponent(i, exps[static_cast<std::size_t>(i)]);
        out.add_term(m, 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

MultiPoly single_index(BaseKind kind, int r, int nvars) {
    if (r == 0) {
        if (kind == BaseKind::PowerSum) throw std::invalid_argument("p_0 is not defined here");
        return MultiPoly::constant(nvars, 1);
    }
    if (r < 0) {
        if (kind == BaseKind::Elementary || kind == BaseKind::Complete) return MultiPoly(nvars);
        throw std::invalid_argument("negative index");
    }
    switch (kind) {
        case BaseKind::Elementary: return monomial_symmetric(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), nvars);
        case BaseKind::PowerSum:
        case BaseKind::Monomial: return monomial_symmetric(Partition{r}, nvars);
        case BaseKind::Complete: {
            MultiPoly out(nvars);
            Monomial cur;
            weak_compositions(r, 0, nvars, cur, out);
            return out;
        }
    }
    throw std::invalid_argument("unknown basis");
}

const MultiPoly& complete_product_cached(const Partition& alpha, int nvars) {
    static std::mutex lock;
    static std::map<std::pair<Partition, int>, MultiPoly> memo;
    auto key = std::pair{alpha, nvars};
    {
        std::lock_guard guard(lock);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    MultiPoly p = MultiPoly::constant(nvars, 1);
    if (!alpha.empty()) {
        std::vector<int> rest(alpha.parts().begin() + 1, alpha.parts().end());
        p = single_index(BaseKind::Complete, alpha.largest(), nvars) *
            complete_product_cached(Partition(std::move(rest)), nvars);
    }
    std::lock_guard guard(lock);
    return memo.try_emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace

MultiPoly schur_polynomial(const SkewShape& shape, int nvars) {
    require_vars(nvars);
    return schur_cached(shape, nvars);
}

MultiPoly jacobi_trudi_polynomial(const SkewShape& shape, int nvars) {
    require_vars(nvars);
    const Partition& lambda = shape.outer();
    const Partition& mu = shape.inner();
    const int n = static_cast<int>(lambda.length());
    if (n > 12) throw std::invalid_argument("Jacobi-Trudi matrix too large");

    // Expand over permutations and collect sign * prod h_{a_i} by the sorted
    // index multiset, so each product of complete polynomials is formed once.
    std::map<Partition, Coeff> products;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> indices;
        bool vanishes = false;
        for (int i = 0; i < n && !vanishes; ++i) {
            const int j = perm[static_cast<std::size_t>(i)];
            const int a = lambda.part(static_cast<std::size_t>(i + 1)) - mu.part(static_cast<std::size_t>(j + 1)) - i + j;
            if (a < 0) vanishes = true;
            else if (a > 0) indices.push_back(a);
        }
        if (vanishes) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        std::sort(indices.begin(), indices.end(), std::greater<>());
        Coeff& slot = products[Partition(std::move(indices))];
        slot = checked_add(slot, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    MultiPoly out(nvars);
    for (const auto& [alpha, c] : products)
        if (c != 0) out.subtract_scaled(complete_product_cached(alpha, nvars), -c);
    return out;
}

MultiPoly base_polynomial(BaseKind kind, const Partition& index, int nvars) {
    require_vars(nvars);
    if (kind == BaseKind::Monomial) return monomial_symmetric(index, nvars);
    MultiPoly out = MultiPoly::constant(nvars, 1);
    for (int part : index.parts()) out = out * single_index(kind, part, nvars);
    return out;
}

MultiPoly base_polynomial(BaseKind kind, int r, int nvars) {
    require_vars(nvars);
    return single_index(kind, r, nvars);
}

MultiPoly g_polynomial(int k, int m, int nvars) {
    require_vars(nvars);
    if (k < 1 || m < 0) throw std::invalid_argument("g_polynomial needs k >= 1 and m >= 0");
    MultiPoly out(nvars);
    for (const Partition& lambda : enumerate_partitions(m, k - 1)) out += monomial_symmetric(lambda, nvars);
    return out;
}

MultiPoly g_polynomial_generating(int k, int m, int nvars) {
    require_vars(nvars);
    if (k < 1 || m < 0) throw std::invalid_argument("g_polynomial needs k >= 1 and m >= 0");
    MultiPoly acc = MultiPoly::constant(nvars, 1);
    for (int var = 0; var < nvars; ++var) {
        MultiPoly next(nvars);
        for (const auto& [mono, c] : acc.terms()) {
            for (int j = 0; j < k && mono.degree() + j <= m; ++j) {
                Monomial t = mono;
                t.set_exponent(var, j);
                next.add_term(t, c);
            }
        }
        acc = std::move(next);
    }
    MultiPoly out(nvars);
    for (const auto& [mono, c] : acc.terms())
        if (mono.degree() == m) out.add_term(mono, c);
    return out;
}

MultiPoly plethysm_poly(int k, int n, int nvars) {
    require_vars(nvars);
    if (k < 1 || n < 0) throw std::invalid_argument("plethysm needs k >= 1 and n >= 0");
    return base_polynomial(BaseKind::Complete, n, nvars).substitute_powers(k);
}

SchurExpansion extract_schur_expansion(const MultiPoly& p) {
    SchurExpansion out;
    if (p.is_zero()) return out;
    const int degree = p.homogeneous_degree();
    if (degree < 0) throw std::invalid_argument("Schur extraction needs a homogeneous polynomial");
    const int nvars = p.variables();
    if (nvars < degree)
        throw std::invalid_argument("Schur extraction needs at least as many variables as the degree");
    if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric");

    MultiPoly residual = p;
    std::size_t guard = 0;
    while (!residual.is_zero()) {
        if (++guard > 1'000'000) throw std::logic_error("Schur extraction did not terminate");
        const auto& [lead, c] = *residual.terms().rbegin();
        std::vector<int> parts;
        for (int i = 0; i < nvars; ++i) {
            const int e = lead.exponent(i);
            if (!parts.empty() && e > parts.back())
                throw std::logic_error("leading monomial is not weakly decreasing");
            parts.push_back(e);
        }
        const Partition lambda(std::move(parts));
        const Coeff coeff = c;
        residual.subtract_scaled(schur_cached(SkewShape(lambda), nvars), coeff);
        out.add(lambda, coeff);
    }
    return out;
}

CyclotomicInt cyclotomic_eval_schur(int k, const SkewShape& shape) {
    if (k < 2) throw std::invalid_argument("evaluation at roots of unity needs k >= 2");
    std::vector<Coeff> by_power(static_cast<std::size_t>(k), 0);
    for (const auto& [mono, c] : schur_cached(shape, k - 1).terms()) {
        long long e = 0;
        for (int i = 0; i < k - 1; ++i) e += static_cast<long long>(i + 1) * mono.exponent(i);
        auto& slot = by_power[static_cast<std::size_t>(e % k)];
        slot = checked_add(slot, c);
    }
    return CyclotomicInt::from_powers(k, by_power);
}

}  // namespace petrie::oracle
