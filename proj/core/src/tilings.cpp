#include "petrie/tilings.hpp"

#include <algorithm>
#include <set>
#include <string_view>

namespace petrie {

MultipleTilingsForNu::MultipleTilingsForNu(const Partition& lambda, const Partition& nu, std::size_t count)
    : std::runtime_error("found " + std::to_string(count) + " tilings of " + to_string(lambda) + "/" +
                         to_string(nu) + " with leftmost-start ribbons; expected at most one") {}

Ribbon::Ribbon(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("ribbon must contain at least one cell");
    for (std::size_t i = 1; i < cells_.size(); ++i) {
        const Cell& a = cells_[i - 1];
        const Cell& b = cells_[i];
        const bool up = b.row == a.row - 1 && b.col == a.col;
        const bool right = b.row == a.row && b.col == a.col + 1;
        if (!up && !right) throw std::invalid_argument("ribbon cells must step up or right");
    }
}

int Ribbon::rows() const noexcept {
    return cells_.empty() ? 0 : cells_.front().row - cells_.back().row + 1;
}

int Ribbon::columns() const noexcept {
    return cells_.empty() ? 0 : cells_.back().col - cells_.front().col + 1;
}

Ribbon Ribbon::transposed() const {
    std::vector<Cell> t;
    t.reserve(cells_.size());
    for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) t.push_back(it->transposed());
    return Ribbon(std::move(t));
}

int ProperTiling::total_rows() const noexcept {
    int r = 0;
    for (const auto& rb : ribbons) r += rb.rows();
    return r;
}

int ProperTiling::total_height() const noexcept {
    int h = 0;
    for (const auto& rb : ribbons) h += rb.height();
    return h;
}

std::size_t Census::total() const noexcept {
    std::size_t t = 0;
    for (const auto& [n, e] : by_n) t += e.total;
    return t;
}

namespace {

// Traces k cells of p's rim from `start`: right to the end of the row, then
// up one row, and so on. Returns the ribbon if removing it leaves a
// partition.
std::optional<std::pair<Ribbon, Partition>> peel(const Partition& p, Cell start, int k) {
    if (k < 1 || start.row < 1 || start.col < 1) return std::nullopt;
    auto part = [&](int row) { return p.part(static_cast<std::size_t>(row)); };
    if (start.col > part(start.row)) return std::nullopt;

    std::vector<Cell> cells;
    Cell c = start;
    while (true) {
        cells.push_back(c);
        if (static_cast<int>(cells.size()) == k) break;
        if (c.col < part(c.row)) {
            ++c.col;
        } else {
            --c.row;
            if (c.row < 1) return std::nullopt;
        }
    }
    if (c.col != part(c.row)) return std::nullopt;

    std::vector<int> rest = p.parts();
    for (const Cell& cell : cells) --rest[static_cast<std::size_t>(cell.row - 1)];
    for (std::size_t i = 1; i < rest.size(); ++i)
        if (rest[i] > rest[i - 1]) return std::nullopt;
    // Removed cells of each row form a suffix, so zeros can only trail.
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    for (int v : rest)
        if (v <= 0) return std::nullopt;
    return std::pair{Ribbon(std::move(cells)), Partition(std::move(rest))};
}

void require_positive_k(int k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
}

using Tiling = std::vector<Ribbon>;

struct TilingSearch {
    int k;
    const Partition& lambda;
    const Partition& nu;
    std::map<Partition, std::vector<Tiling>> memo;

    // Tilings of p/nu, ribbons sorted by starting cell.
    const std::vector<Tiling>& solve(const Partition& p) {
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        std::set<Tiling> found;
        if (p == nu) {
            found.insert(Tiling{});
        } else {
            for (std::size_t row = 1; row <= lambda.length(); ++row) {
                if (lambda.part(row) == nu.part(row)) continue;
                const Cell leftmost{static_cast<int>(row), nu.part(row) + 1};
                auto step = peel(p, leftmost, k);
                if (!step || !contains(nu, step->second)) continue;
                for (const Tiling& rest : solve(step->second)) {
                    Tiling t = rest;
                    t.push_back(step->first);
                    std::sort(t.begin(), t.end(),
                              [](const Ribbon& a, const Ribbon& b) { return a.start() < b.start(); });
                    found.insert(std::move(t));
                }
            }
        }
        return memo.emplace(p, std::vector<Tiling>(found.begin(), found.end())).first->second;
    }
};

}  // namespace

std::vector<Ribbon> removable_ribbons(const Partition& p, int k) {
    require_positive_k(k);
    std::vector<Ribbon> out;
    for (std::size_t row = 1; row <= p.length(); ++row) {
        for (int col = p.part(row + 1) + 1; col <= p.part(row); ++col) {
            if (auto step = peel(p, {static_cast<int>(row), col}, k)) out.push_back(std::move(step->first));
        }
    }
    return out;
}

Partition remove_ribbon(const Partition& p, const Ribbon& r) {
    std::vector<int> rest = p.parts();
    // Peel from the ending box so each cell is the last of its row when taken.
    for (auto it = r.cells().rbegin(); it != r.cells().rend(); ++it) {
        const Cell& c = *it;
        if (c.row < 1 || static_cast<std::size_t>(c.row) > rest.size() || c.col != rest[static_cast<std::size_t>(c.row - 1)])
            throw std::invalid_argument("ribbon is not removable from " + to_string(p));
        --rest[static_cast<std::size_t>(c.row - 1)];
    }
    return Partition(std::move(rest));
}

std::vector<std::vector<Ribbon>> condition_ii_tilings(int k, const Partition& lambda, const Partition& nu) {
    require_positive_k(k);
    if (!contains(nu, lambda)) return {};
    if ((lambda.size() - nu.size()) % k != 0) return {};
    TilingSearch search{k, lambda, nu, {}};
    return search.solve(lambda);
}

std::vector<ProperTiling> enumerate_proper_tilings(int k, const SkewShape& shape) {
    require_positive_k(k);
    std::vector<ProperTiling> out;
    const Partition& lambda = shape.outer();
    const Partition& mu = shape.inner();
    for (int n = 0; n <= shape.size(); ++n) {
        if ((shape.size() - n) % k != 0) continue;
        for (const Partition& nu : horizontal_strip_extensions(mu, lambda, n)) {
            auto tilings = condition_ii_tilings(k, lambda, nu);
            if (tilings.size() > 1) throw MultipleTilingsForNu(lambda, nu, tilings.size());
            if (tilings.size() == 1) out.push_back({nu, std::move(tilings.front())});
        }
    }
    return out;
}

Census census(int k, const SkewShape& shape) {
    Census c;
    for (const ProperTiling& t : enumerate_proper_tilings(k, shape)) {
        CensusEntry& e = c.by_n[t.nu.size() - shape.inner().size()];
        ++e.total;
        if (t.odd()) ++e.odd;
        else ++e.even;
        e.ribbons = static_cast<int>(t.ribbons.size());
    }
    return c;
}

Partition k_core(const Partition& lambda, int k) {
    require_positive_k(k);
    const int len = static_cast<int>(lambda.length());
    std::vector<int> runner(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= len; ++i) {
        const int beta = lambda.part(static_cast<std::size_t>(i)) + len - i;
        ++runner[static_cast<std::size_t>(beta % k)];
    }
    std::vector<int> beads;
    for (int r = 0; r < k; ++r)
        for (int t = 0; t < runner[static_cast<std::size_t>(r)]; ++t) beads.push_back(r + t * k);
    std::sort(beads.begin(), beads.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) parts.push_back(beads[static_cast<std::size_t>(i - 1)] - (len - i));
    return Partition(std::move(parts));
}

std::vector<SkewShape> ribbon_decomposition(const Partition& lambda, int k) {
    std::vector<SkewShape> chain;
    Partition p = lambda;
    while (true) {
        auto options = removable_ribbons(p, k);
        if (options.empty()) break;
        Partition rest = remove_ribbon(p, options.front());
        chain.emplace_back(p, rest);
        p = std::move(rest);
    }
    if (p != k_core(lambda, k))
        throw std::logic_error("NoDecomposition: ribbon removal from " + to_string(lambda) +
                               " stopped away from the k-core");
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<ProperTiling> enumerate_proper_dual_tilings(int k, const SkewShape& shape) {
    std::vector<ProperTiling> out;
    for (ProperTiling& t : enumerate_proper_tilings(k, shape.conjugate())) {
        ProperTiling dual;
        dual.nu = t.nu.conjugate();
        for (const Ribbon& r : t.ribbons) dual.ribbons.push_back(r.transposed());
        out.push_back(std::move(dual));
    }
    return out;
}

std::optional<int> horizontal_tileable_sign(int k, const Partition& lambda, const Partition& nu) {
    auto tilings = condition_ii_tilings(k, lambda.conjugate(), nu.conjugate());
    if (tilings.size() > 1) throw MultipleTilingsForNu(lambda.conjugate(), nu.conjugate(), tilings.size());
    if (tilings.empty()) return std::nullopt;
    int sign = 1;
    for (const Ribbon& r : tilings.front())
        if (r.transposed().height() % 2 != 0) sign = -sign;
    return sign;
}

std::string render_tiling(const SkewShape& shape, const ProperTiling& tiling) {
    static constexpr std::string_view symbols =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    const Partition& lambda = shape.outer();
    std::vector<std::string> grid;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        std::string row;
        for (int j = 1; j <= lambda.part(i); ++j) {
            if (j <= shape.inner().part(i)) row += '.';
            else if (j <= tiling.nu.part(i)) row += 'x';
            else row += '?';
        }
        grid.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < tiling.ribbons.size(); ++r)
        for (const Cell& c : tiling.ribbons[r].cells())
            grid[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] =
                symbols[r % symbols.size()];
    std::string out;
    for (const auto& row : grid) out += row + '\n';
    return out;
}

}  // namespace petrie
