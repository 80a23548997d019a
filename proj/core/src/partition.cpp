#include "petrie/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace petrie {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool contains(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_))
        throw std::invalid_argument("skew shape requires inner partition contained in outer");
}

bool SkewShape::contains_cell(const Cell& c) const noexcept {
    if (c.row < 1 || c.col < 1) return false;
    auto r = static_cast<std::size_t>(c.row);
    return c.col > inner_.part(r) && c.col <= outer_.part(r);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
            out.push_back({static_cast<int>(i), j});
    return out;
}

int SkewShape::row_length(int row) const noexcept {
    if (row < 1) return 0;
    auto r = static_cast<std::size_t>(row);
    return outer_.part(r) - inner_.part(r);
}

int SkewShape::column_length(int col) const noexcept {
    if (col < 1) return 0;
    auto c = static_cast<std::size_t>(col);
    return outer_.conjugate().part(c) - inner_.conjugate().part(c);
}

int SkewShape::longest_row() const noexcept {
    int best = 0;
    for (std::size_t i = 1; i <= outer_.length(); ++i)
        best = std::max(best, outer_.part(i) - inner_.part(i));
    return best;
}

int SkewShape::longest_column() const noexcept { return conjugate().longest_row(); }

int SkewShape::rows() const noexcept {
    int r = 0;
    for (std::size_t i = 1; i <= outer_.length(); ++i)
        if (outer_.part(i) > inner_.part(i)) ++r;
    return r;
}

SkewShape SkewShape::conjugate() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }

SkewShape SkewShape::normalized() const {
    if (empty()) return {};
    std::size_t first = 0, last = 0;
    for (std::size_t i = 1; i <= outer_.length(); ++i) {
        if (outer_.part(i) > inner_.part(i)) {
            if (first == 0) first = i;
            last = i;
        }
    }
    const int shift = inner_.part(last);
    std::vector<int> out, in;
    for (std::size_t i = first; i <= last; ++i) {
        out.push_back(outer_.part(i) - shift);
        in.push_back(inner_.part(i) - shift);
    }
    return SkewShape(Partition(std::move(out)), Partition(std::move(in)));
}

bool is_horizontal_strip(const SkewShape& s) {
    // Every column holds at most one cell iff outer_{i+1} <= inner_i.
    for (std::size_t i = 1; i < s.outer().length(); ++i)
        if (s.outer().part(i + 1) > s.inner().part(i)) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) { return s.longest_row() <= 1; }

std::vector<SkewShape> connected_components(const SkewShape& s) {
    const Partition& outer = s.outer();
    const Partition& inner = s.inner();
    std::vector<SkewShape> out;

    auto emit = [&](std::size_t first, std::size_t last) {
        std::vector<int> o, in;
        for (std::size_t i = 1; i <= last; ++i) {
            o.push_back(outer.part(i));
            in.push_back(i < first ? outer.part(i) : inner.part(i));
        }
        out.emplace_back(Partition(std::move(o)), Partition(std::move(in)));
    };

    std::size_t first = 0;
    for (std::size_t i = 1; i <= outer.length(); ++i) {
        const bool nonempty = outer.part(i) > inner.part(i);
        if (first != 0) {
            // Rows i-1 and i share an edge iff their column ranges overlap.
            const bool joined = nonempty && outer.part(i) > inner.part(i - 1);
            if (!joined) {
                emit(first, i - 1);
                first = 0;
            }
        }
        if (nonempty && first == 0) first = i;
    }
    if (first != 0) emit(first, outer.length());
    return out;
}

bool is_connected(const SkewShape& s) { return connected_components(s).size() == 1; }

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, max_part.value_or(n), cur, out);
    return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int cap) {
        if (row > outer.length() || cap == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(cap, outer.part(row)); v >= 0; --v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(1, outer.largest());
    return out;
}

namespace {

// Fills rows from the top, largest value first, so results come out in
// decreasing lexicographic order. lo/hi give the allowed range per row.
template <typename Bounds>
void fill_rows(std::size_t row, std::size_t rows, int remaining, std::vector<int>& cur,
               const Bounds& bounds, std::vector<Partition>& out) {
    if (row > rows) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    auto [lo, hi] = bounds(row, cur);
    for (int v = hi; v >= lo; --v) {
        const int used = v - lo;
        if (used > remaining) continue;
        cur.push_back(v);
        fill_rows(row + 1, rows, remaining - used, cur, bounds, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> horizontal_strip_extensions(const Partition& mu, const Partition& lambda, int n) {
    std::vector<Partition> out;
    if (n < 0 || !contains(mu, lambda)) return out;
    std::vector<int> cur;
    auto bounds = [&](std::size_t row, const std::vector<int>&) {
        const int lo = mu.part(row);
        int hi = lambda.part(row);
        if (row > 1) hi = std::min(hi, mu.part(row - 1));
        return std::pair{lo, std::max(lo, hi)};
    };
    fill_rows(1, lambda.length(), n, cur, bounds, out);
    return out;
}

std::vector<Partition> add_boxes(const Partition& base, int added, std::optional<int> max_row_growth) {
    std::vector<Partition> out;
    if (added < 0) return out;
    const std::size_t rows = base.length() + static_cast<std::size_t>(added);
    std::vector<int> cur;
    auto bounds = [&](std::size_t row, const std::vector<int>& prefix) {
        const int lo = base.part(row);
        int hi = lo + max_row_growth.value_or(added);
        if (row > 1) hi = std::min(hi, prefix.back());
        else hi = std::min(hi, lo + added);
        return std::pair{lo, std::max(lo, hi)};
    };
    fill_rows(1, std::max<std::size_t>(rows, 1), added, cur, bounds, out);
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view tok = trim(text.substr(0, comma));
        int value = 0;
        const auto* end = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(tok.data(), end, value);
        if (tok.empty() || ec != std::errc{} || ptr != end)
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        if (value <= 0) throw std::invalid_argument("partition parts must be positive");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string render(const SkewShape& s) {
    std::string out;
    for (std::size_t i = 1; i <= s.outer().length(); ++i) {
        for (int j = 1; j <= s.outer().part(i); ++j) out += (j <= s.inner().part(i)) ? '.' : '#';
        out += '\n';
    }
    return out;
}

}  // namespace petrie
