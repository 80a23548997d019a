#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace petrie {

/// Integer partition stored as its nonzero parts in weakly decreasing order.
///
/// Part accessors are 1-based to match the row numbering of Young diagrams
/// and read every out-of-range index as 0, so `mu.part(i) <= lambda.part(i)`
/// is meaningful for all i >= 1 regardless of the two lengths.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);

    /// Trailing zeros are dropped; throws std::invalid_argument on negative
    /// or increasing entries.
    explicit Partition(std::vector<int> parts);

    int part(std::size_t row) const noexcept {
        return (row >= 1 && row <= parts_.size()) ? parts_[row - 1] : 0;
    }
    const std::vector<int>& parts() const noexcept { return parts_; }

    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Orders partitions decreasingly, the canonical order of every listing.
struct DecreasingLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// A box of a Young diagram; rows and columns are 1-based.
struct Cell {
    int row = 0;
    int col = 0;

    int content() const noexcept { return col - row; }
    Cell transposed() const noexcept { return {col, row}; }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

bool contains(const Partition& inner, const Partition& outer);

/// Skew diagram outer/inner; construction throws std::invalid_argument
/// unless inner is contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = {});

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    int size() const noexcept { return outer_.size() - inner_.size(); }
    bool empty() const noexcept { return size() == 0; }

    bool contains_cell(const Cell& c) const noexcept;
    /// Row-major, top row first.
    std::vector<Cell> cells() const;

    int row_length(int row) const noexcept;
    int column_length(int col) const noexcept;
    int longest_row() const noexcept;
    int longest_column() const noexcept;
    /// Number of nonempty rows, r(outer/inner).
    int rows() const noexcept;

    SkewShape conjugate() const;

    /// Same cells with empty rows above removed and columns shifted so the
    /// bottom nonempty row starts in column 1.
    SkewShape normalized() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

/// Edgewise-connected components, top to bottom. Each component is returned
/// as a skew shape in the original coordinates whose cells are exactly the
/// component's cells: rows above the component are filled into both
/// partitions, rows below are dropped.
std::vector<SkewShape> connected_components(const SkewShape& s);
bool is_connected(const SkewShape& s);

/// All partitions of n with parts at most max_part, decreasing lexicographic.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part = std::nullopt);

/// All partitions contained in outer, in decreasing lexicographic order.
std::vector<Partition> enumerate_subpartitions(const Partition& outer);

/// All nu with mu <= nu <= lambda, |nu/mu| = n and nu/mu a horizontal strip.
std::vector<Partition> horizontal_strip_extensions(const Partition& mu, const Partition& lambda, int n);

/// All lambda containing base with |lambda/base| = added and every row of
/// lambda/base holding at most max_row_growth cells.
std::vector<Partition> add_boxes(const Partition& base, int added,
                                 std::optional<int> max_row_growth = std::nullopt);

bool dominance_leq(const Partition& a, const Partition& b);

/// Text form "5,3,1"; the empty partition prints as "-".
std::string to_string(const Partition& p);
/// Accepts "5,3,1", "" or "-"; throws std::invalid_argument otherwise.
Partition parse_partition(std::string_view text);

/// Diagram with '.' for inner cells and '#' for skew cells, top row first.
std::string render(const SkewShape& s);

}  // namespace petrie
