#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "petrie/partition.hpp"

namespace petrie {

/// Raised when a fixed intermediate partition admits more than one tiling
/// satisfying the leftmost-start condition. Uniqueness is expected, so this
/// points at a bug or at a genuinely new edge case.
class MultipleTilingsForNu : public std::runtime_error {
public:
    MultipleTilingsForNu(const Partition& lambda, const Partition& nu, std::size_t count);
};

/// A ribbon (border strip): connected, no 2x2 block. Cells run from the
/// starting box (southwest end) to the ending box (northeast end), each step
/// moving one row up or one column right.
class Ribbon {
public:
    Ribbon() = default;
    /// Throws std::invalid_argument if the cells do not form such a path.
    explicit Ribbon(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    int size() const noexcept { return static_cast<int>(cells_.size()); }
    const Cell& start() const { return cells_.front(); }
    const Cell& end() const { return cells_.back(); }

    int rows() const noexcept;
    int columns() const noexcept;
    int height() const noexcept { return rows() - 1; }

    /// The same ribbon in the transposed diagram.
    Ribbon transposed() const;

    friend bool operator==(const Ribbon&, const Ribbon&) = default;
    friend auto operator<=>(const Ribbon&, const Ribbon&) = default;

private:
    std::vector<Cell> cells_;
};

/// A tiling (nu, ribbons) of lambda/mu; ribbons ordered north to south.
struct ProperTiling {
    Partition nu;
    std::vector<Ribbon> ribbons;

    /// r(Theta): total number of rows over all ribbons.
    int total_rows() const noexcept;
    int total_height() const noexcept;
    bool odd() const noexcept { return total_rows() % 2 != 0; }

    friend bool operator==(const ProperTiling&, const ProperTiling&) = default;
};

struct CensusEntry {
    std::size_t total = 0;
    std::size_t odd = 0;
    std::size_t even = 0;
    /// Ribbons per tiling; fixed by n since |lambda/nu| = |lambda/mu| - n.
    int ribbons = 0;
};

/// Proper tilings tallied by n = |nu/mu|. Only n with at least one tiling
/// appear.
struct Census {
    std::map<int, CensusEntry> by_n;

    std::size_t total() const noexcept;
};

/// Every removable k-ribbon of p: each removal leaves a partition.
/// Ordered by starting row, northmost first.
std::vector<Ribbon> removable_ribbons(const Partition& p, int k);

/// p with the ribbon's cells taken away.
Partition remove_ribbon(const Partition& p, const Ribbon& r);

/// All k-ribbon tilings of lambda/nu whose ribbons start at the leftmost box
/// of a row of lambda/nu and whose partial unions with nu are partitions.
/// Found by backtracking that peels ribbons off lambda from the south.
/// Each tiling is listed north to south.
std::vector<std::vector<Ribbon>> condition_ii_tilings(int k, const Partition& lambda, const Partition& nu);

/// Throws MultipleTilingsForNu when some nu admits several tilings.
std::vector<ProperTiling> enumerate_proper_tilings(int k, const SkewShape& shape);

Census census(int k, const SkewShape& shape);

/// Abacus computation: beads at first-column hook lengths slide down their
/// runners mod k.
Partition k_core(const Partition& lambda, int k);

/// Successive ribbons gamma(j)/gamma(j-1) from the k-core up to lambda. At
/// each step the removable ribbon with the northmost start is peeled first.
std::vector<SkewShape> ribbon_decomposition(const Partition& lambda, int k);

/// Dual tilings (nu/mu vertical strip, ribbons ending at the topmost box of
/// a column of lambda/nu), obtained by transposing the proper tilings of the
/// conjugate shape. Ribbons ordered west to east.
std::vector<ProperTiling> enumerate_proper_dual_tilings(int k, const SkewShape& shape);

/// Product of (-1)^height over the unique k-ribbon tiling of lambda/nu whose
/// ribbons end at the topmost box of a column; nullopt if none exists.
std::optional<int> horizontal_tileable_sign(int k, const Partition& lambda, const Partition& nu);

/// Grid over lambda: '.' for mu, 'x' for nu/mu, then one symbol per ribbon
/// cycling through 0-9a-zA-Z. Row 1 first.
std::string render_tiling(const SkewShape& shape, const ProperTiling& tiling);

}  // namespace petrie
