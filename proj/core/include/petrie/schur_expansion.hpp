#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "petrie/checked.hpp"
#include "petrie/partition.hpp"

namespace petrie {

/// Integer combination of Schur functions. Zero coefficients are never
/// stored and all indexing partitions share one size.
class SchurExpansion {
public:
    using Terms = std::map<Partition, Coeff, DecreasingLex>;

    SchurExpansion() = default;

    /// Adds c * s_lambda; throws std::invalid_argument if lambda's size
    /// differs from the terms already present.
    void add(const Partition& lambda, Coeff c);
    SchurExpansion& operator+=(const SchurExpansion& other);

    Coeff coefficient(const Partition& lambda) const;
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::optional<int> degree() const;

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    Terms terms_;
};

/// Terms in decreasing lexicographic order, e.g. "+1*s[2,1] -1*s[1,1,1]".
/// The zero expansion prints as "0".
std::string to_text(const SchurExpansion& e);

/// Inverse of to_text; throws std::invalid_argument on malformed input.
SchurExpansion parse_expansion_text(std::string_view text);

/// {"terms":[{"lambda":[2,1],"coeff":1},...]}
std::string to_json(const SchurExpansion& e);
SchurExpansion expansion_from_json(std::string_view json);

/// s_alpha for an arbitrary integer sequence alpha, defined through the
/// Jacobi-Trudi determinant and straightened to +/- s_lambda. Returns
/// nullopt when the determinant vanishes.
std::optional<std::pair<Partition, int>> straighten(std::vector<int> alpha);

}  // namespace petrie
