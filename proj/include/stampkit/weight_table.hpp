#pragma once

#include <cstdint>
#include <vector>

#include "stampkit/basis.hpp"
#include "stampkit/representation.hpp"

namespace stampkit {

/// Minimum representation weights w(n) for all 0 <= n <= limit over a basis
/// containing 1. w(0) = 0 and w(n) = 1 + min over denominations d <= n of
/// w(n - d). Built by lpsp::build_weight_table.
class WeightTable {
public:
    WeightTable(Basis basis, std::vector<std::uint32_t> weights);

    const Basis& basis() const noexcept { return basis_; }
    std::int64_t limit() const noexcept { return static_cast<std::int64_t>(weights_.size()) - 1; }

    /// w(n); n must lie in [0, limit].
    std::uint32_t min_weight(std::int64_t n) const;

    /// One minimum-weight representation of n, re-derived from the table.
    /// Ties between equal-weight steps go to the largest denomination, so the
    /// witness is deterministic.
    Representation representation_of(std::int64_t n) const;

    const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }

private:
    Basis basis_;
    std::vector<std::uint32_t> weights_;
};

}  // namespace stampkit
