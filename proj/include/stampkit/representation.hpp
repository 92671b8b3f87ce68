#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stampkit/basis.hpp"

namespace stampkit {

/// A coefficient vector x_1..x_k aligned with a Basis, together with its
/// weight sum(x_i). Coefficients are dense and non-negative.
struct Representation {
    std::vector<std::int64_t> coeffs;
    std::int64_t weight = 0;

    /// Builds a Representation from raw coefficients; computes the weight
    /// with checked arithmetic and rejects negative entries.
    static Representation from_coeffs(std::vector<std::int64_t> coeffs);

    bool operator==(const Representation& other) const = default;
};

/// sum(coeffs[i] * denoms[i]), exactly. Raises LengthMismatch when the
/// coefficient vector does not align with the basis and Overflow when the
/// value does not fit in 64 bits.
std::int64_t rep_value(const Representation& rep, const Basis& basis);

/// "2*1 + 1*4" (zero coefficients omitted; "0" for the all-zero vector).
std::string to_string(const Representation& rep, const Basis& basis);

}  // namespace stampkit
