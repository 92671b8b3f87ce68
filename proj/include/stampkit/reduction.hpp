#pragma once

#include <cstdint>
#include <optional>

#include "stampkit/basis.hpp"
#include "stampkit/lpsp.hpp"

namespace stampkit::reduction {

/// One Frobenius -> LPSP instance mapping:
///   b_extended = b with b_{k+1} = b_k * b_1 and b_{k+2} = b_k * b_1 + 1
///   lpsp_basis = sorted {b_{k+2} - b_j : 1 <= j <= k+1} union {b_{k+2}}
///   h          = h1 of lpsp_basis
/// The smallest element of lpsp_basis is b_{k+2} - b_{k+1} = 1. When
/// verified, predicted_g = h * b_{k+2} - N_h(lpsp_basis) = g(b).
struct ReductionCertificate {
    Basis b;
    Basis b_extended;
    Basis lpsp_basis;
    std::int64_t h = 0;
    std::optional<std::int64_t> predicted_g;
    bool verified = false;
};

/// Constructs the instance without running the (exponential-size) DP check.
/// Requires gcd(b) = 1 and b_1 >= 2: b_1 = 1 would collapse b_{k+1} = b_k.
ReductionCertificate build_reduction(const Basis& b);

/// Computes N_h(lpsp_basis) with the DP solver and g(b), g(b_extended) with
/// the Frobenius solver, then checks
///   h * b_{k+2} - N_h = g(b)   and   g(b) = g(b_extended).
/// A mismatch raises IdentityViolation (an implementation bug, never
/// accepted); an instance too large for the table cap raises ResourceLimit
/// and leaves the certificate usable but unverified.
ReductionCertificate verify_reduction(ReductionCertificate cert,
                                      std::int64_t table_cap = lpsp::kDefaultTableCap);

}  // namespace stampkit::reduction
