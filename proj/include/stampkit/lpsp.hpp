#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stampkit/basis.hpp"
#include "stampkit/representation.hpp"
#include "stampkit/weight_table.hpp"

namespace stampkit::lpsp {

/// Default cap on weight-table entries. Override per call, or through the
/// STAMPKIT_MAX_TABLE environment variable at the CLI.
inline constexpr std::int64_t kDefaultTableCap = 100'000'000;

/// N_h(a_1..a_k) with its certificates: a minimum-weight representation of
/// n_h - 1 (weight <= h) and the minimum weight at n_h (> h).
struct LpspResult {
    Basis basis;
    std::int64_t h = 0;
    std::int64_t n_h = 0;
    Representation witness_below;
    std::int64_t min_weight_at_n_h = 0;
};

/// Fills the minimum-weight table up to `limit` inclusive.
/// Requires a basis containing 1 (otherwise some w(n) are infinite).
WeightTable build_weight_table(const Basis& basis, std::int64_t limit,
                               std::int64_t table_cap = kDefaultTableCap);

/// Smallest n >= 1 with w(n) > h. The table is built to h * a_k + 1, which
/// always suffices since weight-h combinations reach at most h * a_k.
LpspResult compute_n_h(const Basis& basis, std::int64_t h,
                       std::int64_t table_cap = kDefaultTableCap);

/// True iff every t in [0, M-1] has a representation of weight <= h.
/// Monotone in M, which justifies the binary-search driver below.
bool covered(const Basis& basis, std::int64_t h, std::int64_t M,
             std::int64_t table_cap = kDefaultTableCap);

/// Largest M with covered(basis, h, M), found by bisection over
/// [1, h * a_k + 2]. Equals compute_n_h(basis, h).n_h.
std::int64_t n_h_by_binary_search(const Basis& basis, std::int64_t h,
                                  std::int64_t table_cap = kDefaultTableCap);

/// Repeatedly takes the largest denomination <= the remaining value.
/// Requires a basis containing 1; the result has exact value n. The greedy
/// weight may exceed the minimum weight.
Representation greedy_representation(const Basis& basis, std::int64_t n);

struct NhRow {
    std::int64_t h = 0;
    std::int64_t n_h = 0;
    std::optional<std::int64_t> delta;  // N_{h+1} - N_h; null on the last row
};

/// Rows (h, N_h, delta) for h = 1..h_max, computed from one shared table.
std::vector<NhRow> n_h_table(const Basis& basis, std::int64_t h_max,
                             std::int64_t table_cap = kDefaultTableCap);

/// N_h for every h in [h_lo, h_hi], sharing one table built to h_hi * a_k + 1.
/// Batch driver behind n_h_table and the selmer-analysis checks.
std::vector<std::int64_t> n_h_range(const Basis& basis, std::int64_t h_lo, std::int64_t h_hi,
                                    std::int64_t table_cap = kDefaultTableCap);

}  // namespace stampkit::lpsp
