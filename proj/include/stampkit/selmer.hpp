#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stampkit/basis.hpp"
#include "stampkit/lpsp.hpp"

namespace stampkit::selmer {

/// The explicit thresholds:
///   h0 = sum over i = 1..k-1 of floor(a_{i+1} / a_i)
///   h1 = h0 + ceil((h0 + 1) * a_{k-1} / (a_k - a_{k-1}))
/// h0 guarantees greedy coverage of [0, a_k]; from h1 on, N_{h+1} = N_h + a_k.
struct SelmerBounds {
    Basis basis;
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
};

/// Requires a basis containing 1 with k >= 2 (h1 references a_{k-1}).
SelmerBounds selmer_bounds(const Basis& basis);

/// The sorted, deduplicated basis {a_k - a_i : 1 <= i <= k-1} union {a_k}.
/// Its gcd is 1: it contains a_k - 1 (since a_1 = 1) and a_k.
Basis complement_basis(const Basis& basis);

/// Certificate that h * a_k - N_h is constant over [h1, h1 + extra_probes]
/// and that the constant equals the Frobenius number of the complement basis,
/// computed by the independent Frobenius solver.
struct StabilizationCertificate {
    Basis basis;
    SelmerBounds bounds;
    std::int64_t c = -1;
    Basis complement;
    std::int64_t g_complement = -1;
    std::pair<std::int64_t, std::int64_t> checked_h_range{0, 0};
};

/// Probes N_h for h = h1..h1 + extra_probes. A non-constant difference or a
/// mismatch against the complement's Frobenius number raises LemmaViolation:
/// either would falsify the stabilization lemma or reveal a solver bug, so it
/// is never returned silently.
StabilizationCertificate stabilization(const Basis& basis, std::int64_t extra_probes = 4,
                                       std::int64_t table_cap = lpsp::kDefaultTableCap);

/// One evaluated inequality/equality from the lemma report.
/// part 'a'..'c' check lhs > rhs; part 'd' checks lhs == rhs.
struct Lemma1Check {
    char part = 'a';
    std::int64_t h = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool pass = false;
};

struct Lemma1Report {
    Basis basis;
    SelmerBounds bounds;
    std::int64_t i_max = 0;
    std::vector<Lemma1Check> checks;
    bool all_pass = false;
};

/// Evaluates, with the exact DP solver:
///   (a) N_{h0} > a_k
///   (b) N_{h0+i} > (i+1) * a_k            for i = 0..i_max
///   (c) N_h > (h+1) * a_{k-1} - a_k       for h = h1..h1+i_max
///   (d) N_{h+1} = N_h + a_k               for h = h1..h1+i_max-1
/// Failures are reported, not thrown; the lemma is a theorem, so any failed
/// row indicates an implementation defect.
Lemma1Report check_lemma1(const Basis& basis, std::int64_t i_max = 4,
                          std::int64_t table_cap = lpsp::kDefaultTableCap);

}  // namespace stampkit::selmer
