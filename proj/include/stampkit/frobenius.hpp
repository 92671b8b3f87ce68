#pragma once

#include <cstdint>
#include <string>

#include "stampkit/basis.hpp"
#include "stampkit/lpsp.hpp"

namespace stampkit::frobenius {

enum class Method { ResidueGraph, BruteForce };

std::string to_string(Method m);

/// g(a_1..a_k): the largest integer with no non-negative integer
/// representation. Defined for gcd-1 bases; -1 when the basis contains 1.
struct FrobeniusResult {
    Basis basis;
    std::int64_t g = -1;
    Method method = Method::ResidueGraph;
};

/// True iff n = sum(x_i * a_i) for some non-negative integers x_i.
bool is_representable(const Basis& basis, std::int64_t n);

/// Shortest-path formulation: for each residue r mod a_1, d(r) is the
/// smallest representable integer congruent to r, computed by Dijkstra on the
/// graph with nodes 0..a_1-1 and edges r -> (r + a_j) mod a_1 of length a_j.
/// g = max_r d(r) - a_1.
FrobeniusResult frobenius_residue_graph(const Basis& basis);

/// Representability bitmap up to B = a_1 * a_k + a_1, scanned downward for
/// the largest unrepresentable value. Asserts [B - a_1, B) fully representable
/// as a contiguity certificate, which Brauer's bound g < a_1 * a_k guarantees.
FrobeniusResult frobenius_brute_force(const Basis& basis,
                                      std::int64_t table_cap = lpsp::kDefaultTableCap);

}  // namespace stampkit::frobenius
