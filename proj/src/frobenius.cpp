#include "stampkit/frobenius.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "stampkit/checked.hpp"
#include "stampkit/errors.hpp"

namespace stampkit::frobenius {

namespace {

void require_gcd_one(const Basis& basis) {
    if (basis.gcd() != 1) {
        throw GcdNotOneError("gcd of basis is " + std::to_string(basis.gcd()));
    }
}

}  // namespace

std::string to_string(Method m) {
    return m == Method::ResidueGraph ? "residue-graph" : "brute-force";
}

bool is_representable(const Basis& basis, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("n must be non-negative");
    }
    if (n == 0) return true;
    std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (std::int64_t d : basis.denoms()) {
        if (d > n) break;
        for (std::int64_t v = d; v <= n; ++v) {
            if (reach[static_cast<std::size_t>(v - d)]) {
                reach[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    return reach[static_cast<std::size_t>(n)] != 0;
}

FrobeniusResult frobenius_residue_graph(const Basis& basis) {
    require_gcd_one(basis);
    const std::int64_t m = basis.smallest();
    if (m == 1) {
        // Single node, d(0) = 0; everything is representable.
        return FrobeniusResult{basis, -1, Method::ResidueGraph};
    }

    // d(r) = smallest representable integer congruent to r (mod a_1).
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
    using Item = std::pair<std::int64_t, std::int64_t>;  // (distance, node)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[0] = 0;
    heap.emplace(0, 0);
    while (!heap.empty()) {
        const auto [d, r] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (std::size_t j = 1; j < basis.size(); ++j) {
            const std::int64_t a = basis[j];
            const std::int64_t next = (r + a) % m;
            const std::int64_t nd = checked_add(d, a);
            if (nd < dist[static_cast<std::size_t>(next)]) {
                dist[static_cast<std::size_t>(next)] = nd;
                heap.emplace(nd, next);
            }
        }
    }

    std::int64_t worst = 0;
    for (std::int64_t d : dist) {
        if (d == kInf) {
            // Unreachable residues would mean gcd > 1, already rejected.
            throw std::logic_error("residue graph has unreachable residue despite gcd 1");
        }
        worst = std::max(worst, d);
    }
    return FrobeniusResult{basis, worst - m, Method::ResidueGraph};
}

FrobeniusResult frobenius_brute_force(const Basis& basis, std::int64_t table_cap) {
    require_gcd_one(basis);
    // Brauer: g < a_1 * a_k, so B = a_1 * a_k + a_1 leaves a_1 slack for the
    // contiguity certificate.
    const std::int64_t ceiling = checked_add(checked_mul(basis.smallest(), basis.largest()),
                                             basis.smallest());
    if (ceiling > table_cap) {
        throw ResourceLimitError("representability bitmap needs " + std::to_string(ceiling) +
                                 " entries, cap is " + std::to_string(table_cap));
    }
    std::vector<char> reach(static_cast<std::size_t>(ceiling), 0);
    reach[0] = 1;
    for (std::int64_t d : basis.denoms()) {
        for (std::int64_t v = d; v < ceiling; ++v) {
            if (reach[static_cast<std::size_t>(v - d)]) {
                reach[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    for (std::int64_t v = ceiling - basis.smallest(); v < ceiling; ++v) {
        if (!reach[static_cast<std::size_t>(v)]) {
            throw std::logic_error("contiguity certificate failed at " + std::to_string(v) +
                                   "; this contradicts Brauer's bound");
        }
    }
    for (std::int64_t v = ceiling - 1; v >= 0; --v) {
        if (!reach[static_cast<std::size_t>(v)]) {
            return FrobeniusResult{basis, v, Method::BruteForce};
        }
    }
    return FrobeniusResult{basis, -1, Method::BruteForce};
}

}  // namespace stampkit::frobenius
