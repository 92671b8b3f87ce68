#include "stampkit/lpsp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "stampkit/checked.hpp"
#include "stampkit/errors.hpp"

namespace stampkit::lpsp {

namespace {

void require_unit(const Basis& basis) {
    if (!basis.contains_one()) {
        throw RequiresUnitDenominationError();
    }
}

void require_positive_h(std::int64_t h) {
    if (h < 1) {
        throw std::invalid_argument("h must be >= 1");
    }
}

// Table limit h * a_k + 1. N_h <= h * a_k + 1 always, so this suffices.
std::int64_t table_limit_for(const Basis& basis, std::int64_t h) {
    return checked_add(checked_mul(h, basis.largest()), 1);
}

// Smallest n in (after, limit] with w(n) > h; -1 when there is none.
std::int64_t first_above(const WeightTable& table, std::int64_t h, std::int64_t after) {
    const auto& w = table.weights();
    for (std::int64_t n = after + 1; n < static_cast<std::int64_t>(w.size()); ++n) {
        if (w[static_cast<std::size_t>(n)] > h) return n;
    }
    return -1;
}

}  // namespace

WeightTable build_weight_table(const Basis& basis, std::int64_t limit, std::int64_t table_cap) {
    require_unit(basis);
    if (limit < 0) {
        throw std::invalid_argument("limit must be non-negative");
    }
    const std::int64_t entries = checked_add(limit, 1);
    if (entries > table_cap) {
        throw ResourceLimitError("weight table needs " + std::to_string(entries) +
                                 " entries, cap is " + std::to_string(table_cap));
    }
    if (entries > std::numeric_limits<std::uint32_t>::max() - 1) {
        throw ResourceLimitError("weight table needs " + std::to_string(entries) +
                                 " entries, beyond 32-bit weight storage");
    }

    std::vector<std::uint32_t> w(static_cast<std::size_t>(entries));
    w[0] = 0;
    const auto& denoms = basis.denoms();
    for (std::int64_t n = 1; n <= limit; ++n) {
        // d = 1 always applies, so the minimum is finite.
        std::uint32_t best = w[static_cast<std::size_t>(n - 1)];
        for (std::size_t i = 1; i < denoms.size(); ++i) {
            const std::int64_t d = denoms[i];
            if (d > n) break;
            best = std::min(best, w[static_cast<std::size_t>(n - d)]);
        }
        w[static_cast<std::size_t>(n)] = best + 1;
    }
    return WeightTable(basis, std::move(w));
}

LpspResult compute_n_h(const Basis& basis, std::int64_t h, std::int64_t table_cap) {
    require_unit(basis);
    require_positive_h(h);
    const WeightTable table = build_weight_table(basis, table_limit_for(basis, h), table_cap);
    const std::int64_t n_h = first_above(table, h, 0);
    if (n_h < 0) {
        throw std::logic_error("no n <= h*a_k + 1 with w(n) > h; table construction is broken");
    }
    return LpspResult{basis, h, n_h, table.representation_of(n_h - 1),
                      static_cast<std::int64_t>(table.min_weight(n_h))};
}

bool covered(const Basis& basis, std::int64_t h, std::int64_t M, std::int64_t table_cap) {
    require_unit(basis);
    if (M < 0) {
        throw std::invalid_argument("M must be non-negative");
    }
    if (M == 0) return true;
    const WeightTable table = build_weight_table(basis, M - 1, table_cap);
    return first_above(table, h, 0) < 0;
}

std::int64_t n_h_by_binary_search(const Basis& basis, std::int64_t h, std::int64_t table_cap) {
    require_unit(basis);
    require_positive_h(h);
    // covered(., M) is monotone: true for M <= N_h, false beyond.
    std::int64_t lo = 1;                                       // covered: only t = 0
    std::int64_t hi = checked_add(table_limit_for(basis, h), 1);  // h*a_k + 2, not covered
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (covered(basis, h, mid, table_cap)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

Representation greedy_representation(const Basis& basis, std::int64_t n) {
    require_unit(basis);
    if (n < 0) {
        throw std::invalid_argument("n must be non-negative");
    }
    const auto& denoms = basis.denoms();
    std::vector<std::int64_t> coeffs(denoms.size(), 0);
    std::int64_t remaining = n;
    std::int64_t weight = 0;
    for (std::size_t i = denoms.size(); i-- > 0;) {
        coeffs[i] = remaining / denoms[i];
        remaining %= denoms[i];
        weight += coeffs[i];
    }
    return Representation{std::move(coeffs), weight};
}

std::vector<std::int64_t> n_h_range(const Basis& basis, std::int64_t h_lo, std::int64_t h_hi,
                                    std::int64_t table_cap) {
    require_unit(basis);
    require_positive_h(h_lo);
    if (h_hi < h_lo) {
        throw std::invalid_argument("h_hi must be >= h_lo");
    }
    const WeightTable table = build_weight_table(basis, table_limit_for(basis, h_hi), table_cap);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(h_hi - h_lo + 1));
    // N_h is nondecreasing in h, so each scan resumes where the last stopped.
    std::int64_t n = 0;
    for (std::int64_t h = h_lo; h <= h_hi; ++h) {
        n = first_above(table, h, n - 1);
        if (n < 0) {
            throw std::logic_error("n_h not found within shared table");
        }
        out.push_back(n);
    }
    return out;
}

std::vector<NhRow> n_h_table(const Basis& basis, std::int64_t h_max, std::int64_t table_cap) {
    require_positive_h(h_max);
    const std::vector<std::int64_t> values = n_h_range(basis, 1, h_max, table_cap);
    std::vector<NhRow> rows;
    rows.reserve(values.size());
    for (std::int64_t h = 1; h <= h_max; ++h) {
        NhRow row{h, values[static_cast<std::size_t>(h - 1)], std::nullopt};
        if (h < h_max) {
            row.delta = values[static_cast<std::size_t>(h)] - row.n_h;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace stampkit::lpsp
