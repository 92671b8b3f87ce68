#include "stampkit/selmer.hpp"

#include <algorithm>
#include <sstream>

#include "stampkit/checked.hpp"
#include "stampkit/errors.hpp"
#include "stampkit/frobenius.hpp"

namespace stampkit::selmer {

namespace {

void require_lemma_basis(const Basis& basis) {
    if (!basis.contains_one()) {
        throw RequiresUnitDenominationError();
    }
    if (basis.size() < 2) {
        throw NeedAtLeastTwoDenominationsError("h1 references a_{k-1}, so k >= 2 is required");
    }
}

}  // namespace

SelmerBounds selmer_bounds(const Basis& basis) {
    require_lemma_basis(basis);
    const auto& a = basis.denoms();
    const std::size_t k = a.size();

    // Sum of the k-1 consecutive ratios; the greedy argument uses exactly
    // floor(a_{i+1}/a_i) copies of each a_i.
    std::int64_t h0 = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        h0 = checked_add(h0, a[i + 1] / a[i]);
    }

    const std::int64_t gap = checked_sub(a[k - 1], a[k - 2]);
    const std::int64_t h1 =
        checked_add(h0, ceil_div(checked_mul(checked_add(h0, 1), a[k - 2]), gap));
    return SelmerBounds{basis, h0, h1};
}

Basis complement_basis(const Basis& basis) {
    require_lemma_basis(basis);
    const auto& a = basis.denoms();
    const std::int64_t ak = a.back();
    std::vector<std::int64_t> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        out.push_back(ak - a[i]);
    }
    out.push_back(ak);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return validate_basis(std::move(out));
}

StabilizationCertificate stabilization(const Basis& basis, std::int64_t extra_probes,
                                       std::int64_t table_cap) {
    if (extra_probes < 0) {
        throw std::invalid_argument("extra_probes must be non-negative");
    }
    const SelmerBounds bounds = selmer_bounds(basis);
    const std::int64_t h_lo = bounds.h1;
    const std::int64_t h_hi = checked_add(bounds.h1, extra_probes);
    const std::vector<std::int64_t> n_values = lpsp::n_h_range(basis, h_lo, h_hi, table_cap);

    const std::int64_t ak = basis.largest();
    const std::int64_t c = checked_sub(checked_mul(h_lo, ak), n_values.front());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const std::int64_t h = h_lo + static_cast<std::int64_t>(i);
        const std::int64_t diff = checked_sub(checked_mul(h, ak), n_values[i]);
        if (diff != c) {
            std::ostringstream msg;
            msg << "h*a_k - N_h is not constant on [" << h_lo << ", " << h_hi << "]: " << c
                << " at h = " << h_lo << " but " << diff << " at h = " << h;
            throw LemmaViolationError(msg.str());
        }
    }

    const Basis complement = complement_basis(basis);
    const std::int64_t g = frobenius::frobenius_residue_graph(complement).g;
    if (g != c) {
        std::ostringstream msg;
        msg << "stabilization constant c = " << c << " differs from g(" << to_string(complement)
            << ") = " << g;
        throw LemmaViolationError(msg.str());
    }

    return StabilizationCertificate{basis, bounds, c, complement, g, {h_lo, h_hi}};
}

Lemma1Report check_lemma1(const Basis& basis, std::int64_t i_max, std::int64_t table_cap) {
    if (i_max < 0) {
        throw std::invalid_argument("i_max must be non-negative");
    }
    const SelmerBounds bounds = selmer_bounds(basis);
    const auto& a = basis.denoms();
    const std::int64_t ak = a.back();
    const std::int64_t ak1 = a[a.size() - 2];

    // One shared table serves every probed h: h0 <= h1 always.
    const std::vector<std::int64_t> low =
        lpsp::n_h_range(basis, bounds.h0, checked_add(bounds.h0, i_max), table_cap);
    const std::vector<std::int64_t> high =
        lpsp::n_h_range(basis, bounds.h1, checked_add(bounds.h1, i_max), table_cap);

    Lemma1Report report{basis, bounds, i_max, {}, true};
    auto add = [&report](char part, std::int64_t h, std::int64_t lhs, std::int64_t rhs,
                         bool pass) {
        report.checks.push_back(Lemma1Check{part, h, lhs, rhs, pass});
        report.all_pass = report.all_pass && pass;
    };

    add('a', bounds.h0, low[0], ak, low[0] > ak);
    for (std::int64_t i = 0; i <= i_max; ++i) {
        const std::int64_t lhs = low[static_cast<std::size_t>(i)];
        const std::int64_t rhs = checked_mul(i + 1, ak);
        add('b', bounds.h0 + i, lhs, rhs, lhs > rhs);
    }
    for (std::int64_t j = 0; j <= i_max; ++j) {
        const std::int64_t h = bounds.h1 + j;
        const std::int64_t lhs = high[static_cast<std::size_t>(j)];
        const std::int64_t rhs = checked_sub(checked_mul(checked_add(h, 1), ak1), ak);
        add('c', h, lhs, rhs, lhs > rhs);
    }
    for (std::int64_t j = 0; j + 1 <= i_max; ++j) {
        const std::int64_t h = bounds.h1 + j;
        const std::int64_t lhs = high[static_cast<std::size_t>(j + 1)];
        const std::int64_t rhs = checked_add(high[static_cast<std::size_t>(j)], ak);
        add('d', h, lhs, rhs, lhs == rhs);
    }
    return report;
}

}  // namespace stampkit::selmer
