#include "stampkit/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "stampkit/checked.hpp"
#include "stampkit/errors.hpp"
#include "stampkit/frobenius.hpp"
#include "stampkit/selmer.hpp"

namespace stampkit::reduction {

ReductionCertificate build_reduction(const Basis& b) {
    if (b.gcd() != 1) {
        throw GcdNotOneError("reduction input must have gcd 1, got " + std::to_string(b.gcd()));
    }
    if (b.smallest() == 1) {
        throw SmallestElementOneError(
            "b_1 = 1 collapses b_{k+1} = b_k*b_1 = b_k; reduction input needs b_1 >= 2");
    }

    const std::int64_t appended = checked_mul(b.largest(), b.smallest());   // b_{k+1}
    const std::int64_t top = checked_add(appended, 1);                      // b_{k+2}

    std::vector<std::int64_t> ext = b.denoms();
    ext.push_back(appended);
    ext.push_back(top);
    Basis b_extended = validate_basis(std::move(ext));

    // {b_{k+2} - b_j : 1 <= j <= k+1} with b_{k+2} on top; smallest is
    // b_{k+2} - b_{k+1} = 1.
    std::vector<std::int64_t> diffs;
    diffs.reserve(b_extended.size());
    for (std::size_t j = 0; j + 1 < b_extended.size(); ++j) {
        diffs.push_back(checked_sub(top, b_extended[j]));
    }
    diffs.push_back(top);
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    Basis lpsp_basis = validate_basis(std::move(diffs));

    const std::int64_t h = selmer::selmer_bounds(lpsp_basis).h1;
    return ReductionCertificate{b, std::move(b_extended), std::move(lpsp_basis), h,
                                std::nullopt, false};
}

ReductionCertificate verify_reduction(ReductionCertificate cert, std::int64_t table_cap) {
    const std::int64_t n_h = lpsp::compute_n_h(cert.lpsp_basis, cert.h, table_cap).n_h;
    const std::int64_t predicted =
        checked_sub(checked_mul(cert.h, cert.lpsp_basis.largest()), n_h);
    const std::int64_t g = frobenius::frobenius_residue_graph(cert.b).g;
    const std::int64_t g_extended = frobenius::frobenius_residue_graph(cert.b_extended).g;

    if (predicted != g || g != g_extended) {
        std::ostringstream msg;
        msg << "reduction identity failed for b = (" << to_string(cert.b) << "): h*a_max - N_h = "
            << predicted << ", g(b) = " << g << ", g(b_extended) = " << g_extended;
        throw IdentityViolationError(msg.str());
    }

    cert.predicted_g = predicted;
    cert.verified = true;
    return cert;
}

}  // namespace stampkit::reduction
