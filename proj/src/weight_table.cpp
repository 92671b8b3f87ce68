#include "stampkit/weight_table.hpp"

#include <stdexcept>
#include <string>

namespace stampkit {

WeightTable::WeightTable(Basis basis, std::vector<std::uint32_t> weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("weight table must cover at least n = 0");
    }
}

std::uint32_t WeightTable::min_weight(std::int64_t n) const {
    if (n < 0 || n > limit()) {
        throw std::out_of_range("n = " + std::to_string(n) + " outside table limit " +
                                std::to_string(limit()));
    }
    return weights_[static_cast<std::size_t>(n)];
}

Representation WeightTable::representation_of(std::int64_t n) const {
    if (n < 0 || n > limit()) {
        throw std::out_of_range("n = " + std::to_string(n) + " outside table limit " +
                                std::to_string(limit()));
    }
    const auto& denoms = basis_.denoms();
    std::vector<std::int64_t> coeffs(denoms.size(), 0);
    std::int64_t remaining = n;
    std::int64_t weight = 0;
    while (remaining > 0) {
        const std::uint32_t w = weights_[static_cast<std::size_t>(remaining)];
        bool stepped = false;
        // Largest denomination first: ties between equal-weight predecessors
        // resolve deterministically toward big stamps.
        for (std::size_t i = denoms.size(); i-- > 0;) {
            const std::int64_t d = denoms[i];
            if (d > remaining) continue;
            if (weights_[static_cast<std::size_t>(remaining - d)] + 1 == w) {
                ++coeffs[i];
                remaining -= d;
                ++weight;
                stepped = true;
                break;
            }
        }
        if (!stepped) {
            throw std::logic_error("weight table is inconsistent at n = " +
                                   std::to_string(remaining));
        }
    }
    return Representation{std::move(coeffs), weight};
}

}  // namespace stampkit
