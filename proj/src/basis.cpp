#include "stampkit/basis.hpp"

#include <numeric>
#include <sstream>

#include "stampkit/errors.hpp"

namespace stampkit {

Basis validate_basis(std::vector<std::int64_t> denoms) {
    if (denoms.empty()) {
        throw EmptyBasisError();
    }
    for (std::int64_t d : denoms) {
        if (d <= 0) {
            throw NonPositiveError("denomination " + std::to_string(d) + " is not positive");
        }
    }
    for (std::size_t i = 1; i < denoms.size(); ++i) {
        if (denoms[i] <= denoms[i - 1]) {
            throw NotStrictlyIncreasingError("denominations must be strictly increasing: " +
                                             std::to_string(denoms[i - 1]) + " then " +
                                             std::to_string(denoms[i]));
        }
    }
    std::int64_t g = 0;
    for (std::int64_t d : denoms) {
        g = std::gcd(g, d);
    }
    const bool contains_one = denoms.front() == 1;
    return Basis(std::move(denoms), g, contains_one);
}

std::string to_string(const Basis& basis) {
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i > 0) out << ',';
        out << basis[i];
    }
    return out.str();
}

}  // namespace stampkit
