#include "stampkit/representation.hpp"

#include <sstream>
#include <stdexcept>

#include "stampkit/checked.hpp"
#include "stampkit/errors.hpp"

namespace stampkit {

Representation Representation::from_coeffs(std::vector<std::int64_t> coeffs) {
    std::int64_t weight = 0;
    for (std::int64_t c : coeffs) {
        if (c < 0) {
            throw std::invalid_argument("coefficients must be non-negative");
        }
        weight = checked_add(weight, c);
    }
    return Representation{std::move(coeffs), weight};
}

std::int64_t rep_value(const Representation& rep, const Basis& basis) {
    if (rep.coeffs.size() != basis.size()) {
        throw LengthMismatchError("coefficient vector has length " +
                                  std::to_string(rep.coeffs.size()) + ", basis has size " +
                                  std::to_string(basis.size()));
    }
    std::int64_t value = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        value = checked_add(value, checked_mul(rep.coeffs[i], basis[i]));
    }
    return value;
}

std::string to_string(const Representation& rep, const Basis& basis) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < rep.coeffs.size() && i < basis.size(); ++i) {
        if (rep.coeffs[i] == 0) continue;
        if (!first) out << " + ";
        out << rep.coeffs[i] << '*' << basis[i];
        first = false;
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace stampkit
