#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stampkit {

/// A validated denomination list: strictly increasing positive integers.
/// Immutable after construction; gcd and the contains-one flag are computed
/// once and cached, since every solver branches on them.
class Basis {
public:
    const std::vector<std::int64_t>& denoms() const noexcept { return denoms_; }
    std::size_t size() const noexcept { return denoms_.size(); }
    std::int64_t operator[](std::size_t i) const { return denoms_[i]; }
    std::int64_t smallest() const noexcept { return denoms_.front(); }
    std::int64_t largest() const noexcept { return denoms_.back(); }
    std::int64_t gcd() const noexcept { return gcd_; }
    bool contains_one() const noexcept { return contains_one_; }

    bool operator==(const Basis& other) const noexcept { return denoms_ == other.denoms_; }

private:
    Basis(std::vector<std::int64_t> denoms, std::int64_t gcd, bool contains_one)
        : denoms_(std::move(denoms)), gcd_(gcd), contains_one_(contains_one) {}

    friend Basis validate_basis(std::vector<std::int64_t> denoms);

    std::vector<std::int64_t> denoms_;
    std::int64_t gcd_;
    bool contains_one_;
};

/// Validates a raw denomination list into a Basis.
/// Rejects empty input (Empty), non-positive entries (NonPositive), and lists
/// that are not strictly increasing (NotStrictlyIncreasing). Sorting is never
/// implicit.
Basis validate_basis(std::vector<std::int64_t> denoms);

/// "1,4,7,8"
std::string to_string(const Basis& basis);

}  // namespace stampkit
