#include "entlab/bignat.hpp"

#include "entlab/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace entlab {

BigNat BigNat::factorial(std::uint64_t n) {
    boost::multiprecision::cpp_int acc = 1;
    for(std::uint64_t i = 2; i <= n; ++i) acc *= i;
    return BigNat(std::move(acc));
}

BigNat BigNat::pow(const BigNat &base, std::uint64_t exponent) {
    boost::multiprecision::cpp_int result = 1;
    boost::multiprecision::cpp_int square = base.value_;
    while(exponent != 0) {
        if(exponent & 1U) result *= square;
        exponent >>= 1U;
        if(exponent != 0) square *= square;
    }
    return BigNat(std::move(result));
}

BigNat BigNat::power_of_two(std::uint64_t exponent) {
    boost::multiprecision::cpp_int v = 0;
    boost::multiprecision::bit_set(v, static_cast<unsigned>(exponent));
    return BigNat(std::move(v));
}

BigNat &BigNat::divide_exact(std::uint64_t divisor) {
    if(divisor == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    if(value_ % divisor != 0) throw Error(ErrorKind::InvalidArgument, "inexact BigNat division");
    value_ /= divisor;
    return *this;
}

std::uint64_t BigNat::bit_length() const {
    if(value_.is_zero()) return 0;
    return static_cast<std::uint64_t>(boost::multiprecision::msb(value_)) + 1;
}

double BigNat::ln() const {
    const std::uint64_t bits = bit_length();
    if(bits == 0) return -std::numeric_limits<double>::infinity();
    if(bits <= 64) return std::log(static_cast<double>(static_cast<std::uint64_t>(value_)));
    const std::uint64_t shift = bits - 64;
    const auto          top   = static_cast<std::uint64_t>(value_ >> static_cast<unsigned>(shift));
    return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::numbers::ln2;
}

} // namespace entlab
