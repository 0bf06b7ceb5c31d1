#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace entlab {

/// Arbitrary-precision non-negative integer. Arithmetic is exact; subtraction
/// is deliberately absent.
class BigNat {
  public:
    BigNat() = default;
    BigNat(std::uint64_t v) : value_(v) {} // NOLINT(google-explicit-constructor)

    static BigNat factorial(std::uint64_t n);
    static BigNat pow(const BigNat &base, std::uint64_t exponent);
    static BigNat power_of_two(std::uint64_t exponent);

    BigNat &operator+=(const BigNat &rhs) {
        value_ += rhs.value_;
        return *this;
    }
    BigNat &operator*=(const BigNat &rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    friend BigNat operator+(BigNat a, const BigNat &b) { return a += b; }
    friend BigNat operator*(BigNat a, const BigNat &b) { return a *= b; }

    /// Exact division by a small divisor; throws if the remainder is non-zero.
    BigNat &divide_exact(std::uint64_t divisor);

    friend bool            operator==(const BigNat &a, const BigNat &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigNat &a, const BigNat &b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] bool          is_zero() const { return value_.is_zero(); }
    [[nodiscard]] std::uint64_t bit_length() const;

    /// Natural log from the top 64 bits and the bit length; -inf for zero.
    [[nodiscard]] double ln() const;

    [[nodiscard]] std::string to_string() const { return value_.str(); }

  private:
    explicit BigNat(boost::multiprecision::cpp_int v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_int value_;
};

} // namespace entlab
