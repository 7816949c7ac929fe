#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ssl {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Exact elimination on ~100x100 integer matrices produces minors of a few
// hundred bits, well past any fixed-width type.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend. Divisor must be nonzero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& num, const BigInt& den);

    // Division known to be exact; throws std::logic_error on a nonzero
    // remainder (indicates a bug at the call site).
    static BigInt exact_div(const BigInt& num, const BigInt& den);

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    std::string to_string() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::pair<std::vector<uint32_t>, std::vector<uint32_t>>
    divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace ssl
