#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ksg {

// Arbitrary-precision signed integer, sign + base-1e9 magnitude.
// Small enough for the clique/LP workloads here; no allocation tricks.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // exact conversion when the value fits, otherwise false
    bool to_int64(long long& out) const;
    long double to_long_double() const;
    std::string to_string() const;

private:
    static constexpr uint32_t kBase = 1000000000u;
    bool neg_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no leading zeros

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
};

}  // namespace ksg
