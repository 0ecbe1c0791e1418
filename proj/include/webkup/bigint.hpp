#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace webkup {

// Signed integer with an int64 fast path. Values that overflow 64 bits are
// promoted to a GMP integer and demoted again whenever they fit.
class BigInt {
public:
    BigInt() noexcept = default;
    BigInt(long long v) noexcept : small_(v) {}
    BigInt(int v) noexcept : small_(v) {}
    explicit BigInt(const std::string& decimal);

    BigInt(const BigInt& o);
    BigInt(BigInt&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
    BigInt& operator=(const BigInt& o);
    BigInt& operator=(BigInt&& o) noexcept;
    ~BigInt();

    bool fits_int64() const noexcept { return big_ == nullptr; }
    long long to_int64() const;
    bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
    int sign() const noexcept;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    // Truncating division, as for built-in integers.
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);
    BigInt operator-() const;

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    std::string to_string() const;

private:
    void promote();
    void normalize();

    long long small_ = 0;
    mpz_ptr big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace webkup
