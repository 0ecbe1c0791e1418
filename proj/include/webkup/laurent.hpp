#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "webkup/bigint.hpp"

namespace webkup {

// Raised when an exact division leaves a nonzero remainder.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Integer Laurent polynomial in q, stored sparsely with exponents ascending and
// no zero coefficients.
class LaurentPoly {
public:
    struct Term {
        int exponent;
        BigInt coeff;
        friend bool operator==(const Term& a, const Term& b) {
            return a.exponent == b.exponent && a.coeff == b.coeff;
        }
    };

    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}
    LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(int exponent, const BigInt& coeff = BigInt(1));
    // Builds from arbitrary (exponent, coefficient) pairs; repeated exponents add up.
    static LaurentPoly from_terms(std::vector<Term> terms);
    // Parses the canonical text form produced by to_string().
    static LaurentPoly parse(const std::string& text);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    BigInt coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Returns q^k times this polynomial.
    LaurentPoly shifted(int k) const;
    // this += c * q^k * p.
    void add_scaled(const LaurentPoly& p, int k, const BigInt& c = BigInt(1));
    // this += c * q^k.
    void add_monomial(int k, const BigInt& c);

    BigInt at_one() const;
    bool is_bar_invariant() const;
    // All coefficients nonnegative.
    bool is_nonnegative() const;
    // All exponents strictly negative.
    bool in_negative_part() const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly bar(const LaurentPoly& p);

// [a] = q^{a-1} + q^{a-3} + ... + q^{1-a}; negative a gives -[-a].
LaurentPoly quantum_int(int a);
LaurentPoly quantum_factorial(int a);
// Balanced q-binomial for any integer a and b >= 0, computed as a falling
// product of quantum integers divided exactly by [b]!.
LaurentPoly quantum_binomial(int a, int b);
// Same value through the q-Pascal recursion; a >= 0 only.
LaurentPoly quantum_binomial_recursive(int a, int b);

struct DivisionResult {
    LaurentPoly quotient;
    LaurentPoly remainder;
};
// Long division on the polynomial parts after factoring out powers of q.
DivisionResult divide(const LaurentPoly& num, const LaurentPoly& den);
// Throws InexactDivision on a nonzero remainder.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace webkup
