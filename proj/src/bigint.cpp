#include "webkup/bigint.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace webkup {

namespace {

mpz_ptr new_mpz() {
    auto* z = new __mpz_struct;
    mpz_init(z);
    return z;
}

void free_mpz(mpz_ptr z) {
    if (z) {
        mpz_clear(z);
        delete z;
    }
}

void set_ll(mpz_ptr z, long long v) {
    // mpz_set_si takes a long, which is 64 bits on the supported platforms.
    static_assert(sizeof(long) == sizeof(long long), "64-bit long required");
    mpz_set_si(z, static_cast<long>(v));
}

// Builds a temporary mpz view of any BigInt operand.
struct MpzOperand {
    __mpz_struct tmp;
    mpz_srcptr ptr;
    MpzOperand(long long small, mpz_srcptr big) {
        if (big) {
            ptr = big;
            owned = false;
        } else {
            mpz_init(&tmp);
            set_ll(&tmp, small);
            ptr = &tmp;
            owned = true;
        }
    }
    ~MpzOperand() {
        if (owned) mpz_clear(&tmp);
    }
    MpzOperand(const MpzOperand&) = delete;
    MpzOperand& operator=(const MpzOperand&) = delete;
    bool owned;
};

}  // namespace

BigInt::BigInt(const std::string& decimal) {
    big_ = new_mpz();
    if (mpz_set_str(big_, decimal.c_str(), 10) != 0) {
        free_mpz(big_);
        big_ = nullptr;
        throw std::invalid_argument("BigInt: not a decimal integer: " + decimal);
    }
    normalize();
}

BigInt::BigInt(const BigInt& o) : small_(o.small_) {
    if (o.big_) {
        big_ = new_mpz();
        mpz_set(big_, o.big_);
    }
}

BigInt& BigInt::operator=(const BigInt& o) {
    if (this == &o) return *this;
    if (o.big_) {
        if (!big_) big_ = new_mpz();
        mpz_set(big_, o.big_);
    } else {
        free_mpz(big_);
        big_ = nullptr;
        small_ = o.small_;
    }
    return *this;
}

BigInt& BigInt::operator=(BigInt&& o) noexcept {
    if (this == &o) return *this;
    free_mpz(big_);
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
}

BigInt::~BigInt() { free_mpz(big_); }

long long BigInt::to_int64() const {
    if (big_) throw std::overflow_error("BigInt: value does not fit in 64 bits");
    return small_;
}

int BigInt::sign() const noexcept {
    if (big_) return mpz_sgn(big_);
    return (small_ > 0) - (small_ < 0);
}

void BigInt::promote() {
    if (!big_) {
        big_ = new_mpz();
        set_ll(big_, small_);
    }
}

void BigInt::normalize() {
    if (big_ && mpz_fits_slong_p(big_)) {
        small_ = mpz_get_si(big_);
        free_mpz(big_);
        big_ = nullptr;
    }
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    MpzOperand rhs(o.small_, o.big_);
    promote();
    mpz_add(big_, big_, rhs.ptr);
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    MpzOperand rhs(o.small_, o.big_);
    promote();
    mpz_sub(big_, big_, rhs.ptr);
    normalize();
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    MpzOperand rhs(o.small_, o.big_);
    promote();
    mpz_mul(big_, big_, rhs.ptr);
    normalize();
    return *this;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    if (o.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (!big_ && !o.big_ && !(small_ == LLONG_MIN && o.small_ == -1)) {
        small_ /= o.small_;
        return *this;
    }
    MpzOperand rhs(o.small_, o.big_);
    promote();
    mpz_tdiv_q(big_, big_, rhs.ptr);
    normalize();
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    if (o.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (!big_ && !o.big_) {
        small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
        return *this;
    }
    MpzOperand rhs(o.small_, o.big_);
    promote();
    mpz_tdiv_r(big_, big_, rhs.ptr);
    normalize();
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt r;
    return r -= *this;
}

int compare(const BigInt& a, const BigInt& b) {
    if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
    MpzOperand x(a.small_, a.big_);
    MpzOperand y(b.small_, b.big_);
    int c = mpz_cmp(x.ptr, y.ptr);
    return (c > 0) - (c < 0);
}

std::string BigInt::to_string() const {
    if (!big_) return std::to_string(small_);
    std::string s(mpz_sizeinbase(big_, 10) + 2, '\0');
    mpz_get_str(s.data(), 10, big_);
    s.resize(std::char_traits<char>::length(s.c_str()));
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace webkup
