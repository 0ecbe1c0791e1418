#include "webkup/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace webkup {

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (!c.is_zero()) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.push_back({exponent, coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coeff;
    return BigInt(0);
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: zero has no exponents");
    return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: zero has no exponents");
    return terms_.back().exponent;
}

void LaurentPoly::add_scaled(const LaurentPoly& p, int k, const BigInt& c) {
    if (p.terms_.empty() || c.is_zero()) return;
    if (&p == this) {
        LaurentPoly copy = p;
        add_scaled(copy, k, c);
        return;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + p.terms_.size());
    auto a = terms_.begin();
    auto b = p.terms_.begin();
    while (a != terms_.end() || b != p.terms_.end()) {
        if (b == p.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + k)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == terms_.end() || b->exponent + k < a->exponent) {
            out.push_back({b->exponent + k, b->coeff * c});
            ++b;
        } else {
            BigInt s = a->coeff + b->coeff * c;
            if (!s.is_zero()) out.push_back({a->exponent, std::move(s)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

void LaurentPoly::add_monomial(int k, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == k) {
        it->coeff += c;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {k, c});
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 0, BigInt(1));
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, 0, BigInt(-1));
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int lo = a.min_exponent() + b.min_exponent();
    int hi = a.max_exponent() + b.max_exponent();
    std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) dense[x.exponent + y.exponent - lo] += x.coeff * y.coeff;
    LaurentPoly r;
    for (int e = lo; e <= hi; ++e) {
        auto& c = dense[e - lo];
        if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exponent += k;
    return r;
}

BigInt LaurentPoly::at_one() const {
    BigInt s;
    for (const auto& t : terms_) s += t.coeff;
    return s;
}

bool LaurentPoly::is_bar_invariant() const { return bar(*this) == *this; }

bool LaurentPoly::is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.sign() > 0; });
}

bool LaurentPoly::in_negative_part() const { return terms_.empty() || terms_.back().exponent < 0; }

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        bool neg = it->coeff.sign() < 0;
        BigInt mag = neg ? -it->coeff : it->coeff;
        if (it == terms_.rbegin()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = mag == BigInt(1);
        if (it->exponent == 0) {
            out += mag.to_string();
            continue;
        }
        if (!unit) out += mag.to_string() + "*";
        out += "q";
        if (it->exponent != 1) out += "^" + std::to_string(it->exponent);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&]() -> LaurentPoly {
        throw std::invalid_argument("LaurentPoly: cannot parse '" + text + "'");
    };
    if (s.empty()) fail();
    if (s == "0") return {};
    std::vector<Term> terms;
    std::size_t i = 0;
    auto read_int = [&](std::string& digits) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    };
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (!terms.empty()) {
            fail();
        }
        std::string digits;
        read_int(digits);
        BigInt coeff(1);
        int exponent = 0;
        if (!digits.empty()) coeff = BigInt(digits);
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) fail();
            ++i;
            if (i >= s.size() || s[i] != 'q') fail();
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < s.size() && s[i] == '-') {
                    eneg = true;
                    ++i;
                }
                std::string ed;
                read_int(ed);
                if (ed.empty()) fail();
                exponent = std::stoi(ed) * (eneg ? -1 : 1);
            }
        } else if (digits.empty()) {
            fail();
        }
        terms.push_back({exponent, neg ? -coeff : coeff});
    }
    return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly bar(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({-it->exponent, it->coeff});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_int(int a) {
    if (a < 0) return -quantum_int(-a);
    LaurentPoly p;
    for (int j = 0; j < a; ++j) p.add_monomial(a - 1 - 2 * j, BigInt(1));
    return p;
}

LaurentPoly quantum_factorial(int a) {
    if (a < 0) throw std::invalid_argument("quantum_factorial: negative argument");
    LaurentPoly p(1);
    for (int j = 2; j <= a; ++j) p *= quantum_int(j);
    return p;
}

LaurentPoly quantum_binomial(int a, int b) {
    if (b < 0) throw std::invalid_argument("quantum_binomial: negative lower index");
    LaurentPoly num(1);
    for (int j = 0; j < b; ++j) num *= quantum_int(a - j);
    return exact_divide(num, quantum_factorial(b));
}

LaurentPoly quantum_binomial_recursive(int a, int b) {
    if (b < 0) throw std::invalid_argument("quantum_binomial_recursive: negative lower index");
    if (a < 0) throw std::invalid_argument("quantum_binomial_recursive: negative upper index");
    // Row-by-row Pascal table: row[a][b] = q^b row[a-1][b] + q^{b-a} row[a-1][b-1].
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int r = 1; r <= a; ++r) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(r + 1));
        for (int c = 0; c <= r; ++c) {
            if (c < r) next[c].add_scaled(row[c], c);
            if (c > 0) next[c].add_scaled(row[c - 1], c - r);
        }
        row = std::move(next);
    }
    if (b > a) return {};
    return row[b];
}

DivisionResult divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    DivisionResult r{{}, num};
    if (num.is_zero()) return r;
    const int lowest = num.min_exponent() - den.min_exponent();
    const int dtop = den.max_exponent();
    const BigInt& lead = den.terms().back().coeff;
    while (!r.remainder.is_zero()) {
        int k = r.remainder.max_exponent() - dtop;
        if (k < lowest) break;
        const BigInt& top = r.remainder.terms().back().coeff;
        if (!(top % lead).is_zero()) break;
        BigInt c = top / lead;
        r.quotient.add_monomial(k, c);
        r.remainder.add_scaled(den, k, -c);
    }
    return r;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    DivisionResult r = divide(num, den);
    if (!r.remainder.is_zero())
        throw InexactDivision("exact_divide: (" + num.to_string() + ") / (" + den.to_string() +
                              ") leaves remainder " + r.remainder.to_string());
    return r.quotient;
}

}  // namespace webkup
