#include "webkup/weights.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "webkup/laurent.hpp"

namespace webkup {

namespace {

ColorSet bit(int c) { return 1u << (c + 1); }

int unit_plus(const WeightRules::Matrix& w, ColorSet a, ColorSet b, int c) {
    int e = 0;
    for (int d = -1; d <= 1; ++d) {
        if (d == c) continue;
        int h = ((a & bit(d)) ? 1 : 0) - ((b & bit(d)) ? 1 : 0);
        e += w[c + 1][d + 1] * h;
    }
    return e;
}

// Degree of a single rung moving color c; sign +1 moves right to left.
int unit_exponent(const WeightRules::Matrix& w, int sign, ColorSet a, ColorSet b, int c) {
    if (sign > 0) return unit_plus(w, a, b, c);
    ColorSet a2 = a & ~bit(c);
    ColorSet b2 = b | bit(c);
    int lambda_bar = color_count(a2) - color_count(b2);
    return -1 - lambda_bar + unit_plus(w, a2, b2, c);
}

}  // namespace

int color_sum(ColorSet s) {
    int j = 0;
    for (int c = -1; c <= 1; ++c)
        if (s & bit(c)) j += c;
    return j;
}

std::optional<ColorSet> color_set_of_state(int label, int j) {
    for (ColorSet s = 0; s < 8; ++s)
        if (color_count(s) == label && color_sum(s) == j) return s;
    return std::nullopt;
}

WeightRules::WeightRules(const Matrix& unit) : unit_(unit) {
    for (int si = 0; si < 2; ++si) {
        int sign = si == 0 ? 1 : -1;
        for (ColorSet a = 0; a < 8; ++a) {
            for (ColorSet b = 0; b < 8; ++b) {
                ColorSet src = sign > 0 ? b : a;
                ColorSet dst = sign > 0 ? a : b;
                for (ColorSet m = 1; m < 8; ++m) {
                    if ((m & src) != m || (m & dst) != 0) continue;
                    int power = color_count(m);
                    // Sum over the orders in which the colors of m can move.
                    std::vector<int> colors;
                    for (int c = -1; c <= 1; ++c)
                        if (m & bit(c)) colors.push_back(c);
                    LaurentPoly total;
                    do {
                        ColorSet x = a, y = b;
                        int e = 0;
                        for (int c : colors) {
                            e += unit_exponent(unit_, sign, x, y, c);
                            if (sign > 0) {
                                x |= bit(c);
                                y &= ~bit(c);
                            } else {
                                x &= ~bit(c);
                                y |= bit(c);
                            }
                        }
                        total.add_monomial(e, BigInt(1));
                    } while (std::next_permutation(colors.begin(), colors.end()));
                    DivisionResult d = divide(total, quantum_factorial(power));
                    const LaurentPoly& q = d.quotient;
                    if (!d.remainder.is_zero() || q.size() != 1 || q.terms().front().coeff != BigInt(1)) {
                        consistent_ = false;
                        continue;
                    }
                    table_[si][power][a][b].push_back({m, q.terms().front().exponent});
                }
            }
        }
    }
}

WeightRules::Matrix WeightRules::standard_matrix() {
    Matrix w{};
    for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) w[c + 1][d + 1] = d > c ? 1 : 0;
    return w;
}

const WeightRules& WeightRules::standard() {
    static const WeightRules rules(standard_matrix());
    return rules;
}

std::optional<int> WeightRules::exponent(int sign, int power, ColorSet left, ColorSet right, ColorSet moved) const {
    if (power < 1 || power > 3 || left > 7 || right > 7) return std::nullopt;
    for (const Move& m : moves(sign, power, left, right))
        if (m.moved == moved) return m.exponent;
    return std::nullopt;
}

std::string WeightRules::describe() const {
    std::ostringstream os;
    os << "[";
    for (int c = 0; c < 3; ++c) {
        os << (c ? ", " : "") << "[";
        for (int d = 0; d < 3; ++d) os << (d ? ", " : "") << (c == d ? 0 : unit_[c][d]);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace webkup
