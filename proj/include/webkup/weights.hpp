#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace webkup {

// Subset of the colors {-1, 0, 1}; bit c+1 holds color c.
using ColorSet = unsigned;

constexpr ColorSet kAllColors = 7;
inline int color_count(ColorSet s) { return __builtin_popcount(s); }
// The state j carried by a strand: the sum of its colors.
int color_sum(ColorSet s);
// The colour set of a strand with `label` colors and state j, if one exists.
std::optional<ColorSet> color_set_of_state(int label, int j);

// Local q-degrees of ladder rungs. A single rung E_{+} moving color c from the
// right strand B to the left strand A has degree sum_{c' != c} w[c][c'] h(c'),
// where h(c') = [c' in A] - [c' in B] is read before the move. Rungs E_{-} are
// determined by the reflection rule F = q^{-1-(|A|-|B|)} E^T, and divided
// powers by summing over move orders and dividing by [a]!.
class WeightRules {
public:
    using Matrix = std::array<std::array<int, 3>, 3>;

    struct Move {
        ColorSet moved;
        int exponent;
    };

    explicit WeightRules(const Matrix& unit);
    // The rules used throughout the library.
    static const WeightRules& standard();
    static Matrix standard_matrix();

    const Matrix& unit() const noexcept { return unit_; }
    // False if some divided power fails to normalize to a single monomial.
    bool consistent() const noexcept { return consistent_; }
    // Legal moves of E_{sign}^{(power)} on (left, right), with their exponents.
    const std::vector<Move>& moves(int sign, int power, ColorSet left, ColorSet right) const {
        return table_[sign > 0 ? 0 : 1][power][left][right];
    }
    std::optional<int> exponent(int sign, int power, ColorSet left, ColorSet right, ColorSet moved) const;
    std::string describe() const;

private:
    Matrix unit_;
    bool consistent_ = true;
    std::vector<Move> table_[2][4][8][8];
};

}  // namespace webkup
