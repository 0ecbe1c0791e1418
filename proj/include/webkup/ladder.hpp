#pragma once

#include <optional>
#include <vector>

#include "webkup/signs.hpp"

namespace webkup {

// One ladder rung E_{sign*index}^{(power)}. The rung joins strands index and
// index+1 (1-based). A positive sign moves `power` units of label from the
// right strand to the left one, a negative sign the other way.
struct Slice {
    int sign = 1;
    int index = 1;
    int power = 1;
    friend bool operator==(const Slice& a, const Slice& b) {
        return a.sign == b.sign && a.index == b.index && a.power == b.power;
    }
};

// Applies a slice to a weight; nullopt if a label leaves 0..3 or the index is out of range.
std::optional<GlWeight> apply_slice(const GlWeight& lambda, const Slice& s);

// A web presented as a stack of ladder slices over a bottom weight. Every
// intermediate weight has labels in 0..3; the constructor rejects anything else.
class LadderWeb {
public:
    LadderWeb() = default;
    LadderWeb(GlWeight bottom, std::vector<Slice> slices);
    static LadderWeb identity(GlWeight weight) { return LadderWeb(std::move(weight), {}); }

    std::size_t strands() const noexcept { return levels_.front().size(); }
    const GlWeight& bottom() const noexcept { return levels_.front(); }
    const GlWeight& top() const noexcept { return levels_.back(); }
    const std::vector<Slice>& slices() const noexcept { return slices_; }
    // Weight after the first t slices; level(0) is the bottom.
    const GlWeight& level(std::size_t t) const { return levels_.at(t); }

    EnhancedSignString bottom_signs() const { return sign_string_of_weight(bottom()); }
    EnhancedSignString top_signs() const { return sign_string_of_weight(top()); }
    bool bottom_is_empty() const;
    bool top_is_empty() const;
    bool is_closed() const { return bottom_is_empty() && top_is_empty(); }

    // Stacks `upper` on top of this web.
    LadderWeb then(const LadderWeb& upper) const;
    LadderWeb with_slice(const Slice& s) const;

    friend bool operator==(const LadderWeb& a, const LadderWeb& b) {
        return a.levels_.front() == b.levels_.front() && a.slices_ == b.slices_;
    }

private:
    std::vector<Slice> slices_;
    std::vector<GlWeight> levels_{GlWeight{}};
};

// Mirror image with orientations reversed: slices in reverse order, each with
// the opposite sign; the bottom of the result is the top of w.
LadderWeb reflect(const LadderWeb& w);

}  // namespace webkup
