#include "webkup/ladder.hpp"

#include <algorithm>
#include <string>

namespace webkup {

std::optional<GlWeight> apply_slice(const GlWeight& lambda, const Slice& s) {
    if (s.index < 1 || s.index >= static_cast<int>(lambda.size())) return std::nullopt;
    if (s.sign != 1 && s.sign != -1) return std::nullopt;
    if (s.power < 0) return std::nullopt;
    GlWeight out = lambda;
    out[s.index - 1] += s.sign * s.power;
    out[s.index] -= s.sign * s.power;
    if (out[s.index - 1] < 0 || out[s.index - 1] > 3 || out[s.index] < 0 || out[s.index] > 3) return std::nullopt;
    return out;
}

LadderWeb::LadderWeb(GlWeight bottom, std::vector<Slice> slices) : slices_(std::move(slices)) {
    for (int x : bottom)
        if (x < 0 || x > 3) throw WebError("ladder web: bottom label out of range");
    levels_.clear();
    levels_.push_back(std::move(bottom));
    for (std::size_t t = 0; t < slices_.size(); ++t) {
        const Slice& s = slices_[t];
        if (s.power < 1) throw WebError("ladder web: slice power must be at least 1");
        auto next = apply_slice(levels_.back(), s);
        if (!next)
            throw WebError("ladder web: slice " + std::to_string(t) + " (" + (s.sign > 0 ? "+" : "-") +
                           std::to_string(s.index) + "^" + std::to_string(s.power) +
                           ") leaves the label range 0..3");
        levels_.push_back(std::move(*next));
    }
}

bool LadderWeb::bottom_is_empty() const {
    return std::all_of(bottom().begin(), bottom().end(), [](int x) { return x == 0 || x == 3; });
}

bool LadderWeb::top_is_empty() const {
    return std::all_of(top().begin(), top().end(), [](int x) { return x == 0 || x == 3; });
}

LadderWeb LadderWeb::then(const LadderWeb& upper) const {
    if (upper.bottom() != top()) throw WebError("ladder web: stacking weights do not match");
    std::vector<Slice> s = slices_;
    s.insert(s.end(), upper.slices_.begin(), upper.slices_.end());
    return LadderWeb(bottom(), std::move(s));
}

LadderWeb LadderWeb::with_slice(const Slice& s) const {
    std::vector<Slice> v = slices_;
    v.push_back(s);
    return LadderWeb(bottom(), std::move(v));
}

LadderWeb reflect(const LadderWeb& w) {
    std::vector<Slice> s;
    s.reserve(w.slices().size());
    for (auto it = w.slices().rbegin(); it != w.slices().rend(); ++it) s.push_back({-it->sign, it->index, it->power});
    return LadderWeb(w.top(), std::move(s));
}

}  // namespace webkup
