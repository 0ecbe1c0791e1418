#include "webkup/flows.hpp"

#include <algorithm>
#include <unordered_set>

namespace webkup {

namespace {

void check_width(const GlWeight& lambda) {
    if (lambda.size() > kMaxStrands) throw WebError("ladder web: too many strands for packed states");
}

}  // namespace

PackedState forced_state(const GlWeight& lambda) {
    check_width(lambda);
    PackedState s = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 3) s = set_strand_colors(s, i, kAllColors);
        else if (lambda[i] != 0) throw WebError("forced_state: weight has a label 1 or 2 strand");
    }
    return s;
}

std::vector<PackedState> all_states(const GlWeight& lambda) {
    check_width(lambda);
    std::vector<PackedState> out{0};
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        std::vector<PackedState> next;
        for (PackedState s : out)
            for (ColorSet c = 0; c < 8; ++c)
                if (color_count(c) == lambda[i]) next.push_back(set_strand_colors(s, i, c));
        out = std::move(next);
    }
    return out;
}

StateString boundary_state(PackedState s, const GlWeight& lambda) {
    StateString j;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] == 1 || lambda[i] == 2) j.push_back(color_sum(strand_colors(s, i)));
    return j;
}

std::optional<PackedState> lift_state(const StateString& j, const GlWeight& lambda) {
    check_width(lambda);
    PackedState s = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        if (lambda[i] == 3) {
            s = set_strand_colors(s, i, kAllColors);
            continue;
        }
        if (k >= j.size()) return std::nullopt;
        auto c = color_set_of_state(lambda[i], j[k++]);
        if (!c) return std::nullopt;
        s = set_strand_colors(s, i, *c);
    }
    if (k != j.size()) return std::nullopt;
    return s;
}

StateVector transfer(const StateVector& in, const Slice& sl, const WeightRules& rules) {
    StateVector out;
    out.reserve(in.size() * 2);
    std::size_t i = static_cast<std::size_t>(sl.index - 1);
    for (const auto& [s, coeff] : in) {
        ColorSet a = strand_colors(s, i);
        ColorSet b = strand_colors(s, i + 1);
        for (const auto& mv : rules.moves(sl.sign, sl.power, a, b)) {
            ColorSet a2 = sl.sign > 0 ? (a | mv.moved) : (a & ~mv.moved);
            ColorSet b2 = sl.sign > 0 ? (b & ~mv.moved) : (b | mv.moved);
            PackedState t = set_strand_colors(set_strand_colors(s, i, a2), i + 1, b2);
            out[t].add_scaled(coeff, mv.exponent);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

StateVector sweep(const LadderWeb& w, StateVector in, const WeightRules& rules) {
    for (std::size_t t = 0; t < w.slices().size(); ++t) in = transfer(in, w.slices()[t], rules);
    return in;
}

ColorSet rung_colors(const LadderWeb& w, const Flow& f, std::size_t t) {
    std::size_t i = static_cast<std::size_t>(w.slices().at(t).index - 1);
    return strand_colors(f.levels.at(t), i) ^ strand_colors(f.levels.at(t + 1), i);
}

std::vector<Flow> enumerate_flows(const LadderWeb& w, const std::optional<StateString>& boundary,
                                  const WeightRules& rules) {
    const std::size_t T = w.slices().size();
    // Backward pass: states at each level from which a valid top state is reachable.
    std::vector<std::unordered_set<PackedState>> alive(T + 1);
    if (boundary) {
        auto top = lift_state(*boundary, w.top());
        if (!top) return {};
        alive[T].insert(*top);
    } else {
        for (PackedState s : all_states(w.top())) alive[T].insert(s);
    }
    for (std::size_t t = T; t-- > 0;) {
        const Slice& sl = w.slices()[t];
        std::size_t i = static_cast<std::size_t>(sl.index - 1);
        for (PackedState s : all_states(w.level(t))) {
            ColorSet a = strand_colors(s, i);
            ColorSet b = strand_colors(s, i + 1);
            for (const auto& mv : rules.moves(sl.sign, sl.power, a, b)) {
                ColorSet a2 = sl.sign > 0 ? (a | mv.moved) : (a & ~mv.moved);
                ColorSet b2 = sl.sign > 0 ? (b & ~mv.moved) : (b | mv.moved);
                if (alive[t + 1].count(set_strand_colors(set_strand_colors(s, i, a2), i + 1, b2))) {
                    alive[t].insert(s);
                    break;
                }
            }
        }
    }
    std::vector<Flow> out;
    Flow cur;
    std::vector<PackedState> starts(alive[0].begin(), alive[0].end());
    std::sort(starts.begin(), starts.end());
    auto dfs = [&](auto&& self, std::size_t t, PackedState s, int weight) -> void {
        cur.levels.push_back(s);
        if (t == T) {
            Flow f;
            f.levels = cur.levels;
            f.weight = weight;
            f.boundary = boundary_state(s, w.top());
            f.bottom_boundary = boundary_state(cur.levels.front(), w.bottom());
            out.push_back(std::move(f));
        } else {
            const Slice& sl = w.slices()[t];
            std::size_t i = static_cast<std::size_t>(sl.index - 1);
            ColorSet a = strand_colors(s, i);
            ColorSet b = strand_colors(s, i + 1);
            for (const auto& mv : rules.moves(sl.sign, sl.power, a, b)) {
                ColorSet a2 = sl.sign > 0 ? (a | mv.moved) : (a & ~mv.moved);
                ColorSet b2 = sl.sign > 0 ? (b & ~mv.moved) : (b | mv.moved);
                PackedState n = set_strand_colors(set_strand_colors(s, i, a2), i + 1, b2);
                if (alive[t + 1].count(n)) self(self, t + 1, n, weight + mv.exponent);
            }
        }
        cur.levels.pop_back();
    };
    for (PackedState s : starts) dfs(dfs, 0, s, 0);
    return out;
}

}  // namespace webkup
