#include "webkup/growth.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "webkup/tableaux.hpp"

namespace webkup {

namespace {

struct Entry {
    int label;
    int state;
    friend bool operator<(const Entry& a, const Entry& b) {
        return a.label != b.label ? a.label < b.label : a.state < b.state;
    }
    friend bool operator==(const Entry& a, const Entry& b) { return a.label == b.label && a.state == b.state; }
};
using Row = std::vector<Entry>;

enum class Rule { None, Arc, Y, H };

bool is_live(const Entry& e) { return e.label == 1 || e.label == 2; }

// Records slices top-down together with the row below each one.
struct Builder {
    Row row;
    std::vector<Slice> slices;
    std::vector<Row> rows;

    void emit(const Slice& s) {
        slices.push_back(s);
        rows.push_back(row);
    }

    // Moves live strand q leftward past the erased strands between p and q.
    void slide(std::size_t p, std::size_t q) {
        for (std::size_t r = q - 1; r > p; --r) {
            int e = row[r].label;
            int x = row[r + 1].label;
            std::swap(row[r], row[r + 1]);
            int idx = static_cast<int>(r) + 1;
            emit(e > x ? Slice{1, idx, e - x} : Slice{-1, idx, x - e});
        }
    }

    void apply(std::size_t p, Rule rule) {
        Entry a = row[p];
        Entry b = row[p + 1];
        int idx = static_cast<int>(p) + 1;
        switch (rule) {
            case Rule::Arc:
                row[p] = {3, 0};
                row[p + 1] = {0, 0};
                emit(a.label == 1 ? Slice{-1, idx, 2} : Slice{-1, idx, 1});
                break;
            case Rule::Y:
                if (a.label == 1) {
                    row[p] = {2, a.state + b.state};
                    row[p + 1] = {0, 0};
                    emit(Slice{-1, idx, 1});
                } else {
                    row[p] = {1, a.state + b.state};
                    row[p + 1] = {3, 0};
                    emit(Slice{1, idx, 1});
                }
                break;
            case Rule::H:
                if (a.label == 1) {
                    row[p] = {2, b.state};
                    row[p + 1] = {1, a.state};
                    emit(Slice{-1, idx, 1});
                } else {
                    row[p] = {1, b.state};
                    row[p + 1] = {2, a.state};
                    emit(Slice{1, idx, 1});
                }
                break;
            case Rule::None:
                break;
        }
    }

    void step(std::size_t p, std::size_t q, Rule rule) {
        slide(p, q);
        apply(p, rule);
    }
};

std::vector<std::size_t> live_positions(const Row& row) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (is_live(row[i])) out.push_back(i);
    return out;
}

Rule canonical_rule(const Entry& a, const Entry& b) {
    if (a.label != b.label) return (a.state == 1 && b.state == -1) ? Rule::Arc : Rule::None;
    return a.state > b.state ? Rule::Y : Rule::None;
}

Rule permissive_rule(const Entry& a, const Entry& b) {
    if (a.label != b.label) return a.state == -b.state ? Rule::Arc : Rule::None;
    return a.state != b.state ? Rule::Y : Rule::None;
}

using RuleFn = Rule (*)(const Entry&, const Entry&);

struct Site {
    std::size_t p, q;
    Rule rule;
};

std::optional<Site> find_rule(const Row& row, RuleFn rule) {
    auto live = live_positions(row);
    for (std::size_t t = 0; t + 1 < live.size(); ++t) {
        Rule r = rule(row[live[t]], row[live[t + 1]]);
        if (r != Rule::None) return Site{live[t], live[t + 1], r};
    }
    return std::nullopt;
}

// H-moves available on live neighbours p < q: a label-1/label-2 pair whose
// states are not opposite. The restricted set only shifts a 0 leftward.
std::vector<std::pair<std::size_t, std::size_t>> h_moves(const Row& row, bool only_zero_shift) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto live = live_positions(row);
    for (std::size_t t = 0; t + 1 < live.size(); ++t) {
        const Entry& a = row[live[t]];
        const Entry& b = row[live[t + 1]];
        if (a.label == b.label || a.state == -b.state) continue;
        if (only_zero_shift && !(b.state == 0 && a.state != 0)) continue;
        out.emplace_back(live[t], live[t + 1]);
    }
    return out;
}

// Shortest chain of H-moves after which `rule` applies somewhere.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> h_chain(const Row& start, RuleFn rule,
                                                                         bool only_zero_shift) {
    constexpr std::size_t kSearchLimit = 20000;
    struct Back {
        std::optional<Row> prev;
        std::size_t p = 0, q = 0;
    };
    std::map<Row, Back> seen;
    seen[start] = Back{};
    std::deque<Row> queue{start};
    while (!queue.empty() && seen.size() < kSearchLimit) {
        Row cur = queue.front();
        queue.pop_front();
        if (cur != start && find_rule(cur, rule)) {
            std::vector<std::pair<std::size_t, std::size_t>> path;
            Row k = cur;
            while (seen[k].prev) {
                const Back& b = seen[k];
                path.emplace_back(b.p, b.q);
                k = *b.prev;
            }
            return std::vector<std::pair<std::size_t, std::size_t>>(path.rbegin(), path.rend());
        }
        for (auto [p, q] : h_moves(cur, only_zero_shift)) {
            Builder b{cur, {}, {}};
            b.step(p, q, Rule::H);
            if (seen.count(b.row)) continue;
            seen[b.row] = Back{cur, p, q};
            queue.push_back(b.row);
        }
    }
    return std::nullopt;
}

PackedState pack_row(const Row& row) {
    PackedState s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        ColorSet c = 0;
        if (row[i].label == 3) c = kAllColors;
        else if (is_live(row[i])) c = *color_set_of_state(row[i].label, row[i].state);
        s = set_strand_colors(s, i, c);
    }
    return s;
}

bool row_is_dominant(const Row& row) {
    SignString S;
    StateString J;
    for (const Entry& e : row)
        if (is_live(e)) {
            S.push_back(sign_of_label(e.label));
            J.push_back(e.state);
        }
    return is_dominant_closed(S, J);
}

}  // namespace

GrowthResult grow(const EnhancedSignString& S, const StateString& J, GrowthMode mode) {
    Builder b;
    std::size_t k = 0;
    for (Symbol x : S) {
        int label = label_of(x);
        if (label == 1 || label == 2) {
            if (k >= J.size()) throw WebError("growth: state string shorter than the sign string");
            int j = J[k++];
            if (j < -1 || j > 1) throw WebError("growth: state out of range");
            b.row.push_back({label, j});
        } else {
            b.row.push_back({label, 0});
        }
    }
    if (k != J.size()) throw WebError("growth: state string longer than the sign string");
    if (S.size() > kMaxStrands) throw WebError("growth: too many strands");
    const Row top_row = b.row;

    bool terminated = false;
    // Each productive step erases at least one live strand or runs a finite H-chain.
    for (std::size_t guard = 0; guard < 4 * S.size() + 4; ++guard) {
        if (live_positions(b.row).empty()) {
            terminated = true;
            break;
        }
        if (auto site = find_rule(b.row, canonical_rule)) {
            b.step(site->p, site->q, site->rule);
            continue;
        }
        // Off a dominant path the canonical H-moves can create digons, so the
        // extended mode prefers any arc or Y there.
        bool relaxed = mode == GrowthMode::Extended && !row_is_dominant(b.row);
        if (relaxed) {
            if (auto site = find_rule(b.row, permissive_rule)) {
                b.step(site->p, site->q, site->rule);
                continue;
            }
        }
        auto chain = h_chain(b.row, canonical_rule, true);
        if (!chain && mode == GrowthMode::Extended) chain = h_chain(b.row, permissive_rule, false);
        if (!chain) break;
        for (auto [p, q] : *chain) b.step(p, q, Rule::H);
    }

    GlWeight bottom;
    for (const Entry& e : b.row) bottom.push_back(e.label);
    std::vector<Slice> slices(b.slices.rbegin(), b.slices.rend());
    GrowthResult result;
    result.web = LadderWeb(bottom, std::move(slices));
    result.terminated = terminated;
    if (terminated) {
        Flow& f = result.flow;
        // rows[t] is the row below the t-th slice emitted top-down.
        for (auto it = b.rows.rbegin(); it != b.rows.rend(); ++it) f.levels.push_back(pack_row(*it));
        f.levels.push_back(pack_row(top_row));
        const LadderWeb& w = result.web;
        f.boundary = boundary_state(f.levels.back(), w.top());
        f.bottom_boundary = boundary_state(f.levels.front(), w.bottom());
        const auto& rules = WeightRules::standard();
        for (std::size_t t = 0; t < w.slices().size(); ++t) {
            const Slice& sl = w.slices()[t];
            std::size_t i = static_cast<std::size_t>(sl.index - 1);
            auto e = rules.exponent(sl.sign, sl.power, strand_colors(f.levels[t], i), strand_colors(f.levels[t], i + 1),
                                    rung_colors(w, f, t));
            if (!e) throw std::logic_error("growth: traced flow is not admissible");
            f.weight += *e;
        }
    }
    return result;
}

GrowthResult growth(const SignString& S, const StateString& J) { return grow(enhance(S), J); }

bool is_dominant_closed(const SignString& S, const StateString& J) {
    if (S.size() != J.size()) throw WebError("is_dominant_closed: length mismatch");
    int c[3] = {0, 0, 0};
    for (int x : hat_state(J, weight_of_sign_string(S))) {
        ++c[x + 1];
        if (!(c[2] >= c[1] && c[1] >= c[0])) return false;
    }
    return c[0] == c[1] && c[1] == c[2];
}

std::vector<StateString> dominant_states(const SignString& S) {
    std::vector<StateString> out;
    StateString cur;
    // counts of +1, 0, -1 in the expanded prefix
    std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t i, int p, int z, int m) {
        if (i == S.size()) {
            if (p == z && z == m) out.push_back(cur);
            return;
        }
        int left = static_cast<int>(S.size() - i);
        for (int j = 1; j >= -1; --j) {
            int np = p, nz = z, nm = m;
            if (S[i] == Sign::Plus) {
                (j == 1 ? np : j == 0 ? nz : nm) += 1;
            } else {
                if (j == 1) ++np, ++nz;
                else if (j == -1) ++nz, ++nm;
                else ++np, ++nm;
            }
            if (!(np >= nz && nz >= nm)) continue;
            // each later entry closes the gap between +1 and -1 by at most one
            if (np - nm > left - 1) continue;
            cur.push_back(j);
            rec(i + 1, np, nz, nm);
            cur.pop_back();
        }
    };
    rec(0, 0, 0, 0);
    return out;
}

std::vector<BasisWeb> enumerate_basis(const EnhancedSignString& S) {
    std::vector<BasisWeb> out;
    for (const StateString& J : dominant_states(hat(S))) {
        GrowthResult g = grow(S, J);
        if (!g.terminated) throw std::logic_error("enumerate_basis: growth did not terminate on a dominant path");
        out.push_back({J, std::move(g.web), std::move(g.flow)});
    }
    return out;
}

std::vector<BasisWeb> enumerate_basis(const SignString& S) { return enumerate_basis(enhance(S)); }

}  // namespace webkup
