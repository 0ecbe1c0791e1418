#include "webkup/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace webkup {

LaurentPoly evaluate_closed_statesum(const LadderWeb& w, const WeightRules& rules) {
    if (!w.is_closed()) throw WebError("state sum: web is not closed");
    StateVector v;
    v[forced_state(w.bottom())] = LaurentPoly(1);
    v = sweep(w, std::move(v), rules);
    auto it = v.find(forced_state(w.top()));
    return it == v.end() ? LaurentPoly() : it->second;
}

LaurentPoly evaluate_closed_statesum(const PlanarWeb& w) {
    if (!w.ladder()) throw WebError("state sum: planar web has no ladder presentation");
    return evaluate_closed_statesum(*w.ladder());
}

namespace {

// Mutable copy of a closed planar web used by the rewriting evaluator.
struct Graph {
    std::vector<int> opp, next;
    std::vector<char> alive;
    int loops = 0;

    // Joins the far ends of darts p and r into one edge.
    void join(int p, int r) {
        int a = opp[p];
        int b = opp[r];
        if (a == r) {
            ++loops;
            return;
        }
        opp[a] = b;
        opp[b] = a;
    }

    void kill_vertex(int d) {
        int x = d;
        do {
            alive[x] = 0;
            x = next[x];
        } while (x != d);
    }
};

LaurentPoly circle_power(int loops) {
    LaurentPoly p(1);
    LaurentPoly three = quantum_int(3);
    for (int i = 0; i < loops; ++i) p *= three;
    return p;
}

LaurentPoly reduce(Graph g) {
    const int D = static_cast<int>(g.opp.size());
    // Locate the smallest face, ties broken by the smallest edge id on it.
    std::vector<char> seen(D, 0);
    std::vector<int> best;
    int best_edge = 0;
    for (int d0 = 0; d0 < D; ++d0) {
        if (!g.alive[d0] || seen[d0]) continue;
        std::vector<int> face;
        int edge = D;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            face.push_back(d);
            edge = std::min({edge, d, g.opp[d]});
            d = g.next[g.opp[d]];
        }
        if (best.empty() || face.size() < best.size() || (face.size() == best.size() && edge < best_edge)) {
            best = std::move(face);
            best_edge = edge;
        }
    }
    if (best.empty()) return circle_power(g.loops);
    if (best.size() == 2) {
        int x0 = g.next[best[0]], x1 = g.next[best[1]];
        g.kill_vertex(best[0]);
        g.kill_vertex(best[1]);
        g.join(x0, x1);
        return quantum_int(2) * reduce(std::move(g));
    }
    if (best.size() == 4) {
        int x[4];
        for (int k = 0; k < 4; ++k) x[k] = g.next[best[k]];
        for (int k = 0; k < 4; ++k) g.kill_vertex(best[k]);
        Graph h = g;
        g.join(x[0], x[1]);
        g.join(x[2], x[3]);
        h.join(x[1], x[2]);
        h.join(x[3], x[0]);
        return reduce(std::move(g)) + reduce(std::move(h));
    }
    throw std::logic_error("rewrite: closed web has no loop, digon or square face (smallest face has " +
                           std::to_string(best.size()) + " sides)");
}

}  // namespace

LaurentPoly evaluate_closed_rewrite(const PlanarWeb& w) {
    if (!w.is_closed()) throw WebError("rewrite: web is not closed");
    Graph g;
    for (const auto& d : w.darts()) {
        g.opp.push_back(d.opp);
        g.next.push_back(d.next);
        g.alive.push_back(1);
    }
    for (const auto& v : w.vertices())
        if (v.dart >= 0 && w.degree(static_cast<int>(&v - w.vertices().data())) != 3)
            throw std::logic_error("rewrite: closed web has a vertex that is not trivalent");
    g.loops = w.free_loops();
    return reduce(std::move(g));
}

LaurentPoly ExpansionVector::at(const StateString& j) const {
    auto it = coefficients.find(j);
    return it == coefficients.end() ? LaurentPoly() : it->second;
}

const StateString& ExpansionVector::leading() const {
    if (coefficients.empty()) throw std::logic_error("expansion: zero vector has no leading state");
    return coefficients.begin()->first;
}

ExpansionVector expansion(const LadderWeb& w, const WeightRules& rules) {
    if (!w.bottom_is_empty()) throw WebError("expansion: web must have empty bottom boundary");
    StateVector v;
    v[forced_state(w.bottom())] = LaurentPoly(1);
    v = sweep(w, std::move(v), rules);
    ExpansionVector e;
    e.sign = hat(w.top_signs());
    for (auto& [s, c] : v) e.coefficients[boundary_state(s, w.top())] += c;
    for (auto it = e.coefficients.begin(); it != e.coefficients.end();) {
        if (it->second.is_zero()) it = e.coefficients.erase(it);
        else ++it;
    }
    return e;
}

int boundary_length(const LadderWeb& w) {
    return static_cast<int>(std::count_if(w.top().begin(), w.top().end(), [](int x) { return x == 1 || x == 2; }));
}

LaurentPoly kuperberg_form(const LadderWeb& u, const LadderWeb& v) {
    return evaluate_closed_statesum(close_ladder(v, u)).shifted(boundary_length(u));
}

LaurentPoly lusztig_form(const LadderWeb& u, const LadderWeb& v) {
    return evaluate_closed_statesum(close_ladder(v, u)).shifted(-boundary_length(u));
}

LaurentPoly lusztig_form(const ExpansionVector& u, const ExpansionVector& v) {
    LaurentPoly s;
    for (const auto& [j, c] : u.coefficients) {
        auto it = v.coefficients.find(j);
        if (it != v.coefficients.end()) s += c * it->second;
    }
    return s;
}

}  // namespace webkup
