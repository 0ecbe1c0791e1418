#include "webkup/gornik.hpp"

#include <array>
#include <functional>

#include "webkup/evaluate.hpp"
#include "webkup/growth.hpp"

namespace webkup {

namespace {

// Edge ids indexed by dart, and the three darts of every trivalent vertex.
struct EdgeIndex {
    std::vector<int> edge_of;
    int edges = 0;
    std::vector<std::array<int, 3>> triads;

    explicit EdgeIndex(const PlanarWeb& w) {
        const auto& darts = w.darts();
        edge_of.assign(darts.size(), -1);
        for (std::size_t d = 0; d < darts.size(); ++d) {
            if (edge_of[d] >= 0) continue;
            edge_of[d] = edge_of[static_cast<std::size_t>(darts[d].opp)] = edges++;
        }
        for (std::size_t v = 0; v < w.vertices().size(); ++v) {
            if (w.degree(static_cast<int>(v)) != 3) continue;
            int d = w.vertices()[v].dart;
            int e = darts[static_cast<std::size_t>(d)].next;
            int f = darts[static_cast<std::size_t>(e)].next;
            triads.push_back({edge_of[static_cast<std::size_t>(d)], edge_of[static_cast<std::size_t>(e)],
                              edge_of[static_cast<std::size_t>(f)]});
        }
    }
};

void search(const PlanarWeb& w, const std::function<void(const EdgeColoring&)>& visit) {
    EdgeIndex idx(w);
    std::vector<std::vector<int>> at_edge(static_cast<std::size_t>(idx.edges));
    for (std::size_t t = 0; t < idx.triads.size(); ++t)
        for (int e : idx.triads[t]) at_edge[static_cast<std::size_t>(e)].push_back(static_cast<int>(t));
    EdgeColoring color(static_cast<std::size_t>(idx.edges), 2);
    auto fits = [&](int e) {
        for (int t : at_edge[static_cast<std::size_t>(e)])
            for (int other : idx.triads[static_cast<std::size_t>(t)])
                if (other != e && color[static_cast<std::size_t>(other)] == color[static_cast<std::size_t>(e)])
                    return false;
        return true;
    };
    std::function<void(int)> rec = [&](int e) {
        if (e == idx.edges) {
            visit(color);
            return;
        }
        for (int c = -1; c <= 1; ++c) {
            color[static_cast<std::size_t>(e)] = c;
            if (fits(e)) rec(e + 1);
        }
        color[static_cast<std::size_t>(e)] = 2;
    };
    rec(0);
}

}  // namespace

Eisenstein Eisenstein::zeta_power(int e) {
    switch (((e % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
    }
}

std::vector<Flow> colorings(const LadderWeb& w) { return enumerate_flows(w); }

std::uint64_t count_colorings(const PlanarWeb& w) {
    std::uint64_t n = 0;
    search(w, [&](const EdgeColoring&) { ++n; });
    for (int i = 0; i < w.free_loops(); ++i) n *= 3;
    return n;
}

std::vector<EdgeColoring> planar_colorings(const PlanarWeb& w) {
    std::vector<EdgeColoring> out;
    search(w, [&](const EdgeColoring& c) { out.push_back(c); });
    return out;
}

std::uint64_t BlockDecomposition::total() const {
    std::uint64_t s = 0;
    for (const auto& [j, n] : blocks) s += n;
    return s;
}

std::uint64_t BlockDecomposition::sum_of_squares() const {
    std::uint64_t s = 0;
    for (const auto& [j, n] : blocks) s += n * n;
    return s;
}

BlockDecomposition blocks(const EnhancedSignString& S) {
    BlockDecomposition out{S, {}};
    for (const BasisWeb& u : enumerate_basis(S))
        for (const Flow& f : colorings(u.web)) ++out.blocks[f.boundary];
    return out;
}

RelationReport check_gornik_dimension(const EnhancedSignString& S) {
    RelationReport rep;
    auto basis = enumerate_basis(S);
    std::uint64_t total = 0;
    for (const BasisWeb& u : basis)
        for (const BasisWeb& v : basis) {
            PlanarWeb w = close(u.web, v.web);
            std::uint64_t n = count_colorings(w);
            BigInt at_one = evaluate_closed_statesum(w).at_one();
            rep.record(at_one == BigInt(static_cast<long long>(n)),
                       "colourings of " + state_to_string(u.key) + "*" + state_to_string(v.key));
            total += n;
        }
    BlockDecomposition b = blocks(S);
    rep.record(b.sum_of_squares() == total, "sum of squared block sizes for " + to_string(S));
    std::uint64_t per_web = 0;
    for (const BasisWeb& u : basis) per_web += colorings(u.web).size();
    rep.record(b.total() == per_web, "block sizes add up to the colourings of the basis for " + to_string(S));
    return rep;
}

RelationReport verify_R1_relations(const PlanarWeb& w) {
    RelationReport rep;
    EdgeIndex idx(w);
    const Eisenstein zero{0, 0}, one{1, 0};
    for (const EdgeColoring& c : planar_colorings(w))
        for (const auto& t : idx.triads) {
            int a = c[static_cast<std::size_t>(t[0])];
            int b = c[static_cast<std::size_t>(t[1])];
            int d = c[static_cast<std::size_t>(t[2])];
            auto z = Eisenstein::zeta_power;
            rep.record(a != b && b != d && a != d, "vertex colours distinct");
            rep.record(z(a) + z(b) + z(d) == zero, "x1 + x2 + x3 = 0");
            rep.record(z(a + b) + z(a + d) + z(b + d) == zero, "x1x2 + x1x3 + x2x3 = 0");
            rep.record(z(a) * z(b) * z(d) == one, "x1x2x3 = 1");
        }
    return rep;
}

}  // namespace webkup
