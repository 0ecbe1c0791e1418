#include "webkup/planar.hpp"

#include <array>
#include <stdexcept>

namespace webkup {

namespace {

// Directions around a ladder vertex in counterclockwise order.
enum Dir { East = 0, North = 1, West = 2, South = 3 };

bool live(int label) { return label == 1 || label == 2; }

}  // namespace

class PlanarBuilder {
public:
    int add_vertex(bool boundary) {
        slots_.push_back({-1, -1, -1, -1});
        boundary_.push_back(boundary);
        return static_cast<int>(slots_.size()) - 1;
    }

    // Adds an edge oriented from (u, du) to (v, dv).
    void add_edge(int u, Dir du, int v, Dir dv) {
        int a = static_cast<int>(vert_.size());
        vert_.push_back(u);
        vert_.push_back(v);
        out_.push_back(true);
        out_.push_back(false);
        slots_[u][du] = a;
        slots_[v][dv] = a + 1;
    }

    PlanarWeb finish(std::vector<int> bottom, std::vector<int> top, std::optional<LadderWeb> ladder) {
        const int D = static_cast<int>(vert_.size());
        std::vector<int> opp(D), next(D, -1);
        std::vector<bool> alive(D, true);
        for (int d = 0; d < D; ++d) opp[d] = d ^ 1;
        for (const auto& s : slots_) {
            std::vector<int> ring;
            for (int d : s)
                if (d >= 0) ring.push_back(d);
            for (std::size_t k = 0; k < ring.size(); ++k) next[ring[k]] = ring[(k + 1) % ring.size()];
        }
        int loops = 0;
        std::vector<bool> vertex_alive(slots_.size(), true);
        for (std::size_t v = 0; v < slots_.size(); ++v) {
            std::vector<int> ring;
            for (int d : slots_[v])
                if (d >= 0) ring.push_back(d);
            if (ring.empty()) vertex_alive[v] = false;
            if (ring.size() != 2 || boundary_[v]) continue;
            int a = ring[0], b = ring[1];
            if (out_[a] == out_[b]) throw std::logic_error("planar web: bivalent point is not a pass-through");
            int x = opp[a], y = opp[b];
            if (x == b) {
                ++loops;
            } else {
                opp[x] = y;
                opp[y] = x;
            }
            alive[a] = alive[b] = false;
            vertex_alive[v] = false;
        }
        // Compact the surviving vertices and darts.
        std::vector<int> vmap(slots_.size(), -1), dmap(D, -1);
        PlanarWeb w;
        for (std::size_t v = 0; v < slots_.size(); ++v)
            if (vertex_alive[v]) {
                vmap[v] = static_cast<int>(w.vertices_.size());
                w.vertices_.push_back({-1, boundary_[v]});
            }
        for (int d = 0; d < D; ++d)
            if (alive[d]) dmap[d] = static_cast<int>(w.darts_.size()), w.darts_.push_back({});
        for (int d = 0; d < D; ++d) {
            if (!alive[d]) continue;
            PlanarWeb::Dart& x = w.darts_[dmap[d]];
            x.vertex = vmap[vert_[d]];
            x.opp = dmap[opp[d]];
            x.next = dmap[next[d]];
            x.out = out_[d];
            if (w.vertices_[x.vertex].dart < 0) w.vertices_[x.vertex].dart = dmap[d];
        }
        for (int& b : bottom) b = vmap[b];
        for (int& t : top) t = vmap[t];
        w.bottom_ = std::move(bottom);
        w.top_ = std::move(top);
        w.loops_ = loops;
        w.ladder_ = std::move(ladder);
        return w;
    }

private:
    std::vector<std::array<int, 4>> slots_;
    std::vector<bool> boundary_;
    std::vector<int> vert_;
    std::vector<bool> out_;
};

PlanarWeb PlanarWeb::from_ladder(const LadderWeb& w) {
    PlanarBuilder b;
    const std::size_t n = w.strands();
    // Vertex at the lower end of the open segment on each strand.
    std::vector<int> open(n, -1);
    std::vector<int> bottom, top;
    auto connect = [&](std::size_t i, int label, int upper) {
        // label 1 runs upward, label 2 downward
        if (label == 1) b.add_edge(open[i], North, upper, South);
        else b.add_edge(upper, South, open[i], North);
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (live(w.bottom()[i])) {
            open[i] = b.add_vertex(true);
            bottom.push_back(open[i]);
        }
    }
    for (std::size_t t = 0; t < w.slices().size(); ++t) {
        const Slice& s = w.slices()[t];
        const GlWeight& below = w.level(t);
        const GlWeight& above = w.level(t + 1);
        std::size_t i = static_cast<std::size_t>(s.index - 1);
        int left = b.add_vertex(false);
        int right = b.add_vertex(false);
        for (auto [pos, v] : {std::pair{i, left}, std::pair{i + 1, right}}) {
            if (live(below[pos])) connect(pos, below[pos], v);
            open[pos] = live(above[pos]) ? v : -1;
        }
        if (live(s.power)) {
            // E_+ carries a label-1 rung right to left and a label-2 rung left to right; E_- the reverse.
            bool right_to_left = (s.sign > 0) == (s.power == 1);
            if (right_to_left) b.add_edge(right, West, left, East);
            else b.add_edge(left, East, right, West);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (live(w.top()[i])) {
            int v = b.add_vertex(true);
            connect(i, w.top()[i], v);
            top.push_back(v);
        }
    }
    return b.finish(std::move(bottom), std::move(top), w);
}

int PlanarWeb::degree(int v) const {
    int d0 = vertices_.at(v).dart;
    if (d0 < 0) return 0;
    int k = 0;
    int d = d0;
    do {
        ++k;
        d = darts_[d].next;
    } while (d != d0);
    return k;
}

int PlanarWeb::trivalent_count() const {
    int k = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (!vertices_[v].boundary) ++k;
    return k;
}

std::vector<std::vector<int>> PlanarWeb::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(darts_.size(), false);
    for (std::size_t d0 = 0; d0 < darts_.size(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = static_cast<int>(d0);
        while (!seen[d]) {
            seen[d] = true;
            face.push_back(d);
            d = darts_[darts_[d].opp].next;
        }
        out.push_back(std::move(face));
    }
    return out;
}

std::vector<std::vector<int>> PlanarWeb::interior_faces() const {
    std::vector<std::vector<int>> out;
    for (auto& f : faces()) {
        bool touches = false;
        for (int d : f)
            if (vertices_[darts_[d].vertex].boundary) touches = true;
        if (!touches) out.push_back(std::move(f));
    }
    return out;
}

int PlanarWeb::components() const {
    std::vector<int> comp(vertices_.size(), -1);
    int c = 0;
    for (std::size_t v0 = 0; v0 < vertices_.size(); ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{static_cast<int>(v0)};
        comp[v0] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            int d0 = vertices_[v].dart;
            if (d0 < 0) continue;
            int d = d0;
            do {
                int u = darts_[darts_[d].opp].vertex;
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
                d = darts_[d].next;
            } while (d != d0);
        }
        ++c;
    }
    return c;
}

bool PlanarWeb::orientation_admissible() const {
    for (const auto& dart : darts_)
        if (dart.out == darts_[dart.opp].out) return false;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].boundary) {
            if (degree(static_cast<int>(v)) != 1) return false;
            continue;
        }
        if (degree(static_cast<int>(v)) != 3) return false;
        int d0 = vertices_[v].dart;
        int d = d0;
        do {
            if (darts_[d].out != darts_[d0].out) return false;
            d = darts_[d].next;
        } while (d != d0);
    }
    return true;
}

bool PlanarWeb::euler_holds() const {
    long V = static_cast<long>(vertices_.size());
    long E = static_cast<long>(edge_count());
    long F = static_cast<long>(faces().size());
    return V - E + F == 2L * components();
}

bool PlanarWeb::is_non_elliptic() const {
    if (loops_ > 0) return false;
    for (const auto& f : interior_faces())
        if (f.size() <= 4) return false;
    return true;
}

LadderWeb close_ladder(const LadderWeb& u, const LadderWeb& v) {
    if (!u.bottom_is_empty() || !v.bottom_is_empty()) throw WebError("close: webs must have empty bottom boundary");
    if (u.top() != v.top()) throw WebError("close: top boundaries differ");
    return u.then(reflect(v));
}

PlanarWeb close(const LadderWeb& u, const LadderWeb& v) { return PlanarWeb::from_ladder(close_ladder(u, v)); }

}  // namespace webkup
