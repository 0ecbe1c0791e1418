#pragma once

#include <optional>
#include <vector>

#include "webkup/ladder.hpp"

namespace webkup {

// A web as a half-edge (dart) structure. Each dart belongs to a vertex and is
// paired with the dart at the other end of its edge; `next` is the
// counterclockwise successor around the vertex. Erased edges are gone and
// bivalent points have been smoothed, so interior vertices are trivalent and
// boundary vertices univalent. Closed loops without vertices are counted.
class PlanarWeb {
public:
    struct Dart {
        int vertex;
        int opp;
        int next;
        // Edge orientation points away from this dart's vertex.
        bool out;
    };
    struct Vertex {
        int dart;
        bool boundary;
    };

    PlanarWeb() = default;
    static PlanarWeb from_ladder(const LadderWeb& w);

    const std::vector<Dart>& darts() const noexcept { return darts_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    int free_loops() const noexcept { return loops_; }
    std::size_t edge_count() const noexcept { return darts_.size() / 2; }
    // Boundary vertices below and above, left to right.
    const std::vector<int>& bottom_boundary() const noexcept { return bottom_; }
    const std::vector<int>& top_boundary() const noexcept { return top_; }
    bool is_closed() const noexcept { return bottom_.empty() && top_.empty(); }
    bool is_empty() const noexcept { return darts_.empty() && loops_ == 0; }
    // The ladder presentation this web was drawn from, if any.
    const std::optional<LadderWeb>& ladder() const noexcept { return ladder_; }

    int degree(int v) const;
    int trivalent_count() const;
    // Faces as dart cycles under d -> next(opp(d)).
    std::vector<std::vector<int>> faces() const;
    // Faces not touching the boundary.
    std::vector<std::vector<int>> interior_faces() const;
    int components() const;
    // Each trivalent vertex is a source or a sink.
    bool orientation_admissible() const;
    // V - E + F = 2C over the components that have vertices.
    bool euler_holds() const;
    // No loops and no interior face with at most four sides.
    bool is_non_elliptic() const;

private:
    friend class PlanarBuilder;
    std::vector<Dart> darts_;
    std::vector<Vertex> vertices_;
    std::vector<int> bottom_, top_;
    int loops_ = 0;
    std::optional<LadderWeb> ladder_;
};

// The closed web v* u: u with the mirror image of v stacked on top.
PlanarWeb close(const LadderWeb& u, const LadderWeb& v);
// The closed ladder underlying close(u, v).
LadderWeb close_ladder(const LadderWeb& u, const LadderWeb& v);

}  // namespace webkup
