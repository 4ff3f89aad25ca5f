#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/geometry.hpp"

namespace hyperlat {

enum class GeometryKind { Hyperbolic, Euclidean };

std::string to_string(GeometryKind g);

struct LayoutVertex {
    int id = -1;
    Complex pos;    // disc coordinate (hyperbolic) or planar coordinate (euclidean)
    int shell = 0;  // first shell of appearance
};

struct LayoutEdge {
    int id = -1;
    int v0 = -1, v1 = -1;  // v0 < v1
    Complex midpoint;      // geodesic midpoint (hyperbolic) or planar midpoint
    int shell = 0;         // shell of the first face this edge belongs to
};

struct LayoutFace {
    int id = -1;
    std::vector<int> vertices;  // cyclic, length p
    std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod p]
    int shell = 0;
};

// Finite shell-truncated {p,3} tiling patch: the resonator network. Edges are
// resonators, vertices are three-way couplers.
struct LayoutGraph {
    int p = 0;
    int shells = 0;
    GeometryKind geometry = GeometryKind::Hyperbolic;
    std::vector<LayoutVertex> vertices;
    std::vector<LayoutEdge> edges;
    std::vector<LayoutFace> faces;

    int degree(int vertex_id) const;
    std::vector<int> incident_edges(int vertex_id) const;
    // faces containing an edge (size 1 on the patch boundary, 2 inside)
    std::vector<int> faces_of_edge(int edge_id) const;

    // Structural audit: degree bounds, face sizes, edge/face incidences,
    // connectivity, vertex separation. Throws ComputeError on violation.
    void audit() const;
};

// Shell 0 is a single p-gon; shell k+1 adds every polygon of the tiling that
// shares at least one vertex with the patch, exactly once. p = 6 builds the
// Euclidean reference with unit edge; p in {7,8,9,12} builds in the disc.
LayoutGraph build_layout(int p, int shells);

struct EffectiveSite {
    int id = -1;            // equals parent edge id
    Complex pos;            // parent edge midpoint
    int parent_edge = -1;
    int parent_v0 = -1, parent_v1 = -1;  // layout endpoints of the parent edge
    int ring = 0;           // parent edge shell
    bool boundary = false;  // parent edge touches a layout vertex of degree < 3
};

// Medial (line) graph of a LayoutGraph: one site per layout edge, one bond per
// pair of edges sharing an endpoint. The tight-binding lattice.
struct EffectiveLattice {
    GeometryKind geometry = GeometryKind::Hyperbolic;
    int p = 0;
    int shells = 0;
    int num_rings = 0;
    std::vector<EffectiveSite> sites;
    std::vector<std::pair<int, int>> bonds;  // site id pairs, first < second
    std::vector<int> bond_vertex;            // layout vertex where each bond lives
    std::vector<std::array<int, 3>> triangles;  // one per degree-3 layout vertex
    std::vector<std::vector<int>> polygons;     // per layout face: its edge cycle

    int site_count() const { return static_cast<int>(sites.size()); }
    std::vector<int> site_degrees() const;
};

EffectiveLattice medial_graph(const LayoutGraph& layout);

namespace detail {

// Distance-thresholded vertex dedup. Matches below 0.25*threshold, rejects
// the ambiguous band [0.25, 0.75]*threshold as a hard error, separates above.
class VertexRegistry {
  public:
    VertexRegistry(double threshold, bool hyperbolic)
        : threshold_(threshold), hyperbolic_(hyperbolic) {}

    // Returns (id, was_new).
    std::pair<int, bool> find_or_add(Complex z);
    const std::vector<Complex>& points() const { return points_; }

  private:
    double threshold_;
    bool hyperbolic_;
    std::vector<Complex> points_;
};

}  // namespace detail

}  // namespace hyperlat
