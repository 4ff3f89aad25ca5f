#include "hyperlat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace hyperlat {

std::string to_string(GeometryKind g) {
    return g == GeometryKind::Hyperbolic ? "hyperbolic" : "euclidean";
}

namespace detail {

std::pair<int, bool> VertexRegistry::find_or_add(Complex z) {
    int best = -1;
    double best_d = 0.0;
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
        double d;
        if (hyperbolic_) {
            // The disc metric dominates twice the Euclidean one, so far-away
            // points are rejected without evaluating acosh.
            if (std::abs(points_[i] - z) > 0.375 * threshold_) continue;
            d = hyp_distance(DiscPoint(points_[i]), DiscPoint(z));
        } else {
            d = std::abs(points_[i] - z);
        }
        if (d >= 0.25 * threshold_ && d <= 0.75 * threshold_) {
            std::ostringstream os;
            os << "vertex dedup ambiguity: candidate (" << z.real() << ", " << z.imag()
               << ") lies at distance " << d << " from vertex " << i
               << ", inside the ambiguous band [" << 0.25 * threshold_ << ", "
               << 0.75 * threshold_ << "]";
            throw ComputeError(os.str());
        }
        if (d < 0.25 * threshold_ && (best < 0 || d < best_d)) {
            best = i;
            best_d = d;
        }
    }
    if (best >= 0) return {best, false};
    points_.push_back(z);
    return {static_cast<int>(points_.size()) - 1, true};
}

}  // namespace detail

int LayoutGraph::degree(int vertex_id) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.v0 == vertex_id || e.v1 == vertex_id) ++d;
    return d;
}

std::vector<int> LayoutGraph::incident_edges(int vertex_id) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.v0 == vertex_id || e.v1 == vertex_id) out.push_back(e.id);
    return out;
}

std::vector<int> LayoutGraph::faces_of_edge(int edge_id) const {
    std::vector<int> out;
    for (const auto& f : faces)
        if (std::find(f.edges.begin(), f.edges.end(), edge_id) != f.edges.end())
            out.push_back(f.id);
    return out;
}

void LayoutGraph::audit() const {
    const int nv = static_cast<int>(vertices.size());
    const int ne = static_cast<int>(edges.size());
    const int nf = static_cast<int>(faces.size());

    std::vector<int> deg(nv, 0);
    for (const auto& e : edges) {
        if (e.v0 < 0 || e.v0 >= nv || e.v1 < 0 || e.v1 >= nv || e.v0 == e.v1)
            throw ComputeError("layout audit: edge " + std::to_string(e.id) +
                               " has invalid endpoints");
        ++deg[e.v0];
        ++deg[e.v1];
    }
    for (int v = 0; v < nv; ++v) {
        if (deg[v] < 2 || deg[v] > 3)
            throw ComputeError("layout audit: vertex " + std::to_string(v) + " has degree " +
                               std::to_string(deg[v]) + ", expected 2 or 3");
    }

    std::vector<int> edge_face_count(ne, 0);
    std::map<std::pair<int, int>, int> face_pair_shared;
    for (const auto& f : faces) {
        if (static_cast<int>(f.vertices.size()) != p || static_cast<int>(f.edges.size()) != p)
            throw ComputeError("layout audit: face " + std::to_string(f.id) +
                               " does not have exactly p = " + std::to_string(p) + " sides");
        for (int eid : f.edges) ++edge_face_count[eid];
    }
    for (int e = 0; e < ne; ++e) {
        if (edge_face_count[e] < 1 || edge_face_count[e] > 2)
            throw ComputeError("layout audit: edge " + std::to_string(e) + " belongs to " +
                               std::to_string(edge_face_count[e]) + " faces");
    }
    // Adjacent faces share exactly one edge.
    std::vector<std::vector<int>> edge_faces(ne);
    for (const auto& f : faces)
        for (int eid : f.edges) edge_faces[eid].push_back(f.id);
    for (int e = 0; e < ne; ++e) {
        if (edge_faces[e].size() == 2) {
            auto key = std::minmax(edge_faces[e][0], edge_faces[e][1]);
            ++face_pair_shared[{key.first, key.second}];
        }
    }
    for (const auto& [pair, count] : face_pair_shared) {
        if (count != 1)
            throw ComputeError("layout audit: faces " + std::to_string(pair.first) + " and " +
                               std::to_string(pair.second) + " share " + std::to_string(count) +
                               " edges");
    }
    // Disc topology: the single-face edges form one closed boundary cycle.
    if (nf > 1) {
        std::vector<int> boundary_deg(nv, 0);
        std::vector<int> boundary_edges;
        for (int e = 0; e < ne; ++e) {
            if (edge_face_count[e] == 1) {
                boundary_edges.push_back(e);
                ++boundary_deg[edges[e].v0];
                ++boundary_deg[edges[e].v1];
            }
        }
        for (int v = 0; v < nv; ++v) {
            if (boundary_deg[v] != 0 && boundary_deg[v] != 2)
                throw ComputeError("layout audit: vertex " + std::to_string(v) + " touches " +
                                   std::to_string(boundary_deg[v]) + " boundary edges");
        }
        if (!boundary_edges.empty()) {
            std::set<int> todo(boundary_edges.begin(), boundary_edges.end());
            std::vector<int> stack{*todo.begin()};
            todo.erase(todo.begin());
            while (!stack.empty()) {
                const int e = stack.back();
                stack.pop_back();
                for (auto it = todo.begin(); it != todo.end();) {
                    const auto& f = edges[*it];
                    const auto& g = edges[e];
                    if (f.v0 == g.v0 || f.v0 == g.v1 || f.v1 == g.v0 || f.v1 == g.v1) {
                        stack.push_back(*it);
                        it = todo.erase(it);
                    } else {
                        ++it;
                    }
                }
            }
            if (!todo.empty())
                throw ComputeError("layout audit: patch boundary is not a single cycle");
        }
    }

    // Connectivity.
    if (nv > 0) {
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        std::vector<std::vector<int>> adj(nv);
        for (const auto& e : edges) {
            adj[e.v0].push_back(e.v1);
            adj[e.v1].push_back(e.v0);
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
        }
        if (visited != nv) throw ComputeError("layout audit: graph is not connected");
    }

    // Vertex separation: no two distinct vertices closer than half an edge.
    double min_edge = 0.0;
    if (geometry == GeometryKind::Hyperbolic) {
        min_edge = tile_edge_length(p, 3);
    } else {
        min_edge = 1.0;
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            double d;
            if (geometry == GeometryKind::Hyperbolic) {
                if (std::abs(vertices[i].pos - vertices[j].pos) > 0.25 * min_edge) continue;
                d = hyp_distance(DiscPoint(vertices[i].pos), DiscPoint(vertices[j].pos));
            } else {
                d = std::abs(vertices[i].pos - vertices[j].pos);
            }
            if (d < 0.5 * min_edge)
                throw ComputeError("layout audit: vertices " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are only " + std::to_string(d) +
                                   " apart");
        }
    }
}

namespace {

struct FaceRecord {
    std::vector<int> vertex_ids;  // cyclic
    int shell = 0;
};

// Builds edges/faces out of deduplicated face vertex cycles.
LayoutGraph assemble_graph(int p, int shells, GeometryKind geometry,
                           const std::vector<Complex>& vertex_pos,
                           const std::vector<int>& vertex_shell,
                           const std::vector<FaceRecord>& face_records) {
    LayoutGraph g;
    g.p = p;
    g.shells = shells;
    g.geometry = geometry;

    for (int i = 0; i < static_cast<int>(vertex_pos.size()); ++i)
        g.vertices.push_back({i, vertex_pos[i], vertex_shell[i]});

    std::map<std::pair<int, int>, int> edge_ids;
    for (const auto& fr : face_records) {
        LayoutFace face;
        face.id = static_cast<int>(g.faces.size());
        face.shell = fr.shell;
        face.vertices = fr.vertex_ids;
        const int n = static_cast<int>(fr.vertex_ids.size());
        for (int k = 0; k < n; ++k) {
            const int a = fr.vertex_ids[k];
            const int b = fr.vertex_ids[(k + 1) % n];
            const auto key = std::minmax(a, b);
            auto it = edge_ids.find({key.first, key.second});
            int eid;
            if (it == edge_ids.end()) {
                eid = static_cast<int>(g.edges.size());
                edge_ids[{key.first, key.second}] = eid;
                LayoutEdge e;
                e.id = eid;
                e.v0 = key.first;
                e.v1 = key.second;
                e.shell = fr.shell;
                if (geometry == GeometryKind::Hyperbolic) {
                    e.midpoint =
                        hyp_midpoint(DiscPoint(vertex_pos[e.v0]), DiscPoint(vertex_pos[e.v1])).z();
                } else {
                    e.midpoint = 0.5 * (vertex_pos[e.v0] + vertex_pos[e.v1]);
                }
                g.edges.push_back(e);
            } else {
                eid = it->second;
            }
            face.edges.push_back(eid);
        }
        g.faces.push_back(std::move(face));
    }
    return g;
}

LayoutGraph build_hyperbolic(int p, int shells) {
    const double pi = std::acos(-1.0);
    const double rc = circumradius(p, 3);
    const double edge = tile_edge_length(p, 3);
    const double apothem = std::acosh(std::cos(pi / 3.0) / std::sin(pi / p));

    // A shell advances the patch radius by at most one tile diameter; refuse
    // requests whose outermost vertices could not be represented in the disc.
    const double max_radius = 2.0 * std::atanh(1.0 - kBoundaryEps);
    const int attainable =
        static_cast<int>(std::floor((max_radius - rc - edge) / (2.0 * apothem)));
    if (rc + shells * 2.0 * apothem + edge > max_radius) {
        std::ostringstream os;
        os << "build_layout(" << p << ", " << shells
           << "): disc coordinates would exceed 1 - " << kBoundaryEps
           << "; attainable maximum is about " << attainable << " shells";
        throw ComputeError(os.str());
    }

    constexpr std::size_t kFaceBudget = 200000;

    detail::VertexRegistry registry(0.5 * edge, /*hyperbolic=*/true);
    std::vector<int> vertex_shell;
    std::vector<FaceRecord> face_records;
    std::set<std::vector<int>> face_keys;

    auto add_face = [&](const std::vector<Complex>& cycle, int shell) -> bool {
        std::vector<int> ids;
        ids.reserve(cycle.size());
        for (const Complex& z : cycle) {
            auto [id, was_new] = registry.find_or_add(z);
            if (was_new) vertex_shell.push_back(shell);
            ids.push_back(id);
        }
        std::vector<int> key = ids;
        std::sort(key.begin(), key.end());
        if (face_keys.count(key)) return false;
        face_keys.insert(key);
        face_records.push_back({ids, shell});
        return true;
    };

    // Central polygon, one vertex on the positive imaginary axis.
    std::vector<Complex> central;
    const double r0 = std::tanh(0.5 * rc);
    for (int k = 0; k < p; ++k)
        central.push_back(std::polar(r0, pi / 2.0 + 2.0 * pi * k / p));
    add_face(central, 0);

    std::size_t frontier_begin = 0;
    for (int shell = 1; shell <= shells; ++shell) {
        const std::size_t frontier_end = face_records.size();
        for (std::size_t fi = frontier_begin; fi < frontier_end; ++fi) {
            // Copy: face_records may reallocate while we append.
            const FaceRecord fr = face_records[fi];
            const int n = static_cast<int>(fr.vertex_ids.size());
            for (int k = 0; k < n; ++k) {
                const Complex za = registry.points()[fr.vertex_ids[k]];
                const Complex zb = registry.points()[fr.vertex_ids[(k + 1) % n]];
                const Geodesic mirror = Geodesic::through(DiscPoint(za), DiscPoint(zb));
                std::vector<Complex> image;
                image.reserve(n);
                for (int m = 0; m < n; ++m)
                    image.push_back(
                        reflect(DiscPoint(registry.points()[fr.vertex_ids[m]]), mirror).z());
                add_face(image, shell);
                if (face_records.size() > kFaceBudget)
                    throw ComputeError("build_layout: face budget exceeded (" +
                                       std::to_string(kFaceBudget) + " faces)");
            }
        }
        frontier_begin = frontier_end;
    }

    LayoutGraph g = assemble_graph(p, shells, GeometryKind::Hyperbolic, registry.points(),
                                   vertex_shell, face_records);
    g.audit();
    return g;
}

// Euclidean honeycomb reference with unit edge. Hexes are tracked by axial
// coordinates (q, r); every corner is the north or south corner of exactly one
// hex, so vertex dedup is exact integer arithmetic.
LayoutGraph build_euclidean_hex(int shells) {
    struct AxialLess {
        bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
            return a < b;
        }
    };
    const double root3 = std::sqrt(3.0);
    auto hex_center = [&](int q, int r) {
        return Complex(root3 * (q + 0.5 * r), 1.5 * r);
    };
    // Corner key: {q, r, 0 = north, 1 = south} of the owning hex.
    auto corner_pos = [&](const std::array<int, 3>& c) {
        return hex_center(c[0], c[1]) + Complex(0.0, c[2] == 0 ? 1.0 : -1.0);
    };
    // Corners of hex (q, r), counter-clockwise starting at the north corner.
    auto hex_corners = [](int q, int r) {
        return std::array<std::array<int, 3>, 6>{{{q, r, 0},
                                                  {q - 1, r + 1, 1},
                                                  {q, r - 1, 0},
                                                  {q, r, 1},
                                                  {q + 1, r - 1, 0},
                                                  {q, r + 1, 1}}};
    };

    std::map<std::array<int, 3>, int, AxialLess> vertex_ids;
    std::vector<Complex> vertex_pos;
    std::vector<int> vertex_shell;
    std::vector<FaceRecord> face_records;
    std::set<std::pair<int, int>> seen_hex;
    std::vector<std::pair<int, int>> order;  // hexes in insertion order

    auto add_hex = [&](int q, int r, int shell) {
        if (seen_hex.count({q, r})) return;
        seen_hex.insert({q, r});
        order.push_back({q, r});
        FaceRecord fr;
        fr.shell = shell;
        for (const auto& c : hex_corners(q, r)) {
            auto it = vertex_ids.find(c);
            int id;
            if (it == vertex_ids.end()) {
                id = static_cast<int>(vertex_pos.size());
                vertex_ids[c] = id;
                vertex_pos.push_back(corner_pos(c));
                vertex_shell.push_back(shell);
            } else {
                id = it->second;
            }
            fr.vertex_ids.push_back(id);
        }
        face_records.push_back(std::move(fr));
    };

    add_hex(0, 0, 0);
    std::size_t frontier_begin = 0;
    const int neighbor_dq[6] = {1, -1, 0, 0, 1, -1};
    const int neighbor_dr[6] = {0, 0, 1, -1, -1, 1};
    for (int shell = 1; shell <= shells; ++shell) {
        const std::size_t frontier_end = order.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            const auto [q, r] = order[i];
            for (int k = 0; k < 6; ++k) add_hex(q + neighbor_dq[k], r + neighbor_dr[k], shell);
        }
        frontier_begin = frontier_end;
    }

    LayoutGraph g =
        assemble_graph(6, shells, GeometryKind::Euclidean, vertex_pos, vertex_shell, face_records);
    g.audit();
    return g;
}

}  // namespace

LayoutGraph build_layout(int p, int shells) {
    if (shells < 0) throw ConfigError("build_layout: shells must be >= 0");
    if (p == 6) return build_euclidean_hex(shells);
    if (p == 7 || p == 8 || p == 9 || p == 12) return build_hyperbolic(p, shells);
    throw ConfigError("build_layout: p must be 6 (Euclidean reference) or one of {7, 8, 9, 12}, got " +
                      std::to_string(p));
}

std::vector<int> EffectiveLattice::site_degrees() const {
    std::vector<int> deg(sites.size(), 0);
    for (const auto& [a, b] : bonds) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

EffectiveLattice medial_graph(const LayoutGraph& layout) {
    EffectiveLattice lat;
    lat.geometry = layout.geometry;
    lat.p = layout.p;
    lat.shells = layout.shells;

    const int nv = static_cast<int>(layout.vertices.size());
    std::vector<int> deg(nv, 0);
    std::vector<std::vector<int>> at_vertex(nv);
    for (const auto& e : layout.edges) {
        ++deg[e.v0];
        ++deg[e.v1];
        at_vertex[e.v0].push_back(e.id);
        at_vertex[e.v1].push_back(e.id);
    }

    int max_ring = 0;
    for (const auto& e : layout.edges) {
        EffectiveSite s;
        s.id = e.id;
        s.pos = e.midpoint;
        s.parent_edge = e.id;
        s.parent_v0 = e.v0;
        s.parent_v1 = e.v1;
        s.ring = e.shell;
        s.boundary = deg[e.v0] < 3 || deg[e.v1] < 3;
        max_ring = std::max(max_ring, s.ring);
        lat.sites.push_back(s);
    }
    lat.num_rings = max_ring + 1;

    for (int v = 0; v < nv; ++v) {
        auto& inc = at_vertex[v];
        std::sort(inc.begin(), inc.end());
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                lat.bonds.push_back({inc[i], inc[j]});
                lat.bond_vertex.push_back(v);
            }
        }
        if (inc.size() == 3) lat.triangles.push_back({inc[0], inc[1], inc[2]});
    }

    for (const auto& f : layout.faces) lat.polygons.push_back(f.edges);
    return lat;
}

}  // namespace hyperlat
