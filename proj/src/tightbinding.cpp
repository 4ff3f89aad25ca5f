#include "hyperlat/tightbinding.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace hyperlat {

void ModelParams::validate() const {
    if (t == 0.0) throw ConfigError("ModelParams: hopping rate t must be nonzero");
    if (onsite_sigma < 0.0 || hop_sigma < 0.0)
        throw ConfigError("ModelParams: disorder sigmas must be >= 0");
}

namespace detail {

double GaussianStream::uniform01() {
    // 53 random bits -> [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianStream::next() {
    for (;;) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double g = std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
        if (std::abs(g) <= 5.0) return g;
    }
}

int resolve_ring_label(const std::string& label, int num_rings) {
    if (label == "inner" || label == "center") return 0;
    if (label == "outer") return num_rings - 1;
    if (label == "middle") {
        if (num_rings < 2) throw ConfigError("ring label \"middle\" needs at least two rings");
        return num_rings - 2;
    }
    try {
        std::size_t used = 0;
        const int idx = std::stoi(label, &used);
        if (used == label.size() && idx >= 0 && idx < num_rings) return idx;
    } catch (const std::exception&) {
    }
    throw ConfigError("unknown ring label \"" + label + "\" (have " + std::to_string(num_rings) +
                      " rings; use an index or inner/middle/outer)");
}

}  // namespace detail

namespace {

HoppingMatrix assemble_common(const EffectiveLattice& lat, const ModelParams& params,
                              const std::vector<double>& bond_sign, const char* convention) {
    const int n = lat.site_count();
    HoppingMatrix hm;
    hm.params = params;
    hm.convention = convention;
    hm.H = Eigen::MatrixXd::Zero(n, n);

    for (int i = 0; i < n; ++i) hm.H(i, i) = params.omega0;
    for (const auto& [label, offset] : params.ring_offsets) {
        const int ring = detail::resolve_ring_label(label, lat.num_rings);
        for (const auto& s : lat.sites)
            if (s.ring == ring) hm.H(s.id, s.id) += offset;
    }

    const double tabs = std::abs(params.t);
    for (std::size_t b = 0; b < lat.bonds.size(); ++b) {
        const auto [i, j] = lat.bonds[b];
        const double value = bond_sign[b] * tabs;
        hm.H(i, j) = value;
        hm.H(j, i) = value;
    }

    if (params.onsite_sigma > 0.0 || params.hop_sigma > 0.0)
        return apply_disorder(hm, params, params.seed);
    return hm;
}

}  // namespace

HoppingMatrix assemble_full_wave(const EffectiveLattice& lat, const ModelParams& params) {
    params.validate();
    if (params.t >= 0.0)
        throw ConfigError("assemble_full_wave: the full-wave convention requires t < 0");
    // H[i][j] = -t = |t| > 0: the inverted band structure of capacitively
    // coupled resonators, flat band at omega0 - 2|t|.
    std::vector<double> sign(lat.bonds.size(), 1.0);
    return assemble_common(lat, params, sign, "full-wave");
}

HoppingMatrix assemble_half_wave(const EffectiveLattice& lat, const ModelParams& params,
                                 const Orientation& orient) {
    params.validate();
    const int n = lat.site_count();
    if (static_cast<int>(orient.positive_end.size()) != n)
        throw ConfigError("assemble_half_wave: orientation covers " +
                          std::to_string(orient.positive_end.size()) + " resonators, lattice has " +
                          std::to_string(n));
    for (const auto& s : lat.sites) {
        const int pe = orient.positive_end[s.id];
        if (pe != s.parent_v0 && pe != s.parent_v1)
            throw ConfigError("assemble_half_wave: orientation entry for site " +
                              std::to_string(s.id) + " names vertex " + std::to_string(pe) +
                              " which is not an end of its resonator");
    }

    // t_ij < 0 between ends of the same designation (entry +|t|), t_ij > 0
    // between ends of different designation (entry -|t|).
    std::vector<double> sign(lat.bonds.size(), 1.0);
    for (std::size_t b = 0; b < lat.bonds.size(); ++b) {
        const auto [i, j] = lat.bonds[b];
        const int v = lat.bond_vertex[b];
        const double ei = orient.positive_end[i] == v ? 1.0 : -1.0;
        const double ej = orient.positive_end[j] == v ? 1.0 : -1.0;
        sign[b] = ei * ej;
    }
    return assemble_common(lat, params, sign, "half-wave");
}

OrientationSearch find_consistent_orientation(const EffectiveLattice& lat) {
    // All hopping elements are negative exactly when every pair of ends
    // meeting at a coupler shares one designation, i.e. when layout vertices
    // can be two-colored with every resonator joining opposite colors.
    int nv = 0;
    for (const auto& s : lat.sites) nv = std::max({nv, s.parent_v0 + 1, s.parent_v1 + 1});

    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // vertex -> (neighbor, site)
    for (const auto& s : lat.sites) {
        adj[s.parent_v0].push_back({s.parent_v1, s.id});
        adj[s.parent_v1].push_back({s.parent_v0, s.id});
    }

    std::vector<int> color(nv, -1);
    std::vector<int> parent(nv, -1);
    OrientationSearch result;
    for (int root = 0; root < nv; ++root) {
        if (color[root] != -1 || adj[root].empty()) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (const auto& [w, site] : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if (color[w] == color[v] && w != parent[v] && v != parent[w]) {
                    // Odd cycle: climb both BFS paths to the common ancestor.
                    std::vector<int> pv{v}, pw{w};
                    for (int x = v; parent[x] != -1; x = parent[x]) pv.push_back(parent[x]);
                    for (int x = w; parent[x] != -1; x = parent[x]) pw.push_back(parent[x]);
                    while (pv.size() > 1 && pw.size() > 1 &&
                           pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    result.odd_cycle = pv;
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        result.odd_cycle.push_back(*it);
                    return result;
                }
            }
        }
    }

    Orientation orient;
    orient.positive_end.resize(lat.sites.size());
    for (const auto& s : lat.sites)
        orient.positive_end[s.id] = color[s.parent_v0] == 0 ? s.parent_v0 : s.parent_v1;
    result.orientation = std::move(orient);
    return result;
}

HoppingMatrix apply_disorder(const HoppingMatrix& hm, const ModelParams& params,
                             std::uint64_t seed) {
    params.validate();
    HoppingMatrix out = hm;
    out.disorder_seed = seed;
    out.disordered = true;
    detail::GaussianStream gauss(seed);

    const int n = hm.n();
    for (int i = 0; i < n; ++i)
        out.H(i, i) += params.omega0 * params.onsite_sigma * gauss.next();

    // Bonds in row-major upper-triangle order; one draw per bond keeps the
    // stream aligned regardless of the sigma values.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (hm.H(i, j) == 0.0) continue;
            const double factor = 1.0 + params.hop_sigma * gauss.next();
            out.H(i, j) = hm.H(i, j) * factor;
            out.H(j, i) = out.H(i, j);
        }
    }
    return out;
}

}  // namespace hyperlat
