#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

// Single-particle model parameters. Canonical internal units are |t| = 1,
// omega0 = 0; physical GHz values are used by the transmission layer.
struct ModelParams {
    double omega0 = 0.0;
    double t = -1.0;          // hopping rate, t < 0 for the full-wave convention
    double onsite_sigma = 0;  // relative on-site disorder (std = onsite_sigma * omega0)
    double hop_sigma = 0;     // relative hopping disorder
    // Additive on-site offsets keyed by ring label: a ring index as a string
    // ("0", "1", ...) or one of "inner", "middle", "outer".
    std::map<std::string, double> ring_offsets;
    std::uint64_t seed = 0;

    void validate() const;
};

// Half-wave bookkeeping: which end of each resonator (layout edge) carries the
// positive lobe of the antisymmetric mode.
struct Orientation {
    // positive_end[site id] = layout vertex id of the positive end.
    std::vector<int> positive_end;
};

struct HoppingMatrix {
    Eigen::MatrixXd H;
    ModelParams params;
    std::string convention;  // "full-wave" | "half-wave"
    std::uint64_t disorder_seed = 0;
    bool disordered = false;

    int n() const { return static_cast<int>(H.rows()); }
};

// H[i][i] = omega0 (+ ring offsets + disorder), H[i][j] = -t = |t| on bonds.
// Energies are measured so the flat band sits at omega0 - 2|t|.
HoppingMatrix assemble_full_wave(const EffectiveLattice& lat, const ModelParams& params);

// Bond signs follow the end designations: -|t| entries couple ends of opposite
// sign, +|t| entries couple ends of the same sign.
HoppingMatrix assemble_half_wave(const EffectiveLattice& lat, const ModelParams& params,
                                 const Orientation& orient);

struct OrientationSearch {
    std::optional<Orientation> orientation;
    // When no consistent orientation exists: layout vertex ids of an odd cycle.
    std::vector<int> odd_cycle;
};

// Looks for end designations making every hopping matrix element negative.
// Succeeds exactly when the layout graph is bipartite; otherwise reports the
// frustrating odd cycle.
OrientationSearch find_consistent_orientation(const EffectiveLattice& lat);

// Gaussian perturbations (resampled beyond 5 sigma), reproducible per seed:
// diagonal += omega0 * onsite_sigma * g, bond entries *= 1 + hop_sigma * g.
HoppingMatrix apply_disorder(const HoppingMatrix& H, const ModelParams& params,
                             std::uint64_t seed);

namespace detail {

// Deterministic N(0,1) stream: mt19937_64 + Box-Muller, resampling any draw
// with |g| > 5. Used instead of std::normal_distribution, whose output is
// implementation-defined.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
    double next();

  private:
    double uniform01();
    std::mt19937_64 engine_;
};

// Ring labels -> ring index. Throws ConfigError for unknown labels.
int resolve_ring_label(const std::string& label, int num_rings);

}  // namespace detail

}  // namespace hyperlat
