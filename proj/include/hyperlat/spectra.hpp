#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperlat/tightbinding.hpp"

namespace hyperlat {

struct SpectrumResult {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // columns matching eigenvalues
    double omega0 = 0.0;
    double t_abs = 1.0;
    std::string convention;

    int n() const { return static_cast<int>(eigenvalues.size()); }
};

// Dense symmetric diagonalization with residual, orthonormality and trace
// checks. Throws ComputeError (with condition diagnostics) on failure.
SpectrumResult diagonalize(const HoppingMatrix& hm);

// Eigenvalues without eigenvectors, for DOS/gap work at larger sizes.
Eigen::VectorXd eigenvalues_only(const HoppingMatrix& hm);

struct Histogram {
    std::vector<double> edges;  // bins + 1 entries
    std::vector<int> counts;
};

Histogram dos_histogram(const SpectrumResult& spec, int bins);
Histogram dos_histogram(const Eigen::VectorXd& eigenvalues, int bins);

struct ShellGapRow {
    int shells = 0;
    int sites = 0;
    int degeneracy = 0;
    double gap = 0.0;
};

struct FlatBandReport {
    double flat_energy = 0.0;  // omega0 - 2|t|
    int degeneracy = 0;        // eigenvalues within tol_flat of flat_energy
    double gap = 0.0;          // to the nearest eigenvalue above the flat band
    double tol_flat = 0.0;
    std::vector<ShellGapRow> shell_table;  // filled by shell_scan
};

inline constexpr double kTolFlatRel = 1e-8;  // default tol_flat = 1e-8 * |t|

FlatBandReport flat_band_report(const SpectrumResult& spec, double tol_flat);
FlatBandReport flat_band_report(const Eigen::VectorXd& eigenvalues, double omega0, double t_abs,
                                double tol_flat);

// Compact flat-band eigenstate: alternating +-1 on an even closed loop of
// sites, zero elsewhere. Odd p needs two faces sharing an edge (loop length
// 2(p-1)); even p takes a single face (loop length p). Faces touching
// boundary-truncated couplers are rejected.
struct LoopState {
    std::vector<int> sites;      // cyclic order
    Eigen::VectorXd amplitudes;  // full site vector, normalized
};

LoopState build_loop_state(const EffectiveLattice& lat, const std::vector<int>& face_ids);

// Convenience: lowest-id interior face (even p) or interior face pair (odd p).
std::vector<int> pick_interior_faces(const EffectiveLattice& lat);

// Spectra and flat-band table across system sizes (full-wave, disorder-free).
std::vector<ShellGapRow> shell_scan(int p, const std::vector<int>& shells,
                                    const ModelParams& params);

// Bloch bands of the Euclidean kagome lattice (lattice constant 1) with the
// full-wave hopping sign; energies relative to omega0, ascending. The flat
// band sits at -2|t| for every k.
std::array<double, 3> kagome_bloch(double kx, double ky, double t);

}  // namespace hyperlat
