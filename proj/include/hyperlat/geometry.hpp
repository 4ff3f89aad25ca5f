#pragma once

#include <complex>
#include <optional>

#include "hyperlat/errors.hpp"

// Poincare-disc model of the hyperbolic plane at curvature -1. All lengths are
// in units of the curvature length R; the model maps the plane onto the open
// unit disc, with geodesics appearing as diameters or as circular arcs that
// meet the unit circle at a right angle.

namespace hyperlat {

using Complex = std::complex<double>;

// Points closer than this to the unit circle are rejected: inversions and
// distance formulas lose precision as 1-|z|^2 underflows.
inline constexpr double kBoundaryEps = 1e-9;

struct CurvatureScale {
    double R = 1.0;
    double gaussian_curvature() const { return -1.0 / (R * R); }
};

class DiscPoint {
  public:
    DiscPoint() = default;
    explicit DiscPoint(Complex z);
    explicit DiscPoint(double x, double y) : DiscPoint(Complex(x, y)) {}

    Complex z() const { return z_; }
    double x() const { return z_.real(); }
    double y() const { return z_.imag(); }

    bool operator==(const DiscPoint& o) const { return z_ == o.z_; }

  private:
    Complex z_{0.0, 0.0};
};

// A geodesic is either a diameter (stored as a unit direction) or an arc of a
// circle orthogonal to the unit circle (|center|^2 = 1 + radius^2).
class Geodesic {
  public:
    static Geodesic diameter(Complex direction);
    static Geodesic arc(Complex center, double radius);
    // The unique geodesic through two distinct points.
    static Geodesic through(const DiscPoint& a, const DiscPoint& b);

    bool is_diameter() const { return is_diameter_; }
    Complex direction() const;
    Complex center() const;
    double radius() const;

    bool contains(const DiscPoint& p, double tol = 1e-9) const;

    // Unit tangent of the geodesic at `on` (a point of the geodesic), oriented
    // so that it points toward `toward`. Conformality of the disc model makes
    // Euclidean angles between tangents equal to hyperbolic angles.
    Complex tangent_at(const DiscPoint& on, const DiscPoint& toward) const;

  private:
    Geodesic() = default;
    bool is_diameter_ = false;
    Complex dir_{1.0, 0.0};  // diameter case
    Complex center_{0.0, 0.0};
    double radius_ = 0.0;    // arc case
};

// Disc automorphism z -> (a*w + b) / (conj(b)*w + conj(a)) with w = z or
// conj(z); |a|^2 - |b|^2 = 1. The conjugation flag covers orientation-reversing
// isometries (reflections), keeping one closed composition algebra.
class MobiusMap {
  public:
    MobiusMap() = default;  // identity
    MobiusMap(Complex a, Complex b, bool conjugate_first = false);

    static MobiusMap identity() { return MobiusMap(); }
    static MobiusMap rotation(double angle);
    // Maps p to the origin: z -> (z - p) / (1 - conj(p) z).
    static MobiusMap translation_to_origin(const DiscPoint& p);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    bool orientation_reversing() const { return conjugate_first_; }

    MobiusMap inverse() const;
    DiscPoint apply(const DiscPoint& p) const;

  private:
    Complex a_{1.0, 0.0};
    Complex b_{0.0, 0.0};
    bool conjugate_first_ = false;
};

// compose(f, g) acts as f after g.
MobiusMap mobius_compose(const MobiusMap& f, const MobiusMap& g);

double hyp_distance(const DiscPoint& a, const DiscPoint& b);

// Geodesic inversion. An involution that preserves hyp_distance and fixes g
// pointwise. Images that land outside the open disc raise ComputeError.
DiscPoint reflect(const DiscPoint& p, const Geodesic& g);

// Reflection across g as an orientation-reversing MobiusMap.
MobiusMap reflection_map(const Geodesic& g);

// Hyperbolic midpoint of the segment from a to b.
DiscPoint hyp_midpoint(const DiscPoint& a, const DiscPoint& b);

// Closed-form {p,q} tile trigonometry at curvature -1. All three reject
// non-hyperbolic pairs ((p-2)(q-2) <= 4) with a message naming the regime.
double tile_edge_length(int p, int q = 3);
double circumradius(int p, int q = 3);
// Distance between midpoints of adjacent edges of a {p,3} tile: the inter-site
// spacing of the kagome-like medial lattice.
double medial_spacing(int p);

}  // namespace hyperlat
