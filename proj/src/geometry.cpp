#include "hyperlat/geometry.hpp"

#include <cmath>
#include <sstream>

namespace hyperlat {

namespace {

std::string fmt_pq(int p, int q) {
    std::ostringstream os;
    os << "{" << p << "," << q << "}";
    return os.str();
}

void require_hyperbolic(int p, int q) {
    if (p < 3 || q < 3) {
        std::ostringstream os;
        os << "invalid Schlafli symbol " << fmt_pq(p, q) << ": need p >= 3 and q >= 3";
        throw ConfigError(os.str());
    }
    const int h = (p - 2) * (q - 2);
    if (h == 4) {
        throw ConfigError("tiling " + fmt_pq(p, q) +
                          " is Euclidean ((p-2)(q-2) = 4); no hyperbolic tile of this type exists");
    }
    if (h < 4) {
        throw ConfigError("tiling " + fmt_pq(p, q) +
                          " is spherical ((p-2)(q-2) < 4); no hyperbolic tile of this type exists");
    }
}

}  // namespace

DiscPoint::DiscPoint(Complex z) : z_(z) {
    if (!(std::abs(z) < 1.0 - kBoundaryEps)) {
        std::ostringstream os;
        os << "point (" << z.real() << ", " << z.imag() << ") with |z| = " << std::abs(z)
           << " is outside the open unit disc (boundary margin " << kBoundaryEps << ")";
        throw ComputeError(os.str());
    }
}

Geodesic Geodesic::diameter(Complex direction) {
    const double n = std::abs(direction);
    if (n == 0.0) throw ConfigError("diameter geodesic needs a nonzero direction");
    Geodesic g;
    g.is_diameter_ = true;
    g.dir_ = direction / n;
    return g;
}

Geodesic Geodesic::arc(Complex center, double radius) {
    if (!(radius > 0.0)) throw ConfigError("arc geodesic needs radius > 0");
    const double ortho = std::norm(center) - (1.0 + radius * radius);
    if (std::abs(ortho) > 1e-12 * (1.0 + std::norm(center))) {
        std::ostringstream os;
        os << "arc (center |c| = " << std::abs(center) << ", radius " << radius
           << ") is not orthogonal to the unit circle: |c|^2 - 1 - r^2 = " << ortho;
        throw ConfigError(os.str());
    }
    Geodesic g;
    g.is_diameter_ = false;
    g.center_ = center;
    g.radius_ = radius;
    return g;
}

Geodesic Geodesic::through(const DiscPoint& a, const DiscPoint& b) {
    const Complex za = a.z(), zb = b.z();
    const double sep = std::abs(za - zb);
    if (sep < 1e-14) throw ComputeError("geodesic through coincident points is not unique");

    // Collinear with the origin (including either point at the origin).
    const double cross = za.real() * zb.imag() - za.imag() * zb.real();
    if (std::abs(cross) < 1e-14 * std::max(1.0, std::abs(za) * std::abs(zb))) {
        return diameter(zb - za);
    }

    // Orthogonal circle through both points: 2 Re(conj(z) c) = |z|^2 + 1.
    const double det = 4.0 * cross;
    const double ra = std::norm(za) + 1.0;
    const double rb = std::norm(zb) + 1.0;
    const double cx = (ra * 2.0 * zb.imag() - rb * 2.0 * za.imag()) / (2.0 * det);
    const double cy = (rb * 2.0 * za.real() - ra * 2.0 * zb.real()) / (2.0 * det);
    const Complex c(cx, cy);
    const double rho = std::sqrt(std::norm(c) - 1.0);
    Geodesic g;
    g.is_diameter_ = false;
    g.center_ = c;
    g.radius_ = rho;
    return g;
}

Complex Geodesic::direction() const {
    if (!is_diameter_) throw ConfigError("direction() called on an arc geodesic");
    return dir_;
}

Complex Geodesic::center() const {
    if (is_diameter_) throw ConfigError("center() called on a diameter geodesic");
    return center_;
}

double Geodesic::radius() const {
    if (is_diameter_) throw ConfigError("radius() called on a diameter geodesic");
    return radius_;
}

bool Geodesic::contains(const DiscPoint& p, double tol) const {
    if (is_diameter_) {
        const Complex z = p.z();
        return std::abs(z.real() * dir_.imag() - z.imag() * dir_.real()) <= tol;
    }
    return std::abs(std::abs(p.z() - center_) - radius_) <= tol;
}

Complex Geodesic::tangent_at(const DiscPoint& on, const DiscPoint& toward) const {
    Complex t;
    if (is_diameter_) {
        t = dir_;
    } else {
        const Complex radial = on.z() - center_;
        t = Complex(-radial.imag(), radial.real()) / std::abs(radial);
    }
    const Complex chord = toward.z() - on.z();
    if (t.real() * chord.real() + t.imag() * chord.imag() < 0.0) t = -t;
    return t;
}

MobiusMap::MobiusMap(Complex a, Complex b, bool conjugate_first)
    : a_(a), b_(b), conjugate_first_(conjugate_first) {
    const double det = std::norm(a_) - std::norm(b_);
    if (!(det > 1e-12)) {
        std::ostringstream os;
        os << "degenerate Mobius map: |a|^2 - |b|^2 = " << det << " must be positive";
        throw ConfigError(os.str());
    }
    const double s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
}

MobiusMap MobiusMap::rotation(double angle) {
    return MobiusMap(std::polar(1.0, angle / 2.0), Complex(0.0, 0.0));
}

MobiusMap MobiusMap::translation_to_origin(const DiscPoint& p) {
    // (z - p) / (1 - conj(p) z) = (a z + b)/(conj(b) z + conj(a)) with a = 1/s, b = -p/s.
    return MobiusMap(Complex(1.0, 0.0), -p.z());
}

MobiusMap MobiusMap::inverse() const {
    // For w = (a u + b)/(conj(b) u + conj(a)): u = (conj(a) w - b)/(-conj(b) w + a).
    MobiusMap inv(std::conj(a_), -b_);
    if (conjugate_first_) {
        // (A, conj)^-1 = (conj(A^-1), conj).
        inv = MobiusMap(std::conj(inv.a_), std::conj(inv.b_), true);
    }
    return inv;
}

DiscPoint MobiusMap::apply(const DiscPoint& p) const {
    const Complex w = conjugate_first_ ? std::conj(p.z()) : p.z();
    const Complex num = a_ * w + b_;
    const Complex den = std::conj(b_) * w + std::conj(a_);
    return DiscPoint(num / den);
}

MobiusMap mobius_compose(const MobiusMap& f, const MobiusMap& g) {
    // f(g(z)): when f conjugates first, g's matrix passes through conjugated.
    Complex ga = g.a(), gb = g.b();
    if (f.orientation_reversing()) {
        ga = std::conj(ga);
        gb = std::conj(gb);
    }
    const Complex a = f.a() * ga + f.b() * std::conj(gb);
    const Complex b = f.a() * gb + f.b() * std::conj(ga);
    const bool conj = f.orientation_reversing() != g.orientation_reversing();
    return MobiusMap(a, b, conj);
}

double hyp_distance(const DiscPoint& a, const DiscPoint& b) {
    const double num = 2.0 * std::norm(a.z() - b.z());
    const double den = (1.0 - std::norm(a.z())) * (1.0 - std::norm(b.z()));
    return std::acosh(1.0 + num / den);
}

DiscPoint reflect(const DiscPoint& p, const Geodesic& g) {
    if (g.is_diameter()) {
        const Complex u = g.direction();
        return DiscPoint(u * u * std::conj(p.z()));
    }
    const Complex c = g.center();
    const double r2 = g.radius() * g.radius();
    const Complex d = p.z() - c;
    // DiscPoint construction rejects images that escape the disc.
    return DiscPoint(c + r2 * d / std::norm(d));
}

MobiusMap reflection_map(const Geodesic& g) {
    if (g.is_diameter()) {
        // z -> u^2 conj(z).
        return MobiusMap(g.direction(), Complex(0.0, 0.0), true);
    }
    // z -> c + r^2/(conj(z) - conj(c)) = (i c conj(z) - i)/(i conj(z) - i conj(c)), det = r^2.
    const Complex i(0.0, 1.0);
    return MobiusMap(i * g.center() / g.radius(), -i / g.radius(), true);
}

DiscPoint hyp_midpoint(const DiscPoint& a, const DiscPoint& b) {
    if (std::abs(a.z() - b.z()) < 1e-15) return a;
    const MobiusMap to_origin = MobiusMap::translation_to_origin(a);
    const Complex bp = to_origin.apply(b).z();
    const double r = std::abs(bp);
    const double half = std::tanh(0.5 * std::atanh(r));
    const DiscPoint mid_local(bp / r * half);
    return to_origin.inverse().apply(mid_local);
}

double tile_edge_length(int p, int q) {
    require_hyperbolic(p, q);
    const double pi = std::acos(-1.0);
    return 2.0 * std::acosh(std::cos(pi / p) / std::sin(pi / q));
}

double circumradius(int p, int q) {
    require_hyperbolic(p, q);
    const double pi = std::acos(-1.0);
    return std::acosh(1.0 / (std::tan(pi / p) * std::tan(pi / q)));
}

double medial_spacing(int p) {
    require_hyperbolic(p, 3);
    const double pi = std::acos(-1.0);
    // Hyperbolic law of cosines on the triangle (half-edge, half-edge, vertex
    // angle 2*pi/3) formed by a tile vertex and two adjacent edge midpoints.
    const double half = 0.5 * tile_edge_length(p, 3);
    const double ch = std::cosh(half), sh = std::sinh(half);
    return std::acosh(ch * ch - sh * sh * std::cos(2.0 * pi / 3.0));
}

}  // namespace hyperlat
