#pragma once

#include "orthochroma/projective.hpp"
#include "orthochroma/sphere.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace orthochroma::generators {

using numtheory::BigInt;
using numtheory::BigRational;
using projective::Colour3;
using sphere::SpherePoint;

/// Rotation matrix with exact rational entries: M^T M = I and det M = 1,
/// both checked at construction. Maps rational unit vectors to rational unit
/// vectors; the gcd removed when reducing an image to primitive form is
/// always odd (row denominators of a rational orthogonal matrix are odd), so
/// coordinate parities survive, and that is asserted on every application.
class ExactRotation {
public:
    using Matrix = std::array<std::array<BigRational, 3>, 3>;

    explicit ExactRotation(Matrix m);

    static ExactRotation identity();

    /// Rotation about the z-axis by the angle with cos = 3/5, sin = 4/5.
    /// Images of (1,0,0;1): (3,4,0;5), (-7,24,0;25), ... all red.
    static ExactRotation rotation_z();

    /// Same angle about the y-axis; (1,0,0;1) maps to (3,0,-4;5).
    static ExactRotation rotation_y();

    const BigRational& at(int row, int col) const { return m_[row][col]; }

    ExactRotation operator*(const ExactRotation& o) const;

    SpherePoint apply(const SpherePoint& p) const;

private:
    Matrix m_;
};

enum class EnumMode { Quadruple, Stereo };

/// Streams every rational sphere point within the bound, deterministically
/// and without duplicates:
///  - Quadruple: each primitive (a,b,c;d) with d <= height, in (d,a,b,c)
///    order.
///  - Stereo: stereo_inverse over all reduced (u,v) with numerator and
///    denominator magnitudes <= height, in lexicographic (u,v) order (the
///    map is injective).
/// Bounds are capped (quadruple 2000, stereo 64) to keep the working set
/// sane; enum_points has tighter caps since it materialises the stream.
void for_each_point(EnumMode mode, std::int64_t height,
                    const std::function<void(const SpherePoint&)>& fn);

/// for_each_point, collected. Caps: quadruple 1000, stereo 24.
std::vector<SpherePoint> enum_points(EnumMode mode, std::int64_t height);

struct OrbitEntry {
    SpherePoint point;
    Colour3 colour;
};

/// [start, R start, ..., R^(n-1) start], each in primitive form with its
/// parity colour.
std::vector<OrbitEntry> orbit(const ExactRotation& rotation, const SpherePoint& start, int n);

/// Angular hit-count grid: either a partition of the equator into azimuth
/// cells, or a partition of the sphere into z-bands times azimuth sectors
/// (equal-height bands, so cells have equal area). Cell classification uses
/// double precision; the counts are an empirical statistic, not a proof.
class CoverageGrid {
public:
    static CoverageGrid equator(int cells);
    static CoverageGrid sphere(int bands, int sectors);

    /// Counts the point's cell. Equator grids count only points with c = 0
    /// exactly; anything else is tallied as off-domain.
    void add(const SpherePoint& p);

    int total_cells() const { return static_cast<int>(counts_.size()); }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t off_domain() const { return off_domain_; }
    std::int64_t points_counted() const { return counted_; }
    int empty_cells() const;

private:
    CoverageGrid(int bands, int sectors, bool equator_only);

    int bands_, sectors_;
    bool equator_only_;
    std::vector<std::int64_t> counts_;
    std::int64_t off_domain_ = 0;
    std::int64_t counted_ = 0;
};

struct CoverageReport {
    int total_cells = 0;
    int empty_cells = 0;
    std::int64_t points_counted = 0;
    std::int64_t off_domain = 0;
    std::vector<std::int64_t> counts;
};

CoverageReport coverage(const std::vector<SpherePoint>& points, CoverageGrid grid);

/// Streaming form: runs the full enumeration through the grid without
/// materialising it.
CoverageReport coverage(EnumMode mode, std::int64_t height, CoverageGrid grid);

/// Scan of the circle { x : x . u = v . u } through the enumerated points
/// with d <= height. Parity forces the dichotomy: when u and v share a
/// colour every rational point found has that colour, otherwise none does.
struct CircleScanResult {
    Colour3 colour_u, colour_v;
    bool same_colour_case = false;
    std::vector<OrbitEntry> points;
    std::int64_t with_u_colour = 0;
    std::int64_t other_colour = 0;
    bool dichotomy_holds = false;
};

CircleScanResult circle_scan(const SpherePoint& u, const SpherePoint& v, std::int64_t height);
CircleScanResult circle_scan(const SpherePoint& u, const SpherePoint& v,
                             const std::vector<SpherePoint>& candidates);

}  // namespace orthochroma::generators
