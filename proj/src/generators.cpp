#include "orthochroma/generators.hpp"

#include "orthochroma/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace orthochroma::generators {

namespace {

BigRational dot_col(const ExactRotation::Matrix& m, int i, int j) {
    BigRational s = 0;
    for (int k = 0; k < 3; ++k) s += m[k][i] * m[k][j];
    return s;
}

BigRational det3(const ExactRotation::Matrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ExactRotation::ExactRotation(Matrix m) : m_(std::move(m)) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            if (dot_col(m_, i, j) != BigRational(i == j ? 1 : 0)) {
                throw std::invalid_argument("ExactRotation: matrix is not orthogonal");
            }
        }
    }
    if (det3(m_) != 1) {
        throw std::invalid_argument("ExactRotation: determinant is not 1");
    }
}

ExactRotation ExactRotation::identity() {
    Matrix m{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = BigRational(i == j ? 1 : 0);
    }
    return ExactRotation(m);
}

ExactRotation ExactRotation::rotation_z() {
    const BigRational c(3, 5), s(4, 5);
    Matrix m{};
    m[0] = {c, -s, BigRational(0)};
    m[1] = {s, c, BigRational(0)};
    m[2] = {BigRational(0), BigRational(0), BigRational(1)};
    return ExactRotation(m);
}

ExactRotation ExactRotation::rotation_y() {
    const BigRational c(3, 5), s(4, 5);
    Matrix m{};
    m[0] = {c, BigRational(0), s};
    m[1] = {BigRational(0), BigRational(1), BigRational(0)};
    m[2] = {-s, BigRational(0), c};
    return ExactRotation(m);
}

ExactRotation ExactRotation::operator*(const ExactRotation& o) const {
    Matrix m{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            BigRational s = 0;
            for (int k = 0; k < 3; ++k) s += m_[i][k] * o.m_[k][j];
            m[i][j] = s;
        }
    }
    return ExactRotation(m);
}

SpherePoint ExactRotation::apply(const SpherePoint& p) const {
    const std::array<BigInt, 3> in{p.a(), p.b(), p.c()};
    std::array<BigRational, 3> y{};
    for (int i = 0; i < 3; ++i) {
        BigRational s = 0;
        for (int j = 0; j < 3; ++j) s += m_[i][j] * BigRational(in[j]);
        y[i] = s;
    }
    BigInt l = 1;
    for (const auto& yi : y) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(yi));
    std::array<BigInt, 3> num{};
    for (int i = 0; i < 3; ++i) {
        num[i] = boost::multiprecision::numerator(y[i]) * (l / boost::multiprecision::denominator(y[i]));
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(num[0]), abs(num[1])), abs(num[2]));
    // Rational unit vectors have odd denominators, so l and l*d (and with
    // them any common factor of the image) are odd: reduction cannot touch
    // the coordinate parities the colouring reads.
    if (g != 0 && !boost::multiprecision::bit_test(g, 0)) {
        throw std::logic_error("ExactRotation::apply: image has an even common factor");
    }
    return SpherePoint::from_quadruple(num[0], num[1], num[2], l * p.d());
}

namespace {

// Smallest-prime-factor sieve; spf[1] = 1.
std::vector<std::int32_t> spf_sieve(std::int64_t n) {
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    if (n >= 1) spf[1] = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::int64_t j = i; j <= n; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
        }
    }
    return spf;
}

// All divisors of n (unsorted), via the sieve.
void divisors_of(std::int64_t n, const std::vector<std::int32_t>& spf,
                 std::vector<std::int64_t>& out) {
    out.assign(1, 1);
    while (n > 1) {
        const std::int64_t p = spf[n];
        std::int64_t pk = 1;
        const std::size_t fixed = out.size();
        while (n % p == 0) {
            n /= p;
            pk *= p;
            for (std::size_t i = 0; i < fixed; ++i) out.push_back(out[i] * pk);
        }
    }
}

void stream_quadruple(std::int64_t height, const std::function<void(const SpherePoint&)>& fn) {
    // A primitive (a,b,c;d) has a^2 + b^2 = (d-c)(d+c); running over the
    // factorisations n = r*s with r <= s of the same parity recovers every
    // c = +-(s-r)/2, d = (r+s)/2 exactly once.
    const std::int64_t h2 = height * height;
    const auto spf = spf_sieve(h2);

    using Raw = std::array<std::int64_t, 4>;  // (d, a, b, c)
    const std::int64_t span = 2 * height + 1;
    const std::int64_t chunk = std::max<std::int64_t>(1, span / (4 * par::worker_count()) + 1);
    std::vector<std::vector<Raw>> parts((span + chunk - 1) / chunk);
    par::for_chunks(span, chunk, [&](std::int64_t ci, std::int64_t begin, std::int64_t end) {
        auto& out = parts[static_cast<std::size_t>(ci)];
        std::vector<std::int64_t> divs;
        for (std::int64_t ai = begin; ai < end; ++ai) {
            const std::int64_t a = ai - height;
            for (std::int64_t b = -height; b <= height; ++b) {
                const std::int64_t n = a * a + b * b;
                if (n > h2) continue;
                if (n == 0) {
                    out.push_back({1, 0, 0, 1});
                    out.push_back({1, 0, 0, -1});
                    continue;
                }
                divisors_of(n, spf, divs);
                for (const std::int64_t r : divs) {
                    if (r * r > n) continue;
                    const std::int64_t s = n / r;
                    if (((r ^ s) & 1) != 0) continue;  // opposite parity: c, d not integral
                    const std::int64_t d = (r + s) / 2;
                    if (d > height) continue;
                    const std::int64_t c = (s - r) / 2;
                    if (std::gcd(std::gcd(std::abs(a), std::abs(b)), c) != 1) continue;
                    out.push_back({d, a, b, c});
                    if (c > 0) out.push_back({d, a, b, -c});
                }
            }
        }
    });

    std::vector<Raw> all;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    all.reserve(total);
    for (auto& part : parts) {
        all.insert(all.end(), part.begin(), part.end());
        part.clear();
        part.shrink_to_fit();
    }
    std::sort(all.begin(), all.end());

    for (const auto& [d, a, b, c] : all) {
        fn(SpherePoint::from_quadruple(a, b, c, d));
    }
}

void stream_stereo(std::int64_t height, const std::function<void(const SpherePoint&)>& fn) {
    // Reduced fractions p/q with |p|, q <= height, in increasing order.
    std::vector<std::pair<std::int64_t, std::int64_t>> fracs;
    for (std::int64_t q = 1; q <= height; ++q) {
        for (std::int64_t p = -height; p <= height; ++p) {
            if (std::gcd(std::abs(p), q) == 1) fracs.emplace_back(p, q);
        }
    }
    std::sort(fracs.begin(), fracs.end(), [](const auto& l, const auto& r) {
        return l.first * r.second < r.first * l.second;
    });

    for (const auto& [p, q] : fracs) {
        for (const auto& [r, s] : fracs) {
            // stereo_inverse(p/q, r/s) cleared of denominators.
            const std::int64_t ps = p * s, rq = r * q, qs = q * s;
            fn(SpherePoint::from_quadruple(2 * ps * qs, 2 * rq * qs,
                                           ps * ps + rq * rq - qs * qs,
                                           ps * ps + rq * rq + qs * qs));
        }
    }
}

}  // namespace

void for_each_point(EnumMode mode, std::int64_t height,
                    const std::function<void(const SpherePoint&)>& fn) {
    if (height < 1) throw std::invalid_argument("for_each_point: height must be positive");
    if (mode == EnumMode::Quadruple) {
        if (height > 2000) {
            throw std::invalid_argument("for_each_point: quadruple height capped at 2000");
        }
        stream_quadruple(height, fn);
    } else {
        if (height > 64) {
            throw std::invalid_argument("for_each_point: stereo height capped at 64");
        }
        stream_stereo(height, fn);
    }
}

std::vector<SpherePoint> enum_points(EnumMode mode, std::int64_t height) {
    if (mode == EnumMode::Quadruple && height > 1000) {
        throw std::invalid_argument("enum_points: quadruple height capped at 1000");
    }
    if (mode == EnumMode::Stereo && height > 24) {
        throw std::invalid_argument("enum_points: stereo height capped at 24");
    }
    std::vector<SpherePoint> points;
    for_each_point(mode, height, [&](const SpherePoint& p) { points.push_back(p); });
    return points;
}

std::vector<OrbitEntry> orbit(const ExactRotation& rotation, const SpherePoint& start, int n) {
    if (n < 1) throw std::invalid_argument("orbit: need at least one point");
    std::vector<OrbitEntry> out;
    out.reserve(static_cast<std::size_t>(n));
    SpherePoint p = start;
    for (int i = 0; i < n; ++i) {
        out.push_back({p, sphere::colour3(p)});
        if (i + 1 < n) p = rotation.apply(p);
    }
    return out;
}

CoverageGrid::CoverageGrid(int bands, int sectors, bool equator_only)
    : bands_(bands), sectors_(sectors), equator_only_(equator_only) {
    if (bands < 1 || sectors < 1) throw std::invalid_argument("CoverageGrid: empty grid");
    counts_.assign(static_cast<std::size_t>(bands) * sectors, 0);
}

CoverageGrid CoverageGrid::equator(int cells) { return CoverageGrid(1, cells, true); }

CoverageGrid CoverageGrid::sphere(int bands, int sectors) {
    return CoverageGrid(bands, sectors, false);
}

void CoverageGrid::add(const SpherePoint& p) {
    if (equator_only_ && p.c() != 0) {
        ++off_domain_;
        return;
    }
    const double x = numtheory::to_double(p.x());
    const double y = numtheory::to_double(p.y());
    int sector = 0;
    if (x != 0.0 || y != 0.0) {
        const double az = std::atan2(y, x);  // [-pi, pi]
        sector = static_cast<int>(std::floor((az + M_PI) / (2 * M_PI) * sectors_));
        sector = std::clamp(sector, 0, sectors_ - 1);
    }
    int band = 0;
    if (!equator_only_) {
        const double z = numtheory::to_double(p.z());
        band = static_cast<int>(std::floor((z + 1.0) / 2.0 * bands_));
        band = std::clamp(band, 0, bands_ - 1);
    }
    ++counts_[static_cast<std::size_t>(band) * sectors_ + sector];
    ++counted_;
}

int CoverageGrid::empty_cells() const {
    return static_cast<int>(std::count(counts_.begin(), counts_.end(), 0));
}

CoverageReport coverage(const std::vector<SpherePoint>& points, CoverageGrid grid) {
    for (const auto& p : points) grid.add(p);
    CoverageReport rep;
    rep.total_cells = grid.total_cells();
    rep.empty_cells = grid.empty_cells();
    rep.points_counted = grid.points_counted();
    rep.off_domain = grid.off_domain();
    rep.counts = grid.counts();
    return rep;
}

CoverageReport coverage(EnumMode mode, std::int64_t height, CoverageGrid grid) {
    for_each_point(mode, height, [&](const SpherePoint& p) { grid.add(p); });
    CoverageReport rep;
    rep.total_cells = grid.total_cells();
    rep.empty_cells = grid.empty_cells();
    rep.points_counted = grid.points_counted();
    rep.off_domain = grid.off_domain();
    rep.counts = grid.counts();
    return rep;
}

CircleScanResult circle_scan(const SpherePoint& u, const SpherePoint& v,
                             const std::vector<SpherePoint>& candidates) {
    if (u == v.antipode()) {
        throw std::invalid_argument("circle_scan: u and v are antipodal");
    }
    CircleScanResult res;
    res.colour_u = sphere::colour3(u);
    res.colour_v = sphere::colour3(v);
    res.same_colour_case = res.colour_u == res.colour_v;

    // x lies on { x . u = v . u } iff form(x,u) / (d_x d_u) = form(v,u) / (d_v d_u).
    const BigInt target = sphere::inner(v, u).form;
    for (const auto& x : candidates) {
        if (sphere::inner(x, u).form * v.d() != target * x.d()) continue;
        const Colour3 col = sphere::colour3(x);
        res.points.push_back({x, col});
        if (col == res.colour_u) {
            ++res.with_u_colour;
        } else {
            ++res.other_colour;
        }
    }
    res.dichotomy_holds = res.same_colour_case ? res.other_colour == 0 : res.with_u_colour == 0;
    return res;
}

CircleScanResult circle_scan(const SpherePoint& u, const SpherePoint& v, std::int64_t height) {
    if (u == v.antipode()) {
        throw std::invalid_argument("circle_scan: u and v are antipodal");
    }
    CircleScanResult res;
    res.colour_u = sphere::colour3(u);
    res.colour_v = sphere::colour3(v);
    res.same_colour_case = res.colour_u == res.colour_v;
    const BigInt target = sphere::inner(v, u).form;
    for_each_point(EnumMode::Quadruple, height, [&](const SpherePoint& x) {
        if (sphere::inner(x, u).form * v.d() != target * x.d()) return;
        const Colour3 col = sphere::colour3(x);
        res.points.push_back({x, col});
        if (col == res.colour_u) {
            ++res.with_u_colour;
        } else {
            ++res.other_colour;
        }
    });
    res.dichotomy_holds = res.same_colour_case ? res.other_colour == 0 : res.with_u_colour == 0;
    return res;
}

}  // namespace orthochroma::generators
