#include "orthochroma/selfcheck.hpp"

#include "orthochroma/generators.hpp"
#include "orthochroma/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace orthochroma::selfcheck {

using numtheory::BigInt;
using numtheory::BigRational;
using numtheory::QSqrt2;
using numtheory::ValExponent;
using fourcolor::SignPattern;
using projective::Colour3;
using projective::PrimitiveTriple;
using sphere::SpherePoint;

namespace {

// Accumulates checks and failure descriptions for one suite.
class Suite {
public:
    explicit Suite(std::string name) { res_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++res_.checks;
        if (!ok) res_.failures.push_back(what);
    }

    template <class T, class U>
    void equal(const T& got, const U& want, const std::string& what) {
        ++res_.checks;
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            res_.failures.push_back(os.str());
        }
    }

    SuiteResult take() { return std::move(res_); }

private:
    SuiteResult res_;
};

std::int64_t rand_int(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng);
}

BigRational rand_rational(std::mt19937_64& eng) {
    std::int64_t num = rand_int(eng, -1000000, 1000000);
    std::int64_t den = rand_int(eng, 1, 1000000);
    return BigRational(num, den);
}

BigRational rand_nonzero_rational(std::mt19937_64& eng) {
    for (;;) {
        BigRational q = rand_rational(eng);
        if (q != 0) return q;
    }
}

QSqrt2 rand_qsqrt2(std::mt19937_64& eng) {
    return QSqrt2(BigRational(rand_int(eng, -50, 50), rand_int(eng, 1, 20)),
                  BigRational(rand_int(eng, -50, 50), rand_int(eng, 1, 20)));
}

// Largest k with p^k dividing n, by direct power-divisibility tests; the
// production code divides repeatedly instead.
BigInt valuation_by_powers(BigInt n, std::uint64_t p) {
    n = abs(n);
    BigInt k = 0;
    BigInt pk = p;
    while (n % pk == 0) {
        ++k;
        pk *= p;
    }
    return k;
}

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Colour3 cycled(Colour3 c) {
    switch (c) {
        case Colour3::Red: return Colour3::Black;
        case Colour3::White: return Colour3::Red;
        case Colour3::Black: return Colour3::White;
    }
    return c;
}

}  // namespace

int brute_chromatic(const graphs::OrthoGraph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    // Plain depth-first assignment in index order, all colours tried.
    auto feasible = [&](int v, int c) {
        for (int u : g.neighbours(v)) {
            if (colour[static_cast<std::size_t>(u)] == c) return false;
        }
        return true;
    };
    std::function<bool(int, int)> fill = [&](int v, int k) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            if (!feasible(v, c)) continue;
            colour[static_cast<std::size_t>(v)] = c;
            if (fill(v + 1, k)) return true;
            colour[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        std::fill(colour.begin(), colour.end(), -1);
        if (fill(0, k)) return k;
    }
    return n;
}

fourcolor::OrthoClass brute_ortho_class(const SignPattern& a, const SignPattern& b) {
    // All integer vectors matching a pattern, entries in {-3..3}.
    auto matching = [](const SignPattern& p) {
        std::vector<std::array<int, 3>> out;
        std::array<std::vector<int>, 3> choices;
        for (int i = 0; i < 3; ++i) {
            if (p[i] == 0) {
                choices[i] = {0};
            } else if (p[i] > 0) {
                choices[i] = {1, 2, 3};
            } else {
                choices[i] = {-3, -2, -1};
            }
        }
        for (int x : choices[0]) {
            for (int y : choices[1]) {
                for (int z : choices[2]) out.push_back({x, y, z});
            }
        }
        return out;
    };
    const auto va = matching(a), vb = matching(b);
    bool any_zero = false, all_zero = true;
    for (const auto& u : va) {
        for (const auto& v : vb) {
            const int dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
            if (dot == 0) {
                any_zero = true;
            } else {
                all_zero = false;
            }
        }
    }
    if (all_zero) return fourcolor::OrthoClass::Always;
    return any_zero ? fourcolor::OrthoClass::Possible : fourcolor::OrthoClass::Never;
}

SuiteResult check_numtheory(std::uint64_t seed) {
    Suite s("numtheory");
    std::mt19937_64 eng(seed);
    const std::uint64_t primes[] = {2, 3, 5, 97};

    // Valuation is multiplicative: exponents add.
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t p = primes[i % 4];
        BigRational q1 = rand_nonzero_rational(eng), q2 = rand_nonzero_rational(eng);
        auto e1 = numtheory::p_valuation(q1, p), e2 = numtheory::p_valuation(q2, p);
        auto e12 = numtheory::p_valuation(q1 * q2, p);
        s.check(e12.exponent() == e1.exponent() + e2.exponent(),
                "valuation not multiplicative at p=" + std::to_string(p));
    }

    // Ultrametric inequality, with equality whenever the exponents differ.
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t p = primes[i % 4];
        BigRational q1 = rand_rational(eng), q2 = rand_rational(eng);
        if (q1 + q2 == 0 || q1 == 0 || q2 == 0) continue;
        auto e1 = numtheory::p_valuation(q1, p), e2 = numtheory::p_valuation(q2, p);
        auto es = numtheory::p_valuation(q1 + q2, p);
        const BigInt lo = std::min(e1.exponent(), e2.exponent());
        s.check(es.exponent() >= lo, "ultrametric inequality violated");
        if (e1 != e2) s.check(es.exponent() == lo, "ultrametric equality case violated");
    }

    // Independent valuation oracle on integers.
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t p = primes[i % 4];
        BigInt n = rand_int(eng, 1, 1000000000);
        auto e = numtheory::p_valuation_int(n, p);
        s.check(e.exponent() == valuation_by_powers(n, p), "valuation differs from power oracle");
    }
    s.check(numtheory::p_valuation_int(0, 7).is_infinite(), "nu(0) must be infinite");

    // Frozen examples.
    s.equal(numtheory::p_valuation(BigRational(12), 2).exponent(), BigInt(2), "nu_2(12)");
    s.equal(numtheory::p_valuation(BigRational(12, 5), 5).exponent(), BigInt(-1), "nu_5(12/5)");
    s.check(numtheory::p_valuation(BigRational(0), 5).is_infinite(), "nu_5(0)");

    // Primality against trial division, plus known hard cases.
    for (std::uint64_t n = 0; n < 20000; ++n) {
        if (numtheory::is_prime_u64(n) != is_prime_trial(n)) {
            s.check(false, "is_prime_u64 wrong at " + std::to_string(n));
        }
    }
    s.check(true, "primality sweep to 20000");
    s.check(numtheory::is_prime_u64((1ull << 61) - 1), "2^61-1 is prime");
    s.check(!numtheory::is_prime_u64(3215031751ull), "3215031751 is a strong pseudoprime");
    s.check(!numtheory::is_prime_u64(561), "561 is Carmichael");

    // Exact square roots.
    for (int i = 0; i < 200; ++i) {
        BigInt k = rand_int(eng, 2, 2000000000);
        auto r = numtheory::int_sqrt_exact(k * k);
        s.check(r && *r == k, "sqrt(k^2) != k");
        s.check(!numtheory::int_sqrt_exact(k * k + 1), "k^2+1 reported square");
    }

    // Q(sqrt2) field laws and exact signs.
    for (int i = 0; i < 200; ++i) {
        QSqrt2 x = rand_qsqrt2(eng), y = rand_qsqrt2(eng), z = rand_qsqrt2(eng);
        s.check((x + y) * z == x * z + y * z, "distributivity");
        s.check((x * y) * z == x * (y * z), "associativity");
        if (!x.is_zero()) {
            s.check(x * x.inverse() == QSqrt2(1, 0), "inverse");
            s.check(x.sgn() * (-x).sgn() == -1, "sgn antisymmetry");
            s.check((x * x).sgn() == 1, "squares positive");
        }
    }
    s.check(QSqrt2(1, 1) * QSqrt2(1, -1) == QSqrt2(-1, 0), "(1+s2)(1-s2) = -1");
    s.check(QSqrt2(0, 1) * QSqrt2(0, 1) == QSqrt2(2, 0), "sqrt2^2 = 2");
    s.check(QSqrt2(1, 1).inverse() == QSqrt2(-1, 1), "1/(1+s2) = -1+s2");

    // Rational parsing round trip.
    for (int i = 0; i < 200; ++i) {
        BigRational q = rand_rational(eng);
        s.check(numtheory::parse_rational(numtheory::rational_str(q)) == q,
                "rational string round trip");
    }
    return s.take();
}

SuiteResult check_projective(std::uint64_t p, std::int64_t height, std::uint64_t seed) {
    Suite s("projective");
    std::mt19937_64 eng(seed);
    numtheory::require_prime(p);

    auto rand_triple = [&](bool allow_zero_coord) {
        for (;;) {
            BigInt x = rand_int(eng, -200, 200), y = rand_int(eng, -200, 200),
                   z = rand_int(eng, -200, 200);
            if (allow_zero_coord && rand_int(eng, 0, 3) == 0) x = 0;
            if (allow_zero_coord && rand_int(eng, 0, 3) == 0) y = 0;
            if (x != 0 || y != 0 || z != 0) return PrimitiveTriple::normalize(x, y, z);
        }
    };

    // The three colour rules partition: exactly one fires.
    for (int i = 0; i < 1000; ++i) {
        auto t = rand_triple(true);
        auto nx = numtheory::p_valuation_int(t.x(), p), ny = numtheory::p_valuation_int(t.y(), p),
             nz = numtheory::p_valuation_int(t.z(), p);
        const bool red = nx < ny && nx < nz;
        const bool white = nx >= ny && ny < nz;
        const bool black = nx >= nz && ny >= nz;
        s.check(int(red) + int(white) + int(black) == 1, "colour rules do not partition");
        auto c = projective::colour_valuation(t, p);
        s.check((c == Colour3::Red) == red && (c == Colour3::White) == white &&
                    (c == Colour3::Black) == black,
                "colour_valuation disagrees with its defining rules");
    }

    // Scale and sign invariance of the raw form.
    for (int i = 0; i < 400; ++i) {
        auto t = rand_triple(true);
        BigInt k = rand_int(eng, 1, 500);
        if (rand_int(eng, 0, 1)) k = -k;
        s.check(projective::colour_valuation_raw(k * t.x(), k * t.y(), k * t.z(), p) ==
                    projective::colour_valuation(t, p),
                "colouring not scale invariant");
    }

    // Lines carry at most two colours.
    for (int i = 0; i < 40; ++i) {
        auto l = rand_triple(false);
        auto r = projective::line_scan(l.x(), l.y(), l.z(), std::min<std::int64_t>(height, 12), p);
        s.check(r.colour_count() <= 2,
                "line " + l.str() + " shows " + std::to_string(r.colour_count()) + " colours");
    }

    // line_scan against a brute-force sweep of the cube.
    for (int i = 0; i < 6; ++i) {
        auto l = rand_triple(false);
        const std::int64_t h = 6;
        auto r = projective::line_scan(l.x(), l.y(), l.z(), h, p);
        std::set<std::string> brute;
        for (std::int64_t x = -h; x <= h; ++x) {
            for (std::int64_t y = -h; y <= h; ++y) {
                for (std::int64_t z = -h; z <= h; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (l.x() * x + l.y() * y + l.z() * z != 0) continue;
                    brute.insert(PrimitiveTriple::normalize(x, y, z).str());
                }
            }
        }
        std::set<std::string> scanned;
        for (const auto& e : r.points) scanned.insert(e.point.str());
        s.check(scanned == brute, "line_scan misses points on " + l.str());
    }

    // Frozen examples (p as documented, independent of the argument).
    s.equal(projective::to_string(
                projective::colour_valuation(PrimitiveTriple::normalize(1, 1, 0), 3)),
            std::string("white"), "colour((1,1,0), p=3)");
    s.equal(projective::to_string(
                projective::colour_valuation(PrimitiveTriple::normalize(-7, 0, 1), 2)),
            std::string("black"), "colour((-7,0,1), p=2)");
    s.equal(projective::to_string(
                projective::colour_valuation(PrimitiveTriple::normalize(1, 0, 0), 2)),
            std::string("red"), "colour((1,0,0), p=2)");
    return s.take();
}

SuiteResult check_sphere(std::int64_t height, std::uint64_t seed) {
    Suite s("sphere");
    std::mt19937_64 eng(seed);
    const std::int64_t h = std::min<std::int64_t>(height, 60);
    const auto points = generators::enum_points(generators::EnumMode::Quadruple, h);

    // Parity invariants on every enumerated point.
    std::int64_t parity_bad = 0;
    for (const auto& p : points) {
        const int odd = int(bit_test(p.a(), 0)) + int(bit_test(p.b(), 0)) + int(bit_test(p.c(), 0));
        if (odd != 1 || !bit_test(p.d(), 0)) ++parity_bad;
    }
    s.check(parity_bad == 0, "parity invariants violated on enumeration");

    // Same colour <=> odd inner form; orthogonal => different colour.
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < 3000; ++i) {
        const auto& p = points[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
        const auto& q = points[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
        const auto ip = sphere::inner(p, q);
        const bool same = sphere::colour3(p) == sphere::colour3(q);
        s.check(same == bit_test(ip.form, 0), "colour/parity duality broken");
        if (ip.orthogonal()) {
            s.check(!same, "orthogonal pair sharing a colour");
        }
    }

    // Antipodes: distinct points, same colour.
    for (int i = 0; i < 200; ++i) {
        const auto& p = points[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
        const auto q = p.antipode();
        s.check(!(p == q), "antipode equal to original");
        s.check(sphere::colour3(p) == sphere::colour3(q), "antipode changed colour");
    }

    // The coordinate cycle (x,y,z) -> (y,z,x) permutes the colour classes
    // red -> black -> white -> red.
    for (int i = 0; i < 500; ++i) {
        const auto& p = points[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
        const auto q = SpherePoint::from_quadruple(p.b(), p.c(), p.a(), p.d());
        s.check(sphere::colour3(q) == cycled(sphere::colour3(p)),
                "coordinate cycle does not permute colours as expected");
    }

    // Stereographic round trips, both directions.
    for (int i = 0; i < 1000; ++i) {
        BigRational u = rand_rational(eng), v = rand_rational(eng);
        auto p = sphere::stereo_inverse(u, v);
        auto back = sphere::stereo_project(p);
        s.check(back && back->first == u && back->second == v, "stereo plane round trip");
    }
    for (const auto& p : points) {
        auto uv = sphere::stereo_project(p);
        if (!uv) {
            s.check(p.c() == p.d(), "projection empty away from north pole");
            continue;
        }
        s.check(sphere::stereo_inverse(uv->first, uv->second) == p, "stereo sphere round trip");
    }

    // from_projective: direction recovered, colour matches the 2-adic
    // valuation colouring of the triple.
    for (const auto& p : points) {
        auto t = p.triple();
        auto q = SpherePoint::from_projective(t);
        s.check(q.has_value() && (q->triple() == t), "from_projective direction");
        s.check(sphere::colour3(p) == projective::colour_valuation(t, 2),
                "parity colour disagrees with 2-adic colour");
    }

    // Q(sqrt2) embedding: inner products agree with the rational form.
    for (int i = 0; i < 500; ++i) {
        const auto& p = points[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
        const auto& q = points[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
        const auto ap = sphere::AlgSpherePoint::from_sphere(p);
        const auto aq = sphere::AlgSpherePoint::from_sphere(q);
        s.check(ap.inner(aq) == QSqrt2(sphere::inner(p, q).value, 0),
                "algebraic inner product disagrees");
        auto back = sphere::to_sphere(ap);
        s.check(back && *back == p, "to_sphere round trip");
    }

    // Directions needing sqrt2, and directions needing more than Q(sqrt2).
    auto diag = sphere::AlgSpherePoint::from_direction(1, 1, 0);
    s.check(diag.has_value() && !diag->is_rational() &&
                diag->x() == QSqrt2(0, BigRational(1, 2)),
            "(1,1,0) direction should be sqrt2/2");
    s.check(!sphere::AlgSpherePoint::from_direction(1, 1, 1).has_value(),
            "(1,1,1) has no Q(sqrt2) unit vector");

    // Frozen examples.
    s.equal(sphere::SpherePoint::from_quadruple(2, -16, 8, 18).str(), std::string("(1,-8,4;9)"),
            "reduction");
    s.equal(projective::to_string(sphere::colour3(SpherePoint::from_quadruple(3, 4, 0, 5))),
            std::string("red"), "colour3 (3,4,0;5)");
    s.equal(projective::to_string(sphere::colour3(SpherePoint::from_quadruple(2, 2, 1, 3))),
            std::string("black"), "colour3 (2,2,1;3)");
    s.equal(sphere::inner(SpherePoint::from_quadruple(1, 2, 2, 3),
                          SpherePoint::from_quadruple(2, 1, -2, 3))
                .form,
            BigInt(0), "orthogonal witness");
    return s.take();
}

SuiteResult check_fourcolor(double tol, std::uint64_t seed) {
    Suite s("fourcolor");
    std::mt19937_64 eng(seed);

    // The shipped table passes its certificate.
    const auto rep = fourcolor::verify_table();
    s.equal(rep.pairs_checked, 676, "certificate pair count");
    s.check(rep.pass(), "shipped table fails its certificate");

    // Sanity of the certificate itself: known-bad tables must be flagged.
    {
        auto bad = fourcolor::colour4_table();
        bad[static_cast<std::size_t>(SignPattern::parse("0+0").code())] = fourcolor::Colour4::Red;
        s.check(!fourcolor::verify_table(bad).pass(), "red y-axis not flagged");
    }
    {
        auto bad = fourcolor::colour4_table();
        bad[static_cast<std::size_t>(SignPattern::parse("+++").code())] = fourcolor::Colour4::White;
        s.check(!fourcolor::verify_table(bad).pass(), "white (+,+,+) octant not flagged");
    }
    {
        auto bad = fourcolor::colour4_table();
        bad[static_cast<std::size_t>(SignPattern::parse("00+").code())] = fourcolor::Colour4::Red;
        s.check(!fourcolor::verify_table(bad).pass(), "red z-axis not flagged");
    }

    // Orthogonality classes against the exhaustive oracle.
    for (const auto& a : SignPattern::all()) {
        for (const auto& b : SignPattern::all()) {
            if (fourcolor::ortho_class(a, b) != brute_ortho_class(a, b)) {
                s.check(false, "ortho_class differs from oracle at " + a.str() + "/" + b.str());
            }
        }
    }
    s.check(true, "ortho_class oracle sweep");

    // Table is antipodally symmetric (our convention; orthogonality cannot
    // tell u from -u).
    for (const auto& p : SignPattern::all()) {
        s.check(fourcolor::colour4(p) == fourcolor::colour4(p.antipode()),
                "antipode colour differs at " + p.str());
    }

    // Float front-end agrees with exact classification away from the
    // tolerance band.
    std::int64_t float_bad = 0;
    for (int i = 0; i < 2000; ++i) {
        std::array<BigRational, 3> v;
        bool nonzero = false;
        for (auto& c : v) {
            if (rand_int(eng, 0, 3) == 0) {
                c = 0;
            } else {
                c = BigRational(rand_int(eng, 1, 1000) * (rand_int(eng, 0, 1) ? 1 : -1), 1000);
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        const auto want = fourcolor::colour4(fourcolor::sign_pattern(v));
        const auto got = fourcolor::colour4_float(numtheory::to_double(v[0]),
                                                  numtheory::to_double(v[1]),
                                                  numtheory::to_double(v[2]), tol);
        if (got != want) ++float_bad;
    }
    s.check(float_bad == 0, "colour4_float disagrees with exact classification");

    // Rejections and frozen values.
    bool threw = false;
    try {
        fourcolor::colour4_float(tol, tol, tol, tol);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    s.check(threw, "near-zero vector must be rejected");
    s.equal(std::string(fourcolor::to_string(fourcolor::colour4_float(0, 0, 1))),
            std::string("black"), "z-axis float colour");
    s.equal(std::string(fourcolor::to_string(fourcolor::colour4_float(0.3, -0.4, 0.87))),
            std::string("blue"), "(+,-,+) octant float colour");
    s.equal(std::string(fourcolor::to_string(fourcolor::colour4_float(1e-12, 0.5, 0.5, 1e-9))),
            std::string("white"), "snap-to-zero arc colour");
    return s.take();
}

SuiteResult check_generators(std::uint64_t seed) {
    Suite s("generators");
    std::mt19937_64 eng(seed);
    using generators::EnumMode;
    using generators::ExactRotation;

    // Rotation sanity: identity composition and power consistency.
    const auto rz = ExactRotation::rotation_z(), ry = ExactRotation::rotation_y();
    const auto x0 = SpherePoint::from_quadruple(1, 0, 0, 1);
    s.check(ExactRotation::identity().apply(x0) == x0, "identity moves a point");
    s.check((rz * rz).apply(x0) == rz.apply(rz.apply(x0)), "composition vs iteration");

    // Frozen z-orbit prefix, all red.
    const auto orb = generators::orbit(rz, x0, 30);
    s.equal(orb[1].point.str(), std::string("(3,4,0;5)"), "first rotation image");
    s.equal(orb[2].point.str(), std::string("(-7,24,0;25)"), "second rotation image");
    for (const auto& e : orb) {
        if (e.colour != Colour3::Red) s.check(false, "z-orbit left red at " + e.point.str());
    }
    s.check(true, "z-orbit monochromatic");
    for (const auto& e : generators::orbit(ry, x0, 30)) {
        if (e.colour != Colour3::Red) s.check(false, "y-orbit left red at " + e.point.str());
    }
    s.check(true, "y-orbit monochromatic");

    // Enumeration against a brute-force double loop.
    for (std::int64_t h : {1, 7, 25}) {
        std::set<std::string> brute;
        for (std::int64_t d = 1; d <= h; ++d) {
            for (std::int64_t a = -d; a <= d; ++a) {
                for (std::int64_t b = -d; b <= d; ++b) {
                    const std::int64_t c2 = d * d - a * a - b * b;
                    if (c2 < 0) continue;
                    auto c = numtheory::int_sqrt_exact(c2);
                    if (!c) continue;
                    const std::int64_t ci = c->convert_to<std::int64_t>();
                    if (std::gcd(std::gcd(std::abs(a), std::abs(b)), ci) != 1) continue;
                    brute.insert(SpherePoint::from_quadruple(a, b, ci, d).str());
                    if (ci > 0) brute.insert(SpherePoint::from_quadruple(a, b, -ci, d).str());
                }
            }
        }
        std::set<std::string> fast;
        std::int64_t stream_count = 0;
        generators::for_each_point(EnumMode::Quadruple, h, [&](const SpherePoint& p) {
            fast.insert(p.str());
            ++stream_count;
        });
        s.check(fast == brute, "enumeration differs from brute force at H=" + std::to_string(h));
        s.check(stream_count == static_cast<std::int64_t>(fast.size()),
                "enumeration emitted duplicates at H=" + std::to_string(h));
    }
    s.equal(generators::enum_points(EnumMode::Quadruple, 1).size(), std::size_t(6), "count H=1");
    s.equal(generators::enum_points(EnumMode::Quadruple, 3).size(), std::size_t(30), "count H=3");

    // Stereo stream: valid, duplicate-free, hits the frozen points.
    {
        std::set<std::string> seen;
        std::int64_t count = 0;
        generators::for_each_point(EnumMode::Stereo, 6, [&](const SpherePoint& p) {
            seen.insert(p.str());
            ++count;
        });
        s.check(count == static_cast<std::int64_t>(seen.size()), "stereo stream has duplicates");
        const auto st2 = generators::enum_points(EnumMode::Stereo, 2);
        auto contains = [&](const SpherePoint& p) {
            return std::find(st2.begin(), st2.end(), p) != st2.end();
        };
        s.check(contains(SpherePoint::from_quadruple(0, 0, -1, 1)) &&
                    contains(SpherePoint::from_quadruple(1, 0, 0, 1)) &&
                    contains(SpherePoint::from_quadruple(4, 0, -3, 5)),
                "stereo H=2 misses a frozen point");
    }

    // Coverage: quadrant cells of the equator fill from a 50-point z-orbit.
    {
        std::vector<SpherePoint> pts;
        for (const auto& e : generators::orbit(rz, x0, 50)) pts.push_back(e.point);
        const auto rep = generators::coverage(pts, generators::CoverageGrid::equator(4));
        s.equal(rep.empty_cells, 0, "equator quadrants empty after 50 steps");
        s.equal(rep.points_counted, std::int64_t(50), "orbit points counted");
        s.equal(rep.off_domain, std::int64_t(0), "z-orbit points are on the equator");
    }

    // Circle dichotomy on random pairs.
    {
        const auto pts = generators::enum_points(EnumMode::Quadruple, 60);
        const int n = static_cast<int>(pts.size());
        int tried = 0;
        while (tried < 20) {
            const auto& u = pts[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
            const auto& v = pts[static_cast<std::size_t>(rand_int(eng, 0, n - 1))];
            if (u == v.antipode()) continue;
            ++tried;
            const auto res = generators::circle_scan(u, v, pts);
            s.check(res.dichotomy_holds,
                    "dichotomy fails for u=" + u.str() + " v=" + v.str());
            if (res.same_colour_case) {
                s.check(res.with_u_colour >= 1, "same-colour circle should contain v");
            }
        }
        bool threw = false;
        try {
            generators::circle_scan(x0, x0.antipode(), pts);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        s.check(threw, "antipodal circle must be rejected");
    }
    return s.take();
}

SuiteResult check_graphs(std::uint64_t seed) {
    Suite s("graphs");
    std::mt19937_64 eng(seed);
    using graphs::OrthoGraph;
    using graphs::VertexPoint;

    const auto xhat = SpherePoint::from_quadruple(1, 0, 0, 1);
    const auto yhat = SpherePoint::from_quadruple(0, 1, 0, 1);
    const auto zhat = SpherePoint::from_quadruple(0, 0, 1, 1);

    // Axes triangle.
    const auto k3 = OrthoGraph::build(
        {VertexPoint::from_sphere(xhat), VertexPoint::from_sphere(yhat),
         VertexPoint::from_sphere(zhat)});
    s.equal(k3.n(), 3, "K3 vertices");
    s.equal(k3.m(), std::int64_t(3), "K3 edges");
    const auto k3res = graphs::chromatic_number(k3);
    s.equal(k3res.chi, 3, "chi(K3)");
    s.check(graphs::validate_colouring(k3, k3res.witness).valid, "K3 witness");
    s.check(k3res.clique_lower == 3 && k3res.greedy_upper == 3, "K3 bounds");

    // Five-vertex example: axes plus the two sqrt2 diagonals in the z=0
    // plane; both are orthogonal to the z-axis and to each other.
    {
        auto d1 = sphere::AlgSpherePoint::from_direction(1, 1, 0);
        auto d2 = sphere::AlgSpherePoint::from_direction(-1, 1, 0);
        const auto g = OrthoGraph::build(
            {VertexPoint::from_sphere(xhat), VertexPoint::from_sphere(yhat),
             VertexPoint::from_sphere(zhat), VertexPoint::from_alg(*d1),
             VertexPoint::from_alg(*d2)});
        s.equal(g.n(), 5, "5-vertex graph order");
        s.equal(g.m(), std::int64_t(6), "5-vertex graph size");
        s.check(!g.all_rational(), "diagonals are not rational");
        const auto res = graphs::chromatic_number(g);
        s.equal(res.chi, 3, "chi of 5-vertex example");
        s.equal(brute_chromatic(g), 3, "brute chi of 5-vertex example");
    }

    // Empty graph: first four z-orbit points are pairwise non-orthogonal.
    {
        std::vector<VertexPoint> pts;
        for (const auto& e :
             generators::orbit(generators::ExactRotation::rotation_z(), xhat, 4)) {
            pts.push_back(VertexPoint::from_sphere(e.point));
        }
        const auto g = OrthoGraph::build(pts);
        s.equal(g.m(), std::int64_t(0), "orbit prefix graph is empty");
        s.equal(graphs::chromatic_number(g).chi, 1, "chi of empty graph");
    }

    // Solver vs brute force on random mixed graphs.
    {
        std::vector<VertexPoint> pool;
        for (const auto& p : generators::enum_points(generators::EnumMode::Quadruple, 15)) {
            pool.push_back(VertexPoint::from_sphere(p));
        }
        for (std::int64_t x = -2; x <= 2; ++x) {
            for (std::int64_t y = -2; y <= 2; ++y) {
                for (std::int64_t z = -2; z <= 2; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (auto p = sphere::AlgSpherePoint::from_direction(x, y, z)) {
                        if (!p->is_rational()) pool.push_back(VertexPoint::from_alg(*p));
                    }
                }
            }
        }
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<VertexPoint> pts;
            const int k = static_cast<int>(rand_int(eng, 1, 10));
            for (int i = 0; i < k; ++i) {
                pts.push_back(pool[static_cast<std::size_t>(
                    rand_int(eng, 0, static_cast<std::int64_t>(pool.size()) - 1))]);
            }
            const auto g = OrthoGraph::build(pts);
            const auto res = graphs::chromatic_number(g);
            s.check(res.chi == brute_chromatic(g), "solver disagrees with brute force");
            s.check(graphs::validate_colouring(g, res.witness).valid, "witness invalid");
            s.check(res.clique_lower <= res.chi && res.chi <= res.greedy_upper,
                    "bound sandwich violated");
            if (g.all_rational()) {
                s.check(res.chi <= 3, "rational graph needs more than 3 colours");
                graphs::Colouring parity;
                parity.palette = 3;
                for (const auto& v : g.vertices()) {
                    parity.assignment.push_back(
                        static_cast<int>(sphere::colour3(*v.rational)));
                }
                s.check(graphs::validate_colouring(g, parity).valid,
                        "parity colouring is not a proper witness");
            }
        }
    }

    // validate_colouring argument and violation handling.
    {
        auto bad = graphs::validate_colouring(k3, {{0, 0, 1}, 3});
        s.check(!bad.valid && bad.violation == std::make_pair(0, 1), "violation reporting");
        bool threw = false;
        try {
            graphs::validate_colouring(k3, {{0, 1, 3}, 3});
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        s.check(threw, "out-of-range colour accepted");
    }

    // Cap handling: bounds survive in the error.
    {
        std::vector<VertexPoint> pts;
        for (const auto& p : generators::enum_points(generators::EnumMode::Quadruple, 9)) {
            pts.push_back(VertexPoint::from_sphere(p));
        }
        const auto g = OrthoGraph::build(pts);
        bool threw = false;
        try {
            graphs::chromatic_number(g, 8);
        } catch (const graphs::too_large_error& e) {
            threw = true;
            s.check(e.vertices == g.n() && e.cap == 8, "too_large payload");
            s.check(e.lower_bound >= 1 && e.lower_bound <= e.upper_bound, "too_large bounds");
        }
        s.check(threw, "cap not enforced");
    }

    // DIMACS shape and JSON round trip.
    {
        const auto text = graphs::to_dimacs(k3);
        s.check(text.find("p edge 3 3") != std::string::npos, "DIMACS header");
        s.check(text.find("e 1 2") != std::string::npos, "DIMACS edge line");
        auto d1 = sphere::AlgSpherePoint::from_direction(1, 1, 0);
        const auto g = OrthoGraph::build(
            {VertexPoint::from_sphere(zhat), VertexPoint::from_alg(*d1)});
        const auto j = serialize::to_json(g);
        const auto back = serialize::graph_from_json(j);
        s.check(serialize::to_json(back) == j, "graph JSON round trip");
    }

    // Search harness: seed echo, determinism, rational impossibility.
    {
        graphs::SearchConfig cfg;
        cfg.seed = 42;
        cfg.budget = 0;
        cfg.rational_height = 5;
        auto rep = graphs::search_4chromatic(cfg);
        s.check(rep.seed == 42 && rep.candidates_tried == 0 && rep.found.empty(),
                "zero budget report");
        s.check(rep.pool_all_rational, "rational pool not flagged");

        cfg.budget = 5;
        cfg.subset_size = 8;
        auto r1 = graphs::search_4chromatic(cfg);
        auto r2 = graphs::search_4chromatic(cfg);
        s.check(serialize::to_json(r1) == serialize::to_json(r2), "search not deterministic");
        s.check(r1.found.empty() && r1.best_chi <= 3, "rational pool cannot reach chi 4");

        cfg.alg_height = 2;
        cfg.strategy = graphs::SubsetStrategy::Grow;
        auto r3 = graphs::search_4chromatic(cfg);
        s.check(r3.candidates_tried == 5, "grow strategy budget");
        s.check(!r3.pool_all_rational, "mixed pool flagged rational");
    }
    return s.take();
}

std::vector<SuiteResult> check_all(std::uint64_t p, std::int64_t height, double tol,
                                   std::uint64_t seed) {
    return {check_numtheory(seed),
            check_projective(p, height, seed + 1),
            check_sphere(height, seed + 2),
            check_fourcolor(tol, seed + 3),
            check_generators(seed + 4),
            check_graphs(seed + 5)};
}

}  // namespace orthochroma::selfcheck
