#include "orthochroma/projective.hpp"

#include "doctest.h"

#include <random>

using namespace orthochroma;
using namespace orthochroma::projective;
using orthochroma::numtheory::BigInt;

namespace {

Colour3 colour_of(long long x, long long y, long long z, std::uint64_t p) {
    return colour_valuation(PrimitiveTriple::normalize(BigInt(x), BigInt(y), BigInt(z)), p);
}

}  // namespace

TEST_SUITE_BEGIN("projective");

TEST_CASE("normalization reduces and fixes the sign") {
    const auto t = PrimitiveTriple::normalize(BigInt(2), BigInt(-4), BigInt(6));
    CHECK(t.x() == 1);
    CHECK(t.y() == -2);
    CHECK(t.z() == 3);
    // the first nonzero coordinate is made positive, so both lifts agree
    const auto s = PrimitiveTriple::normalize(BigInt(-2), BigInt(4), BigInt(-6));
    CHECK(s == t);
    const auto axis = PrimitiveTriple::normalize(BigInt(0), BigInt(0), BigInt(-5));
    CHECK(axis.x() == 0);
    CHECK(axis.y() == 0);
    CHECK(axis.z() == 1);
    CHECK_THROWS_AS(PrimitiveTriple::normalize(BigInt(0), BigInt(0), BigInt(0)),
                    std::invalid_argument);
}

TEST_CASE("valuation colours of hand-checked points") {
    // p = 2: exponents of (1,0,0) are (0, inf, inf) so the first rule fires
    CHECK(colour_of(1, 0, 0, 2) == Colour3::Red);
    CHECK(colour_of(0, 1, 0, 2) == Colour3::White);
    CHECK(colour_of(0, 0, 1, 2) == Colour3::Black);
    CHECK(colour_of(1, 1, 0, 2) == Colour3::White);   // (0,0,inf): tie goes white
    CHECK(colour_of(1, 0, 1, 2) == Colour3::Black);   // (0,inf,0)
    CHECK(colour_of(1, 1, 1, 2) == Colour3::Black);   // all ties go black
    CHECK(colour_of(1, 2, 4, 2) == Colour3::Red);     // exponents (0,1,2)
    CHECK(colour_of(2, 1, 4, 2) == Colour3::White);   // (1,0,2)
    CHECK(colour_of(4, 2, 1, 2) == Colour3::Black);   // (2,1,0)
    CHECK(colour_of(-7, 0, 1, 2) == Colour3::Black);  // (0,inf,0)
    // p = 3 ignores powers of two entirely
    CHECK(colour_of(3, 0, 0, 3) == Colour3::Red);
    CHECK(colour_of(9, 3, 1, 3) == Colour3::Black);   // (2,1,0)
    CHECK(colour_of(1, 3, 9, 3) == Colour3::Red);     // (0,1,2)
    CHECK_THROWS_AS(colour_of(1, 1, 1, 6), numtheory::not_prime_error);
}

TEST_CASE("the three rules partition every point") {
    // raw rule evaluation must fire exactly once per point; this is where the
    // corrected third label matters
    for (long long x = -6; x <= 6; ++x) {
        for (long long y = -6; y <= 6; ++y) {
            for (long long z = -6; z <= 6; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                for (const std::uint64_t p : {2ull, 3ull}) {
                    const auto t = PrimitiveTriple::normalize(BigInt(x), BigInt(y), BigInt(z));
                    const auto nx = numtheory::p_valuation_int(t.x(), p);
                    const auto ny = numtheory::p_valuation_int(t.y(), p);
                    const auto nz = numtheory::p_valuation_int(t.z(), p);
                    const bool red = nx < ny && nx < nz;
                    const bool white = nx >= ny && ny < nz;
                    const bool black = nx >= nz && ny >= nz;
                    CHECK(int(red) + int(white) + int(black) == 1);
                    const auto col = colour_valuation(t, p);
                    CHECK(col == (red ? Colour3::Red : white ? Colour3::White : Colour3::Black));
                }
            }
        }
    }
}

TEST_CASE("colour is a projective invariant") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> coord(-40, 40), scale(1, 9);
    for (int i = 0; i < 300; ++i) {
        const long long x = coord(rng), y = coord(rng), z = coord(rng);
        if (x == 0 && y == 0 && z == 0) continue;
        const long long l = scale(rng);
        for (const std::uint64_t p : {2ull, 3ull, 5ull}) {
            CHECK(colour_of(x, y, z, p) == colour_of(l * x, l * y, l * z, p));
            CHECK(colour_of(x, y, z, p) == colour_of(-x, -y, -z, p));
        }
    }
}

TEST_CASE("line scans stay within two colours") {
    const auto line = PrimitiveTriple::normalize(BigInt(1), BigInt(1), BigInt(1));
    const auto res = line_scan(line.x(), line.y(), line.z(), 6, 2);
    CHECK(res.points.size() > 0);
    CHECK(res.colour_count() <= 2);
    // this particular line realizes the bound: white (1,1,-2) and black
    // (1,-2,1) both lie on it
    CHECK(res.has(Colour3::White));
    CHECK(res.has(Colour3::Black));
    CHECK_FALSE(res.has(Colour3::Red));
    for (const auto& e : res.points) {
        CHECK(line.x() * e.point.x() + line.y() * e.point.y() + line.z() * e.point.z() == 0);
        CHECK(colour_valuation(e.point, 2) == e.colour);
    }

    // sweep: every small line obeys the two-colour bound at several primes
    for (long long a = -4; a <= 4; ++a) {
        for (long long b = -4; b <= 4; ++b) {
            for (long long c = 0; c <= 4; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                for (const std::uint64_t p : {2ull, 3ull, 5ull}) {
                    CHECK(line_scan(BigInt(a), BigInt(b), BigInt(c), 8, p).colour_count() <= 2);
                }
            }
        }
    }
}

TEST_CASE("line scan input validation") {
    CHECK_THROWS_AS(line_scan(BigInt(0), BigInt(0), BigInt(0), 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(line_scan(BigInt(1), BigInt(0), BigInt(0), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(line_scan(BigInt(1), BigInt(0), BigInt(0), 5, 4), numtheory::not_prime_error);
}

TEST_SUITE_END();
