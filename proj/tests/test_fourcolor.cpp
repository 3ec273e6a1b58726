#include "orthochroma/fourcolor.hpp"

#include "orthochroma/sphere.hpp"

#include "doctest.h"

#include <random>

using namespace orthochroma;
using namespace orthochroma::fourcolor;
using orthochroma::numtheory::BigRational;
using orthochroma::numtheory::QSqrt2;

namespace {

Colour4 col(const char* pattern) { return colour4(SignPattern::parse(pattern)); }

}  // namespace

TEST_SUITE_BEGIN("fourcolor");

TEST_CASE("sign patterns enumerate, print and parse") {
    const auto& all = SignPattern::all();
    REQUIRE(all.size() == 26);
    CHECK(all.front().str() == "---");
    CHECK(all.back().str() == "+++");
    for (const auto& p : all) {
        CHECK(SignPattern::parse(p.str()) == p);
        CHECK(p.code() != 13);  // the zero vector has no pattern
        CHECK(p.antipode().code() == 26 - p.code());
        CHECK(p.antipode().antipode() == p);
    }
    CHECK_THROWS_AS(SignPattern::parse("000"), std::invalid_argument);
    CHECK_THROWS_AS(SignPattern::parse("++"), std::invalid_argument);
    CHECK_THROWS_AS(SignPattern::parse("x+0"), std::invalid_argument);
}

TEST_CASE("patterns of concrete vectors") {
    CHECK(sign_pattern({BigRational(3, 5), BigRational(4, 5), BigRational(0)}).str() == "++0");
    CHECK(sign_pattern({BigRational(-3, 5), BigRational(0), BigRational(4, 5)}).str() == "-0+");
    const auto diag = sphere::AlgSpherePoint::from_direction(-1, 1, 0);
    REQUIRE(diag.has_value());
    CHECK(sign_pattern(diag->coords()).str() == "-+0");
    CHECK_THROWS_AS(sign_pattern({BigRational(0), BigRational(0), BigRational(0)}),
                    std::invalid_argument);
}

TEST_CASE("the colour table is the frozen one") {
    // axes match the parity colouring of the same points
    CHECK(col("+00") == Colour4::Red);
    CHECK(col("0+0") == Colour4::White);
    CHECK(col("00+") == Colour4::Black);
    // a sample across cells, pinned after certification
    CHECK(col("---") == Colour4::Red);
    CHECK(col("--+") == Colour4::Black);
    CHECK(col("-+-") == Colour4::Blue);
    CHECK(col("+-+") == Colour4::Blue);
    CHECK(col("-+0") == Colour4::White);
    CHECK(col("0--") == Colour4::White);
    CHECK(col("++-") == Colour4::Black);
    CHECK(col("+++") == Colour4::Red);
    // antipodal invariance everywhere
    for (const auto& p : SignPattern::all()) {
        CHECK(colour4(p) == colour4(p.antipode()));
    }
    // all four colours are actually used
    bool seen[4] = {};
    for (const auto& p : SignPattern::all()) seen[static_cast<int>(colour4(p))] = true;
    CHECK((seen[0] && seen[1] && seen[2] && seen[3]));
}

TEST_CASE("colour names round trip") {
    for (const auto c : {Colour4::Red, Colour4::White, Colour4::Black, Colour4::Blue}) {
        CHECK(colour4_from_string(to_string(c)) == c);
    }
    CHECK_THROWS_AS(colour4_from_string("mauve"), std::invalid_argument);
}

TEST_CASE("orthogonality classes of pattern pairs") {
    auto cls = [](const char* a, const char* b) {
        return ortho_class(SignPattern::parse(a), SignPattern::parse(b));
    };
    CHECK(cls("+00", "0+0") == OrthoClass::Always);
    CHECK(cls("+00", "0++") == OrthoClass::Always);
    CHECK(cls("00+", "++0") == OrthoClass::Always);
    CHECK(cls("+00", "+00") == OrthoClass::Never);
    CHECK(cls("+++", "+++") == OrthoClass::Never);
    CHECK(cls("+++", "---") == OrthoClass::Never);
    CHECK(cls("+00", "+++") == OrthoClass::Never);
    CHECK(cls("0+-", "+0+") == OrthoClass::Never);
    CHECK(cls("++-", "++0") == OrthoClass::Never);
    CHECK(cls("++0", "-+0") == OrthoClass::Possible);
    CHECK(cls("+-+", "++-") == OrthoClass::Possible);
    CHECK(cls("+++", "-+0") == OrthoClass::Possible);
    // symmetry
    for (const auto& a : SignPattern::all()) {
        for (const auto& b : SignPattern::all()) {
            CHECK(ortho_class(a, b) == ortho_class(b, a));
        }
    }
}

TEST_CASE("the properness certificate passes and is sharp") {
    const auto rep = verify_table();
    CHECK(rep.pairs_checked == 676);
    CHECK(rep.checks.size() == 676);
    CHECK(rep.violations.empty());
    CHECK(rep.pass());

    // targeted mutations each break a provable pair
    auto mutate = [](const char* pattern, Colour4 c) {
        ColourTable t = colour4_table();
        t[static_cast<std::size_t>(SignPattern::parse(pattern).code())] = c;
        return verify_table(t);
    };
    CHECK_FALSE(mutate("0+0", Colour4::Red).pass());   // axis pair with +00
    CHECK_FALSE(mutate("00+", Colour4::Red).pass());   // axis pair with +00
    CHECK_FALSE(mutate("+++", Colour4::White).pass()); // possible pair with -+0
}

TEST_CASE("certificate implies properness on exact orthogonal pairs") {
    // rational orthogonal pairs in general position across octants
    const auto u = sphere::SpherePoint::from_quadruple(1, 2, 2, 3);
    const auto v = sphere::SpherePoint::from_quadruple(2, 1, -2, 3);
    const auto w = sphere::SpherePoint::from_quadruple(2, -2, 1, 3);
    auto pat = [](const sphere::SpherePoint& p) {
        return sign_pattern(std::array<BigRational, 3>{p.x(), p.y(), p.z()});
    };
    CHECK(sphere::inner(u, v).orthogonal());
    CHECK(sphere::inner(u, w).orthogonal());
    CHECK(sphere::inner(v, w).orthogonal());
    CHECK(colour4(pat(u)) != colour4(pat(v)));
    CHECK(colour4(pat(u)) != colour4(pat(w)));
    CHECK(colour4(pat(v)) != colour4(pat(w)));
}

TEST_CASE("float front end") {
    CHECK(colour4_float(1, 0, 0) == col("+00"));
    CHECK(colour4_float(-0.2, 0.5, 0.6) == col("-++"));
    CHECK(colour4_float(0.3, -0.4, 0.87) == col("+-+"));
    // values below the tolerance count as zero
    CHECK(colour4_float(1e-10, 1, 1, 1e-9) == col("0++"));
    CHECK(colour4_float(1e-10, 1, 1, 1e-12) == col("+++"));
    CHECK_THROWS_AS(colour4_float(0, 1e-10, 0, 1e-9), std::invalid_argument);

    // random orthonormal pairs away from the coordinate planes get distinct
    // colours, as the certificate promises
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    int done = 0;
    while (done < 500) {
        double x[3] = {g(rng), g(rng), g(rng)}, y[3] = {g(rng), g(rng), g(rng)};
        double nx = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        if (nx < 0.1) continue;
        for (auto& c : x) c /= nx;
        double dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
        for (int i = 0; i < 3; ++i) y[i] -= dot * x[i];
        double ny = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
        if (ny < 0.1) continue;
        for (auto& c : y) c /= ny;
        const double eps = 1e-8;  // stay clear of the zero-detection band
        if (std::abs(x[0]) < eps || std::abs(x[1]) < eps || std::abs(x[2]) < eps) continue;
        if (std::abs(y[0]) < eps || std::abs(y[1]) < eps || std::abs(y[2]) < eps) continue;
        ++done;
        CHECK(colour4_float(x[0], x[1], x[2]) != colour4_float(y[0], y[1], y[2]));
    }
}

TEST_SUITE_END();
