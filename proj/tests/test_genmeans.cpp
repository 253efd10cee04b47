#include "doctest.h"
#include "seqspace/genmeans.hpp"
#include "test_support.hpp"

#include <random>
#include <stdexcept>

using namespace seqspace;
using namespace testsupport;

TEST_CASE("d_coeffs: all-ones, Euler, and banded examples") {
    DCoeffs ones = d_coeffs(SeqPrefix::ones(6, Mode::Exact), 6);
    CHECK(ones[0] == Scalar::exact(1));
    CHECK(ones[1] == Scalar::exact(1));
    for (std::size_t i = 2; i < 6; ++i) CHECK(ones[i].is_zero());

    // s_n = (1 - alpha)^n / n! gives D_k = (1 - alpha)^k / k!
    PresetArgs half;
    half.alpha = Scalar::exact(1, 2);
    ParamTriple euler = preset(PresetName::Euler, 4, Mode::Exact, half);
    DCoeffs de = d_coeffs(euler.s(), 4);
    CHECK(de[0] == Scalar::exact(1));
    CHECK(de[1] == Scalar::exact(1, 2));
    CHECK(de[2] == Scalar::exact(1, 8));
    CHECK(de[3] == Scalar::exact(1, 48));

    std::vector<Scalar> banded = {Scalar::exact(1), Scalar::exact(2), Scalar::exact(1),
                                  Scalar::zero(Mode::Exact)};
    DCoeffs db = d_coeffs(SeqPrefix(banded), 4);
    CHECK(db[0] == Scalar::exact(1));
    CHECK(db[1] == Scalar::exact(2));
    CHECK(db[2] == Scalar::exact(3));
    CHECK(db[3] == Scalar::exact(4));

    // cross-route: the first column of the inverted Toeplitz triangle of s
    // carries the same values with alternating signs
    Triangle toep = Triangle::build(4, [&](std::size_t n, std::size_t k) {
        return banded[n - k];
    });
    Triangle tinv = invert(toep);
    for (std::size_t n = 0; n < 4; ++n) {
        Scalar expect = n % 2 == 0 ? db[n] : -db[n];
        CHECK(tinv.entry(n, 0) == expect);
    }
}

TEST_CASE("d_coeffs: errors") {
    std::vector<Scalar> zs = {Scalar::zero(Mode::Exact), Scalar::exact(1)};
    CHECK_THROWS_AS(d_coeffs(SeqPrefix(zs), 2), std::invalid_argument);
    CHECK_THROWS_AS(d_coeffs(SeqPrefix::ones(3, Mode::Exact), 4), std::invalid_argument);
    CHECK_THROWS_AS(d_coeffs(SeqPrefix::ones(3, Mode::Exact), 0), std::invalid_argument);
}

TEST_CASE("d_coeffs equals the determinant display for small n") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Scalar> se;
        for (std::size_t i = 0; i < 6; ++i) se.push_back(rand_rational(rng, i == 0));
        SeqPrefix s(std::move(se));
        DCoeffs d = d_coeffs(s, 6);
        for (std::size_t n = 0; n <= 5; ++n) CHECK(d[n] == d_by_determinant(s, n));
    }
}

TEST_CASE("d_coeffs satisfies the convolution identity") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Scalar> se;
        for (std::size_t i = 0; i < 8; ++i) se.push_back(rand_rational(rng, i == 0));
        SeqPrefix s(std::move(se));
        DCoeffs d = d_coeffs(s, 8);
        for (std::size_t n = 1; n < 8; ++n) {
            Scalar acc = Scalar::zero(Mode::Exact);
            for (std::size_t k = 0; k <= n; ++k) {
                Scalar term = s[k] * d[n - k];
                acc += (n - k) % 2 == 0 ? term : -term;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("build_triangle: all-ones closed forms") {
    ParamTriple p = ones_params(3);
    Triangle a = build_triangle(p, TriangleKind::Mean, 3);
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(a.entry(n, k) == Scalar::one(Mode::Exact));

    // the inverse of the partial-sum triangle is the difference triangle
    Triangle b = build_triangle(p, TriangleKind::MeanInverse, 3);
    CHECK(b == invert(a));
    CHECK(b.entry(1, 0) == Scalar::exact(-1));
    CHECK(b.entry(2, 0).is_zero());
}

TEST_CASE("build_triangle: composite identities on random parameters") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 10; ++rep) {
        ParamTriple p = rand_params(rng, 8);
        Triangle a = build_triangle(p, TriangleKind::Mean, 8);
        Triangle b = build_triangle(p, TriangleKind::MeanInverse, 8);
        Triangle t = build_triangle(p, TriangleKind::MeanDifference, 8);
        Triangle s = build_triangle(p, TriangleKind::MeanDifferenceInverse, 8);
        Triangle d = build_triangle(p, TriangleKind::Difference, 8);

        CHECK(t == product(a, d));
        CHECK(s == product(invert(d), b));
        CHECK(product(a, b) == Triangle::identity(8, Mode::Exact));
        CHECK(product(t, s) == Triangle::identity(8, Mode::Exact));
        CHECK(s == invert(t));
    }
}

TEST_CASE("build_triangle: errors") {
    ParamTriple p = ones_params(4);
    CHECK_THROWS_AS(build_triangle(p, TriangleKind::Mean, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_triangle(p, TriangleKind::Mean, 0), std::invalid_argument);

    std::vector<Scalar> rz = {Scalar::exact(1), Scalar::zero(Mode::Exact)};
    CHECK_THROWS_AS(ParamTriple(SeqPrefix(rz), SeqPrefix::ones(2, Mode::Exact),
                                SeqPrefix::ones(2, Mode::Exact)),
                    std::invalid_argument);
    std::vector<Scalar> s0z = {Scalar::zero(Mode::Exact), Scalar::exact(1)};
    CHECK_THROWS_AS(ParamTriple(SeqPrefix::ones(2, Mode::Exact), SeqPrefix(s0z),
                                SeqPrefix::ones(2, Mode::Exact)),
                    std::invalid_argument);
}

TEST_CASE("presets: evaluated prefixes") {
    ParamTriple ces = preset(PresetName::Cesaro, 3, Mode::Exact);
    CHECK(ces.r()[0] == Scalar::exact(1));
    CHECK(ces.r()[1] == Scalar::exact(2));
    CHECK(ces.r()[2] == Scalar::exact(3));
    CHECK(ces.s()[2] == Scalar::exact(1));
    CHECK(ces.t()[2] == Scalar::exact(1));

    PresetArgs half;
    half.alpha = Scalar::exact(1, 2);
    ParamTriple eu = preset(PresetName::Euler, 3, Mode::Exact, half);
    CHECK(eu.r()[0] == Scalar::exact(1));
    CHECK(eu.r()[1] == Scalar::exact(1));
    CHECK(eu.r()[2] == Scalar::exact(1, 2));
    CHECK(eu.t()[0] == Scalar::exact(1));
    CHECK(eu.t()[1] == Scalar::exact(1, 2));
    CHECK(eu.t()[2] == Scalar::exact(1, 8));
    CHECK(eu.s()[0] == Scalar::exact(1));
    CHECK(eu.s()[1] == Scalar::exact(1, 2));
    CHECK(eu.s()[2] == Scalar::exact(1, 8));

    ParamTriple ab = preset(PresetName::AydinBasar, 3, Mode::Exact, half);
    CHECK(ab.r()[2] == Scalar::exact(3));
    CHECK(ab.t()[0] == Scalar::exact(2));
    CHECK(ab.t()[1] == Scalar::exact(3, 2));
    CHECK(ab.t()[2] == Scalar::exact(5, 4));
    CHECK(ab.s()[1] == Scalar::exact(1));

    PresetArgs uv;
    uv.u = SeqPrefix(std::vector<Scalar>{Scalar::exact(2), Scalar::exact(4)});
    uv.v = SeqPrefix(std::vector<Scalar>{Scalar::exact(3), Scalar::exact(5)});
    ParamTriple pol = preset(PresetName::PolatUV, 2, Mode::Exact, uv);
    CHECK(pol.r()[0] == Scalar::exact(1, 2));
    CHECK(pol.r()[1] == Scalar::exact(1, 4));
    CHECK(pol.t()[1] == Scalar::exact(5));
}

TEST_CASE("presets: argument validation") {
    PresetArgs bad;
    bad.alpha = Scalar::exact(3, 2);
    CHECK_THROWS_AS(preset(PresetName::Euler, 3, Mode::Exact, bad), std::invalid_argument);
    bad.alpha = Scalar::exact(0);
    CHECK_THROWS_AS(preset(PresetName::AydinBasar, 3, Mode::Exact, bad), std::invalid_argument);
    CHECK_THROWS_AS(preset(PresetName::Euler, 3, Mode::Exact, {}), std::invalid_argument);

    PresetArgs uv;
    uv.u = SeqPrefix(std::vector<Scalar>{Scalar::exact(1), Scalar::zero(Mode::Exact)});
    uv.v = SeqPrefix::ones(2, Mode::Exact);
    CHECK_THROWS_AS(preset(PresetName::PolatUV, 2, Mode::Exact, uv), std::invalid_argument);
}

TEST_CASE("forward: unit examples") {
    // All-ones parameters make the composed triangle the identity: the
    // partial-sum step exactly undoes the difference step.
    ParamTriple p = ones_params(4);
    CHECK(forward_transform(p, SeqPrefix::ones(4, Mode::Exact)) ==
          SeqPrefix::ones(4, Mode::Exact));
    CHECK(forward_transform(p, SeqPrefix::unit(4, 0, Mode::Exact)) ==
          SeqPrefix::unit(4, 0, Mode::Exact));

    // Distinct-weight example evaluated by hand: with r = s = 1 and
    // t = (1,2,3,4), the difference of x = (1,1,1,1) is e_0 and the mean
    // step returns s_n t_0 / r_n = 1 in every row.
    std::vector<Scalar> te = {Scalar::exact(1), Scalar::exact(2), Scalar::exact(3),
                              Scalar::exact(4)};
    ParamTriple q(SeqPrefix::ones(4, Mode::Exact), SeqPrefix::ones(4, Mode::Exact),
                  SeqPrefix(te));
    CHECK(forward_transform(q, SeqPrefix::ones(4, Mode::Exact)) ==
          SeqPrefix::ones(4, Mode::Exact));
    // and e_1 picks up the weight difference t_1 - t_0 pattern
    SeqPrefix fe1 = forward_transform(q, SeqPrefix::unit(4, 1, Mode::Exact));
    CHECK(fe1[0].is_zero());
    CHECK(fe1[1] == Scalar::exact(2));   // t_1 x_1 difference at the diagonal
    CHECK(fe1[2] == Scalar::exact(-1));  // (t_1 - t_2) after the mean step
    CHECK(fe1[3] == Scalar::exact(-1));
}

TEST_CASE("inverse: unit examples") {
    ParamTriple p = ones_params(4);
    CHECK(inverse_transform(p, SeqPrefix::unit(4, 0, Mode::Exact)) ==
          SeqPrefix::unit(4, 0, Mode::Exact));
    std::mt19937_64 rng(47);
    ParamTriple q = rand_params(rng, 4);
    CHECK(inverse_transform(q, SeqPrefix::zeros(4, Mode::Exact)) ==
          SeqPrefix::zeros(4, Mode::Exact));
}

TEST_CASE("round trips are exact") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        ParamTriple p = rand_params(rng, 16);
        SeqPrefix x = rand_prefix(rng, 16);
        CHECK(inverse_transform(p, forward_transform(p, x)) == x);
        SeqPrefix y = rand_prefix(rng, 16);
        CHECK(forward_transform(p, inverse_transform(p, y)) == y);
    }

    PresetArgs half;
    half.alpha = Scalar::exact(1, 2);
    ParamTriple eu = preset(PresetName::Euler, 8, Mode::Exact, half);
    for (int rep = 0; rep < 5; ++rep) {
        SeqPrefix x = rand_prefix(rng, 8);
        CHECK(inverse_transform(eu, forward_transform(eu, x)) == x);
    }
}

TEST_CASE("space_norm: unit values and preservation") {
    ParamTriple p = ones_params(4);
    CHECK(space_norm(p, SeqPrefix::unit(4, 0, Mode::Exact)) == Scalar::exact(1));
    CHECK(space_norm(p, SeqPrefix::zeros(4, Mode::Exact)).is_zero());

    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 10; ++rep) {
        ParamTriple q = rand_params(rng, 12);
        SeqPrefix y = rand_prefix(rng, 12);
        CHECK(space_norm(q, inverse_transform(q, y)) == y.sup_abs());
    }
}

TEST_CASE("space_norm: norm axioms at truncation") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 10; ++rep) {
        ParamTriple p = rand_params(rng, 10);
        SeqPrefix x = rand_prefix(rng, 10), y = rand_prefix(rng, 10);
        Scalar c = rand_rational(rng);
        CHECK(space_norm(p, scale(c, x)) == c.abs() * space_norm(p, x));
        CHECK(space_norm(p, add(x, y)) <= space_norm(p, x) + space_norm(p, y));
    }
}
