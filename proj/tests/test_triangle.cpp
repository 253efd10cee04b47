#include "doctest.h"
#include "seqspace/triangle.hpp"
#include "test_support.hpp"

#include <random>
#include <stdexcept>

using namespace seqspace;
using namespace testsupport;

namespace {

Triangle delta(std::size_t n) {
    return Triangle::build(
        n,
        [](std::size_t row, std::size_t k) {
            if (k == row) return Scalar::one(Mode::Exact);
            if (k + 1 == row) return -Scalar::one(Mode::Exact);
            return Scalar::zero(Mode::Exact);
        },
        "Delta");
}

SeqPrefix ints(std::initializer_list<long> v) {
    std::vector<Scalar> e;
    for (long x : v) e.push_back(Scalar::exact(x));
    return SeqPrefix(std::move(e));
}

Triangle rand_triangle(std::mt19937_64& rng, std::size_t n) {
    return Triangle::build(n, [&](std::size_t row, std::size_t k) {
        return row == k ? rand_rational(rng, true) : rand_rational(rng);
    });
}

}  // namespace

TEST_CASE("apply: identity and difference examples") {
    CHECK(apply(Triangle::identity(3, Mode::Exact), ints({5, 7, 9})) == ints({5, 7, 9}));
    CHECK(apply(delta(3), ints({1, 1, 1})) == ints({1, 0, 0}));
    CHECK(apply(delta(4), ints({1, 3, 6, 10})) == ints({1, 2, 3, 4}));
}

TEST_CASE("apply: length and mode mismatches") {
    CHECK_THROWS_AS(apply(delta(4), ints({1, 2})), std::invalid_argument);
    SeqPrefix fx(std::vector<Scalar>{Scalar::real(1.0), Scalar::real(2.0), Scalar::real(3.0)});
    CHECK_THROWS_AS(apply(delta(3), fx), std::invalid_argument);
}

TEST_CASE("product: inverse pair and identity") {
    Triangle sums = Triangle::build(4, [](std::size_t, std::size_t) {
        return Scalar::one(Mode::Exact);
    });  // partial-sum triangle
    CHECK(product(delta(4), sums) == Triangle::identity(4, Mode::Exact));

    std::mt19937_64 rng(11);
    Triangle t = rand_triangle(rng, 5);
    CHECK(product(Triangle::identity(5, Mode::Exact), t) == t);

    CHECK_THROWS_AS(product(delta(3), delta(4)), std::invalid_argument);
}

TEST_CASE("invert: telescoping, diagonal, Toeplitz examples") {
    Triangle inv_delta = invert(delta(4));
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(inv_delta.entry(n, k) == Scalar::one(Mode::Exact));

    Triangle diag = Triangle::build(3, [](std::size_t n, std::size_t k) {
        if (n != k) return Scalar::zero(Mode::Exact);
        return Scalar::exact(1L << (n + 1));
    });
    Triangle diag_inv = invert(diag);
    CHECK(diag_inv.entry(0, 0) == Scalar::exact(1, 2));
    CHECK(diag_inv.entry(1, 1) == Scalar::exact(1, 4));
    CHECK(diag_inv.entry(2, 2) == Scalar::exact(1, 8));
    CHECK(diag_inv.entry(2, 0).is_zero());

    // Toeplitz with first column (1, 2, 1, 0): the inverse has first column
    // (1, -2, 3, -4).
    std::vector<long> col = {1, 2, 1, 0};
    Triangle toep = Triangle::build(4, [&](std::size_t n, std::size_t k) {
        return Scalar::exact(col[n - k]);
    });
    Triangle toep_inv = invert(toep);
    CHECK(toep_inv.entry(0, 0) == Scalar::exact(1));
    CHECK(toep_inv.entry(1, 0) == Scalar::exact(-2));
    CHECK(toep_inv.entry(2, 0) == Scalar::exact(3));
    CHECK(toep_inv.entry(3, 0) == Scalar::exact(-4));
}

TEST_CASE("invert requires exact mode and a nonzero diagonal") {
    Triangle f = Triangle::build(2, [](std::size_t n, std::size_t k) {
        return n == k ? Scalar::real(1.0) : Scalar::real(0.0);
    });
    CHECK_THROWS_AS(invert(f), std::invalid_argument);

    // the triangle property is checked at construction, naming the row
    std::vector<Scalar> lower = {Scalar::exact(1), Scalar::exact(1), Scalar::zero(Mode::Exact)};
    CHECK_THROWS_WITH_AS(Triangle(LowerTable(2, lower)), doctest::Contains("row 1"),
                         std::invalid_argument);
}

TEST_CASE("property: two-sided inverse identity on random triangles") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 25; ++rep) {
        Triangle t = rand_triangle(rng, 6);
        Triangle inv = invert(t);
        CHECK(product(t, inv) == Triangle::identity(6, Mode::Exact));
        CHECK(product(inv, t) == Triangle::identity(6, Mode::Exact));
    }
}

TEST_CASE("property: apply is linear") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 25; ++rep) {
        Triangle t = rand_triangle(rng, 6);
        SeqPrefix x = rand_prefix(rng, 6), y = rand_prefix(rng, 6);
        Scalar a = rand_rational(rng), b = rand_rational(rng);
        SeqPrefix lhs = apply(t, add(scale(a, x), scale(b, y)));
        SeqPrefix rhs = add(scale(a, apply(t, x)), scale(b, apply(t, y)));
        CHECK(lhs.entries() == rhs.entries());
    }
}

TEST_CASE("property: product is associative") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 15; ++rep) {
        Triangle a = rand_triangle(rng, 8), b = rand_triangle(rng, 8), c = rand_triangle(rng, 8);
        CHECK(product(product(a, b), c) == product(a, product(b, c)));
    }
}

TEST_CASE("lower table rejects ragged storage and mixed modes") {
    CHECK_THROWS_AS(LowerTable(2, {Scalar::exact(1)}), std::invalid_argument);
    CHECK_THROWS_AS(LowerTable(1, {Scalar::exact(1), Scalar::exact(1)}), std::invalid_argument);
    std::vector<Scalar> mixed = {Scalar::exact(1), Scalar::real(1.0), Scalar::exact(1)};
    CHECK_THROWS_AS(LowerTable(2, mixed), std::invalid_argument);
}
