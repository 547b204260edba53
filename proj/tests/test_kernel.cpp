#include <doctest.h>

#include <random>

#include "enumera/bigint.hpp"
#include "enumera/matrix.hpp"
#include "enumera/poly.hpp"

using namespace enumera;

namespace {

const std::vector<std::string> kUV{"u", "v"};

SparsePoly one_plus(int u_coeff) {  // 1 + u_coeff*u + v
    SparsePoly p(kUV);
    p.add_term({0, 0}, 1);
    p.add_term({1, 0}, u_coeff);
    p.add_term({0, 1}, 1);
    return p;
}

Rat random_rat(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 41) - 20;
    long long den = 1 + static_cast<long long>(rng() % 20);
    return make_rat(num, den);
}

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rat q = make_rat(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact_div rejects remainders") {
    CHECK(exact_div(BigInt(84), BigInt(7)) == 12);
    CHECK_THROWS_AS(exact_div(BigInt(85), BigInt(7)), std::logic_error);
}

TEST_CASE("poly_mul basics") {
    SparsePoly one_v(kUV);  // 1 + v
    one_v.add_term({0, 0}, 1);
    one_v.add_term({0, 1}, 1);

    SparsePoly sq = poly_mul(one_v, one_v);
    CHECK(coefficient(sq, {0, 0}) == 1);
    CHECK(coefficient(sq, {0, 1}) == 2);
    CHECK(coefficient(sq, {0, 2}) == 1);
    CHECK(sq.terms().size() == 3);

    SparsePoly a = one_plus(4);
    CHECK(poly_mul(a, SparsePoly::constant(kUV, 1)) == a);

    SparsePoly mismatch(std::vector<std::string>{"x"});
    CHECK_THROWS_AS(poly_mul(a, mismatch), std::invalid_argument);
}

TEST_CASE("(1+2u+v)^2 expands term by term") {
    SparsePoly sq = poly_mul(one_plus(2), one_plus(2));
    // hand expansion: 1 + 4u + 2v + 4u^2 + 4uv + v^2
    CHECK(coefficient(sq, {0, 0}) == 1);
    CHECK(coefficient(sq, {1, 0}) == 4);
    CHECK(coefficient(sq, {0, 1}) == 2);
    CHECK(coefficient(sq, {2, 0}) == 4);
    CHECK(coefficient(sq, {1, 1}) == 4);
    CHECK(coefficient(sq, {0, 2}) == 1);
    CHECK(sq.terms().size() == 6);
}

TEST_CASE("poly_pow") {
    SparsePoly one_v(kUV);
    one_v.add_term({0, 0}, 1);
    one_v.add_term({0, 1}, 1);

    CHECK(poly_pow(one_v, 0) == SparsePoly::constant(kUV, 1));

    SparsePoly cube = poly_pow(one_v, 3);
    CHECK(coefficient(cube, {0, 0}) == 1);
    CHECK(coefficient(cube, {0, 1}) == 3);
    CHECK(coefficient(cube, {0, 2}) == 3);
    CHECK(coefficient(cube, {0, 3}) == 1);

    // oracle: repeated poly_mul, no squaring shortcut
    SparsePoly fold = SparsePoly::constant(kUV, 1);
    for (int i = 0; i < 5; ++i) fold = poly_mul(fold, one_plus(2));
    CHECK(coefficient(fold, {3, 2}) == 80);
    CHECK(poly_pow(one_plus(2), 5) == fold);

    CHECK_THROWS_AS(poly_pow(one_v, -1), std::invalid_argument);
}

TEST_CASE("poly_pow equals the fold of poly_mul on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        SparsePoly p(kUV);
        int nterms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < nterms; ++t)
            p.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)},
                       static_cast<long long>(rng() % 9) - 4);
        long long e = static_cast<long long>(rng() % 7);
        SparsePoly fold = SparsePoly::constant(kUV, 1);
        for (long long i = 0; i < e; ++i) fold = poly_mul(fold, p);
        CHECK(poly_pow(p, e) == fold);
    }
}

TEST_CASE("coefficient lookups") {
    SparsePoly p(kUV);  // 1 + 2v + v^2
    p.add_term({0, 0}, 1);
    p.add_term({0, 1}, 2);
    p.add_term({0, 2}, 1);
    CHECK(coefficient(p, {0, 1}) == 2);
    CHECK(coefficient(p, {3, 0}) == 0);
    CHECK_THROWS_AS(coefficient(p, {0}), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term({0, -1}, 1), std::invalid_argument);
}

TEST_CASE("determinants") {
    RatMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(det(id) == Rat(1));

    RatMatrix dep(4, 4);
    long long rows[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) dep.at(i, j) = rows[i][j];
    CHECK(det(dep) == Rat(0));

    RatMatrix rect(3, 4);
    CHECK_THROWS_AS(det(rect), std::invalid_argument);

    RatMatrix frac(2, 2);
    frac.at(0, 0) = make_rat(1, 2);
    frac.at(0, 1) = make_rat(1, 3);
    frac.at(1, 0) = make_rat(1, 5);
    frac.at(1, 1) = make_rat(1, 7);
    CHECK(det(frac) == make_rat(1, 14) - make_rat(1, 15));
}

TEST_CASE("rank") {
    RatMatrix m(3, 4);
    long long rows[3][4] = {{1, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
    CHECK(rank(m) == 2);
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
        RatMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = random_rat(rng);
        size_t base = rank(m);

        RatMatrix shuffled(r, c);
        std::vector<size_t> order(r);
        for (size_t i = 0; i < r; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (size_t i = 0; i < r; ++i) {
            Rat scale = 0;
            while (scale == 0) scale = random_rat(rng);
            for (size_t j = 0; j < c; ++j) shuffled.at(i, j) = scale * m.at(order[i], j);
        }
        CHECK(rank(shuffled) == base);
    }
}

TEST_CASE("determinant of proportional rows is zero") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        RatMatrix m(3, 3);
        for (size_t j = 0; j < 3; ++j) {
            m.at(0, j) = random_rat(rng);
            m.at(2, j) = random_rat(rng);
        }
        Rat scale = random_rat(rng);
        for (size_t j = 0; j < 3; ++j) m.at(1, j) = scale * m.at(0, j);
        CHECK(det(m) == Rat(0));
    }
}
