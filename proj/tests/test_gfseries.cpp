#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "cfinite/catalan.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/series.hpp"

#include <random>

using namespace cfinite;

namespace {

using Q = ExactRational;

TruncatedSeries longs(const std::vector<long>& v) { return TruncatedSeries(std::vector<Q>(v.begin(), v.end())); }

// binom(1/2, n) (-4)^n from the falling product, term by term.
Q sqrt_coefficient(std::size_t n) {
    Q c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c *= Q(1, 2) - Q(static_cast<long>(i));
        c /= Q(static_cast<long>(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
        c *= -4;
    }
    return c;
}

} // namespace

TEST_SUITE("series") {
    TEST_CASE("documented products and sums") {
        CHECK(longs({1, 1, 0, 0, 0, 0}) * longs({1, -1, 0, 0, 0, 0}) == longs({1, 0, -1, 0, 0, 0}));
        const auto a = longs({3, 1, 4, 1, 5});
        CHECK(TruncatedSeries(4) + a == a);
        CHECK((a * longs({1, 0, 0})).order() == 2);
        CHECK((a + longs({1})).order() == 0);
        CHECK(a - a == TruncatedSeries(4));
        CHECK_THROWS_AS(a[5], IndexOutOfRange);
        CHECK_THROWS_AS(a.truncate(6), IndexOutOfRange);
    }

    TEST_CASE("convolution identity C^2 = C - x from index 2") {
        const std::size_t N = 60;
        const auto c = catalan_gf(N);
        const auto sq = c * c;
        for (std::size_t i = 2; i <= N; ++i) {
            REQUIRE(sq[i] == c[i]);
        }
        CHECK(sq[0] == 0);
        CHECK(sq[1] == 0);
        CHECK(c[1] == 1);
    }

    TEST_CASE("inverse") {
        const auto inv = longs({1, -1, 0, 0, 0}).inverse();
        CHECK(inv == longs({1, 1, 1, 1, 1}));
        CHECK_THROWS_AS(longs({0, 1}).inverse(), InvalidInput);
        std::mt19937_64 rng(21);
        for (int t = 0; t < 50; ++t) {
            std::vector<Q> v(8);
            for (auto& x : v) {
                x = oracle::random_rational(rng);
            }
            if (v[0] == 0) {
                v[0] = 1;
            }
            const TruncatedSeries s(v);
            REQUIRE(s * s.inverse() == TruncatedSeries(Polynomial::constant(1), 7));
        }
    }

    TEST_CASE("sqrt(1 - 4x)") {
        CHECK(sqrt_one_minus_4x(4) == longs({1, -2, -2, -4, -10}));
        CHECK(sqrt_one_minus_4x(0)[0] == 1);
        const auto s = sqrt_one_minus_4x(10);
        CHECK(s * s == TruncatedSeries(Polynomial{1, -4}, 10));
        const auto big = sqrt_one_minus_4x(60);
        for (std::size_t n = 0; n <= 60; ++n) {
            REQUIRE(big[n] == sqrt_coefficient(n));
            REQUIRE(is_integer(big[n]));
        }
    }

    TEST_CASE("catalan series") {
        const auto c = catalan_gf(12);
        CHECK(c[0] == 0);
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(c[n] == oracle::kReferenceCatalan[n - 1]);
        }
        const auto two_c_minus_1 = c * Q(2) - TruncatedSeries(Polynomial{1}, 12);
        CHECK((two_c_minus_1 * two_c_minus_1 + TruncatedSeries(Polynomial{-1, 4}, 12)).is_zero());
        CHECK_THROWS_AS(catalan_gf(0), InvalidInput);
    }

    TEST_CASE("series identities to order 500") {
        const std::size_t N = 500;
        const auto s = sqrt_one_minus_4x(N);
        CHECK(s * s == TruncatedSeries(Polynomial{1, -4}, N));
        const auto c = catalan_gf(N);
        const auto d = c * Q(2) - TruncatedSeries(Polynomial{1}, N);
        CHECK(d * d == TruncatedSeries(Polynomial{1, -4}, N));
        const auto lattice = oracle::catalan_lattice(N);
        for (std::size_t n = 1; n <= N; ++n) {
            REQUIRE(c[n] == Q(lattice[n - 1]));
        }
    }
}

TEST_SUITE("rational") {
    TEST_CASE("rational generating functions") {
        const auto fib = rational_gf(rational_recurrence({1, 1}), {1, 1});
        CHECK(fib.to_string() == "x/(1 - x - x^2)");
        CHECK(fib.numerator() == Polynomial{0, 1});
        CHECK(fib.denominator() == Polynomial{1, -1, -1});
        const auto zero = rational_gf(rational_recurrence({}), {});
        CHECK(zero.numerator().is_zero());
        CHECK(zero.denominator() == Polynomial{1});
        CHECK(zero.to_string() == "0");
        const auto geo = rational_gf(rational_recurrence({2}), {2});
        CHECK(geo.numerator() == Polynomial{0, 2});
        CHECK(geo.denominator() == Polynomial{1, -2});
        CHECK_THROWS_AS(rational_gf(rational_recurrence({2}), {}), InvalidInput);
    }

    TEST_CASE("normalization") {
        const RationalFunction rf(Polynomial{0, 2, 2}, Polynomial{2, 0, -2}); // 2x(1+x) / 2(1-x)(1+x)
        CHECK(rf.numerator() == Polynomial{0, 1});
        CHECK(rf.denominator() == Polynomial{1, -1});
        CHECK_THROWS_AS(RationalFunction(Polynomial{1}, Polynomial{0, 1}), InvalidInput);
    }

    TEST_CASE("expansion") {
        CHECK(expand_rational(Polynomial{1}, Polynomial{1, -1}, 5) == longs({1, 1, 1, 1, 1, 1}));
        CHECK(expand_rational(Polynomial{0, 1}, Polynomial{1, -1, -1}, 8) == longs({0, 1, 1, 2, 3, 5, 8, 13, 21}));
        CHECK(expand_rational(Polynomial{0, 2}, Polynomial{1, -2}, 4) == longs({0, 2, 4, 8, 16}));
        CHECK_THROWS_AS(expand_rational(Polynomial{1}, Polynomial{0, 1}, 4), InvalidInput);
    }

    TEST_CASE("property: round trip through the generating function") {
        std::mt19937_64 rng(22);
        for (int t = 0; t < 100; ++t) {
            const std::size_t k = rng() % 5;
            std::vector<Q> a(k), init(k);
            for (auto& x : a) {
                x = oracle::random_rational(rng);
            }
            for (auto& x : init) {
                x = oracle::random_rational(rng);
            }
            const std::size_t N = 3 * k + 10;
            const auto rf = rational_gf(rational_recurrence(a), init);
            REQUIRE(rf.denominator()(Q(0)) == 1);
            REQUIRE(gcd(rf.numerator(), rf.denominator()).degree() <= 0);
            const auto s = expand_rational(rf, N);
            const auto direct = oracle::iterate_direct(a, init, N);
            REQUIRE(s[0] == 0);
            for (std::size_t n = 1; n <= N; ++n) {
                REQUIRE(s[n] == direct[n - 1]);
            }
        }
    }
}

TEST_SUITE("pade") {
    TEST_CASE("documented reconstructions") {
        const auto f = pade_reconstruct(fibonacci(12), 1, 2);
        REQUIRE(f);
        CHECK(f->to_string() == "x/(1 - x - x^2)");
        CHECK(*f == rational_gf(rational_recurrence({1, 1}), {1, 1}));
        const auto ones = pade_reconstruct(Sequence("1", std::vector<ExactInteger>(10, 1)), 1, 1);
        REQUIRE(ones);
        CHECK(ones->numerator() == Polynomial{0, 1});
        CHECK(ones->denominator() == Polynomial{1, -1});
        CHECK_THROWS_AS(pade_reconstruct(fibonacci(3), 1, 2), InsufficientData);
    }

    TEST_CASE("catalan has no rational generating function of small degree") {
        const auto c = catalan_holonomic(30);
        for (std::size_t dp = 0; dp <= 8; ++dp) {
            for (std::size_t dq = 0; dq <= 8; ++dq) {
                REQUIRE_FALSE(pade_reconstruct(c, dp, dq));
            }
        }
    }

    TEST_CASE("property: agreement with the recurrence guesser") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 40; ++t) {
            const std::size_t order = rng() % 4;
            std::vector<Q> a(order), init(order);
            for (auto& x : a) {
                x = static_cast<long>(rng() % 7) - 3;
            }
            for (auto& x : init) {
                x = static_cast<long>(rng() % 7) - 3;
            }
            const Sequence seq("r", oracle::iterate_direct(a, init, 24));
            for (std::size_t k = 0; k <= 4; ++k) {
                const bool found = static_cast<bool>(guess_recurrence(seq, k, 2 * k + 4));
                const bool pade = static_cast<bool>(pade_reconstruct(seq, k, k));
                REQUIRE(found == pade);
            }
        }
    }
}

TEST_SUITE("parity of degrees") {
    TEST_CASE("documented verdicts") {
        const auto v = degree_parity_check(Polynomial{1, -2}, Polynomial{1});
        CHECK(v.lhs_degree == 1);
        CHECK(v.rhs_degree == 2);
        CHECK(v.lhs == Polynomial{1, -4});
        CHECK(v.rhs == Polynomial{1, -4, 4});
        CHECK(*v.first_difference == 2);
        CHECK(v.impossible);
        const auto w = degree_parity_check(Polynomial{1}, Polynomial{1});
        CHECK(w.lhs_degree == 1);
        CHECK(w.rhs_degree == 0);
        CHECK(w.impossible);
        CHECK_THROWS_AS(degree_parity_check(Polynomial(), Polynomial{1}), InvalidInput);
        CHECK_THROWS_AS(degree_parity_check(Polynomial{1}, Polynomial{0, 1}), InvalidInput);
    }

    TEST_CASE("property: odd never equals even") {
        std::mt19937_64 rng(24);
        for (int t = 0; t < 300; ++t) {
            std::vector<Q> a(1 + rng() % 7), b(1 + rng() % 7);
            for (auto& x : a) {
                x = oracle::random_rational(rng);
            }
            for (auto& x : b) {
                x = oracle::random_rational(rng);
            }
            a.back() = a.back() == 0 ? Q(1) : a.back();
            b.front() = b.front() == 0 ? Q(1) : b.front();
            const Polynomial pa(a), pb(b);
            const auto v = degree_parity_check(pa, pb);
            REQUIRE(v.impossible);
            REQUIRE(v.lhs_degree % 2 == 1);
            REQUIRE(v.rhs_degree % 2 == 0);
            REQUIRE(v.first_difference);
            REQUIRE(v.lhs.coefficient(*v.first_difference) != v.rhs.coefficient(*v.first_difference));
        }
    }
}
