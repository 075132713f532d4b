#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "cfinite/catalan.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/polynomial.hpp"
#include "cfinite/powersum.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace cfinite;

namespace {

using Q = ExactRational;

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kPsi = (1 - std::sqrt(5.0)) / 2;

PowerSumTerm numeric_term(std::vector<Complex> poly, Complex root) { return PowerSumTerm{std::move(poly), root, {}, {}}; }

PowerSumTerm exact_term(const Polynomial& p, const Q& root) {
    std::vector<Complex> poly;
    for (const auto& c : p.coefficients()) {
        poly.emplace_back(c.get_d());
    }
    return PowerSumTerm{poly, Complex(root.get_d()), p, root};
}

double factorial(std::size_t l) {
    double f = 1;
    for (std::size_t i = 2; i <= l; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

// Product of (x - r)^m as a polynomial with rational roots.
Polynomial from_roots(const std::vector<std::pair<long, unsigned>>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& [r, m] : roots) {
        for (unsigned i = 0; i < m; ++i) {
            p *= Polynomial::linear(1, -r);
        }
    }
    return p;
}

RationalRecurrence recurrence_from_charpoly(const Polynomial& p) {
    std::vector<Q> a;
    for (int j = 0; j < p.degree(); ++j) {
        a.push_back(-p.coefficient(static_cast<std::size_t>(j)));
    }
    return rational_recurrence(a);
}

} // namespace

TEST_SUITE("polynomial") {
    TEST_CASE("arithmetic and printing") {
        const Polynomial p{-1, -1, 1};
        CHECK(p.degree() == 2);
        CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
        CHECK(p.to_string() == "-1 - x + x^2");
        CHECK(Polynomial{0, 0, 6}.to_string() == "6*x^2");
        CHECK(p(Q(2)) == 1);
        CHECK(p.derivative() == Polynomial{-1, 2});
        const auto [q, r] = divmod(Polynomial{-1, 0, 0, 1}, Polynomial{-1, 1});
        CHECK(q == Polynomial{1, 1, 1});
        CHECK(r.is_zero());
        CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 2, 1}) == Polynomial{1, 1});
        CHECK(pow(Polynomial{1, 1}, 3) == Polynomial{1, 3, 3, 1});
        CHECK(Polynomial{2, 4}.monic() == Polynomial::linear(1, make_rational(1, 2)));
        CHECK(Polynomial(std::vector<Q>{make_rational(1, 2), make_rational(1, 3)}).primitive_integer_coefficients() ==
              std::vector<ExactInteger>{3, 2});
    }

    TEST_CASE("squarefree decomposition") {
        const auto p = from_roots({{1, 2}, {-3, 1}, {2, 3}});
        const auto parts = squarefree_decomposition(p);
        Polynomial back = Polynomial::constant(1);
        for (const auto& [f, m] : parts) {
            back *= pow(f, m);
        }
        CHECK(back == p.monic());
    }

    TEST_CASE("falling factorials") {
        CHECK(falling_factorial(0) == Polynomial{1});
        CHECK(falling_factorial(2) == Polynomial{0, -1, 1});
        CHECK(falling_factorial(3)(Q(5)) == 60);
        for (std::size_t k = 0; k < 20; ++k) {
            REQUIRE(falling_factorial(k + 1) == falling_factorial(k) * Polynomial::linear(1, -static_cast<long>(k)));
            REQUIRE(falling_factorial(k).degree() == static_cast<int>(k));
            REQUIRE(falling_factorial(k).leading() == 1);
            for (long x = -6; x <= 6; ++x) {
                REQUIRE(falling_factorial(k)(Q(x)) == oracle::falling(x, k));
            }
        }
        const Polynomial base = Polynomial::linear(2, -2); // 2x - 2
        CHECK(falling_factorial(base, 2) == base * (base - Polynomial::constant(1)));
    }
}

TEST_SUITE("roots") {
    TEST_CASE("characteristic polynomials") {
        CHECK(characteristic_polynomial(rational_recurrence({1, 1})) == Polynomial{-1, -1, 1});
        CHECK(characteristic_polynomial(rational_recurrence({})) == Polynomial{1});
        CHECK(characteristic_polynomial(rational_recurrence({2})) == Polynomial{-2, 1});
    }

    TEST_CASE("documented roots") {
        const auto fib = polynomial_roots(Polynomial{-1, -1, 1});
        REQUIRE(fib.size() == 2);
        CHECK(std::abs(fib[0].value - Complex(kPhi)) < 1e-9);
        CHECK(std::abs(fib[1].value - Complex(kPsi)) < 1e-9);
        CHECK_FALSE(fib[0].exact);
        const auto lin = polynomial_roots(Polynomial{-2, 1});
        REQUIRE(lin.size() == 1);
        CHECK(*lin[0].exact == 2);
        CHECK(lin[0].multiplicity == 1);
        const auto dbl = polynomial_roots(Polynomial{1, -2, 1});
        REQUIRE(dbl.size() == 1);
        CHECK(*dbl[0].exact == 1);
        CHECK(dbl[0].multiplicity == 2);
        CHECK_THROWS_AS(polynomial_roots(Polynomial()), InvalidInput);
    }

    TEST_CASE("repeated irrational and complex roots") {
        // (x^2 - 2)^2 (x^2 + 1)
        const Polynomial p = pow(Polynomial{-2, 0, 1}, 2) * Polynomial{1, 0, 1};
        const auto roots = polynomial_roots(p);
        unsigned total = 0;
        for (const auto& r : roots) {
            total += r.multiplicity;
            CHECK(std::abs(p(r.value)) < 1e-9);
            const double mod = std::abs(r.value);
            if (std::abs(mod - std::sqrt(2.0)) < 1e-9) {
                CHECK(r.multiplicity == 2);
            } else {
                CHECK(mod == doctest::Approx(1.0));
                CHECK(r.multiplicity == 1);
            }
        }
        CHECK(total == 6);
    }

    TEST_CASE("property: rational roots are found exactly with multiplicity") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 100; ++t) {
            std::vector<std::pair<long, unsigned>> spec;
            std::vector<long> used;
            const int distinct = 1 + static_cast<int>(rng() % 3);
            while (static_cast<int>(spec.size()) < distinct) {
                const long r = static_cast<long>(rng() % 13) - 6;
                if (std::find(used.begin(), used.end(), r) != used.end()) {
                    continue;
                }
                used.push_back(r);
                spec.emplace_back(r, 1 + rng() % 2);
            }
            const auto roots = polynomial_roots(from_roots(spec) * Q(3));
            REQUIRE(roots.size() == spec.size());
            for (const auto& [r, m] : spec) {
                const auto it = std::find_if(roots.begin(), roots.end(),
                                             [&](const Root& x) { return x.exact && *x.exact == r; });
                REQUIRE(it != roots.end());
                REQUIRE(it->multiplicity == m);
            }
        }
    }
}

TEST_SUITE("binet") {
    TEST_CASE("fibonacci") {
        const auto ps = binet_form(rational_recurrence({1, 1}), {1, 1});
        REQUIRE(ps.size() == 2);
        CHECK_FALSE(ps.exact());
        CHECK(std::abs(ps.terms()[0].root - Complex(kPhi)) < 1e-9);
        CHECK(std::abs(ps.terms()[0].poly[0] - Complex(1 / std::sqrt(5.0))) < 1e-9);
        CHECK(std::abs(ps.terms()[1].poly[0] - Complex(-1 / std::sqrt(5.0))) < 1e-9);
        CHECK(std::abs(evaluate_powersum(ps, 10).approx - Complex(55)) < 1e-6);
        const auto fib = fibonacci(30);
        for (std::size_t n = 1; n <= 30; ++n) {
            REQUIRE(std::abs(evaluate_powersum(ps, n).approx - Complex(fib[n].get_d())) < 1e-6);
        }
    }

    TEST_CASE("order zero is the empty sum") {
        const auto ps = binet_form(rational_recurrence({}), {});
        CHECK(ps.empty());
        CHECK(evaluate_powersum(ps, 5).approx == Complex(0));
        CHECK(*evaluate_powersum(ps, 5).exact == 0);
        CHECK_THROWS_AS(dominant_part(ps), InvalidInput);
    }

    TEST_CASE("geometric") {
        const auto ps = binet_form(rational_recurrence({2}), {2});
        REQUIRE(ps.size() == 1);
        CHECK(*ps.terms()[0].exact_root == 2);
        CHECK(*ps.terms()[0].exact_poly == Polynomial{1});
        CHECK(*evaluate_powersum(ps, 7).exact == 128);
    }

    TEST_CASE("zero roots are dropped with a shifted start") {
        const auto ps = binet_form(rational_recurrence({0, 2}), {1, 1});
        CHECK(ps.valid_from() == 2);
        CHECK_FALSE(ps.notes().empty());
        REQUIRE(ps.size() == 1);
        const auto direct = iterate(rational_recurrence({0, 2}), {1, 1}, 20);
        for (std::size_t n = 2; n <= 20; ++n) {
            REQUIRE(*evaluate_powersum(ps, n).exact == direct[n]);
        }
        CHECK(*evaluate_powersum(ps, 1).exact != direct[1]);
    }

    TEST_CASE("wrong count of initial terms") {
        CHECK_THROWS_AS(binet_form(rational_recurrence({1, 1}), {1}), InvalidInput);
    }

    TEST_CASE("construction invariants") {
        CHECK_THROWS_AS(PowerSum({exact_term(Polynomial{1}, 0)}), InvalidInput);
        CHECK_THROWS_AS(PowerSum({exact_term(Polynomial{1}, 2), exact_term(Polynomial{3}, 2)}), InvalidInput);
        CHECK_THROWS_AS(PowerSum({exact_term(Polynomial(), 2)}), InvalidInput);
    }

    TEST_CASE("property: exact reconstruction for rational roots") {
        std::mt19937_64 rng(12);
        for (int t = 0; t < 100; ++t) {
            std::vector<std::pair<long, unsigned>> spec;
            unsigned order = 0;
            const unsigned target = 1 + rng() % 4;
            while (order < target) {
                long r = static_cast<long>(rng() % 9) - 4;
                bool dup = r == 0;
                for (const auto& s : spec) {
                    dup = dup || s.first == r;
                }
                if (dup) {
                    continue;
                }
                const unsigned m = std::min<unsigned>(target - order, 1 + rng() % 2);
                spec.emplace_back(r, m);
                order += m;
            }
            const auto rec = recurrence_from_charpoly(from_roots(spec));
            std::vector<Q> init(rec.order());
            for (auto& x : init) {
                x = static_cast<long>(rng() % 19) - 9;
            }
            const auto ps = binet_form(rec, init);
            REQUIRE(ps.exact());
            const auto direct = oracle::iterate_direct(rec.coefficients(), init, 30);
            for (std::size_t n = 1; n <= 30; ++n) {
                REQUIRE(*evaluate_powersum(ps, n).exact == direct[n - 1]);
            }
            for (const auto& term : ps.terms()) {
                const auto it = std::find_if(spec.begin(), spec.end(),
                                             [&](const auto& s) { return Q(s.first) == *term.exact_root; });
                REQUIRE(it != spec.end());
                REQUIRE(term.degree() < static_cast<int>(it->second));
            }
        }
    }

    TEST_CASE("property: numeric reconstruction for integer recurrences") {
        std::mt19937_64 rng(13);
        int checked = 0;
        for (int t = 0; t < 80; ++t) {
            const std::size_t k = 1 + rng() % 4;
            std::vector<Q> a(k), init(k);
            for (auto& x : a) {
                x = static_cast<long>(rng() % 5) - 2;
            }
            if (a.front() == 0) {
                continue;
            }
            for (auto& x : init) {
                x = static_cast<long>(rng() % 7) - 3;
            }
            PowerSum ps;
            try {
                ps = binet_form(rational_recurrence(a), init);
            } catch (const Error&) {
                continue; // nearly repeated numeric roots; not a reconstruction failure
            }
            const auto direct = oracle::iterate_direct(a, init, 20);
            for (std::size_t n = 1; n <= 20; ++n) {
                const double want = direct[n - 1].get_d();
                REQUIRE(std::abs(evaluate_powersum(ps, n).approx - Complex(want)) < 1e-6 * std::max(1.0, std::abs(want)));
            }
            ++checked;
        }
        CHECK(checked > 40);
    }
}

TEST_SUITE("dominant") {
    TEST_CASE("fibonacci") {
        const auto dp = dominant_part(binet_form(rational_recurrence({1, 1}), {1, 1}));
        CHECK(dp.s == 0);
        CHECK(std::abs(dp.alpha - kPhi) < 1e-9);
        REQUIRE(dp.l() == 1);
        CHECK(std::abs(dp.unit_terms[0].beta - Complex(1)) < 1e-12);
    }

    TEST_CASE("symmetric pair") {
        const PowerSum ps({exact_term(Polynomial{1}, 2), exact_term(Polynomial{1}, -2)});
        const auto dp = dominant_part(ps);
        CHECK(dp.s == 0);
        CHECK(dp.alpha == 2);
        REQUIRE(dp.l() == 2);
        CHECK(std::abs(std::abs(dp.unit_terms[0].beta - dp.unit_terms[1].beta) - 2) < 1e-12);
    }

    TEST_CASE("degree decides at equal modulus") {
        const PowerSum ps({numeric_term({0, 1}, Complex(3)), numeric_term({1}, Complex(0, 3))});
        const auto dp = dominant_part(ps);
        CHECK(dp.s == 1);
        CHECK(dp.alpha == doctest::Approx(3));
        CHECK(dp.l() == 1);
    }
}

TEST_SUITE("vandermonde") {
    TEST_CASE("documented values") {
        CHECK(vandermonde_modulus({Complex(1)}) == 1);
        CHECK(vandermonde_modulus({Complex(1), Complex(-1)}) == doctest::Approx(2));
        const std::vector<Complex> fourth{Complex(1), Complex(0, 1), Complex(-1), Complex(0, -1)};
        double direct = 1;
        for (std::size_t u = 0; u < 4; ++u) {
            for (std::size_t v = u + 1; v < 4; ++v) {
                direct *= std::abs(fourth[v] - fourth[u]);
            }
        }
        CHECK(vandermonde_modulus(fourth) == doctest::Approx(direct));
        CHECK(vandermonde_modulus(fourth) == doctest::Approx(16.0));
        CHECK_THROWS_AS(vandermonde_modulus({Complex(1), Complex(1)}), InvalidInput);
    }

    TEST_CASE("property: positive and rotation invariant") {
        std::mt19937_64 rng(14);
        std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
        for (int t = 0; t < 200; ++t) {
            std::vector<Complex> b(1 + rng() % 5);
            for (auto& x : b) {
                x = std::polar(1.0, angle(rng));
            }
            const double v = vandermonde_modulus(b, 1e-15);
            REQUIRE(v > 0);
            const Complex rot = std::polar(1.0, angle(rng));
            std::vector<Complex> r = b;
            for (auto& x : r) {
                x *= rot;
            }
            REQUIRE(vandermonde_modulus(r, 1e-15) == doctest::Approx(v).epsilon(1e-9));
        }
    }
}

TEST_SUITE("tail") {
    TEST_CASE("documented cases") {
        DominantPart one{0, 1, {UnitTerm{1, 1}}};
        for (std::size_t n : {1u, 5u, 1000u}) {
            const auto c = tail_lower_bound_check(one, n);
            CHECK(c.observed == doctest::Approx(1));
            CHECK(c.bound == doctest::Approx(1));
            CHECK(c.holds());
        }
        DominantPart two{0, 1, {UnitTerm{1, 1}, UnitTerm{1, -1}}};
        for (std::size_t n : {1u, 2u, 77u}) {
            const auto c = tail_lower_bound_check(two, n);
            CHECK(c.observed == doctest::Approx(2));
            CHECK(c.bound == doctest::Approx(1));
        }
    }

    TEST_CASE("property: inequality for random unit sums up to n = 10^4") {
        std::mt19937_64 rng(15);
        std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
        std::uniform_real_distribution<double> mag(0.1, 3);
        for (int t = 0; t < 100; ++t) {
            DominantPart dp;
            dp.alpha = 1;
            const std::size_t l = 1 + rng() % 4;
            for (std::size_t j = 0; j < l; ++j) {
                dp.unit_terms.push_back({std::polar(mag(rng), angle(rng)), std::polar(1.0, angle(rng))});
            }
            std::uniform_int_distribution<std::size_t> idx(1, 10000);
            for (int i = 0; i < 100; ++i) {
                const auto c = tail_lower_bound_check(dp, idx(rng));
                REQUIRE(c.holds());
            }
            // bound recomputed by hand
            double gmax = 0;
            std::vector<Complex> betas;
            for (const auto& u : dp.unit_terms) {
                gmax = std::max(gmax, std::abs(u.gamma));
                betas.push_back(u.beta);
            }
            double prod = 1;
            for (std::size_t u = 0; u < l; ++u) {
                for (std::size_t v = u + 1; v < l; ++v) {
                    prod *= std::abs(betas[v] - betas[u]);
                }
            }
            CHECK(tail_lower_bound_check(dp, 1).bound == doctest::Approx(prod * gmax / factorial(l)));
        }
    }
}

TEST_SUITE("asymptotics") {
    TEST_CASE("constant at N = 2000") {
        const double target = static_cast<double>(oracle::catalan_constant_limit());
        CHECK(target == doctest::Approx(1 / (4 * std::sqrt(std::numbers::pi))).epsilon(1e-10));
        const double c2000 = catalan_asymptotic_constant(2000).get_d();
        CHECK(std::abs(c2000 - target) / target < 0.005);
        CHECK(c2000 == doctest::Approx(static_cast<double>(oracle::catalan_ratio_lgamma(2000))).epsilon(1e-10));
    }

    TEST_CASE("convergence and positivity") {
        const double target = static_cast<double>(oracle::catalan_constant_limit());
        const double c200 = catalan_asymptotic_constant(200).get_d();
        const double c2000 = catalan_asymptotic_constant(2000).get_d();
        CHECK(std::abs(c200 - c2000) < std::abs(c200 - target));
        for (std::size_t N : {100u, 150u, 999u}) {
            CHECK(catalan_asymptotic_constant(N) > 0);
        }
        CHECK_THROWS_AS(catalan_asymptotic_constant(99), InvalidInput);
    }
}
