#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flip.hpp"
#include "oracles.hpp"

#include "cfinite/catalan.hpp"
#include "cfinite/certify.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/powersum.hpp"
#include "cfinite/serialize.hpp"
#include "cfinite/series.hpp"

#include <random>

using namespace cfinite;

namespace {

using Q = ExactRational;

Document bundle_document(const RefutationBundle& b) {
    Document d;
    d.command = "refute";
    d.candidate = b.candidate;
    d.certificates = b.certificates;
    return d;
}

} // namespace

TEST_SUITE("parity engine") {
    TEST_CASE("b(n+1) = 4 b(n)") {
        const auto c = refute_by_parity(rational_recurrence({4}));
        CHECK(c.coprime_vector == std::vector<ExactInteger>{4, -1});
        CHECK(c.odd_index == 1);
        CHECK(c.exponent == 2);
        CHECK(c.window_start == 3);
        CHECK(c.parity_table == std::vector<bool>{false, true});
        REQUIRE(c.residual);
        CHECK(*c.residual == 4 * 2 - 5);
        CHECK(validate(c).valid);
    }

    TEST_CASE("order zero") {
        const auto rec = rational_recurrence({});
        const auto c = refute_by_parity(rec);
        CHECK(c.coprime_vector == std::vector<ExactInteger>{-1});
        CHECK(c.odd_index == 0);
        CHECK(c.parity_table == std::vector<bool>{true});
        CHECK(c.window_start == (std::size_t{1} << c.exponent));
        CHECK(*c.residual == -catalan_closed(c.window_start));
        CHECK(validate(c, &rec).valid);
    }

    TEST_CASE("order three with fractions") {
        const auto rec = rational_recurrence({make_rational(1, 3), 2, make_rational(5, 3)});
        const auto c = refute_by_parity(rec);
        CHECK(c.coprime_vector == std::vector<ExactInteger>{1, 6, 5, -3});
        CHECK(c.odd_index == 0);
        CHECK(c.exponent == 3);
        CHECK(c.window_start == 8);
        CHECK(c.parity_table == std::vector<bool>{true, false, false, false});
        const std::vector<long> ref = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
        CHECK(*c.residual == 1 * ref[7] + 6 * ref[8] + 5 * ref[9] - 3 * ref[10]);
        CHECK(validate(c, &rec).valid);
    }

    TEST_CASE("residual is omitted above the exact cap") {
        const auto rec = rational_recurrence({1, 2, 3});
        const auto c = refute_by_parity(rec, 5);
        CHECK_FALSE(c.residual);
        CHECK(validate(c, &rec).valid);
    }

    TEST_CASE("tampered fields are rejected") {
        const auto rec = rational_recurrence({4});
        const auto good = refute_by_parity(rec);
        auto c = good;
        c.odd_index = 0;
        CHECK_FALSE(validate(c).valid);
        c = good;
        c.exponent = 3;
        c.window_start = 7;
        CHECK_FALSE(validate(c).valid);
        c = good;
        c.parity_table = {true, true};
        CHECK_FALSE(validate(c).valid);
        c = good;
        c.coprime_vector = {8, -2};
        CHECK_FALSE(validate(c).valid);
        c = good;
        *c.residual = 5;
        CHECK_FALSE(validate(c).valid);
        const auto other = rational_recurrence({3});
        CHECK_FALSE(validate(good, &other).valid);
    }

    TEST_CASE("property: lone power of two and lone odd summand") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 200; ++t) {
            const auto rec = oracle::random_candidate(rng);
            const auto c = refute_by_parity(rec);
            const std::size_t k = rec.order();
            REQUIRE(c.parity_table.size() == k + 1);
            std::size_t powers = 0, odd = 0;
            for (std::size_t j = 0; j <= k; ++j) {
                powers += is_power_of_two(c.window_start + j);
                odd += c.parity_table[j];
            }
            REQUIRE(powers == 1);
            REQUIRE(odd == 1);
            REQUIRE(c.parity_table[c.odd_index]);
            REQUIRE(is_power_of_two(c.window_start + c.odd_index));
            REQUIRE(validate(c, &rec).valid);
            if (c.residual) {
                REQUIRE(mpz_odd_p(c.residual->get_mpz_t()));
            }
        }
    }
}

TEST_SUITE("polynomial engine") {
    TEST_CASE("b(n+1) = 4 b(n) by hand") {
        // p(x) = 4 (x+1) x^2 - 2 x^2 (2x - 1) = 6 x^2
        const Polynomial x = Polynomial::x();
        const Polynomial by_hand = Q(4) * (x + Polynomial{1}) * x * x - Q(2) * x * x * (Q(2) * x - Polynomial{1});
        CHECK(by_hand == Polynomial{0, 0, 6});
        const auto c = refute_by_polynomial(rational_recurrence({4}));
        CHECK(c.polynomial == by_hand);
        CHECK(c.value_at_minus_order == 6);
        CHECK(c.witness_index == 1);
        CHECK(c.residual == 3);
        CHECK(validate(c).valid);
    }

    TEST_CASE("closed form of p(-k)") {
        CHECK(polynomial_value_at_minus_order(1) == 6);
        CHECK(polynomial_value_at_minus_order(2) == -240);
        for (std::size_t k = 0; k <= 8; ++k) {
            const ExactInteger expected = -oracle::falling(-1, k) * oracle::falling(-2, 2 * k);
            REQUIRE(polynomial_value_at_minus_order(k) == expected);
        }
        std::mt19937_64 rng(32);
        for (int t = 0; t < 20; ++t) {
            const auto c = refute_by_polynomial(rational_recurrence({oracle::random_rational(rng), oracle::random_rational(rng)}));
            REQUIRE(c.value_at_minus_order == -240);
        }
    }

    TEST_CASE("each summand has degree exactly 3k") {
        // ((x+k)_{k+1}/(x+j)) ((x+k-1)_{k-j})^2 (2x+2j-2)_{2j}
        for (std::size_t k = 1; k <= 5; ++k) {
            for (std::size_t j = 0; j <= k; ++j) {
                Polynomial s = Polynomial::constant(1);
                for (std::size_t i = 0; i <= k; ++i) {
                    if (i != j) {
                        s *= Polynomial::linear(1, static_cast<long>(i));
                    }
                }
                const Polynomial f = falling_factorial(Polynomial::linear(1, static_cast<long>(k) - 1), k - j);
                s *= f * f;
                s *= falling_factorial(Polynomial::linear(2, 2 * static_cast<long>(j) - 2), 2 * j);
                REQUIRE(s.degree() == static_cast<int>(3 * k));
            }
        }
    }

    TEST_CASE("order zero") {
        const auto c = refute_by_polynomial(rational_recurrence({}));
        CHECK(c.polynomial == Polynomial{-1});
        CHECK(c.value_at_minus_order == -1);
        CHECK(c.witness_index == 1);
        CHECK(c.residual == -1);
        CHECK(validate(c).valid);
    }

    TEST_CASE("tampered fields are rejected") {
        const auto good = refute_by_polynomial(rational_recurrence({4}));
        auto c = good;
        c.polynomial = Polynomial{0, 0, 7};
        CHECK_FALSE(validate(c).valid);
        c = good;
        c.value_at_minus_order = 5;
        CHECK_FALSE(validate(c).valid);
        c = good;
        c.witness_index = 2;
        CHECK_FALSE(validate(c).valid);
        c = good;
        c.residual = 2;
        CHECK_FALSE(validate(c).valid);
    }

    TEST_CASE("property: random candidates") {
        std::mt19937_64 rng(33);
        for (int t = 0; t < 100; ++t) {
            const auto rec = oracle::random_candidate(rng);
            const std::size_t k = rec.order();
            const auto c = refute_by_polynomial(rec);
            REQUIRE_FALSE(c.polynomial.is_zero());
            REQUIRE(c.polynomial.degree() <= static_cast<int>(3 * k));
            REQUIRE(c.value_at_minus_order == polynomial_value_at_minus_order(k));
            REQUIRE(c.polynomial(Q(-static_cast<long>(k))) == c.value_at_minus_order);
            REQUIRE(c.witness_index >= 1);
            REQUIRE(c.witness_index <= 3 * k + 1);
            REQUIRE(c.residual != 0);
            // p(n) = residual (n+k)_{k+1} ((n+k-1)!)^2 / (2n-2)!
            const long n = static_cast<long>(c.witness_index);
            ExactInteger f1, f2;
            mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(n + static_cast<long>(k) - 1));
            mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(2 * n - 2));
            const Q multiplier = Q(oracle::falling(n + static_cast<long>(k), k + 1) * f1 * f1) / Q(f2);
            REQUIRE(c.polynomial(Q(n)) == c.residual * multiplier);
            REQUIRE(validate(c, &rec).valid);
        }
    }
}

TEST_SUITE("hankel engine") {
    TEST_CASE("documented bounds") {
        const auto c0 = refute_by_hankel(0);
        REQUIRE(c0.witnesses.size() == 1);
        CHECK(c0.witnesses[0].determinant == 1);
        const auto c1 = refute_by_hankel(1);
        CHECK(c1.witnesses[1].determinant == 1);
        const auto c10 = refute_by_hankel(10);
        REQUIRE(c10.witnesses.size() == 11);
        for (const auto& w : c10.witnesses) {
            CHECK(w.determinant != 0);
        }
        CHECK(validate(c10).valid);
        CHECK(refute_by_hankel(10, Execution::serial) == c10);
    }

    TEST_CASE("cofactor oracle for k <= 3") {
        const auto c = refute_by_hankel(3);
        const auto cat = catalan_holonomic(20);
        for (const auto& w : c.witnesses) {
            std::vector<std::vector<Q>> m(w.order + 1);
            for (std::size_t i = 0; i <= w.order; ++i) {
                for (std::size_t j = 0; j <= w.order; ++j) {
                    m[i].push_back(cat[w.offset + i + j]);
                }
            }
            REQUIRE(w.determinant == oracle::cofactor_determinant(m));
        }
    }

    TEST_CASE("tampering") {
        auto c = refute_by_hankel(3);
        c.witnesses[2].determinant = 2;
        CHECK_FALSE(validate(c).valid);
        c = refute_by_hankel(3);
        c.witnesses.pop_back();
        CHECK_FALSE(validate(c).valid);
    }
}

TEST_SUITE("gf engine") {
    TEST_CASE("b(n+1) = 4 b(n)") {
        const auto c = refute_by_gf(rational_recurrence({4}));
        CHECK(c.numerator == Polynomial{0, 1});
        CHECK(c.denominator == Polynomial{1, -4});
        CHECK(c.index == 2);
        CHECK(c.expansion_value == 4);
        CHECK(c.catalan_value == 1);
        CHECK(validate(c).valid);
    }

    TEST_CASE("order zero") {
        const auto c = refute_by_gf(rational_recurrence({}));
        CHECK(c.numerator.is_zero());
        CHECK(c.index == 1);
        CHECK(c.expansion_value == 0);
        CHECK(c.catalan_value == 1);
        CHECK(validate(c).valid);
    }

    TEST_CASE("guessing from ten terms yields no candidate") {
        CHECK_FALSE(guess_recurrence(catalan_holonomic(10), 4, 6));
    }

    TEST_CASE("property: genuine mismatch at the first differing index") {
        std::mt19937_64 rng(34);
        const auto cgf = catalan_gf(400);
        for (int t = 0; t < 100; ++t) {
            const auto rec = oracle::random_candidate(rng);
            const auto c = refute_by_gf(rec);
            REQUIRE(c.index <= 400);
            const auto s = expand_rational(c.numerator, c.denominator, c.index);
            for (std::size_t i = 1; i < c.index; ++i) {
                REQUIRE(s[i] == cgf[i]);
            }
            REQUIRE(s[c.index] == c.expansion_value);
            REQUIRE(cgf[c.index] == c.catalan_value);
            REQUIRE(c.expansion_value != c.catalan_value);
            REQUIRE(validate(c, &rec).valid);
        }
    }
}

TEST_SUITE("bundles") {
    TEST_CASE("refute_all order and determinism") {
        const auto rec = rational_recurrence({4});
        const auto b = refute_all(rec);
        REQUIRE(b.certificates.size() == 4);
        CHECK(certificate_kind(b.certificates[0]) == "parity");
        CHECK(certificate_kind(b.certificates[1]) == "polynomial");
        CHECK(certificate_kind(b.certificates[2]) == "hankel");
        CHECK(certificate_kind(b.certificates[3]) == "gf");
        CHECK(validate(b).valid);
        CHECK(b == refute_all(rec, kDefaultExactCap, Execution::serial));
        const auto zero = refute_all(rational_recurrence({}));
        CHECK(std::get<HankelCertificate>(zero.certificates[2]).order_bound == 0);
        CHECK(validate(zero).valid);
    }

    TEST_CASE("method names") {
        CHECK(parse_method("poly") == Method::polynomial);
        CHECK(parse_method("gf") == Method::gf);
        CHECK(to_string(Method::hankel) == "hankel");
        CHECK_THROWS_AS(parse_method("asymptotic"), InvalidInput);
    }

    TEST_CASE("sweep: serial equals parallel, everything validates") {
        std::mt19937_64 rng(35);
        std::vector<RationalRecurrence> cands;
        for (int t = 0; t < 40; ++t) {
            cands.push_back(oracle::random_candidate(rng));
        }
        const auto par = refute_sweep(cands);
        CHECK(par == refute_sweep(cands, kDefaultExactCap, Execution::serial));
        for (const auto& b : par) {
            REQUIRE(validate(b).valid);
        }
    }
}

TEST_SUITE("serialization") {
    TEST_CASE("text form of a small bundle") {
        const std::string text = serialize(bundle_document(refute_all(rational_recurrence({4}))));
        CHECK(text.rfind("schema cfinite-cert/1\ncommand refute\nstatus ok\ncandidate 4\nbegin parity\n", 0) == 0);
        CHECK(text.find("polynomial 0 0 6\n") != std::string::npos);
        CHECK(text.find("numerator 0 1\ndenominator 1 -4\n") != std::string::npos);
        CHECK(text.back() == '\n');
    }

    TEST_CASE("round trips are bit exact") {
        std::mt19937_64 rng(36);
        for (int t = 0; t < 40; ++t) {
            const auto rec = oracle::random_candidate(rng);
            const Document d = bundle_document(refute_all(rec));
            const std::string text = serialize(d);
            const Document back = parse_document(text);
            REQUIRE(back == d);
            REQUIRE(serialize(back) == text);
            REQUIRE(validate_document(text).valid);
        }
        Document plain;
        plain.command = "gf";
        plain.payload = {{"gf", "x/(1 - x - x^2)"}, {"note", ""}};
        CHECK(parse_document(serialize(plain)) == plain);
        ParityCertificate pc = refute_by_parity(rational_recurrence({1, 1, 1}), 3);
        Document one;
        one.command = "refute";
        one.certificates = {pc};
        CHECK(parse_document(serialize(one)) == one);
    }

    TEST_CASE("strict parsing") {
        const std::string text = serialize(bundle_document(refute_all(rational_recurrence({4}))));
        CHECK_THROWS_AS(parse_document(text.substr(0, text.size() - 1)), ParseError);
        CHECK_THROWS_AS(parse_document("schema cfinite-cert/2\n"), ParseError);
        std::string extra_space = text;
        extra_space.replace(extra_space.find("candidate 4"), 11, "candidate  4");
        CHECK_THROWS_AS(parse_document(extra_space), ParseError);
        std::string noncanon = text;
        noncanon.replace(noncanon.find("candidate 4"), 11, "candidate 8/2");
        CHECK_THROWS_AS(parse_document(noncanon), ParseError);
        CHECK_FALSE(validate_document("garbage").valid);
    }

    TEST_CASE("single flipped digits are caught (exhaustive, small bundles)") {
        for (const auto& a : std::vector<std::vector<Q>>{{}, {4}, {make_rational(1, 3), 2, make_rational(5, 3)}, {-1, 2}}) {
            const std::string text = serialize(bundle_document(refute_all(rational_recurrence(a))));
            const auto out = flip::exhaustive(text);
            CHECK(out.tried > 0);
            CHECK_MESSAGE(out.accepted == 0, out.first_accepted);
        }
    }

    TEST_CASE("single flipped digits are caught (every position, random bundles)") {
        std::mt19937_64 rng(37);
        for (int t = 0; t < 6; ++t) {
            const std::string text = serialize(bundle_document(refute_all(oracle::random_candidate(rng, 4))));
            const auto out = flip::each_position(text, rng);
            CHECK_MESSAGE(out.accepted == 0, out.first_accepted);
        }
    }
}
