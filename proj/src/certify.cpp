#include "cfinite/certify.hpp"

#include "cfinite/catalan.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/powersum.hpp"
#include "cfinite/series.hpp"

#include <algorithm>
#include <optional>

namespace cfinite {

std::string to_string(Method m) {
    switch (m) {
    case Method::parity:
        return "parity";
    case Method::polynomial:
        return "polynomial";
    case Method::hankel:
        return "hankel";
    case Method::gf:
        return "gf";
    }
    return "unknown";
}

Method parse_method(const std::string& name) {
    if (name == "parity") {
        return Method::parity;
    }
    if (name == "poly" || name == "polynomial") {
        return Method::polynomial;
    }
    if (name == "hankel") {
        return Method::hankel;
    }
    if (name == "gf") {
        return Method::gf;
    }
    throw InvalidInput("unknown refutation method '" + name + "'");
}

ParityCertificate refute_by_parity(const RationalRecurrence& candidate, std::size_t exact_cap) {
    const IntegerRecurrenceVector v = normalize_coprime(candidate);
    const std::size_t k = v.order();
    ParityCertificate c;
    c.coprime_vector = v.entries();
    std::size_t l = 0;
    // A coprime tuple has an odd entry.
    while (mpz_even_p(c.coprime_vector[l].get_mpz_t())) {
        ++l;
    }
    c.odd_index = l;
    c.exponent = parity_window_exponent(k);
    c.window_start = (std::size_t{1} << c.exponent) - l;
    const std::size_t n = c.window_start;
    for (std::size_t j = 0; j <= k; ++j) {
        c.parity_table.push_back(mpz_odd_p(c.coprime_vector[j].get_mpz_t()) && catalan_is_odd(n + j));
    }
    if (std::count(c.parity_table.begin(), c.parity_table.end(), true) != 1) {
        throw InternalError("parity window does not isolate one odd summand");
    }
    if (n + k <= exact_cap) {
        ExactInteger r = 0;
        for (std::size_t j = 0; j <= k; ++j) {
            r += c.coprime_vector[j] * catalan_closed(n + j);
        }
        c.residual = std::move(r);
    }
    return c;
}

PolynomialCertificate refute_by_polynomial(const RationalRecurrence& candidate) {
    const std::size_t k = candidate.order();
    const auto& a = candidate.coefficients();
    const Polynomial x = Polynomial::x();
    auto shifted = [&x](long c) { return x + Polynomial::constant(c); };

    Polynomial p;
    for (std::size_t j = 0; j <= k; ++j) {
        const ExactRational aj = j < k ? a[j] : ExactRational(-1);
        // (x+k)_{k+1} / (x+j): the factors x+i for i in 0..k except i = j.
        Polynomial head = Polynomial::constant(1);
        for (std::size_t i = 0; i <= k; ++i) {
            if (i != j) {
                head *= shifted(static_cast<long>(i));
            }
        }
        const Polynomial mid = falling_factorial(shifted(static_cast<long>(k) - 1), k - j);
        const Polynomial tail =
            falling_factorial(Polynomial::linear(2, 2 * static_cast<long>(j) - 2), 2 * j);
        p += aj * (head * mid * mid * tail);
    }

    PolynomialCertificate c;
    c.order = k;
    c.coefficients = a;
    c.value_at_minus_order = p(ExactRational(-static_cast<long>(k)));
    if (c.value_at_minus_order != ExactRational(polynomial_value_at_minus_order(k))) {
        throw InternalError("p(-k) differs from -(-1)_k (-2)_{2k}");
    }
    std::optional<std::size_t> witness;
    for (std::size_t n = 1; n <= 3 * k + 1; ++n) {
        if (p(ExactRational(static_cast<unsigned long>(n))) != 0) {
            witness = n;
            break;
        }
    }
    if (!witness) {
        throw InternalError("nonzero polynomial of degree <= 3k vanished on 3k + 1 points");
    }
    const std::size_t n = *witness;
    ExactRational residual = -ExactRational(catalan_closed(n + k));
    for (std::size_t j = 0; j < k; ++j) {
        residual += a[j] * ExactRational(catalan_closed(n + j));
    }
    if (residual == 0) {
        throw InternalError("zero residual at a point where the clearing polynomial is nonzero");
    }
    ExactInteger rising = 1, f, f2;
    for (std::size_t i = 0; i <= k; ++i) {
        rising *= static_cast<unsigned long>(n + i);
    }
    mpz_fac_ui(f.get_mpz_t(), n + k - 1);
    mpz_fac_ui(f2.get_mpz_t(), 2 * n - 2);
    if (p(ExactRational(static_cast<unsigned long>(n))) != residual * make_rational(rising * f * f, f2)) {
        throw InternalError("clearing identity fails at the witness index");
    }
    c.polynomial = std::move(p);
    c.witness_index = n;
    c.residual = std::move(residual);
    return c;
}

HankelCertificate refute_by_hankel(std::size_t max_order, Execution exec) {
    // Room for a few offsets per order beyond the minimum 2K + 1 terms.
    const Sequence catalan = catalan_holonomic(4 * max_order + 4);
    const auto found = hankel_witnesses(catalan, max_order, exec);
    HankelCertificate c;
    c.order_bound = max_order;
    for (const auto& w : found) {
        if (!w) {
            throw InternalError("no nonsingular Catalan window at some order");
        }
        c.witnesses.push_back(*w);
    }
    return c;
}

GfMismatchCertificate refute_by_gf(const RationalRecurrence& candidate) {
    const std::size_t k = candidate.order();
    std::vector<ExactRational> initial;
    for (std::size_t n = 1; n <= k; ++n) {
        initial.emplace_back(catalan_closed(n));
    }
    const RationalFunction rf = rational_gf(candidate, initial);
    constexpr std::size_t kMaxScan = std::size_t{1} << 14;
    for (std::size_t N = std::max<std::size_t>(3 * k + 10, 20); N <= kMaxScan; N *= 2) {
        const TruncatedSeries implied = expand_rational(rf, N);
        const TruncatedSeries catalan = catalan_gf(N);
        for (std::size_t i = 1; i <= N; ++i) {
            if (implied[i] != catalan[i]) {
                return GfMismatchCertificate{k, candidate.coefficients(), rf.numerator(), rf.denominator(),
                                             i, implied[i], catalan[i]};
            }
        }
    }
    throw ResourceLimit("generating function agrees with C(x) up to x^" + std::to_string(kMaxScan));
}

Certificate refute(const RationalRecurrence& candidate, Method method, std::size_t exact_cap) {
    switch (method) {
    case Method::parity:
        return refute_by_parity(candidate, exact_cap);
    case Method::polynomial:
        return refute_by_polynomial(candidate);
    case Method::hankel:
        return refute_by_hankel(candidate.order(), Execution::serial);
    case Method::gf:
        return refute_by_gf(candidate);
    }
    throw InvalidInput("unknown method");
}

RefutationBundle refute_all(const RationalRecurrence& candidate, std::size_t exact_cap, Execution exec) {
    std::optional<Certificate> slots[4];
    if (exec == Execution::parallel) {
#if CFINITE_USE_OPENMP
        // Exceptions must not escape a parallel region; collect and rethrow.
        std::exception_ptr errors[4];
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < 4; ++i) {
            try {
                slots[i] = refute(candidate, kAllMethods[i], exact_cap);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
        for (auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
#else
        exec = Execution::serial;
#endif
    }
    if (exec == Execution::serial) {
        for (int i = 0; i < 4; ++i) {
            slots[i] = refute(candidate, kAllMethods[i], exact_cap);
        }
    }
    RefutationBundle bundle{candidate, {}};
    for (auto& s : slots) {
        bundle.certificates.push_back(std::move(*s));
    }
    return bundle;
}

std::vector<RefutationBundle> refute_sweep(const std::vector<RationalRecurrence>& candidates, std::size_t exact_cap,
                                           Execution exec) {
    std::vector<std::optional<RefutationBundle>> out(candidates.size());
    const auto count = static_cast<std::int64_t>(candidates.size());
    if (exec == Execution::parallel) {
#if CFINITE_USE_OPENMP
        std::vector<std::exception_ptr> errors(candidates.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                out[i] = refute_all(candidates[i], exact_cap, Execution::serial);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
        for (auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
#else
        exec = Execution::serial;
#endif
    }
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            out[i] = refute_all(candidates[i], exact_cap, Execution::serial);
        }
    }
    std::vector<RefutationBundle> bundles;
    bundles.reserve(out.size());
    for (auto& b : out) {
        bundles.push_back(std::move(*b));
    }
    return bundles;
}

Validation validate(const RefutationBundle& bundle) {
    for (const auto& c : bundle.certificates) {
        if (auto v = validate(c, &bundle.candidate); !v) {
            return Validation::fail(certificate_kind(c) + ": " + v.reason);
        }
    }
    return Validation::ok();
}

} // namespace cfinite
