#include "cfinite/certificate.hpp"

#include "cfinite/catalan.hpp"

#include <algorithm>

namespace cfinite {

std::string certificate_kind(const Certificate& c) {
    static const char* names[] = {"parity", "polynomial", "hankel", "gf"};
    return names[c.index()];
}

ExactInteger polynomial_value_at_minus_order(std::size_t k) {
    // (-1)_k = (-1)(-2)...(-k) and (-2)_{2k} = (-2)(-3)...(-2k-1)
    ExactInteger a = 1, b = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        a *= -static_cast<long>(i);
    }
    for (std::size_t i = 2; i <= 2 * k + 1; ++i) {
        b *= -static_cast<long>(i);
    }
    return -a * b;
}

unsigned parity_window_exponent(std::size_t k) {
    unsigned m = 1;
    while ((std::size_t{1} << (m - 1)) <= k) {
        ++m;
    }
    return m;
}

namespace {

// Catalan values for indices 0..count (index 0 is 0), from the closed form.
std::vector<ExactInteger> catalan_prefix(std::size_t count) {
    std::vector<ExactInteger> c(count + 1, ExactInteger(0));
    for (std::size_t n = 1; n <= count; ++n) {
        c[n] = catalan_closed(n);
    }
    return c;
}

bool coprime(const std::vector<ExactInteger>& v) {
    ExactInteger g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g == 1;
}

ExactInteger factorial(std::size_t n) {
    ExactInteger f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Fraction-free (Bareiss) integer determinant.
ExactInteger bareiss_determinant(std::vector<std::vector<ExactInteger>> m) {
    const std::size_t n = m.size();
    ExactInteger prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m[c][c] == 0) {
            std::size_t p = c + 1;
            while (p < n && m[p][c] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                ExactInteger v = m[i][j] * m[c][c] - m[i][c] * m[c][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

ExactInteger catalan_window_determinant(std::size_t k, std::size_t offset) {
    const auto c = catalan_prefix(offset + 2 * k);
    std::vector<std::vector<ExactInteger>> m(k + 1, std::vector<ExactInteger>(k + 1));
    for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j <= k; ++j) {
            m[i][j] = c[offset + i + j];
        }
    }
    return bareiss_determinant(std::move(m));
}

// The clearing polynomial rebuilt from linear factors:
// sum_j a_j * prod_{i!=j, 0<=i<=k} (x+i) * prod_{j<=i<k} (x+i)^2 * prod_{t<2j} (2x+2j-2-t)
Polynomial clearing_polynomial(const std::vector<ExactRational>& a_without_last) {
    const std::size_t k = a_without_last.size();
    Polynomial p;
    for (std::size_t j = 0; j <= k; ++j) {
        const ExactRational a = j < k ? a_without_last[j] : ExactRational(-1);
        Polynomial term = Polynomial::constant(a);
        for (std::size_t i = 0; i <= k; ++i) {
            if (i != j) {
                term *= Polynomial::linear(1, static_cast<long>(i));
            }
        }
        for (std::size_t i = j; i < k; ++i) {
            const Polynomial f = Polynomial::linear(1, static_cast<long>(i));
            term *= f * f;
        }
        for (std::size_t t = 0; t < 2 * j; ++t) {
            term *= Polynomial::linear(2, static_cast<long>(2 * j) - 2 - static_cast<long>(t));
        }
        p += term;
    }
    return p;
}

ExactRational catalan_residual(const std::vector<ExactRational>& a_without_last, std::size_t n,
                               const std::vector<ExactInteger>& c) {
    const std::size_t k = a_without_last.size();
    ExactRational r = -ExactRational(c[n + k]);
    for (std::size_t j = 0; j < k; ++j) {
        r += a_without_last[j] * ExactRational(c[n + j]);
    }
    return r;
}

Validation check_candidate_coefficients(const std::vector<ExactRational>& coeffs, const RationalRecurrence* cand) {
    if (cand && cand->coefficients() != coeffs) {
        return Validation::fail("certificate coefficients differ from the candidate recurrence");
    }
    return Validation::ok();
}

} // namespace

Validation validate(const ParityCertificate& c, const RationalRecurrence* candidate) {
    const auto& a = c.coprime_vector;
    if (a.empty()) {
        return Validation::fail("empty coprime vector");
    }
    const std::size_t k = a.size() - 1;
    if (a.back() >= 0) {
        return Validation::fail("last entry must be negative (normalized from a_k = -1)");
    }
    if (!coprime(a)) {
        return Validation::fail("entries are not coprime");
    }
    if (candidate) {
        if (candidate->order() != k) {
            return Validation::fail("order differs from the candidate");
        }
        // (a_0..a_k) must be a positive multiple of (a'_0..a'_{k-1}, -1).
        for (std::size_t j = 0; j < k; ++j) {
            if (ExactRational(a[j]) != -candidate->coefficients()[j] * ExactRational(a.back())) {
                return Validation::fail("coprime vector is not the candidate's relation");
            }
        }
    }
    std::size_t l = 0;
    while (l <= k && mpz_even_p(a[l].get_mpz_t())) {
        ++l;
    }
    if (l > k) {
        return Validation::fail("no odd coefficient");
    }
    if (c.odd_index != l) {
        return Validation::fail("odd_index is not the least odd coefficient");
    }
    if (c.exponent != parity_window_exponent(k)) {
        return Validation::fail("exponent is not the least m with 2^(m-1) > k");
    }
    if (c.exponent >= 63) {
        return Validation::fail("exponent out of range");
    }
    const std::size_t power = std::size_t{1} << c.exponent;
    if (c.window_start + l != power || c.window_start < 1) {
        return Validation::fail("window_start + odd_index is not 2^exponent");
    }
    const std::size_t n = c.window_start;
    for (std::size_t j = 0; j <= k; ++j) {
        if (is_power_of_two(n + j) != (j == l)) {
            return Validation::fail("window does not contain exactly one power of two at odd_index");
        }
    }
    if (c.parity_table.size() != k + 1) {
        return Validation::fail("parity table length differs from k + 1");
    }
    std::size_t odd_count = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        const bool c_odd = catalan_is_odd(n + j);
        if (c_odd != catalan_is_odd_recursive(n + j)) {
            return Validation::fail("parity characterizations disagree");
        }
        const bool summand_odd = mpz_odd_p(a[j].get_mpz_t()) && c_odd;
        if (summand_odd != c.parity_table[j]) {
            return Validation::fail("parity table entry " + std::to_string(j) + " is wrong");
        }
        odd_count += summand_odd ? 1 : 0;
    }
    if (odd_count != 1 || !c.parity_table[l]) {
        return Validation::fail("parity table does not have exactly one odd summand at odd_index");
    }
    if (c.residual) {
        ExactInteger r = 0;
        for (std::size_t j = 0; j <= k; ++j) {
            r += a[j] * catalan_closed(n + j);
        }
        if (r != *c.residual) {
            return Validation::fail("residual does not match the exact sum");
        }
        if (mpz_even_p(r.get_mpz_t())) {
            return Validation::fail("exact residual is even, contradicting the parity table");
        }
    }
    return Validation::ok();
}

Validation validate(const PolynomialCertificate& c, const RationalRecurrence* candidate) {
    const std::size_t k = c.order;
    if (c.coefficients.size() != k) {
        return Validation::fail("coefficient count differs from order");
    }
    if (auto v = check_candidate_coefficients(c.coefficients, candidate); !v) {
        return v;
    }
    const Polynomial p = clearing_polynomial(c.coefficients);
    if (p != c.polynomial) {
        return Validation::fail("polynomial does not match the clearing construction");
    }
    if (p.is_zero() || p.degree() > static_cast<int>(3 * k)) {
        return Validation::fail("polynomial is zero or has degree above 3k");
    }
    const ExactRational at_minus_k = p(ExactRational(-static_cast<long>(k)));
    const ExactRational expected(polynomial_value_at_minus_order(k));
    if (at_minus_k != c.value_at_minus_order || expected != c.value_at_minus_order || expected == 0) {
        return Validation::fail("value at -k differs from -(-1)_k (-2)_{2k}");
    }
    const std::size_t n = c.witness_index;
    if (n < 1 || n > 3 * k + 1) {
        return Validation::fail("witness index outside [1, 3k+1]");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (p(ExactRational(static_cast<unsigned long>(i))) != 0) {
            return Validation::fail("witness index is not the least nonvanishing point");
        }
    }
    const ExactRational pn = p(ExactRational(static_cast<unsigned long>(n)));
    if (pn == 0) {
        return Validation::fail("polynomial vanishes at the witness index");
    }
    const auto cat = catalan_prefix(n + k);
    const ExactRational r = catalan_residual(c.coefficients, n, cat);
    if (r != c.residual || r == 0) {
        return Validation::fail("residual does not match or vanishes");
    }
    // p(n) = residual * (n+k)_{k+1} * ((n+k-1)!)^2 / (2n-2)!
    ExactInteger ff = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        ff *= static_cast<unsigned long>(n + i);
    }
    const ExactInteger f = factorial(n + k - 1);
    const ExactRational multiplier = make_rational(ff * f * f, factorial(2 * n - 2));
    if (pn != r * multiplier) {
        return Validation::fail("polynomial and residual disagree through the clearing multiplier");
    }
    return Validation::ok();
}

Validation validate(const HankelCertificate& c, const RationalRecurrence* candidate) {
    if (candidate && candidate->order() != c.order_bound) {
        return Validation::fail("order bound differs from the candidate order");
    }
    if (c.witnesses.size() != c.order_bound + 1) {
        return Validation::fail("need one witness per order 0..order_bound");
    }
    for (std::size_t k = 0; k <= c.order_bound; ++k) {
        const auto& w = c.witnesses[k];
        if (w.order != k) {
            return Validation::fail("witness " + std::to_string(k) + " has the wrong order");
        }
        if (w.offset < 1) {
            return Validation::fail("offsets start at 1");
        }
        if (w.determinant == 0) {
            return Validation::fail("zero determinant");
        }
        if (ExactRational(catalan_window_determinant(k, w.offset)) != w.determinant) {
            return Validation::fail("determinant at order " + std::to_string(k) + " does not match");
        }
        for (std::size_t o = 1; o < w.offset; ++o) {
            if (catalan_window_determinant(k, o) != 0) {
                return Validation::fail("offset at order " + std::to_string(k) + " is not the least");
            }
        }
    }
    return Validation::ok();
}

Validation validate(const GfMismatchCertificate& c, const RationalRecurrence* candidate) {
    const std::size_t k = c.order;
    if (c.coefficients.size() != k) {
        return Validation::fail("coefficient count differs from order");
    }
    if (auto v = check_candidate_coefficients(c.coefficients, candidate); !v) {
        return v;
    }
    if (c.denominator.coefficient(0) != 1) {
        return Validation::fail("denominator must satisfy q(0) = 1");
    }
    if (gcd(c.numerator, c.denominator).degree() > 0) {
        return Validation::fail("numerator and denominator share a factor");
    }
    if (c.index < 1) {
        return Validation::fail("mismatch index must be >= 1");
    }
    const auto cat = catalan_prefix(std::max(c.index, k));
    // Direct p/q from the candidate: q0 = 1 - sum a_{k-i} x^i, p0 = (C q0) mod x^{k+1}.
    std::vector<ExactRational> q0c(k + 1, ExactRational(0));
    q0c[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        q0c[i] = -c.coefficients[k - i];
    }
    const Polynomial q0(q0c);
    std::vector<ExactRational> p0c(k + 1, ExactRational(0));
    for (std::size_t m = 1; m <= k; ++m) {
        for (std::size_t i = 0; i < m; ++i) {
            p0c[m] += q0.coefficient(i) * ExactRational(cat[m - i]);
        }
    }
    const Polynomial p0(p0c);
    if (c.numerator * q0 != p0 * c.denominator) {
        return Validation::fail("p/q is not the generating function forced by the candidate");
    }
    // Expand p/q by e_m = p_m - sum_{i>=1} q_i e_{m-i}.
    std::vector<ExactRational> e(c.index + 1, ExactRational(0));
    for (std::size_t m = 0; m <= c.index; ++m) {
        ExactRational v = c.numerator.coefficient(m);
        for (std::size_t i = 1; i <= m; ++i) {
            v -= c.denominator.coefficient(i) * e[m - i];
        }
        e[m] = std::move(v);
    }
    for (std::size_t m = 0; m < c.index; ++m) {
        if (e[m] != ExactRational(cat[m])) {
            return Validation::fail("expansion already differs before the reported index");
        }
    }
    if (e[c.index] != c.expansion_value || ExactRational(cat[c.index]) != c.catalan_value) {
        return Validation::fail("reported coefficient values do not match");
    }
    if (c.expansion_value == c.catalan_value) {
        return Validation::fail("coefficients agree at the reported index");
    }
    return Validation::ok();
}

Validation validate(const Certificate& c, const RationalRecurrence* candidate) {
    return std::visit([candidate](const auto& cert) { return validate(cert, candidate); }, c);
}

} // namespace cfinite
