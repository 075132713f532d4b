#include "cfinite/powersum.hpp"

#include "cfinite/catalan.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cfinite {

Polynomial characteristic_polynomial(const RationalRecurrence& rec) {
    const auto k = rec.order();
    std::vector<ExactRational> c(k + 1, ExactRational(0));
    for (std::size_t j = 0; j < k; ++j) {
        c[j] = -rec.coefficients()[j];
    }
    c[k] = 1;
    return Polynomial(std::move(c));
}

namespace {

using LComplex = std::complex<long double>;

constexpr std::size_t kMaxRationalCandidates = 200000;
constexpr unsigned long kTrialDivisionLimit = 1000000;

// Divisors of m > 0 from trial division. A cofactor left above the trial
// limit is treated as prime, which can only lose candidates.
std::vector<ExactInteger> divisors_of(ExactInteger m) {
    std::vector<std::pair<ExactInteger, unsigned>> factors;
    for (unsigned long p = 2; p <= kTrialDivisionLimit && ExactInteger(p) * p <= m; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) {
            factors.emplace_back(ExactInteger(p), e);
        }
    }
    if (m > 1) {
        factors.emplace_back(m, 1);
    }
    std::vector<ExactInteger> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        ExactInteger pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pk);
            }
        }
        if (divs.size() > kMaxRationalCandidates) {
            break;
        }
    }
    return divs;
}

bool annihilates(const std::vector<ExactInteger>& c, const ExactInteger& r, const ExactInteger& s) {
    // sum c_i r^i s^(d-i) == 0, evaluated by Horner in homogeneous form.
    ExactInteger acc = 0, spow = 1;
    const std::size_t d = c.size() - 1;
    std::vector<ExactInteger> s_pows(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        s_pows[i] = spow;
        spow *= s;
    }
    for (std::size_t i = d + 1; i-- > 0;) {
        acc = acc * r + c[i] * s_pows[d - i];
    }
    return acc == 0;
}

// Rational roots of a squarefree polynomial with nonzero constant term.
std::vector<ExactRational> rational_roots(const Polynomial& f) {
    std::vector<ExactRational> out;
    const auto c = f.primitive_integer_coefficients();
    if (c.size() < 2) {
        return out;
    }
    const auto rs = divisors_of(abs(c.front()));
    const auto ss = divisors_of(abs(c.back()));
    if (rs.size() * ss.size() > kMaxRationalCandidates) {
        return out;
    }
    std::set<ExactRational> seen;
    for (const auto& s : ss) {
        for (const auto& r : rs) {
            const ExactRational q = make_rational(r, s);
            if (!seen.insert(q).second) {
                continue;
            }
            if (annihilates(c, q.get_num(), q.get_den())) {
                out.push_back(q);
            }
            if (annihilates(c, -q.get_num(), q.get_den())) {
                out.push_back(-q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LComplex eval_l(const std::vector<LComplex>& c, LComplex z) {
    LComplex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

long double eval_scale(const std::vector<LComplex>& c, LComplex z) {
    long double acc = 0, zp = 1, za = std::abs(z);
    for (const auto& ci : c) {
        acc += std::abs(ci) * zp;
        zp *= za;
    }
    return acc;
}

// Roots of a squarefree polynomial by Weierstrass (Durand-Kerner) iteration
// followed by Newton polishing.
std::vector<Complex> numeric_roots(const Polynomial& f, double tolerance) {
    const Polynomial m = f.monic();
    const int d = m.degree();
    std::vector<LComplex> c;
    for (const auto& q : m.coefficients()) {
        c.emplace_back(static_cast<long double>(q.get_d()));
    }
    long double radius = 1;
    for (int i = 0; i < d; ++i) {
        radius = std::max(radius, 1 + std::abs(c[i]));
    }
    std::vector<LComplex> z(d);
    const LComplex seed(0.4L, 0.9L);
    LComplex power = 1;
    for (int i = 0; i < d; ++i) {
        power *= seed;
        z[i] = power * (radius / std::abs(power)) * 0.5L;
    }
    constexpr int kMaxIterations = 2000;
    bool converged = false;
    for (int it = 0; it < kMaxIterations && !converged; ++it) {
        long double biggest = 0;
        for (int i = 0; i < d; ++i) {
            LComplex denom = 1;
            for (int j = 0; j < d; ++j) {
                if (j != i) {
                    denom *= z[i] - z[j];
                }
            }
            if (denom == LComplex(0)) {
                denom = 1e-30L;
            }
            const LComplex step = eval_l(c, z[i]) / denom;
            z[i] -= step;
            biggest = std::max(biggest, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        converged = biggest < 1e-17L;
    }
    std::vector<LComplex> dc;
    for (int i = 1; i <= d; ++i) {
        dc.push_back(c[i] * static_cast<long double>(i));
    }
    std::vector<Complex> out;
    for (auto& zi : z) {
        for (int it = 0; it < 50; ++it) {
            const LComplex fp = eval_l(dc, zi);
            if (fp == LComplex(0)) {
                break;
            }
            const LComplex step = eval_l(c, zi) / fp;
            zi -= step;
            if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(zi))) {
                break;
            }
        }
        // Snap to the real axis when the real point is an equally good root.
        if (std::abs(zi.imag()) <= tolerance * std::max(1.0L, std::abs(zi))) {
            const LComplex re(zi.real(), 0);
            if (std::abs(eval_l(c, re)) <= tolerance * eval_scale(c, re)) {
                zi = re;
            }
        }
        if (std::abs(eval_l(c, zi)) > tolerance * eval_scale(c, zi)) {
            throw Nonconvergence("root finder stalled near " + std::to_string(static_cast<double>(zi.real())) +
                                 (zi.imag() < 0 ? "" : "+") + std::to_string(static_cast<double>(zi.imag())) +
                                 "i for a degree-" + std::to_string(d) + " factor");
        }
        out.emplace_back(static_cast<double>(zi.real()), static_cast<double>(zi.imag()));
    }
    return out;
}

} // namespace

std::vector<Root> polynomial_roots(const Polynomial& p, double tolerance) {
    if (p.is_zero()) {
        throw InvalidInput("roots of the zero polynomial");
    }
    std::vector<Root> exact_roots, numeric;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Polynomial rest = factor;
        if (rest.coefficient(0) == 0) {
            exact_roots.push_back(Root{Complex(0), ExactRational(0), mult});
            rest = divmod(rest, Polynomial::x()).first;
        }
        for (const auto& r : rational_roots(rest)) {
            exact_roots.push_back(Root{Complex(r.get_d()), r, mult});
            rest = divmod(rest, Polynomial::linear(1, -r)).first;
        }
        if (rest.degree() > 0) {
            for (const auto& z : numeric_roots(rest, tolerance)) {
                numeric.push_back(Root{z, std::nullopt, mult});
            }
        }
    }
    std::sort(exact_roots.begin(), exact_roots.end(),
              [](const Root& a, const Root& b) { return *a.exact < *b.exact; });
    std::sort(numeric.begin(), numeric.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) {
            return a.value.real() > b.value.real();
        }
        return a.value.imag() > b.value.imag();
    });
    exact_roots.insert(exact_roots.end(), numeric.begin(), numeric.end());
    return exact_roots;
}

PowerSum::PowerSum(std::vector<PowerSumTerm> terms, std::size_t valid_from, std::vector<std::string> notes)
    : terms_(std::move(terms)), valid_from_(valid_from), notes_(std::move(notes)) {
    if (valid_from_ < 1) {
        throw InvalidInput("power sum must start at an index >= 1");
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (t.poly.empty()) {
            throw InvalidInput("power sum term with zero polynomial");
        }
        if (t.root == Complex(0) || (t.exact_root && *t.exact_root == 0)) {
            throw InvalidInput("power sum root must be nonzero");
        }
        for (std::size_t j = 0; j < i; ++j) {
            const bool both_exact = t.exact_root && terms_[j].exact_root;
            if (both_exact ? *t.exact_root == *terms_[j].exact_root : t.root == terms_[j].root) {
                throw InvalidInput("power sum roots must be distinct");
            }
        }
    }
}

bool PowerSum::exact() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PowerSumTerm& t) { return t.exact_root.has_value() && t.exact_poly.has_value(); });
}

namespace {

ExactRational rational_pow(const ExactRational& q, std::size_t e) {
    ExactInteger num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
    return make_rational(num, den);
}

Complex complex_pow(Complex z, std::size_t e) {
    Complex acc = 1;
    Complex base = z;
    while (e) {
        if (e & 1U) {
            acc *= base;
        }
        base *= base;
        e >>= 1U;
    }
    return acc;
}

// Gaussian elimination with partial pivoting; throws on a singular system.
std::vector<Complex> solve_complex(Matrix<Complex> a, std::vector<Complex> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[p][c])) {
                p = r;
            }
        }
        if (std::abs(a[p][c]) == 0) {
            throw InternalError("singular confluent Vandermonde system; roots misidentified");
        }
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) {
                a[r][j] -= f * a[c][j];
            }
            b[r] -= f * b[c];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= a[i][j] * x[j];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace

PowerSum binet_form(const RationalRecurrence& rec, const std::vector<ExactRational>& initial, double tolerance) {
    const std::size_t k = rec.order();
    if (initial.size() != k) {
        throw InvalidInput("binet form needs exactly " + std::to_string(k) + " initial terms, got " +
                           std::to_string(initial.size()));
    }
    if (k == 0) {
        return PowerSum{};
    }
    const auto roots = polynomial_roots(characteristic_polynomial(rec), tolerance);
    std::size_t zero_mult = 0;
    std::vector<Root> nonzero;
    for (const auto& r : roots) {
        if (r.exact && *r.exact == 0) {
            zero_mult = r.multiplicity;
        } else {
            nonzero.push_back(r);
        }
    }
    std::vector<std::string> notes;
    const std::size_t first = zero_mult + 1;
    if (zero_mult) {
        notes.push_back("dropped root 0 of multiplicity " + std::to_string(zero_mult) +
                        "; the power sum reproduces b_n for n >= " + std::to_string(first));
    }
    const std::size_t unknowns = k - zero_mult;
    if (unknowns == 0) {
        notes.push_back("characteristic polynomial is x^" + std::to_string(k) + "; the sequence vanishes for n > " +
                        std::to_string(k));
        return PowerSum({}, first, std::move(notes));
    }
    const bool all_exact = std::all_of(nonzero.begin(), nonzero.end(), [](const Root& r) { return r.exact.has_value(); });

    std::vector<PowerSumTerm> terms;
    if (all_exact) {
        Matrix<ExactRational> a;
        std::vector<ExactRational> rhs;
        for (std::size_t n = first; n <= k; ++n) {
            std::vector<ExactRational> row;
            for (const auto& r : nonzero) {
                const ExactRational base = rational_pow(*r.exact, n);
                ExactRational np = 1;
                for (unsigned t = 0; t < r.multiplicity; ++t) {
                    row.push_back(np * base);
                    np *= static_cast<unsigned long>(n);
                }
            }
            a.push_back(std::move(row));
            rhs.push_back(initial[n - 1]);
        }
        const auto echelon = row_reduce(a, unknowns);
        if (echelon.rank() != unknowns) {
            throw InternalError("singular confluent Vandermonde system; roots misidentified");
        }
        const auto x = *solve_any(a, rhs, unknowns, ExactRational(0));
        std::size_t pos = 0;
        for (const auto& r : nonzero) {
            std::vector<ExactRational> c(x.begin() + pos, x.begin() + pos + r.multiplicity);
            pos += r.multiplicity;
            Polynomial p(std::move(c));
            if (p.is_zero()) {
                continue;
            }
            PowerSumTerm term;
            for (const auto& q : p.coefficients()) {
                term.poly.emplace_back(q.get_d());
            }
            term.root = Complex(r.exact->get_d());
            term.exact_root = *r.exact;
            term.exact_poly = std::move(p);
            terms.push_back(std::move(term));
        }
        return PowerSum(std::move(terms), first, std::move(notes));
    }

    Matrix<Complex> a;
    std::vector<Complex> rhs;
    for (std::size_t n = first; n <= k; ++n) {
        std::vector<Complex> row;
        for (const auto& r : nonzero) {
            const Complex base = complex_pow(r.value, n);
            double np = 1;
            for (unsigned t = 0; t < r.multiplicity; ++t) {
                row.push_back(np * base);
                np *= static_cast<double>(n);
            }
        }
        a.push_back(std::move(row));
        rhs.emplace_back(initial[n - 1].get_d());
    }
    const auto x = solve_complex(std::move(a), std::move(rhs));
    double scale = 0;
    for (const auto& xi : x) {
        scale = std::max(scale, std::abs(xi));
    }
    std::size_t pos = 0;
    for (const auto& r : nonzero) {
        std::vector<Complex> c(x.begin() + pos, x.begin() + pos + r.multiplicity);
        pos += r.multiplicity;
        while (!c.empty() && std::abs(c.back()) <= 1e-10 * scale) {
            c.pop_back();
        }
        if (c.empty()) {
            continue;
        }
        PowerSumTerm term;
        term.poly = std::move(c);
        term.root = r.value;
        if (r.exact) {
            term.exact_root = *r.exact;
        }
        terms.push_back(std::move(term));
    }
    return PowerSum(std::move(terms), first, std::move(notes));
}

PowerSumValue evaluate_powersum(const PowerSum& ps, std::size_t n) {
    if (n < 1) {
        throw IndexOutOfRange("power sums are indexed from 1");
    }
    PowerSumValue out{Complex(0), std::nullopt};
    for (const auto& t : ps.terms()) {
        Complex p = 0;
        for (std::size_t i = t.poly.size(); i-- > 0;) {
            p = p * static_cast<double>(n) + t.poly[i];
        }
        out.approx += p * complex_pow(t.root, n);
    }
    if (ps.exact()) {
        ExactRational sum = 0;
        for (const auto& t : ps.terms()) {
            sum += (*t.exact_poly)(ExactRational(static_cast<unsigned long>(n))) * rational_pow(*t.exact_root, n);
        }
        out.exact = std::move(sum);
    }
    return out;
}

DominantPart dominant_part(const PowerSum& ps) {
    if (ps.empty()) {
        throw InvalidInput("dominant part of an empty power sum");
    }
    const auto& terms = ps.terms();
    auto same_modulus = [](const PowerSumTerm& a, const PowerSumTerm& b) {
        if (a.exact_root && b.exact_root) {
            return abs(*a.exact_root) == abs(*b.exact_root);
        }
        const double ma = std::abs(a.root), mb = std::abs(b.root);
        return std::abs(ma - mb) <= 1e-9 * std::max(ma, mb);
    };
    std::size_t top = 0;
    for (std::size_t j = 1; j < terms.size(); ++j) {
        if (!same_modulus(terms[j], terms[top]) && std::abs(terms[j].root) > std::abs(terms[top].root)) {
            top = j;
        }
    }
    DominantPart dp;
    dp.alpha = std::abs(terms[top].root);
    int s = 0;
    for (const auto& t : terms) {
        if (same_modulus(t, terms[top])) {
            s = std::max(s, t.degree());
        }
    }
    dp.s = static_cast<unsigned>(s);
    for (const auto& t : terms) {
        if (same_modulus(t, terms[top]) && t.degree() == s) {
            dp.unit_terms.push_back(UnitTerm{t.poly.back(), t.root / dp.alpha});
        }
    }
    return dp;
}

double vandermonde_modulus(const std::vector<Complex>& betas, double tolerance) {
    double product = 1;
    for (std::size_t v = 0; v < betas.size(); ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            const double d = std::abs(betas[v] - betas[u]);
            if (d <= tolerance) {
                throw InvalidInput("coincident unit roots in Vandermonde product");
            }
            product *= d;
        }
    }
    return product;
}

Complex unit_sum(const DominantPart& dp, std::size_t n) {
    Complex v = 0;
    for (const auto& t : dp.unit_terms) {
        // Unimodular powers via the angle keep large n accurate.
        v += t.gamma * std::polar(1.0, static_cast<double>(n) * std::arg(t.beta));
    }
    return v;
}

TailCheck tail_lower_bound_check(const DominantPart& dp, std::size_t n) {
    const std::size_t l = dp.l();
    if (l == 0) {
        throw InvalidInput("tail check needs at least one unit term");
    }
    TailCheck out;
    std::vector<Complex> betas;
    double max_gamma = 0;
    for (const auto& t : dp.unit_terms) {
        betas.push_back(t.beta);
        max_gamma = std::max(max_gamma, std::abs(t.gamma));
    }
    for (std::size_t i = 1; i <= l; ++i) {
        out.observed = std::max(out.observed, std::abs(unit_sum(dp, n + i)));
    }
    double l_factorial = 1;
    for (std::size_t i = 2; i <= l; ++i) {
        l_factorial *= static_cast<double>(i);
    }
    out.bound = vandermonde_modulus(betas) * max_gamma / l_factorial;
    return out;
}

Polynomial falling_factorial(std::size_t k) { return falling_factorial(Polynomial::x(), k); }

Polynomial falling_factorial(const Polynomial& base, std::size_t k) {
    Polynomial out = Polynomial::constant(1);
    for (std::size_t i = 0; i < k; ++i) {
        out *= base - Polynomial::constant(ExactRational(static_cast<unsigned long>(i)));
    }
    return out;
}

mpf_class catalan_asymptotic_constant(std::size_t N, unsigned precision_bits) {
    if (N < 100) {
        throw InvalidInput("asymptotic estimate needs N >= 100");
    }
    mpf_class c(catalan_closed(N), precision_bits);
    mpf_div_2exp(c.get_mpf_t(), c.get_mpf_t(), 2 * N);
    mpf_class n(static_cast<double>(N), precision_bits);
    c *= n * sqrt(n);
    return c;
}

} // namespace cfinite
