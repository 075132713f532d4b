#pragma once

// Power-sum (generalized Binet) forms b_n = sum_j p_j(n) alpha_j^n of linear
// recurrence sequences, their dominant part, the Vandermonde estimate that
// bounds the unit-circle part from below, falling factorials, and the
// Catalan asymptotic constant.

#include "polynomial.hpp"
#include "recurrence.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfinite {

using Complex = std::complex<double>;

/// x^k - a_{k-1} x^{k-1} - ... - a_0; the constant 1 for order 0.
Polynomial characteristic_polynomial(const RationalRecurrence& rec);

struct Root {
    Complex value;
    std::optional<ExactRational> exact; ///< set for roots found by the rational-root test
    unsigned multiplicity = 1;
};

/// All roots with multiplicities. Multiplicities come from an exact
/// squarefree decomposition; rational roots are found exactly and deflated,
/// the rest by simultaneous iteration and Newton polishing, accepted when
/// |p(z)| <= tolerance * sum_i |c_i| |z|^i. Throws Nonconvergence otherwise,
/// InvalidInput for the zero polynomial. Order: exact roots ascending, then
/// numeric roots by descending real part, then imaginary part.
std::vector<Root> polynomial_roots(const Polynomial& p, double tolerance = 1e-12);

/// One pair (p_j, alpha_j). The numeric fields are always filled; the exact
/// ones only when alpha_j is rational.
struct PowerSumTerm {
    std::vector<Complex> poly; ///< coefficients of p_j by ascending degree
    Complex root;
    std::optional<Polynomial> exact_poly;
    std::optional<ExactRational> exact_root;

    int degree() const noexcept { return static_cast<int>(poly.size()) - 1; }
};

/// sum_j p_j(n) alpha_j^n for n >= valid_from. Roots are distinct and
/// nonzero, polynomials nonzero; zero terms is the zero sequence.
class PowerSum {
public:
    PowerSum() = default;
    PowerSum(std::vector<PowerSumTerm> terms, std::size_t valid_from = 1, std::vector<std::string> notes = {});

    const std::vector<PowerSumTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    /// First index represented. Above 1 when zero roots were dropped.
    std::size_t valid_from() const noexcept { return valid_from_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    bool exact() const;

private:
    std::vector<PowerSumTerm> terms_;
    std::size_t valid_from_ = 1;
    std::vector<std::string> notes_;
};

/// Solves the confluent Vandermonde system on the k initial terms. Zero roots
/// of the characteristic polynomial are dropped; with z of them the form
/// reproduces b_n for n >= z + 1 and a note says so.
/// Throws InvalidInput if initial.size() != order, InternalError on a
/// singular system.
PowerSum binet_form(const RationalRecurrence& rec, const std::vector<ExactRational>& initial,
                    double tolerance = 1e-12);

struct PowerSumValue {
    Complex approx;
    std::optional<ExactRational> exact;
};

/// The sum as written at index n >= 1 (exact when every term is exact).
PowerSumValue evaluate_powersum(const PowerSum& ps, std::size_t n);

struct UnitTerm {
    Complex gamma;
    Complex beta; ///< |beta| = 1
};

/// b_n = n^s alpha^n sum_j gamma_j beta_j^n + O(n^{s-1} alpha^n).
struct DominantPart {
    unsigned s = 0;
    double alpha = 0;
    std::vector<UnitTerm> unit_terms;

    std::size_t l() const noexcept { return unit_terms.size(); }
};

/// Roots of maximum modulus, then the maximum degree among them. Moduli are
/// compared exactly for rational roots and to a relative 1e-9 otherwise.
/// Throws InvalidInput for an empty power sum.
DominantPart dominant_part(const PowerSum& ps);

/// prod_{u<v} |beta_v - beta_u|; throws InvalidInput if two betas lie
/// within `tolerance` of each other.
double vandermonde_modulus(const std::vector<Complex>& betas, double tolerance = 1e-12);

/// v(n) = sum_j gamma_j beta_j^n
Complex unit_sum(const DominantPart& dp, std::size_t n);

struct TailCheck {
    double observed = 0; ///< max_{1<=i<=l} |v(n+i)|
    double bound = 0;    ///< vandermonde_modulus * max_j |gamma_j| / l!

    bool holds(double slack = 1e-9) const noexcept { return observed >= bound - slack; }
};

/// By Cramer's rule on the l window equations, |gamma_j| <= l! eps / beta
/// whenever every |v(n+i)| <= eps; so observed >= bound always.
TailCheck tail_lower_bound_check(const DominantPart& dp, std::size_t n);

/// (x)_k = x (x-1) ... (x-k+1); (x)_0 = 1.
Polynomial falling_factorial(std::size_t k);

/// (base)_k = base (base-1) ... (base-k+1) for a polynomial base.
Polynomial falling_factorial(const Polynomial& base, std::size_t k);

/// C_N N^{3/2} / 4^N evaluated in `precision_bits` of binary floating point.
/// Throws InvalidInput for N < 100.
mpf_class catalan_asymptotic_constant(std::size_t N, unsigned precision_bits = 256);

} // namespace cfinite
