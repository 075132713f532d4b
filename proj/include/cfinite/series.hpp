#pragma once

// Truncated formal power series over Q and rational generating functions.
//
// Generating functions of sequences start at n = 1: B(x) = sum_{n>=1} b_n x^n,
// so coefficient 0 of every sequence series is zero.

#include "polynomial.hpp"
#include "recurrence.hpp"
#include "sequence.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfinite {

/// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
class TruncatedSeries {
public:
    /// The zero series known to order N.
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients c_0..c_{coefficients.size()-1}; needs at least one.
    explicit TruncatedSeries(std::vector<ExactRational> coefficients);
    /// The polynomial truncated (or zero-padded) to order N.
    TruncatedSeries(const Polynomial& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const ExactRational& operator[](std::size_t i) const;
    const std::vector<ExactRational>& coefficients() const noexcept { return coeffs_; }
    TruncatedSeries truncate(std::size_t order) const;
    bool is_zero() const;

    /// Multiplicative inverse; throws InvalidInput when c_0 == 0.
    TruncatedSeries inverse() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator*=(const ExactRational& c);

    friend TruncatedSeries operator*(TruncatedSeries a, const ExactRational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactRational> coeffs_;
};

/// Results are known only to the smaller of the two orders.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// sum_n binom(1/2, n) (-4)^n x^n to order N.
TruncatedSeries sqrt_one_minus_4x(std::size_t N);

/// C(x) = (1 - sqrt(1 - 4x)) / 2 to order N >= 1; coefficient n is C_n.
TruncatedSeries catalan_gf(std::size_t N);

/// B(x) as b_1 x + ... + b_N x^N.
TruncatedSeries sequence_series(const Sequence& seq);

/// p/q with q(0) = 1 and gcd(p, q) = 1.
class RationalFunction {
public:
    /// Normalizes to coprime p, q with q(0) = 1. Throws InvalidInput if q(0) == 0.
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const noexcept { return p_; }
    const Polynomial& denominator() const noexcept { return q_; }

    /// "0", "x/(1 - x - x^2)", "(1 + x)/(1 - x)", "2*x".
    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial p_;
    Polynomial q_;
};

/// Generating function sum_{n>=1} b_n x^n of the sequence with the given
/// recurrence and initial terms b_1..b_k. Rechecked by expanding to 3k + 10
/// terms against direct iteration (InternalError on mismatch).
RationalFunction rational_gf(const RationalRecurrence& rec, const std::vector<ExactRational>& initial);

/// p * q^{-1} to order N.
TruncatedSeries expand_rational(const RationalFunction& rf, std::size_t N);
/// Same, from raw polynomials; throws InvalidInput when q(0) == 0.
TruncatedSeries expand_rational(const Polynomial& p, const Polynomial& q, std::size_t N);

/// A rational function with deg p <= dp, deg q <= dq whose expansion matches
/// every supplied term (and has zero constant term), or empty when none
/// exists. Throws InsufficientData if seq.size() < dp + dq + 2.
std::optional<RationalFunction> pade_reconstruct(const Sequence& seq, std::size_t dp, std::size_t dq);

struct DegreeParityVerdict {
    int lhs_degree = 0; ///< deg b^2 (1 - 4x) = 2 deg b + 1
    int rhs_degree = 0; ///< deg a^2 = 2 deg a
    Polynomial lhs;
    Polynomial rhs;
    std::optional<std::size_t> first_difference; ///< least i where the coefficients of x^i differ
    bool impossible = false;
    std::string message;
};

/// Why b(x)^2 (1 - 4x) = a(x)^2 has no solution with a != 0, b(0) != 0:
/// the left side has odd degree, the right side even.
/// Throws InvalidInput when a == 0 or b(0) == 0.
DegreeParityVerdict degree_parity_check(const Polynomial& a, const Polynomial& b);

} // namespace cfinite
