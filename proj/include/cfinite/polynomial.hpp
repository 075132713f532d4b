#pragma once

#include "exact.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cfinite {

/// Dense univariate polynomial over Q, coefficients stored by ascending
/// degree with no trailing zeros. The zero polynomial has no coefficients
/// and degree() == -1.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<ExactRational> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(const ExactRational& c);
    static Polynomial monomial(const ExactRational& c, std::size_t degree);
    /// a*x + b
    static Polynomial linear(const ExactRational& a, const ExactRational& b);
    static Polynomial x() { return linear(1, 0); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<ExactRational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    ExactRational coefficient(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    ExactRational leading() const;

    ExactRational operator()(const ExactRational& x) const;
    std::complex<double> operator()(std::complex<double> x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// Integer multiple with coprime integer coefficients and positive leading term.
    std::vector<ExactInteger> primitive_integer_coefficients() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const ExactRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const ExactRational& c) { return a *= c; }
    friend Polynomial operator*(const ExactRational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Renders ascending by degree, e.g. "1 - x - x^2", "6*x^2", "0".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<ExactRational> coeffs_;
};

/// Quotient and remainder; throws InvalidInput for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p^e
Polynomial pow(const Polynomial& p, unsigned e);

/// Squarefree decomposition: pairs (f_i, i) with p = lc * prod f_i^i,
/// each f_i monic, squarefree, pairwise coprime, and non-constant.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p);

} // namespace cfinite
