#pragma once

#include "exact.hpp"

#include <string>

namespace cfinite {

/// rational + surd * sqrt(d) in Q(sqrt d), d squarefree and not 0 or 1.
///
/// Binary operations require equal radicands and throw FieldMismatch
/// otherwise; no composite fields are formed.
class QuadraticFieldElement {
public:
    QuadraticFieldElement(ExactRational rational, ExactRational surd, ExactInteger radicand);

    /// Embeds a rational into Q(sqrt d).
    static QuadraticFieldElement from_rational(const ExactRational& q, const ExactInteger& radicand);
    static QuadraticFieldElement sqrt_of(const ExactInteger& radicand);

    const ExactRational& rational_part() const noexcept { return rational_; }
    const ExactRational& surd_part() const noexcept { return surd_; }
    const ExactInteger& radicand() const noexcept { return radicand_; }

    bool is_zero() const { return rational_ == 0 && surd_ == 0; }
    bool is_rational() const { return surd_ == 0; }

    QuadraticFieldElement conjugate() const;
    /// (a + b sqrt d)(a - b sqrt d) = a^2 - d b^2.
    ExactRational norm() const;

    QuadraticFieldElement operator-() const;
    QuadraticFieldElement& operator+=(const QuadraticFieldElement& rhs);
    QuadraticFieldElement& operator-=(const QuadraticFieldElement& rhs);
    QuadraticFieldElement& operator*=(const QuadraticFieldElement& rhs);
    /// Throws InvalidInput on division by zero.
    QuadraticFieldElement& operator/=(const QuadraticFieldElement& rhs);

    friend QuadraticFieldElement operator+(QuadraticFieldElement a, const QuadraticFieldElement& b) { return a += b; }
    friend QuadraticFieldElement operator-(QuadraticFieldElement a, const QuadraticFieldElement& b) { return a -= b; }
    friend QuadraticFieldElement operator*(QuadraticFieldElement a, const QuadraticFieldElement& b) { return a *= b; }
    friend QuadraticFieldElement operator/(QuadraticFieldElement a, const QuadraticFieldElement& b) { return a /= b; }

    friend bool operator==(const QuadraticFieldElement& a, const QuadraticFieldElement& b);

    double approx() const;

    std::string to_string() const;

private:
    void require_same_field(const QuadraticFieldElement& other) const;

    ExactRational rational_;
    ExactRational surd_;
    ExactInteger radicand_;
};

bool is_squarefree(const ExactInteger& d);

// Field hooks used by the generic exact linear algebra.
inline bool is_zero(const ExactRational& q) { return q == 0; }
inline bool is_zero(const QuadraticFieldElement& q) { return q.is_zero(); }
inline ExactRational zero_like(const ExactRational&) { return ExactRational(0); }
inline QuadraticFieldElement zero_like(const QuadraticFieldElement& q) {
    return QuadraticFieldElement::from_rational(0, q.radicand());
}
inline ExactRational one_like(const ExactRational&) { return ExactRational(1); }
inline QuadraticFieldElement one_like(const QuadraticFieldElement& q) {
    return QuadraticFieldElement::from_rational(1, q.radicand());
}
inline std::string to_string(const QuadraticFieldElement& q) { return q.to_string(); }

} // namespace cfinite
