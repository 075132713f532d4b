#include "cfinite/quadratic.hpp"

#include "cfinite/errors.hpp"

#include <cmath>

namespace cfinite {

bool is_squarefree(const ExactInteger& d) {
    ExactInteger m = abs(d);
    if (m == 0) {
        return false;
    }
    for (ExactInteger p = 2; p * p <= m; ++p) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                return false;
            }
        }
    }
    return true;
}

QuadraticFieldElement::QuadraticFieldElement(ExactRational rational, ExactRational surd, ExactInteger radicand)
    : rational_(std::move(rational)), surd_(std::move(surd)), radicand_(std::move(radicand)) {
    if (radicand_ == 0 || radicand_ == 1 || !is_squarefree(radicand_)) {
        throw InvalidInput("radicand " + radicand_.get_str() + " is not a squarefree integer outside {0, 1}");
    }
    rational_.canonicalize();
    surd_.canonicalize();
}

QuadraticFieldElement QuadraticFieldElement::from_rational(const ExactRational& q, const ExactInteger& radicand) {
    return QuadraticFieldElement(q, 0, radicand);
}

QuadraticFieldElement QuadraticFieldElement::sqrt_of(const ExactInteger& radicand) {
    return QuadraticFieldElement(0, 1, radicand);
}

void QuadraticFieldElement::require_same_field(const QuadraticFieldElement& other) const {
    if (radicand_ != other.radicand_) {
        throw FieldMismatch("mixed radicands " + radicand_.get_str() + " and " + other.radicand_.get_str());
    }
}

QuadraticFieldElement QuadraticFieldElement::conjugate() const {
    return QuadraticFieldElement(rational_, -surd_, radicand_);
}

ExactRational QuadraticFieldElement::norm() const {
    return rational_ * rational_ - ExactRational(radicand_) * surd_ * surd_;
}

QuadraticFieldElement QuadraticFieldElement::operator-() const {
    return QuadraticFieldElement(-rational_, -surd_, radicand_);
}

QuadraticFieldElement& QuadraticFieldElement::operator+=(const QuadraticFieldElement& rhs) {
    require_same_field(rhs);
    rational_ += rhs.rational_;
    surd_ += rhs.surd_;
    return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator-=(const QuadraticFieldElement& rhs) {
    require_same_field(rhs);
    rational_ -= rhs.rational_;
    surd_ -= rhs.surd_;
    return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator*=(const QuadraticFieldElement& rhs) {
    require_same_field(rhs);
    ExactRational r = rational_ * rhs.rational_ + ExactRational(radicand_) * surd_ * rhs.surd_;
    ExactRational s = rational_ * rhs.surd_ + surd_ * rhs.rational_;
    rational_ = std::move(r);
    surd_ = std::move(s);
    return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator/=(const QuadraticFieldElement& rhs) {
    require_same_field(rhs);
    if (rhs.is_zero()) {
        throw InvalidInput("division by zero in Q(sqrt " + radicand_.get_str() + ")");
    }
    // d squarefree and != 1 makes the norm of a nonzero element nonzero.
    const ExactRational n = rhs.norm();
    *this *= rhs.conjugate();
    rational_ /= n;
    surd_ /= n;
    return *this;
}

bool operator==(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
    a.require_same_field(b);
    return a.rational_ == b.rational_ && a.surd_ == b.surd_;
}

double QuadraticFieldElement::approx() const {
    if (radicand_ < 0) {
        throw InvalidInput("no real approximation in an imaginary quadratic field");
    }
    return rational_.get_d() + surd_.get_d() * std::sqrt(radicand_.get_d());
}

std::string QuadraticFieldElement::to_string() const {
    const std::string root = "sqrt(" + radicand_.get_str() + ")";
    if (surd_ == 0) {
        return cfinite::to_string(rational_);
    }
    std::string surd_text = surd_ == 1 ? root
                          : surd_ == -1 ? "-" + root
                                        : cfinite::to_string(surd_) + "*" + root;
    if (rational_ == 0) {
        return surd_text;
    }
    if (surd_ < 0) {
        return cfinite::to_string(rational_) + "-" + surd_text.substr(1);
    }
    return cfinite::to_string(rational_) + "+" + surd_text;
}

} // namespace cfinite
