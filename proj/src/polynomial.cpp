#include "cfinite/polynomial.hpp"

#include "cfinite/errors.hpp"

#include <algorithm>

namespace cfinite {

Polynomial::Polynomial(std::vector<ExactRational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) {
        coeffs_.emplace_back(c);
    }
    trim();
}

Polynomial Polynomial::constant(const ExactRational& c) { return Polynomial(std::vector<ExactRational>{c}); }

Polynomial Polynomial::monomial(const ExactRational& c, std::size_t degree) {
    std::vector<ExactRational> v(degree + 1, ExactRational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const ExactRational& a, const ExactRational& b) {
    return Polynomial(std::vector<ExactRational>{b, a});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

ExactRational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

ExactRational Polynomial::leading() const { return coeffs_.empty() ? ExactRational(0) : coeffs_.back(); }

ExactRational Polynomial::operator()(const ExactRational& x) const {
    ExactRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<ExactRational> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) {
        return {};
    }
    Polynomial out = *this;
    out *= ExactRational(1) / leading();
    return out;
}

std::vector<ExactInteger> Polynomial::primitive_integer_coefficients() const {
    const ExactInteger l = lcm_of_denominators(coeffs_);
    std::vector<ExactInteger> out;
    ExactInteger g = 0;
    for (const auto& c : coeffs_) {
        ExactInteger v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (g == 0) {
        return out;
    }
    if (out.back() < 0) {
        g = -g;
    }
    for (auto& v : out) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), ExactRational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), ExactRational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ExactRational> out(coeffs_.size() + rhs.coeffs_.size() - 1, ExactRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const ExactRational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const ExactRational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const ExactRational mag = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
        if (i == 0) {
            out += cfinite::to_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += cfinite::to_string(mag) + "*" + power;
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw InvalidInput("polynomial division by zero");
    }
    std::vector<ExactRational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) {
        return {Polynomial{}, a};
    }
    std::vector<ExactRational> quot(static_cast<std::size_t>(a.degree() - db + 1), ExactRational(0));
    const ExactRational lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const ExactRational q = rem[i] / lb;
        if (q == 0) {
            continue;
        }
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] -= q * b.coefficients()[j];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial out = Polynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) {
        out *= p;
    }
    return out;
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p) {
    // Yun's algorithm (characteristic zero).
    std::vector<std::pair<Polynomial, unsigned>> out;
    if (p.degree() < 1) {
        return out;
    }
    const Polynomial f = p.monic();
    const Polynomial fp = f.derivative();
    Polynomial a = gcd(f, fp);
    Polynomial b = divmod(f, a).first;
    Polynomial c = divmod(fp, a).first;
    Polynomial d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Polynomial g = gcd(b, d);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
        }
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

} // namespace cfinite
