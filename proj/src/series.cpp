#include "cfinite/series.hpp"

#include "cfinite/errors.hpp"
#include "cfinite/linalg.hpp"

#include <algorithm>

namespace cfinite {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, ExactRational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw InvalidInput("a truncated series needs at least its constant coefficient");
    }
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

TruncatedSeries::TruncatedSeries(const Polynomial& p, std::size_t order) : coeffs_(order + 1, ExactRational(0)) {
    for (std::size_t i = 0; i <= order && i < p.coefficients().size(); ++i) {
        coeffs_[i] = p.coefficients()[i];
    }
}

const ExactRational& TruncatedSeries::operator[](std::size_t i) const {
    if (i >= coeffs_.size()) {
        throw IndexOutOfRange("coefficient " + std::to_string(i) + " beyond truncation order " +
                              std::to_string(order()));
    }
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
    if (order > this->order()) {
        throw IndexOutOfRange("cannot extend a series beyond its known order");
    }
    return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactRational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0) {
        throw InvalidInput("series with zero constant term has no inverse");
    }
    const std::size_t N = order();
    std::vector<ExactRational> inv(N + 1, ExactRational(0));
    const ExactRational c0_inv = ExactRational(1) / coeffs_[0];
    inv[0] = c0_inv;
    for (std::size_t n = 1; n <= N; ++n) {
        ExactRational s = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (coeffs_[i] != 0) {
                s += coeffs_[i] * inv[n - i];
            }
        }
        inv[n] = -s * c0_inv;
    }
    return TruncatedSeries(std::move(inv));
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactRational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t N = std::min(a.order(), b.order());
    std::vector<ExactRational> out(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        out[i] = a[i] + b[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, -b); }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t N = std::min(a.order(), b.order());
    std::vector<ExactRational> out(N + 1, ExactRational(0));
    for (std::size_t i = 0; i <= N; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= N; ++j) {
            if (b[j] != 0) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries sqrt_one_minus_4x(std::size_t N) {
    // binom(1/2, n) (-4)^n = binom(1/2, n-1) (-4)^(n-1) * (1/2 - (n-1)) / n * (-4)
    std::vector<ExactRational> c(N + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        const ExactRational top = ExactRational(1, 2) - ExactRational(static_cast<unsigned long>(n - 1));
        c[n] = c[n - 1] * top * ExactRational(-4) / ExactRational(static_cast<unsigned long>(n));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries catalan_gf(std::size_t N) {
    if (N < 1) {
        throw InvalidInput("Catalan generating function needs order >= 1");
    }
    TruncatedSeries one(Polynomial::constant(1), N);
    return (one - sqrt_one_minus_4x(N)) * ExactRational(1, 2);
}

TruncatedSeries sequence_series(const Sequence& seq) {
    std::vector<ExactRational> c(seq.size() + 1, ExactRational(0));
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        c[n] = seq[n];
    }
    return TruncatedSeries(std::move(c));
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : p_(std::move(numerator)), q_(std::move(denominator)) {
    if (q_.coefficient(0) == 0) {
        throw InvalidInput("rational generating function needs q(0) != 0");
    }
    const Polynomial g = gcd(p_, q_);
    if (g.degree() > 0) {
        p_ = divmod(p_, g).first;
        q_ = divmod(q_, g).first;
    }
    const ExactRational q0 = q_.coefficient(0);
    p_ *= ExactRational(1) / q0;
    q_ *= ExactRational(1) / q0;
}

std::string RationalFunction::to_string() const {
    auto count_terms = [](const Polynomial& p) {
        return std::count_if(p.coefficients().begin(), p.coefficients().end(),
                             [](const ExactRational& c) { return c != 0; });
    };
    std::string num = p_.to_string();
    if (q_ == Polynomial::constant(1)) {
        return num;
    }
    if (count_terms(p_) > 1) {
        num = "(" + num + ")";
    }
    std::string den = q_.to_string();
    if (count_terms(q_) > 1) {
        den = "(" + den + ")";
    }
    return num + "/" + den;
}

TruncatedSeries expand_rational(const Polynomial& p, const Polynomial& q, std::size_t N) {
    if (q.coefficient(0) == 0) {
        throw InvalidInput("cannot expand p/q with q(0) = 0");
    }
    return TruncatedSeries(p, N) * TruncatedSeries(q, N).inverse();
}

TruncatedSeries expand_rational(const RationalFunction& rf, std::size_t N) {
    return expand_rational(rf.numerator(), rf.denominator(), N);
}

RationalFunction rational_gf(const RationalRecurrence& rec, const std::vector<ExactRational>& initial) {
    const std::size_t k = rec.order();
    if (initial.size() != k) {
        throw InvalidInput("generating function needs exactly " + std::to_string(k) + " initial terms");
    }
    // q = 1 - a_{k-1} x - ... - a_0 x^k
    std::vector<ExactRational> qc(k + 1, ExactRational(0));
    qc[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        qc[i] = -rec.coefficients()[k - i];
    }
    const Polynomial q(std::move(qc));
    // p = B q mod x^{k+1}; higher coefficients vanish by the recurrence.
    std::vector<ExactRational> pc(k + 1, ExactRational(0));
    for (std::size_t m = 1; m <= k; ++m) {
        for (std::size_t i = 0; i < m; ++i) {
            pc[m] += q.coefficient(i) * initial[m - i - 1];
        }
    }
    RationalFunction rf(Polynomial(std::move(pc)), q);

    const std::size_t check = 3 * k + 10;
    const Sequence direct = iterate(rec, initial, check);
    const TruncatedSeries expanded = expand_rational(rf, check);
    if (expanded != sequence_series(direct)) {
        throw InternalError("rational generating function does not re-expand to the iterated sequence");
    }
    return rf;
}

std::optional<RationalFunction> pade_reconstruct(const Sequence& seq, std::size_t dp, std::size_t dq) {
    if (seq.size() < dp + dq + 2) {
        throw InsufficientData("Pade reconstruction with degrees (" + std::to_string(dp) + ", " +
                               std::to_string(dq) + ") needs " + std::to_string(dp + dq + 2) + " terms");
    }
    const std::size_t M = seq.size();
    const TruncatedSeries B = sequence_series(seq);
    // Unknowns q_1..q_dq with q_0 = 1: for m = dp+1..M,
    // B_m + sum_{i=1}^{dq} q_i B_{m-i} = 0.
    Matrix<ExactRational> a;
    std::vector<ExactRational> rhs;
    for (std::size_t m = dp + 1; m <= M; ++m) {
        std::vector<ExactRational> row(dq, ExactRational(0));
        for (std::size_t i = 1; i <= dq && i <= m; ++i) {
            row[i - 1] = B[m - i];
        }
        a.push_back(std::move(row));
        rhs.push_back(-B[m]);
    }
    std::vector<ExactRational> qc{ExactRational(1)};
    if (dq > 0) {
        const auto sol = solve_any(a, rhs, dq, ExactRational(0));
        if (!sol) {
            return std::nullopt;
        }
        qc.insert(qc.end(), sol->begin(), sol->end());
    } else {
        for (const auto& r : rhs) {
            if (r != 0) {
                return std::nullopt;
            }
        }
    }
    const Polynomial q(std::move(qc));
    const TruncatedSeries prod = B * TruncatedSeries(q, M);
    std::vector<ExactRational> pc(dp + 1, ExactRational(0));
    for (std::size_t i = 0; i <= dp && i <= M; ++i) {
        pc[i] = prod[i];
    }
    RationalFunction rf(Polynomial(std::move(pc)), q);
    if (expand_rational(rf, M) != B) {
        return std::nullopt;
    }
    return rf;
}

DegreeParityVerdict degree_parity_check(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) {
        throw InvalidInput("degree parity check needs a != 0");
    }
    if (b.coefficient(0) == 0) {
        throw InvalidInput("degree parity check needs b(0) != 0");
    }
    DegreeParityVerdict v;
    v.lhs = b * b * Polynomial{1, -4};
    v.rhs = a * a;
    v.lhs_degree = v.lhs.degree();
    v.rhs_degree = v.rhs.degree();
    const int top = std::max(v.lhs_degree, v.rhs_degree);
    for (int i = 0; i <= top; ++i) {
        if (v.lhs.coefficient(i) != v.rhs.coefficient(i)) {
            v.first_difference = static_cast<std::size_t>(i);
            break;
        }
    }
    v.impossible = v.lhs_degree % 2 == 1 && v.rhs_degree % 2 == 0;
    v.message = "deg b^2(1-4x) = " + std::to_string(v.lhs_degree) + " (odd), deg a^2 = " +
                std::to_string(v.rhs_degree) + " (even): unequal degrees, identity impossible";
    return v;
}

} // namespace cfinite
