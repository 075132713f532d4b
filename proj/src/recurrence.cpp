#include "cfinite/recurrence.hpp"

#include "cfinite/errors.hpp"

#include <algorithm>

#if CFINITE_USE_OPENMP
#include <omp.h>
#endif

namespace cfinite {

std::string FieldTag::to_string() const {
    return radicand ? "Q(sqrt(" + radicand->get_str() + "))" : "Q";
}

template <>
LinearRecurrence<ExactRational>::LinearRecurrence(std::vector<ExactRational> coefficients, FieldTag field)
    : coefficients_(std::move(coefficients)), field_(std::move(field)) {
    if (field_.radicand) {
        throw InvalidInput("rational recurrence tagged with a quadratic field");
    }
    for (auto& a : coefficients_) {
        a.canonicalize();
    }
}

template <>
LinearRecurrence<QuadraticFieldElement>::LinearRecurrence(std::vector<QuadraticFieldElement> coefficients,
                                                          FieldTag field)
    : coefficients_(std::move(coefficients)), field_(std::move(field)) {
    if (!field_.radicand) {
        throw InvalidInput("quadratic recurrence needs a radicand");
    }
    for (const auto& a : coefficients_) {
        if (a.radicand() != *field_.radicand) {
            throw FieldMismatch("coefficient in Q(sqrt(" + a.radicand().get_str() + ")) for a recurrence over " +
                                field_.to_string());
        }
    }
}

RationalRecurrence rational_recurrence(std::vector<ExactRational> coefficients) {
    return RationalRecurrence(std::move(coefficients), FieldTag::rationals());
}

QuadraticRecurrence quadratic_recurrence(std::vector<QuadraticFieldElement> coefficients,
                                         const ExactInteger& radicand) {
    return QuadraticRecurrence(std::move(coefficients), FieldTag::quadratic(radicand));
}

namespace {

template <class F>
std::string render(const LinearRecurrence<F>& rec) {
    const auto k = rec.order();
    if (k == 0) {
        return "b(n) = 0 over " + rec.field().to_string();
    }
    std::string out = "b(n+" + std::to_string(k) + ") =";
    for (std::size_t j = 0; j < k; ++j) {
        out += (j ? " + (" : " (") + to_string(rec.coefficients()[j]) + ")*b(n" +
               (j ? "+" + std::to_string(j) : "") + ")";
    }
    return out + " over " + rec.field().to_string();
}

template <class F, class Lift>
VerifyResult<F> verify_impl(const Sequence& seq, const LinearRecurrence<F>& rec, std::size_t first,
                            std::size_t last, Lift lift) {
    VerifyResult<F> result;
    if (first > last) {
        return result;
    }
    const auto k = rec.order();
    if (first < 1 || last + k > seq.size()) {
        throw RangeError("verification range [" + std::to_string(first) + ", " + std::to_string(last) +
                         "] with order " + std::to_string(k) + " needs " + std::to_string(last + k) +
                         " terms, have " + std::to_string(seq.size()));
    }
    for (std::size_t n = first; n <= last; ++n) {
        F residual = -lift(seq[n + k]);
        for (std::size_t j = 0; j < k; ++j) {
            residual += rec.coefficients()[j] * lift(seq[n + j]);
        }
        if (!is_zero(residual)) {
            result.passed = false;
            result.failing_index = n;
            result.residual = std::move(residual);
            return result;
        }
    }
    return result;
}

} // namespace

std::string to_string(const RationalRecurrence& rec) { return render(rec); }
std::string to_string(const QuadraticRecurrence& rec) { return render(rec); }

Sequence iterate(const RationalRecurrence& rec, const std::vector<ExactRational>& initial, std::size_t count,
                 std::string name) {
    const auto k = rec.order();
    if (initial.size() != k) {
        throw InvalidInput("need exactly " + std::to_string(k) + " initial terms, got " +
                           std::to_string(initial.size()));
    }
    std::vector<ExactRational> terms(initial.begin(), initial.begin() + std::min(count, k));
    while (terms.size() < count) {
        ExactRational next = 0;
        const auto n = terms.size() - k;
        for (std::size_t j = 0; j < k; ++j) {
            next += rec.coefficients()[j] * terms[n + j];
        }
        terms.push_back(std::move(next));
    }
    return Sequence(std::move(name), std::move(terms));
}

VerifyResult<ExactRational> verify(const Sequence& seq, const RationalRecurrence& rec, std::size_t first,
                                   std::size_t last) {
    return verify_impl(seq, rec, first, last, [](const ExactRational& q) -> const ExactRational& { return q; });
}

VerifyResult<QuadraticFieldElement> verify(const Sequence& seq, const QuadraticRecurrence& rec, std::size_t first,
                                           std::size_t last) {
    const ExactInteger d = *rec.field().radicand;
    return verify_impl(seq, rec, first, last,
                       [&d](const ExactRational& q) { return QuadraticFieldElement::from_rational(q, d); });
}

VerifyResult<ExactRational> verify_all(const Sequence& seq, const RationalRecurrence& rec) {
    if (seq.size() <= rec.order()) {
        return {};
    }
    return verify(seq, rec, 1, seq.size() - rec.order());
}

WindowMatrix::WindowMatrix(const Sequence& seq, std::size_t width, std::size_t first, std::size_t count)
    : width_(width), first_(first) {
    if (count == 0 || width == 0) {
        throw DimensionError("window matrix needs at least one row and one column");
    }
    if (first < 1 || first + count - 1 + width - 1 > seq.size()) {
        throw InsufficientData("window rows " + std::to_string(first) + ".." + std::to_string(first + count - 1) +
                               " of width " + std::to_string(width) + " exceed " + std::to_string(seq.size()) +
                               " terms");
    }
    rows_.reserve(count);
    for (std::size_t n = first; n < first + count; ++n) {
        std::vector<ExactRational> row;
        row.reserve(width);
        for (std::size_t j = 0; j < width; ++j) {
            row.push_back(seq[n + j]);
        }
        rows_.push_back(std::move(row));
    }
}

std::vector<ExactRational> kernel_nontrivial(const Matrix<ExactRational>& m, std::size_t cols) {
    return kernel_nontrivial<ExactRational>(m, cols, ExactRational(0));
}

std::vector<QuadraticFieldElement> kernel_nontrivial(const Matrix<QuadraticFieldElement>& m, std::size_t cols,
                                                     const ExactInteger& radicand) {
    return kernel_nontrivial<QuadraticFieldElement>(m, cols, QuadraticFieldElement::from_rational(0, radicand));
}

std::optional<RationalRecurrence> guess_recurrence(const Sequence& seq, std::size_t max_order,
                                                   std::size_t windows) {
    if (windows < max_order + 1) {
        throw InvalidInput("window count " + std::to_string(windows) + " must be at least max order + 1 = " +
                           std::to_string(max_order + 1));
    }
    if (seq.size() < max_order + windows) {
        throw InsufficientData("guessing up to order " + std::to_string(max_order) + " with " +
                               std::to_string(windows) + " windows needs " + std::to_string(max_order + windows) +
                               " terms, have " + std::to_string(seq.size()));
    }
    for (std::size_t k = 0; k <= max_order; ++k) {
        const WindowMatrix wm(seq, k + 1, 1, windows);
        const auto echelon = row_reduce(wm.rows(), k + 1);
        // Last column a pivot forces x_k = 0 for every kernel vector.
        if (echelon.rank() > 0 && echelon.pivot_cols.back() == k) {
            continue;
        }
        // x_k = -1, other free columns 0: b_{n+k} = sum_j x_j b_{n+j}.
        std::vector<ExactRational> coeffs(k, ExactRational(0));
        for (std::size_t r = 0; r < echelon.rank(); ++r) {
            coeffs[echelon.pivot_cols[r]] = echelon.rows[r][k];
        }
        RationalRecurrence rec = rational_recurrence(std::move(coeffs));
        if (verify_all(seq, rec)) {
            return rec;
        }
    }
    return std::nullopt;
}

ExactRational hankel_nonsingular_witness(const Sequence& seq, std::size_t order, std::size_t offset) {
    if (offset < 1 || offset + 2 * order > seq.size()) {
        throw InsufficientData("order-" + std::to_string(order) + " window determinant at offset " +
                               std::to_string(offset) + " needs " + std::to_string(offset + 2 * order) +
                               " terms, have " + std::to_string(seq.size()));
    }
    const WindowMatrix wm(seq, order + 1, offset, order + 1);
    return determinant(wm.rows());
}

namespace {

std::optional<HankelWitness> first_nonzero_witness(const Sequence& seq, std::size_t k) {
    for (std::size_t offset = 1; offset + 2 * k <= seq.size(); ++offset) {
        ExactRational det = hankel_nonsingular_witness(seq, k, offset);
        if (det != 0) {
            return HankelWitness{k, offset, std::move(det)};
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<std::optional<HankelWitness>> hankel_witnesses(const Sequence& seq, std::size_t max_order,
                                                           Execution exec) {
    std::vector<std::optional<HankelWitness>> out(max_order + 1);
    const auto count = static_cast<std::int64_t>(max_order + 1);
    if (exec == Execution::parallel) {
#if CFINITE_USE_OPENMP
        // Higher orders cost more; hand them out one at a time.
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t k = 0; k < count; ++k) {
            out[k] = first_nonzero_witness(seq, static_cast<std::size_t>(k));
        }
        return out;
#endif
    }
    for (std::int64_t k = 0; k < count; ++k) {
        out[k] = first_nonzero_witness(seq, static_cast<std::size_t>(k));
    }
    return out;
}

IntegerRecurrenceVector::IntegerRecurrenceVector(std::vector<ExactInteger> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.back() == 0) {
        throw InvalidInput("integer recurrence vector needs a nonzero last entry");
    }
    ExactInteger g = 0;
    for (const auto& e : entries_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g != 1) {
        throw InvalidInput("integer recurrence vector entries are not coprime (gcd " + g.get_str() + ")");
    }
}

IntegerRecurrenceVector normalize_coprime(const RationalRecurrence& rec) {
    std::vector<ExactRational> form = rec.coefficients();
    form.emplace_back(-1);
    const ExactInteger l = lcm_of_denominators(form);
    std::vector<ExactInteger> ints;
    ints.reserve(form.size());
    ExactInteger g = 0;
    for (const auto& a : form) {
        ExactInteger v = a.get_num() * (l / a.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    for (auto& v : ints) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return IntegerRecurrenceVector(std::move(ints));
}

RationalRecurrence descend_field(const Sequence& seq, const QuadraticRecurrence& rec, std::size_t windows) {
    const auto k = rec.order();
    if (windows < k + 2) {
        throw InsufficientData("descent needs at least order + 2 = " + std::to_string(k + 2) + " windows");
    }
    if (seq.size() < windows + k) {
        throw InsufficientData("descent over " + std::to_string(windows) + " windows of order " +
                               std::to_string(k) + " needs " + std::to_string(windows + k) + " terms");
    }
    const auto check = verify(seq, rec, 1, windows);
    if (!check) {
        throw InvalidInput("recurrence over " + rec.field().to_string() + " fails on the data at n = " +
                           std::to_string(*check.failing_index));
    }
    const WindowMatrix wm(seq, k + 1, 1, windows);
    const auto basis_rows = independent_rows(wm.rows(), k + 1);
    if (basis_rows.size() >= k + 1) {
        throw InternalError("window rows have full rank although a kernel vector over the extension exists");
    }
    Matrix<ExactRational> basis;
    for (auto r : basis_rows) {
        basis.push_back(wm.rows()[r]);
    }
    const auto a_star = kernel_nontrivial(basis, k + 1);
    std::size_t top = k;
    while (a_star[top] == 0) {
        --top; // a_star is nonzero, so this stops
    }
    std::vector<ExactRational> coeffs;
    coeffs.reserve(top);
    for (std::size_t j = 0; j < top; ++j) {
        coeffs.push_back(-a_star[j] / a_star[top]);
    }
    RationalRecurrence out = rational_recurrence(std::move(coeffs));
    if (!verify_all(seq, out)) {
        throw InternalError("descended recurrence fails outside the examined windows; use more windows");
    }
    return out;
}

} // namespace cfinite
