#pragma once

// Constant-coefficient linear recurrences
//     b_{n+k} = a_0 b_n + a_1 b_{n+1} + ... + a_{k-1} b_{n+k-1}
// over Q or a quadratic field Q(sqrt d): checking, guessing from data,
// normalization to a coprime integer relation, and descent of coefficients
// from Q(sqrt d) back to Q.

#include "execution.hpp"
#include "linalg.hpp"
#include "quadratic.hpp"
#include "sequence.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfinite {

/// Coefficient field of a recurrence: Q, or Q(sqrt d) when radicand is set.
struct FieldTag {
    std::optional<ExactInteger> radicand;

    static FieldTag rationals() { return {}; }
    static FieldTag quadratic(const ExactInteger& d) { return FieldTag{d}; }

    std::string to_string() const;
    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

/// Order k and coefficients (a_0, ..., a_{k-1}). Order 0 is the empty
/// recurrence, satisfied only by the zero sequence.
template <class F>
class LinearRecurrence {
public:
    LinearRecurrence(std::vector<F> coefficients, FieldTag field);

    std::size_t order() const noexcept { return coefficients_.size(); }
    const std::vector<F>& coefficients() const noexcept { return coefficients_; }
    const FieldTag& field() const noexcept { return field_; }

    friend bool operator==(const LinearRecurrence& a, const LinearRecurrence& b) {
        return a.field_ == b.field_ && a.coefficients_ == b.coefficients_;
    }

private:
    std::vector<F> coefficients_;
    FieldTag field_;
};

/// Canonicalizes coefficients; rejects a quadratic field tag.
template <>
LinearRecurrence<ExactRational>::LinearRecurrence(std::vector<ExactRational> coefficients, FieldTag field);
/// Requires a radicand and coefficients from that field.
template <>
LinearRecurrence<QuadraticFieldElement>::LinearRecurrence(std::vector<QuadraticFieldElement> coefficients,
                                                          FieldTag field);

using RationalRecurrence = LinearRecurrence<ExactRational>;
using QuadraticRecurrence = LinearRecurrence<QuadraticFieldElement>;

RationalRecurrence rational_recurrence(std::vector<ExactRational> coefficients);
QuadraticRecurrence quadratic_recurrence(std::vector<QuadraticFieldElement> coefficients,
                                         const ExactInteger& radicand);

std::string to_string(const RationalRecurrence& rec);
std::string to_string(const QuadraticRecurrence& rec);

/// Extends `initial` (length k) to `count` terms by iterating the recurrence.
Sequence iterate(const RationalRecurrence& rec, const std::vector<ExactRational>& initial, std::size_t count,
                 std::string name = "iterated");

template <class F>
struct VerifyResult {
    bool passed = true;
    std::optional<std::size_t> failing_index;
    /// sum_j a_j b_{n+j} - b_{n+k} at the failing index.
    std::optional<F> residual;

    explicit operator bool() const noexcept { return passed; }
};

/// Checks the recurrence for every n in [first, last]. Needs b up to last + k;
/// throws RangeError otherwise. An empty range (first > last) passes.
VerifyResult<ExactRational> verify(const Sequence& seq, const RationalRecurrence& rec, std::size_t first,
                                   std::size_t last);
VerifyResult<QuadraticFieldElement> verify(const Sequence& seq, const QuadraticRecurrence& rec, std::size_t first,
                                           std::size_t last);

/// verify over every window the data supports: n = 1 .. size - k.
VerifyResult<ExactRational> verify_all(const Sequence& seq, const RationalRecurrence& rec);

/// Rows (b_n, ..., b_{n+width-1}) for n = first .. first + count - 1.
class WindowMatrix {
public:
    WindowMatrix(const Sequence& seq, std::size_t width, std::size_t first, std::size_t count);

    const Matrix<ExactRational>& rows() const noexcept { return rows_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t first_index() const noexcept { return first_; }
    std::size_t row_count() const noexcept { return rows_.size(); }

private:
    Matrix<ExactRational> rows_;
    std::size_t width_;
    std::size_t first_;
};

/// Nonzero kernel vector of an m x n matrix with m < n (see kernel_nontrivial
/// in linalg.hpp for which vector is returned).
std::vector<ExactRational> kernel_nontrivial(const Matrix<ExactRational>& m, std::size_t cols);
std::vector<QuadraticFieldElement> kernel_nontrivial(const Matrix<QuadraticFieldElement>& m, std::size_t cols,
                                                     const ExactInteger& radicand);

inline std::size_t default_window_count(std::size_t max_order) { return 2 * max_order + 4; }

/// Least order k <= max_order whose window matrix over rows 1..windows has a
/// kernel vector with nonzero last entry, and whose recurrence then checks
/// out on every window of the data. Only ever "verified on available data".
/// Throws InsufficientData when size < max_order + windows, InvalidInput when
/// windows < max_order + 1.
std::optional<RationalRecurrence> guess_recurrence(const Sequence& seq, std::size_t max_order,
                                                   std::size_t windows);

/// det of the (k+1) x (k+1) window matrix with rows n0 .. n0 + k.
/// Nonzero means no recurrence of order <= k holds on those rows.
ExactRational hankel_nonsingular_witness(const Sequence& seq, std::size_t order, std::size_t offset);

struct HankelWitness {
    std::size_t order = 0;
    std::size_t offset = 0;
    ExactRational determinant;

    friend bool operator==(const HankelWitness&, const HankelWitness&) = default;
};

/// For each k in 0..max_order, the least offset with a nonzero window
/// determinant (empty optional when none fits in the data).
std::vector<std::optional<HankelWitness>> hankel_witnesses(const Sequence& seq, std::size_t max_order,
                                                           Execution exec = Execution::parallel);

/// Coprime integers (a_0, ..., a_k), a_k != 0, representing
/// sum_j a_j b_{n+j} = 0.
class IntegerRecurrenceVector {
public:
    explicit IntegerRecurrenceVector(std::vector<ExactInteger> entries);

    const std::vector<ExactInteger>& entries() const noexcept { return entries_; }
    std::size_t order() const noexcept { return entries_.size() - 1; }

    friend bool operator==(const IntegerRecurrenceVector&, const IntegerRecurrenceVector&) = default;

private:
    std::vector<ExactInteger> entries_;
};

/// Appends a_k = -1, clears denominators and divides out the content.
IntegerRecurrenceVector normalize_coprime(const RationalRecurrence& rec);

/// Replaces Q(sqrt d) coefficients by rational ones of order <= k.
///
/// Builds the rational window matrix over rows 1..windows, keeps a maximal
/// independent row set, takes a rational kernel vector a* of it, and returns
/// a'_j = -a*_j / a*_{k'} for the last nonzero a*_{k'}.
/// Throws InvalidInput if rec fails on the data, InsufficientData if
/// size < windows + k or windows < k + 2.
RationalRecurrence descend_field(const Sequence& seq, const QuadraticRecurrence& rec, std::size_t windows);

} // namespace cfinite
