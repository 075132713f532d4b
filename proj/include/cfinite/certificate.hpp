#pragma once

// Refutation certificates for proposed linear recurrences of the Catalan
// numbers, and validators that recheck them from their fields alone (Catalan
// values, parities and polynomial algebra are recomputed; nothing produced
// by the engines is trusted).

#include "exact.hpp"
#include "polynomial.hpp"
#include "recurrence.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cfinite {

/// Parity argument: with coprime integers a_0..a_k, exactly one summand of
/// sum_j a_j C_{n+j} is odd, so the sum is odd and nonzero.
struct ParityCertificate {
    std::vector<ExactInteger> coprime_vector; ///< a_0..a_k
    std::size_t odd_index = 0;                ///< l, least j with a_j odd
    unsigned exponent = 0;                    ///< m, n + l = 2^m
    std::size_t window_start = 0;             ///< n = 2^m - l
    std::vector<bool> parity_table;           ///< a_j C_{n+j} mod 2, j = 0..k
    std::optional<ExactInteger> residual;     ///< sum_j a_j C_{n+j}, when computed

    std::size_t order() const noexcept { return coprime_vector.empty() ? 0 : coprime_vector.size() - 1; }
    friend bool operator==(const ParityCertificate&, const ParityCertificate&) = default;
};

/// Polynomial argument: clearing factorials turns the relation into p(n) = 0
/// for all n, but p(-k) != 0, so p is a nonzero polynomial and fails at
/// some n* <= 3k + 1.
struct PolynomialCertificate {
    std::size_t order = 0;
    std::vector<ExactRational> coefficients; ///< a_0..a_{k-1}; a_k = -1 implied
    Polynomial polynomial;
    ExactRational value_at_minus_order;      ///< p(-k)
    std::size_t witness_index = 0;           ///< least n* >= 1 with p(n*) != 0
    ExactRational residual;                  ///< sum_j a_j C_{n*+j} with a_k = -1

    friend bool operator==(const PolynomialCertificate&, const PolynomialCertificate&) = default;
};

/// Nonsingular Catalan window matrices for every order 0..order_bound.
struct HankelCertificate {
    std::size_t order_bound = 0;
    std::vector<HankelWitness> witnesses; ///< witnesses[k].order == k, least offset

    friend bool operator==(const HankelCertificate&, const HankelCertificate&) = default;
};

/// The generating function p/q forced by the candidate and C_1..C_k differs
/// from the Catalan series at `index`.
struct GfMismatchCertificate {
    std::size_t order = 0;
    std::vector<ExactRational> coefficients;
    Polynomial numerator;
    Polynomial denominator;
    std::size_t index = 0;          ///< first differing coefficient
    ExactRational expansion_value;  ///< coefficient of x^index in p/q
    ExactRational catalan_value;    ///< C_index

    friend bool operator==(const GfMismatchCertificate&, const GfMismatchCertificate&) = default;
};

using Certificate = std::variant<ParityCertificate, PolynomialCertificate, HankelCertificate, GfMismatchCertificate>;

/// "parity", "polynomial", "hankel" or "gf".
std::string certificate_kind(const Certificate& c);

struct Validation {
    bool valid = true;
    std::string reason;

    explicit operator bool() const noexcept { return valid; }
    static Validation ok() { return {}; }
    static Validation fail(std::string why) { return {false, std::move(why)}; }
};

/// Each validator checks the argument itself and that every field holds the
/// canonical choice (least odd index, least exponent, least offset, least
/// witness, first mismatch), so any altered field is rejected. When a
/// candidate is given, the certificate must be about that candidate.
Validation validate(const ParityCertificate& c, const RationalRecurrence* candidate = nullptr);
Validation validate(const PolynomialCertificate& c, const RationalRecurrence* candidate = nullptr);
Validation validate(const HankelCertificate& c, const RationalRecurrence* candidate = nullptr);
Validation validate(const GfMismatchCertificate& c, const RationalRecurrence* candidate = nullptr);
Validation validate(const Certificate& c, const RationalRecurrence* candidate = nullptr);

/// -(-1)_k (-2)_{2k}, the value every polynomial certificate must have at -k.
ExactInteger polynomial_value_at_minus_order(std::size_t k);

/// Smallest m with 2^(m-1) > k.
unsigned parity_window_exponent(std::size_t k);

} // namespace cfinite
