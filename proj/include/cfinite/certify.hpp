#pragma once

// Refutation engines: given any rational recurrence proposed for the Catalan
// numbers, build certificates that it fails. Every engine succeeds on every
// candidate; a failure to build a certificate is an InternalError.

#include "certificate.hpp"
#include "execution.hpp"
#include "recurrence.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cfinite {

/// Parity residuals are computed exactly when n + k is at most this.
inline constexpr std::size_t kDefaultExactCap = 5000;

enum class Method { parity, polynomial, hankel, gf };

/// Fixed output order of refute_all.
inline constexpr Method kAllMethods[] = {Method::parity, Method::polynomial, Method::hankel, Method::gf};

std::string to_string(Method m);
/// Accepts "parity", "poly"/"polynomial", "hankel", "gf"; throws InvalidInput.
Method parse_method(const std::string& name);

ParityCertificate refute_by_parity(const RationalRecurrence& candidate, std::size_t exact_cap = kDefaultExactCap);

/// For k = 0 the clearing polynomial is the constant -1 and the certificate
/// is the trivial residual -C_1 = -1 at n* = 1.
PolynomialCertificate refute_by_polynomial(const RationalRecurrence& candidate);

/// Nonzero Catalan window determinants for every order up to max_order.
HankelCertificate refute_by_hankel(std::size_t max_order, Execution exec = Execution::parallel);

GfMismatchCertificate refute_by_gf(const RationalRecurrence& candidate);

Certificate refute(const RationalRecurrence& candidate, Method method, std::size_t exact_cap = kDefaultExactCap);

struct RefutationBundle {
    RationalRecurrence candidate;
    std::vector<Certificate> certificates; ///< parity, polynomial, hankel (bound = k), gf

    friend bool operator==(const RefutationBundle&, const RefutationBundle&) = default;
};

/// All four engines. The parallel path runs them concurrently; the bundle is
/// identical to the serial one.
RefutationBundle refute_all(const RationalRecurrence& candidate, std::size_t exact_cap = kDefaultExactCap,
                            Execution exec = Execution::parallel);

/// refute_all over many candidates, parallel across candidates.
std::vector<RefutationBundle> refute_sweep(const std::vector<RationalRecurrence>& candidates,
                                           std::size_t exact_cap = kDefaultExactCap,
                                           Execution exec = Execution::parallel);

/// Every certificate in the bundle validated against the bundle's candidate.
Validation validate(const RefutationBundle& bundle);

} // namespace cfinite
