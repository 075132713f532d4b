#pragma once

// The command layer behind the cfinite executable. Each command returns its
// human-readable rendering, the structured document, and the exit status.

#include "catalan.hpp"
#include "certify.hpp"
#include "serialize.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cfinite::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,   ///< bad input, parse errors, cap violations
    kExitInvalid = 2, ///< a certificate failed validation or methods disagreed
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string text;
    Document document;
};

enum class CatalanMethod { ballot, convolution, closed, holonomic, all };
CatalanMethod parse_catalan_method(const std::string& name);

/// Terms printed as b-file lines; `all` cross-checks every method (ballot
/// only up to its cap) and reports agreement.
CommandResult cmd_catalan(std::size_t count, CatalanMethod method, unsigned ballot_cap = kDefaultBallotCap);

/// windows defaults to min(2K + 4, size - K).
CommandResult cmd_guess(const Sequence& seq, std::size_t max_order, std::optional<std::size_t> windows = {},
                        const std::vector<std::string>& notes = {});

/// `spec` is "a_0,...,a_{k-1}" ("" for k = 0). Certificates are validated
/// before they are reported.
CommandResult cmd_refute(std::string_view spec, const std::vector<Method>& methods,
                         std::size_t exact_cap = kDefaultExactCap);

enum class ZeroRootPolicy { drop, forbid };

CommandResult cmd_binet(std::string_view spec, std::string_view initial, ZeroRootPolicy zero_roots = ZeroRootPolicy::drop);

/// `spec` "catalan" prints the truncated Catalan series and the quadratic
/// relation check; otherwise p/q for the recurrence and initial terms.
CommandResult cmd_gf(std::string_view spec, std::string_view initial, std::size_t truncation = 12);

/// Re-validates a serialized document.
CommandResult cmd_validate(std::string_view document_text);

/// Shared error rendering for the executable.
CommandResult error_result(const std::string& command, const std::string& message);

} // namespace cfinite::cli
