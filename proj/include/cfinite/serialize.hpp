#pragma once

// Line-oriented text documents, schema "cfinite-cert/1":
//
//   schema cfinite-cert/1
//   command refute
//   status ok
//   payload <key> <free text to end of line>     (zero or more)
//   candidate <a_0> ... <a_{k-1}>                (optional)
//   begin <kind>
//   <field> <token> ...                          (fixed order per kind)
//   end <kind>
//
// Integers are decimal, rationals "num/den" (bare "num" when den = 1), lists
// are single-space separated. Parsing is strict: any deviation from the form
// the serializer writes is a ParseError, so parse(serialize(d)) == d and
// serialize(parse(s)) == s for every accepted s.

#include "certificate.hpp"
#include "recurrence.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfinite {

inline constexpr std::string_view kSchemaTag = "cfinite-cert/1";

struct Document {
    std::string command;
    std::string status = "ok";
    std::vector<std::pair<std::string, std::string>> payload;
    std::optional<RationalRecurrence> candidate;
    std::vector<Certificate> certificates;

    friend bool operator==(const Document&, const Document&) = default;
};

std::string serialize(const Document& doc);
std::string serialize(const Certificate& cert);

/// Throws ParseError with the offending line number.
Document parse_document(std::string_view text);

/// Parses then validates every certificate against the document's candidate.
/// Parse errors are reported as invalid.
Validation validate_document(std::string_view text);

} // namespace cfinite
