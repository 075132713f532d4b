#pragma once

// b-files: optional '#' comment lines, data lines "<index> <value>" in ASCII
// decimal with strictly consecutive indices. Sequences are re-indexed to
// start at 1; classical offsets (e.g. C_0 = 1 for Catalan) are the caller's
// concern.

#include "exact.hpp"
#include "sequence.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cfinite {

struct BFileRecord {
    ExactInteger index;
    ExactInteger value;
};

struct IngestResult {
    Sequence sequence;
    std::vector<BFileRecord> records;
    ExactInteger first_index; ///< index of the first record in the file
    std::vector<std::string> notes;
};

/// Throws ParseError (with line number) on malformed lines, gaps, duplicate
/// or decreasing indices, and on input with no data lines.
IngestResult parse_bfile(std::istream& in, std::string name = "bfile");
IngestResult ingest_bfile(const std::string& path);

/// Writes "n b_n" lines for n = 1..size, preceded by '#' comment lines.
/// Throws InvalidInput for non-integral terms.
void write_bfile(std::ostream& out, const Sequence& seq, const std::vector<std::string>& comments = {});

} // namespace cfinite
