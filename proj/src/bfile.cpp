#include "cfinite/bfile.hpp"

#include "cfinite/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace cfinite {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

IngestResult parse_bfile(std::istream& in, std::string name) {
    std::vector<BFileRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw ParseError(line_no, "expected '<index> <value>'");
        }
        const auto index_text = line.substr(0, sep);
        const auto value_text = trim(line.substr(sep));
        BFileRecord rec;
        try {
            rec.index = parse_integer(index_text);
            rec.value = parse_integer(value_text);
        } catch (const ParseError&) {
            throw ParseError(line_no, "malformed data line '" + std::string(line) + "'");
        }
        if (!records.empty()) {
            const ExactInteger expected = records.back().index + 1;
            if (rec.index == records.back().index) {
                throw ParseError(line_no, "duplicate index " + rec.index.get_str());
            }
            if (rec.index != expected) {
                throw ParseError(line_no, "index " + rec.index.get_str() + " breaks the run (expected " +
                                              expected.get_str() + ")");
            }
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) {
        throw ParseError(0, "no data");
    }
    std::vector<ExactInteger> values;
    values.reserve(records.size());
    for (const auto& r : records) {
        values.push_back(r.value);
    }
    IngestResult out{Sequence(std::move(name), values), std::move(records), 0, {}};
    out.first_index = out.records.front().index;
    if (out.first_index != 1) {
        const ExactInteger shift = 1 - out.first_index;
        out.notes.push_back("re-indexed from " + out.first_index.get_str() + " to 1 (shift " +
                            (shift > 0 ? "+" : "") + shift.get_str() + ")");
    }
    return out;
}

IngestResult ingest_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open b-file '" + path + "'");
    }
    return parse_bfile(in, path);
}

void write_bfile(std::ostream& out, const Sequence& seq, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        out << "# " << c << '\n';
    }
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        if (!is_integer(seq[n])) {
            throw InvalidInput("b-files hold integers; term " + std::to_string(n) + " is " + to_string(seq[n]));
        }
        out << n << ' ' << seq[n].get_num().get_str() << '\n';
    }
}

} // namespace cfinite
