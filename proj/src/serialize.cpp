#include "cfinite/serialize.hpp"

#include "cfinite/errors.hpp"

#include <limits>
#include <sstream>

namespace cfinite {

namespace {

template <class T>
std::string join_tokens(const std::vector<T>& values) {
    std::string out;
    for (const auto& v : values) {
        out += ' ';
        out += to_string(v);
    }
    return out;
}

std::string poly_tokens(const Polynomial& p) { return join_tokens(p.coefficients()); }

void write_body(std::ostringstream& os, const ParityCertificate& c) {
    os << "coprime_vector" << join_tokens(c.coprime_vector) << '\n';
    os << "odd_index " << c.odd_index << '\n';
    os << "exponent " << c.exponent << '\n';
    os << "window_start " << c.window_start << '\n';
    os << "parity_table";
    for (bool b : c.parity_table) {
        os << ' ' << (b ? '1' : '0');
    }
    os << '\n';
    os << "residual " << (c.residual ? to_string(*c.residual) : "none") << '\n';
}

void write_body(std::ostringstream& os, const PolynomialCertificate& c) {
    os << "order " << c.order << '\n';
    os << "coefficients" << join_tokens(c.coefficients) << '\n';
    os << "polynomial" << poly_tokens(c.polynomial) << '\n';
    os << "value_at_minus_order " << to_string(c.value_at_minus_order) << '\n';
    os << "witness_index " << c.witness_index << '\n';
    os << "residual " << to_string(c.residual) << '\n';
}

void write_body(std::ostringstream& os, const HankelCertificate& c) {
    os << "order_bound " << c.order_bound << '\n';
    for (const auto& w : c.witnesses) {
        os << "witness " << w.order << ' ' << w.offset << ' ' << to_string(w.determinant) << '\n';
    }
}

void write_body(std::ostringstream& os, const GfMismatchCertificate& c) {
    os << "order " << c.order << '\n';
    os << "coefficients" << join_tokens(c.coefficients) << '\n';
    os << "numerator" << poly_tokens(c.numerator) << '\n';
    os << "denominator" << poly_tokens(c.denominator) << '\n';
    os << "index " << c.index << '\n';
    os << "expansion " << to_string(c.expansion_value) << '\n';
    os << "catalan " << to_string(c.catalan_value) << '\n';
}

void write_certificate(std::ostringstream& os, const Certificate& cert) {
    const std::string kind = certificate_kind(cert);
    os << "begin " << kind << '\n';
    std::visit([&os](const auto& c) { write_body(os, c); }, cert);
    os << "end " << kind << '\n';
}

// Cursor over the lines of a document.
class LineReader {
public:
    explicit LineReader(std::string_view text) {
        std::size_t start = 0;
        while (start < text.size()) {
            const auto nl = text.find('\n', start);
            if (nl == std::string_view::npos) {
                throw ParseError(lines_.size() + 1, "missing final newline");
            }
            lines_.push_back(text.substr(start, nl - start));
            start = nl + 1;
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    std::size_t line_number() const { return pos_ + 1; }

    std::string_view peek_key() const {
        if (done()) {
            return {};
        }
        const auto line = lines_[pos_];
        return line.substr(0, line.find(' '));
    }

    /// Tokens after `key` on the next line; the key must match exactly.
    std::vector<std::string_view> expect(std::string_view key) {
        if (done()) {
            throw ParseError(line_number(), "unexpected end of document, expected '" + std::string(key) + "'");
        }
        const auto line = lines_[pos_];
        std::vector<std::string_view> tokens;
        std::size_t start = 0;
        while (true) {
            const auto sp = line.find(' ', start);
            const auto tok = line.substr(start, sp == std::string_view::npos ? sp : sp - start);
            if (tok.empty()) {
                throw ParseError(line_number(), "empty token (stray space)");
            }
            tokens.push_back(tok);
            if (sp == std::string_view::npos) {
                break;
            }
            start = sp + 1;
        }
        if (tokens.front() != key) {
            throw ParseError(line_number(), "expected '" + std::string(key) + "', found '" +
                                                std::string(tokens.front()) + "'");
        }
        tokens.erase(tokens.begin());
        ++pos_;
        return tokens;
    }

    /// Rest of the line after "key "; used for free-text payload values.
    std::pair<std::string, std::string> payload() {
        const auto line = lines_[pos_];
        const auto first = line.find(' ');
        const auto second = first == std::string_view::npos ? first : line.find(' ', first + 1);
        if (second == std::string_view::npos || second == first + 1) {
            throw ParseError(line_number(), "payload needs a key and a value");
        }
        ++pos_;
        return {std::string(line.substr(first + 1, second - first - 1)), std::string(line.substr(second + 1))};
    }

    std::string_view single(std::string_view key) {
        const std::size_t ln = line_number();
        const auto t = expect(key);
        if (t.size() != 1) {
            throw ParseError(ln, "'" + std::string(key) + "' takes exactly one value");
        }
        return t.front();
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t pos_ = 0;
};

template <class Fn>
auto at_line(std::size_t line, Fn fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        if (e.line() != 0) {
            throw;
        }
        throw ParseError(line, e.what());
    }
}

std::size_t parse_index(LineReader& r, std::string_view key) {
    const std::size_t ln = r.line_number();
    return at_line(ln, [&] {
        const ExactInteger z = parse_integer(r.single(key));
        if (z < 0 || z > std::numeric_limits<unsigned long>::max()) {
            throw ParseError(ln, std::string(key) + " out of range");
        }
        return static_cast<std::size_t>(z.get_ui());
    });
}

ExactInteger parse_integer_field(std::string_view tok, std::size_t ln) {
    return at_line(ln, [&] { return parse_integer(tok); });
}

ExactRational parse_rational_field(std::string_view tok, std::size_t ln) {
    return at_line(ln, [&] { return parse_rational(tok); });
}

std::vector<ExactRational> parse_rational_tokens(LineReader& r, std::string_view key) {
    const std::size_t ln = r.line_number();
    std::vector<ExactRational> out;
    for (auto t : r.expect(key)) {
        out.push_back(parse_rational_field(t, ln));
    }
    return out;
}

Polynomial parse_polynomial(LineReader& r, std::string_view key) {
    const std::size_t ln = r.line_number();
    auto coeffs = parse_rational_tokens(r, key);
    if (!coeffs.empty() && coeffs.back() == 0) {
        throw ParseError(ln, "polynomial has a trailing zero coefficient");
    }
    return Polynomial(std::move(coeffs));
}

ParityCertificate parse_parity(LineReader& r) {
    ParityCertificate c;
    const std::size_t ln = r.line_number();
    for (auto t : r.expect("coprime_vector")) {
        c.coprime_vector.push_back(parse_integer_field(t, ln));
    }
    c.odd_index = parse_index(r, "odd_index");
    const std::size_t ln_exp = r.line_number();
    const std::size_t m = parse_index(r, "exponent");
    if (m > 64) {
        throw ParseError(ln_exp, "exponent out of range");
    }
    c.exponent = static_cast<unsigned>(m);
    c.window_start = parse_index(r, "window_start");
    const std::size_t ln_tab = r.line_number();
    for (auto t : r.expect("parity_table")) {
        if (t != "0" && t != "1") {
            throw ParseError(ln_tab, "parity entries are 0 or 1");
        }
        c.parity_table.push_back(t == "1");
    }
    const std::size_t ln_res = r.line_number();
    const auto res = r.single("residual");
    if (res != "none") {
        c.residual = parse_integer_field(res, ln_res);
    }
    return c;
}

PolynomialCertificate parse_polynomial_cert(LineReader& r) {
    PolynomialCertificate c;
    c.order = parse_index(r, "order");
    c.coefficients = parse_rational_tokens(r, "coefficients");
    c.polynomial = parse_polynomial(r, "polynomial");
    const std::size_t ln = r.line_number();
    c.value_at_minus_order = parse_rational_field(r.single("value_at_minus_order"), ln);
    c.witness_index = parse_index(r, "witness_index");
    const std::size_t ln_res = r.line_number();
    c.residual = parse_rational_field(r.single("residual"), ln_res);
    return c;
}

HankelCertificate parse_hankel(LineReader& r) {
    HankelCertificate c;
    c.order_bound = parse_index(r, "order_bound");
    while (r.peek_key() == "witness") {
        const std::size_t ln = r.line_number();
        const auto t = r.expect("witness");
        if (t.size() != 3) {
            throw ParseError(ln, "witness needs order, offset and determinant");
        }
        const ExactInteger order = parse_integer_field(t[0], ln);
        const ExactInteger offset = parse_integer_field(t[1], ln);
        if (order < 0 || offset < 0 || !order.fits_ulong_p() || !offset.fits_ulong_p()) {
            throw ParseError(ln, "witness order/offset out of range");
        }
        c.witnesses.push_back(HankelWitness{order.get_ui(), offset.get_ui(), parse_rational_field(t[2], ln)});
    }
    return c;
}

GfMismatchCertificate parse_gf(LineReader& r) {
    GfMismatchCertificate c;
    c.order = parse_index(r, "order");
    c.coefficients = parse_rational_tokens(r, "coefficients");
    c.numerator = parse_polynomial(r, "numerator");
    c.denominator = parse_polynomial(r, "denominator");
    c.index = parse_index(r, "index");
    const std::size_t ln = r.line_number();
    c.expansion_value = parse_rational_field(r.single("expansion"), ln);
    const std::size_t ln2 = r.line_number();
    c.catalan_value = parse_rational_field(r.single("catalan"), ln2);
    return c;
}

} // namespace

std::string serialize(const Certificate& cert) {
    std::ostringstream os;
    write_certificate(os, cert);
    return os.str();
}

std::string serialize(const Document& doc) {
    std::ostringstream os;
    os << "schema " << kSchemaTag << '\n';
    os << "command " << doc.command << '\n';
    os << "status " << doc.status << '\n';
    for (const auto& [key, value] : doc.payload) {
        os << "payload " << key << ' ' << value << '\n';
    }
    if (doc.candidate) {
        os << "candidate" << join_tokens(doc.candidate->coefficients()) << '\n';
    }
    for (const auto& c : doc.certificates) {
        write_certificate(os, c);
    }
    return os.str();
}

Document parse_document(std::string_view text) {
    LineReader r(text);
    Document doc;
    const std::size_t ln = r.line_number();
    if (r.single("schema") != kSchemaTag) {
        throw ParseError(ln, "unsupported schema, expected " + std::string(kSchemaTag));
    }
    doc.command = std::string(r.single("command"));
    doc.status = std::string(r.single("status"));
    while (r.peek_key() == "payload") {
        doc.payload.push_back(r.payload());
    }
    if (r.peek_key() == "candidate") {
        doc.candidate = rational_recurrence(parse_rational_tokens(r, "candidate"));
    }
    while (!r.done()) {
        const std::size_t begin_line = r.line_number();
        const std::string kind(r.single("begin"));
        if (kind == "parity") {
            doc.certificates.emplace_back(parse_parity(r));
        } else if (kind == "polynomial") {
            doc.certificates.emplace_back(parse_polynomial_cert(r));
        } else if (kind == "hankel") {
            doc.certificates.emplace_back(parse_hankel(r));
        } else if (kind == "gf") {
            doc.certificates.emplace_back(parse_gf(r));
        } else {
            throw ParseError(begin_line, "unknown certificate kind '" + kind + "'");
        }
        const std::size_t end_line = r.line_number();
        if (r.single("end") != kind) {
            throw ParseError(end_line, "mismatched end for '" + kind + "'");
        }
    }
    return doc;
}

Validation validate_document(std::string_view text) {
    Document doc;
    try {
        doc = parse_document(text);
    } catch (const Error& e) {
        return Validation::fail(std::string("parse error: ") + e.what());
    }
    if (doc.certificates.empty()) {
        return Validation::fail("document carries no certificates");
    }
    if (!doc.candidate) {
        return Validation::fail("document carries certificates but no candidate");
    }
    for (const auto& c : doc.certificates) {
        if (auto v = validate(c, &*doc.candidate); !v) {
            return Validation::fail(certificate_kind(c) + ": " + v.reason);
        }
    }
    return Validation::ok();
}

} // namespace cfinite
