#include "cfinite/exact.hpp"

#include "cfinite/errors.hpp"

#include <cctype>

namespace cfinite {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

bool is_canonical(const ExactRational& q) {
    if (q.get_den() <= 0) {
        return false;
    }
    ExactInteger g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

namespace {

bool is_strict_decimal(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
        if (s == "0") {
            return false;
        }
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return s.size() == 1 || s.front() != '0';
}

bool is_loose_decimal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

ExactInteger from_decimal(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return ExactInteger(std::string(s), 10);
}

} // namespace

ExactInteger parse_integer(std::string_view text) {
    if (!is_strict_decimal(text)) {
        throw ParseError(0, "malformed integer '" + std::string(text) + "'");
    }
    return from_decimal(text);
}

ExactRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRational(parse_integer(text));
    }
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    if (!is_strict_decimal(num_text) || !is_strict_decimal(den_text) || den_text.front() == '-') {
        throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    }
    ExactRational q(from_decimal(num_text), from_decimal(den_text));
    if (q.get_den() <= 1 || !is_canonical(q)) {
        throw ParseError(0, "non-canonical rational '" + std::string(text) + "'");
    }
    return q;
}

ExactRational parse_rational_lenient(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_loose_decimal(num_text)) {
        throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return ExactRational(from_decimal(num_text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!is_loose_decimal(den_text)) {
        throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    }
    const ExactInteger den = from_decimal(den_text);
    if (den == 0) {
        throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(from_decimal(num_text), den);
}

std::vector<ExactRational> parse_rational_list(std::string_view text) {
    std::vector<ExactRational> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational_lenient(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string to_string(const ExactInteger& z) { return z.get_str(10); }

std::string to_string(const ExactRational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str(10);
    }
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string join(const std::vector<ExactRational>& values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += to_string(values[i]);
    }
    return out;
}

std::string join(const std::vector<ExactInteger>& values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += to_string(values[i]);
    }
    return out;
}

ExactInteger lcm_of_denominators(const std::vector<ExactRational>& values) {
    ExactInteger l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

} // namespace cfinite
