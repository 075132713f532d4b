#include "cfinite/commands.hpp"

#include "cfinite/bfile.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/powersum.hpp"
#include "cfinite/series.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cfinite::cli {

namespace {

std::string format_complex(Complex z, int digits = 10) {
    std::ostringstream os;
    os << std::setprecision(digits) << z.real();
    if (z.imag() != 0) {
        os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

std::string format_double(double d, int digits = 10) {
    std::ostringstream os;
    os << std::setprecision(digits) << d;
    return os.str();
}

} // namespace

CatalanMethod parse_catalan_method(const std::string& name) {
    if (name == "ballot") {
        return CatalanMethod::ballot;
    }
    if (name == "convolution") {
        return CatalanMethod::convolution;
    }
    if (name == "closed") {
        return CatalanMethod::closed;
    }
    if (name == "holonomic") {
        return CatalanMethod::holonomic;
    }
    if (name == "all") {
        return CatalanMethod::all;
    }
    throw InvalidInput("unknown Catalan method '" + name + "' (ballot|convolution|closed|holonomic|all)");
}

CommandResult error_result(const std::string& command, const std::string& message) {
    CommandResult r;
    r.exit_code = kExitError;
    r.text = "error: " + message + "\n";
    r.document.command = command;
    r.document.status = "error";
    r.document.payload.emplace_back("message", message);
    return r;
}

CommandResult cmd_catalan(std::size_t count, CatalanMethod method, unsigned ballot_cap) {
    CommandResult r;
    r.document.command = "catalan";
    if (count < 1) {
        return error_result("catalan", "--terms must be at least 1");
    }
    std::vector<std::string> comments;
    std::vector<ExactInteger> terms;
    auto closed_terms = [count] { return catalan_closed_table(count); };
    auto seq_terms = [](const Sequence& s) {
        std::vector<ExactInteger> v;
        for (const auto& q : s.terms()) {
            v.push_back(q.get_num());
        }
        return v;
    };
    try {
        switch (method) {
        case CatalanMethod::ballot: {
            if (count > ballot_cap) {
                return error_result("catalan", "ballot enumeration is capped at n = " + std::to_string(ballot_cap) +
                                                   "; use --method closed for more terms or raise --ballot-cap");
            }
            terms.emplace_back(1); // C_1: the enumeration is defined from n = 2
            for (unsigned n = 2; n <= count; ++n) {
                terms.push_back(catalan_ballot(n, ballot_cap));
            }
            comments.push_back("C_1 = 1 by definition; C_2.. by enumerating ballot words");
            break;
        }
        case CatalanMethod::convolution:
            terms = seq_terms(catalan_convolution(count));
            break;
        case CatalanMethod::closed:
            terms = closed_terms();
            break;
        case CatalanMethod::holonomic:
            terms = seq_terms(catalan_holonomic(count));
            break;
        case CatalanMethod::all: {
            terms = closed_terms();
            const auto conv = seq_terms(catalan_convolution(count));
            const auto holo = seq_terms(catalan_holonomic(count));
            bool agree = conv == terms && holo == terms;
            const std::size_t ballot_top = std::min<std::size_t>(count, ballot_cap);
            for (unsigned n = 2; n <= ballot_top && agree; ++n) {
                agree = catalan_ballot(n, ballot_cap) == terms[n - 1];
            }
            std::string methods = "convolution, closed, holonomic";
            if (ballot_top >= 2) {
                methods += ", ballot (n <= " + std::to_string(ballot_top) + ")";
            }
            if (count > ballot_cap) {
                comments.push_back("ballot skipped above cap n = " + std::to_string(ballot_cap));
            }
            comments.push_back(agree ? "all methods agree: " + methods : "METHODS DISAGREE: " + methods);
            r.document.payload.emplace_back("agreement", agree ? "yes" : "no");
            if (!agree) {
                r.exit_code = kExitInvalid;
                r.document.status = "disagreement";
            }
            break;
        }
        }
    } catch (const Error& e) {
        return error_result("catalan", e.what());
    }
    std::ostringstream os;
    write_bfile(os, Sequence("catalan", terms), comments);
    r.text = os.str();
    r.document.payload.emplace_back("terms", std::to_string(count));
    r.document.payload.emplace_back("values", join(terms));
    return r;
}

CommandResult cmd_guess(const Sequence& seq, std::size_t max_order, std::optional<std::size_t> windows,
                        const std::vector<std::string>& notes) {
    CommandResult r;
    r.document.command = "guess";
    std::ostringstream os;
    for (const auto& n : notes) {
        os << "note: " << n << '\n';
        r.document.payload.emplace_back("note", n);
    }
    std::size_t w = 0;
    if (windows) {
        w = *windows;
    } else {
        if (seq.size() < 2 * max_order + 1) {
            return error_result("guess", "need at least " + std::to_string(2 * max_order + 1) + " terms for order " +
                                             std::to_string(max_order) + ", have " + std::to_string(seq.size()));
        }
        w = std::min(default_window_count(max_order), seq.size() - max_order);
    }
    std::optional<RationalRecurrence> rec;
    try {
        rec = guess_recurrence(seq, max_order, w);
    } catch (const Error& e) {
        return error_result("guess", e.what());
    }
    r.document.payload.emplace_back("terms", std::to_string(seq.size()));
    r.document.payload.emplace_back("max_order", std::to_string(max_order));
    r.document.payload.emplace_back("windows", std::to_string(w));
    if (rec) {
        const std::size_t last = seq.size() - rec->order();
        os << "order " << rec->order() << ": " << to_string(*rec) << '\n';
        os << "coefficients: " << join(rec->coefficients(), ", ") << '\n';
        os << "verified on available data (n = 1.." << last << ")\n";
        r.document.payload.emplace_back("result", "found");
        r.document.payload.emplace_back("order", std::to_string(rec->order()));
        r.document.payload.emplace_back("coefficients", join(rec->coefficients()));
        r.document.payload.emplace_back("verified_range", "1.." + std::to_string(last));
        r.document.candidate = *rec;
    } else {
        os << "no recurrence of order <= " << max_order << " on supplied data\n";
        r.document.payload.emplace_back("result", "absent");
        const auto witnesses = hankel_witnesses(seq, max_order);
        for (const auto& wit : witnesses) {
            if (!wit) {
                continue;
            }
            os << "hankel witness: order " << wit->order << ", offset " << wit->offset << ", det "
               << to_string(wit->determinant) << '\n';
            r.document.payload.emplace_back("hankel_witness", std::to_string(wit->order) + " " +
                                                                  std::to_string(wit->offset) + " " +
                                                                  to_string(wit->determinant));
        }
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_refute(std::string_view spec, const std::vector<Method>& methods, std::size_t exact_cap) {
    CommandResult r;
    r.document.command = "refute";
    RationalRecurrence candidate = rational_recurrence({});
    try {
        candidate = rational_recurrence(parse_rational_list(spec));
    } catch (const Error& e) {
        return error_result("refute", std::string("malformed coefficient list: ") + e.what());
    }
    r.document.candidate = candidate;
    std::vector<std::string> names;
    std::ostringstream os;
    os << "candidate: " << to_string(candidate) << '\n';
    bool all_valid = true;
    try {
        for (Method m : kAllMethods) {
            if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
                continue;
            }
            Certificate c = refute(candidate, m, exact_cap);
            const Validation v = validate(c, &candidate);
            names.push_back(to_string(m));
            os << to_string(m) << ": " << (v ? "certificate valid" : "CERTIFICATE INVALID: " + v.reason) << '\n';
            all_valid = all_valid && v.valid;
            r.document.certificates.push_back(std::move(c));
        }
    } catch (const Error& e) {
        return error_result("refute", e.what());
    }
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i) {
        joined += (i ? "," : "") + names[i];
    }
    r.document.payload.emplace_back("methods", joined);
    r.document.payload.emplace_back("verdict", all_valid ? "refuted" : "invalid");
    if (!all_valid) {
        r.exit_code = kExitInvalid;
        r.document.status = "invalid";
    }
    os << (all_valid ? "refuted: the candidate is not a recurrence for the Catalan numbers\n"
                     : "some certificates failed validation\n");
    os << serialize(r.document);
    r.text = os.str();
    return r;
}

CommandResult cmd_binet(std::string_view spec, std::string_view initial, ZeroRootPolicy zero_roots) {
    CommandResult r;
    r.document.command = "binet";
    std::ostringstream os;
    try {
        const RationalRecurrence rec = rational_recurrence(parse_rational_list(spec));
        const auto init = parse_rational_list(initial);
        if (zero_roots == ZeroRootPolicy::forbid && rec.order() > 0 && rec.coefficients().front() == 0) {
            return error_result("binet", "characteristic polynomial has root 0 (a_0 = 0) and --zero-roots forbid is set");
        }
        const PowerSum ps = binet_form(rec, init);
        os << "characteristic polynomial: " << characteristic_polynomial(rec).to_string() << '\n';
        for (const auto& note : ps.notes()) {
            os << "note: " << note << '\n';
            r.document.payload.emplace_back("note", note);
        }
        if (ps.empty()) {
            os << "power sum: empty (the sequence is 0 from n = " << ps.valid_from() << ")\n";
        }
        for (const auto& t : ps.terms()) {
            std::string root = t.exact_root ? to_string(*t.exact_root) + " (exact)" : format_complex(t.root);
            std::string poly;
            if (t.exact_poly) {
                poly = t.exact_poly->to_string("n");
            } else {
                for (std::size_t i = 0; i < t.poly.size(); ++i) {
                    poly += (i ? " + (" : "(") + format_complex(t.poly[i]) + ")" + (i ? "*n^" + std::to_string(i) : "");
                }
            }
            os << "root " << root << ", polynomial " << poly << '\n';
            r.document.payload.emplace_back("root", root);
            r.document.payload.emplace_back("polynomial", poly);
        }
        if (!ps.empty()) {
            const DominantPart dp = dominant_part(ps);
            os << "dominant part: s = " << dp.s << ", alpha = " << format_double(dp.alpha) << ", l = " << dp.l()
               << '\n';
            r.document.payload.emplace_back("dominant", "s=" + std::to_string(dp.s) + " alpha=" +
                                                            format_double(dp.alpha) + " l=" + std::to_string(dp.l()));
        }
        const std::size_t check_to = 20;
        const Sequence direct = iterate(rec, init, check_to);
        double max_error = 0;
        bool exact_ok = true;
        for (std::size_t n = ps.valid_from(); n <= check_to; ++n) {
            const auto v = evaluate_powersum(ps, n);
            max_error = std::max(max_error, std::abs(v.approx - Complex(direct[n].get_d())));
            if (v.exact) {
                exact_ok = exact_ok && *v.exact == direct[n];
            }
        }
        const bool exact = ps.exact();
        const bool ok = exact ? exact_ok : max_error < 1e-6 * std::max(1.0, std::abs(direct[check_to].get_d()));
        os << "reconstruction n = " << ps.valid_from() << ".." << check_to << ": "
           << (exact ? (exact_ok ? "exact match" : "EXACT MISMATCH") : "max error " + format_double(max_error, 3))
           << '\n';
        r.document.payload.emplace_back("reconstruction", exact ? (exact_ok ? "exact" : "mismatch")
                                                                : "max_error=" + format_double(max_error, 3));
        if (!ok) {
            r.exit_code = kExitInvalid;
            r.document.status = "mismatch";
        }
    } catch (const Nonconvergence& e) {
        return error_result("binet", std::string("root finder did not converge: ") + e.what());
    } catch (const Error& e) {
        return error_result("binet", e.what());
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_gf(std::string_view spec, std::string_view initial, std::size_t truncation) {
    CommandResult r;
    r.document.command = "gf";
    std::ostringstream os;
    try {
        if (spec == "catalan") {
            const TruncatedSeries c = catalan_gf(truncation);
            std::vector<ExactRational> coeffs(c.coefficients().begin() + 1, c.coefficients().end());
            const TruncatedSeries two_c_minus_1 = c * ExactRational(2) - TruncatedSeries(Polynomial::constant(1), truncation);
            const bool ok = two_c_minus_1 * two_c_minus_1 == TruncatedSeries(Polynomial{1, -4}, truncation);
            os << "C(x) coefficients 1.." << truncation << ": " << join(coeffs, ", ") << '\n';
            os << "(2C-1)^2 = 1-4x: " << (ok ? "OK" : "FAILED") << '\n';
            r.document.payload.emplace_back("coefficients", join(coeffs));
            r.document.payload.emplace_back("quadratic_relation", ok ? "ok" : "failed");
            if (!ok) {
                r.exit_code = kExitInvalid;
                r.document.status = "failed";
            }
        } else {
            const RationalRecurrence rec = rational_recurrence(parse_rational_list(spec));
            const RationalFunction rf = rational_gf(rec, parse_rational_list(initial));
            const TruncatedSeries s = expand_rational(rf, truncation);
            os << rf.to_string() << '\n';
            os << "expansion to x^" << truncation << ": " << join(s.coefficients(), ", ") << '\n';
            r.document.payload.emplace_back("gf", rf.to_string());
            r.document.payload.emplace_back("expansion", join(s.coefficients()));
        }
    } catch (const Error& e) {
        return error_result("gf", e.what());
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_validate(std::string_view document_text) {
    CommandResult r;
    r.document.command = "validate";
    const Validation v = validate_document(document_text);
    if (v) {
        r.text = "valid\n";
        r.document.payload.emplace_back("verdict", "valid");
    } else {
        r.text = "INVALID: " + v.reason + "\n";
        r.exit_code = kExitInvalid;
        r.document.status = "invalid";
        r.document.payload.emplace_back("verdict", "invalid");
        r.document.payload.emplace_back("reason", v.reason);
    }
    return r;
}

} // namespace cfinite::cli
