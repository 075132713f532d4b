#include "CLI11.hpp"

#include "cfinite/bfile.hpp"
#include "cfinite/commands.hpp"
#include "cfinite/errors.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace cfinite;
using namespace cfinite::cli;

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

int emit(const CommandResult& r, const std::string& output) {
    if (r.exit_code == kExitError) {
        std::cerr << r.text;
    } else {
        std::cout << r.text;
    }
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << '\n';
            return kExitError;
        }
        out << serialize(r.document);
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact C-finite sequence tools and Catalan non-recurrence certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    app.add_option("--output", output, "Write the structured document to this file");

    auto* catalan = app.add_subcommand("catalan", "Print Catalan numbers C_1..C_N as b-file lines");
    std::size_t terms = 12;
    std::string catalan_method = "closed";
    unsigned ballot_cap = kDefaultBallotCap;
    catalan->add_option("--terms,-n", terms, "Number of terms N")->check(CLI::PositiveNumber);
    catalan->add_option("--method", catalan_method, "ballot|convolution|closed|holonomic|all");
    catalan->add_option("--ballot-cap", ballot_cap, "Largest n for ballot enumeration")->check(CLI::Range(2u, kMaxBallotCap));

    auto* guess = app.add_subcommand("guess", "Guess a linear recurrence from data");
    std::string input;
    std::string inline_terms;
    std::size_t max_order = 8;
    std::optional<std::size_t> windows;
    guess->add_option("--input", input, "b-file path (\"-\" for stdin)");
    guess->add_option("terms", inline_terms, "Inline comma-separated terms");
    guess->add_option("--max-order", max_order, "Largest order K to try");
    guess->add_option("--windows", windows, "Number of window rows W");

    std::string spec;
    std::string init;
    auto* refute = app.add_subcommand("refute", "Refute a candidate recurrence for the Catalan numbers");
    std::vector<std::string> methods{"all"};
    std::size_t exact_cap = kDefaultExactCap;
    refute->add_option("coefficients,--coefficients", spec, "a_0,...,a_{k-1} as rationals p/q (\"\" for k = 0)");
    refute->add_option("--method", methods, "parity|poly|hankel|gf|all (repeatable)");
    refute->add_option("--exact-cap", exact_cap, "Largest exact index any engine may touch");

    auto* binet = app.add_subcommand("binet", "Power-sum form of a recurrence sequence");
    std::string zero_roots = "drop";
    binet->add_option("coefficients,--coefficients", spec, "a_0,...,a_{k-1}");
    binet->add_option("--init", init, "b_1,...,b_k")->required();
    binet->add_option("--zero-roots", zero_roots, "drop|forbid")->check(CLI::IsMember({"drop", "forbid"}));

    auto* gf = app.add_subcommand("gf", "Generating function p/q, or the Catalan series");
    std::size_t truncation = 12;
    gf->add_option("coefficients,--coefficients", spec, "a_0,...,a_{k-1}, or \"catalan\"");
    gf->add_option("--init", init, "b_1,...,b_k");
    gf->add_option("--truncation", truncation, "Number of series coefficients");

    auto* validate = app.add_subcommand("validate", "Re-check a serialized certificate document");
    validate->add_option("--input", input, "Document path (\"-\" or omitted for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (*catalan) {
            return emit(cmd_catalan(terms, parse_catalan_method(catalan_method), ballot_cap), output);
        }
        if (*guess) {
            Sequence seq("input", std::vector<ExactRational>{});
            std::vector<std::string> notes;
            if (!input.empty()) {
                IngestResult ingested = input == "-" ? parse_bfile(std::cin, "stdin") : ingest_bfile(input);
                seq = ingested.sequence;
                notes = ingested.notes;
            } else {
                seq = Sequence("input", parse_rational_list(inline_terms));
            }
            return emit(cmd_guess(seq, max_order, windows, notes), output);
        }
        if (*refute) {
            std::vector<Method> ms;
            for (const auto& m : methods) {
                if (m == "all") {
                    ms.assign(std::begin(kAllMethods), std::end(kAllMethods));
                } else {
                    ms.push_back(parse_method(m));
                }
            }
            return emit(cmd_refute(spec, ms, exact_cap), output);
        }
        if (*binet) {
            return emit(cmd_binet(spec, init, zero_roots == "forbid" ? ZeroRootPolicy::forbid : ZeroRootPolicy::drop),
                        output);
        }
        if (*gf) {
            return emit(cmd_gf(spec, init, truncation), output);
        }
        if (*validate) {
            std::string text;
            if (input.empty() || input == "-") {
                text = read_all(std::cin);
            } else {
                std::ifstream in(input);
                if (!in) {
                    return emit(error_result("validate", "cannot open " + input), output);
                }
                text = read_all(in);
            }
            return emit(cmd_validate(text), output);
        }
    } catch (const Error& e) {
        return emit(error_result(app.get_subcommands().front()->get_name(), e.what()), output);
    }
    return kExitError;
}
