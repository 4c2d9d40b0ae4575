// whitneyforms: construct Whitney forms, integrate forms over faces, and
// verify the characterization of Whitney forms with exact arithmetic.
//
// Exit codes: 0 success, 1 verification failure or internal violation,
// 2 usage or input error.

#include <CLI11.hpp>

#include <whitneyforms/characterize.hpp>
#include <whitneyforms/derham.hpp>
#include <whitneyforms/errors.hpp>
#include <whitneyforms/json_io.hpp>
#include <whitneyforms/render.hpp>
#include <whitneyforms/verification.hpp>
#include <whitneyforms/whitney.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace whitneyforms;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Input errors map to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { json, text, latex };

struct Common {
    std::optional<int> n;
    std::optional<int> k;
    Format format = Format::json;
};

struct CochainInput {
    std::string file;
    std::string inline_json;
    std::vector<std::string> faces;
};

std::string read_source(const std::string &path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_face_list(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error &) {
            throw UsageError("bad vertex list '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty vertex list");
    return out;
}

void check_shape(const Common &common, int n, int k) {
    if (common.n && *common.n != n)
        throw UsageError("--n " + std::to_string(*common.n) + " disagrees with input n=" + std::to_string(n));
    if (common.k && *common.k != k)
        throw UsageError("--k " + std::to_string(*common.k) + " disagrees with input k=" + std::to_string(k));
}

Cochain load_cochain(const Common &common, const CochainInput &input) {
    const int sources = int(!input.file.empty()) + int(!input.inline_json.empty()) + int(!input.faces.empty());
    if (sources != 1) throw UsageError("give exactly one of: an input file, --cochain, or --face");

    if (!input.faces.empty()) {
        if (!common.n) throw UsageError("--face needs --n");
        std::optional<Cochain> c;
        for (const auto &text : input.faces) {
            Face face(*common.n, parse_face_list(text));
            if (!c) c.emplace(*common.n, face.degree());
            c->add(face, Rational(1));
        }
        check_shape(common, c->ambient_dim(), c->degree());
        return *c;
    }
    const std::string text = input.file.empty() ? input.inline_json : read_source(input.file);
    Cochain c = cochain_from_json(parse_json(text));
    check_shape(common, c.ambient_dim(), c.degree());
    return c;
}

void print_form(const AffineForm &w, Format format) {
    switch (format) {
    case Format::json: std::cout << form_to_json(w).dump(2) << "\n"; break;
    case Format::text: std::cout << to_text(w) << "\n"; break;
    case Format::latex: std::cout << to_latex(w) << "\n"; break;
    }
}

void add_common(CLI::App *cmd, Common &common, bool with_k = true) {
    cmd->add_option("--n", common.n, "Ambient dimension of the standard simplex")->check(CLI::NonNegativeNumber);
    if (with_k) cmd->add_option("--k", common.k, "Form degree")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", common.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}, {"latex", Format::latex}},
            CLI::ignore_case));
}

void add_cochain_input(CLI::App *cmd, CochainInput &input) {
    cmd->add_option("input", input.file, "Cochain JSON file ('-' for stdin)");
    cmd->add_option("--cochain", input.inline_json, "Cochain as inline JSON");
    cmd->add_option("--face", input.faces, "Add 1 times a face, e.g. --face 1,2 (repeatable; needs --n)");
}

int run_whitney(const Common &common, const CochainInput &input) {
    print_form(whitney(load_cochain(common, input)), common.format);
    return 0;
}

int run_derham(const Common &common, const std::string &file, const std::string &inline_json) {
    if (file.empty() == inline_json.empty()) throw UsageError("give exactly one of: an input file or --form");
    const AffineForm w = form_from_json(parse_json(file.empty() ? inline_json : read_source(file)));
    check_shape(common, w.ambient_dim(), w.degree());
    const Cochain c = derham(w);
    if (common.format == Format::json) std::cout << cochain_to_json(c).dump(2) << "\n";
    else std::cout << to_text(c) << "\n";
    return 0;
}

int run_characterize(const Common &common, const CochainInput &input) {
    const Cochain c = load_cochain(common, input);
    const AffineForm solved = solve_characterization(c.ambient_dim(), c.degree(), c);
    const AffineForm expected = whitney(c);
    const bool matches = solved == expected;
    if (common.format == Format::json) {
        Json out = {{"form", form_to_json(solved)}, {"whitney", form_to_json(expected)}, {"matches_whitney", matches}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_form(solved, common.format);
        std::cout << (matches ? "matches W(c)" : "DIFFERS from W(c)") << "\n";
    }
    return matches ? 0 : kExitFailure;
}

int run_verify(const Common &common, int n_max, std::optional<int> k, int ceiling, const VerifyOptions &options) {
    if (n_max < 1) throw UsageError("--n-max must be at least 1");
    if (n_max > ceiling)
        throw UsageError("--n-max " + std::to_string(n_max) + " exceeds the ceiling " + std::to_string(ceiling));
    if (k && *k > n_max) throw UsageError("--k exceeds --n-max");

    const auto reports = verify_range(n_max, k.value_or(-1), options);
    bool all_passed = true;
    const CellReport *first_failure = nullptr;
    for (const auto &r : reports) {
        if (!r.passed() && !first_failure) first_failure = &r;
        all_passed = all_passed && r.passed();
    }

    if (common.format == Format::json) {
        Json cells = Json::array();
        for (const auto &r : reports) cells.push_back(report_to_json(r));
        std::cout << Json{{"n_max", n_max}, {"samples", options.samples}, {"seed", options.seed}, {"cells", cells},
                          {"passed", all_passed}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << " n  k  dimension  constant_pullback  derham_roundtrip  characterization  kernel_trivial  proof_trace\n";
        for (const auto &r : reports) {
            std::ostringstream line;
            line << std::setw(2) << r.n << " " << std::setw(2) << r.k;
            const int widths[] = {11, 19, 18, 18, 16, 13};
            for (std::size_t i = 0; i < r.checks.size(); ++i) {
                const auto &c = r.checks[i];
                line << std::setw(widths[i]) << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL");
            }
            std::cout << line.str() << "\n";
        }
        std::cout << (all_passed ? "all checks passed" : "verification FAILED") << "\n";
    }

    if (first_failure) {
        std::cerr << "first counterexample:\n" << report_to_json(*first_failure).dump(2) << "\n";
        return kExitFailure;
    }
    return 0;
}

int run_dims(const Common &common) {
    if (!common.n || *common.n < 1) throw UsageError("dims needs --n >= 1");
    const int n = *common.n;
    Json rows = Json::array();
    bool consistent = true;
    for (int k = 0; k <= n; ++k) {
        const long long unknowns = binomial(n, k) * (n + 1);
        const long long constraints = k * binomial(n + 1, k + 1);
        const long long faces = binomial(n + 1, k + 1);
        const auto computed = static_cast<long long>(lambda_e_dimension(n, k));
        consistent = consistent && computed == faces && unknowns - constraints == faces;
        rows.push_back({{"k", k},
                        {"affine_forms", unknowns},
                        {"constancy_conditions", constraints},
                        {"faces", faces},
                        {"lambda_e_dimension", computed}});
    }
    if (common.format == Format::json) {
        std::cout << Json{{"n", n}, {"rows", rows}, {"consistent", consistent}}.dump(2) << "\n";
    } else {
        std::cout << " k  binom(n,k)(n+1)  k*binom(n+1,k+1)  binom(n+1,k+1)  computed\n";
        for (const auto &row : rows)
            std::cout << std::setw(2) << row["k"].get<int>() << std::setw(17) << row["affine_forms"].get<long long>()
                      << std::setw(18) << row["constancy_conditions"].get<long long>() << std::setw(16)
                      << row["faces"].get<long long>() << std::setw(10) << row["lambda_e_dimension"].get<long long>()
                      << "\n";
    }
    return consistent ? 0 : kExitFailure;
}

int run_trace(const Common &common) {
    if (!common.n || !common.k) throw UsageError("trace needs --n and --k");
    const ProofTrace trace = proof_trace(*common.n, *common.k);
    if (common.format == Format::json) {
        std::cout << trace_to_json(trace).dump(2) << "\n";
        return 0;
    }
    auto verts = [](const Face &f) {
        std::string s = "[";
        for (std::size_t i = 0; i < f.vertices().size(); ++i) s += (i ? "," : "") + std::to_string(f.vertices()[i]);
        return s + "]";
    };
    std::cout << "stage 1 (coordinate faces)\n";
    for (const auto &step : trace.stage1) {
        std::cout << "  " << verts(step.face) << ":";
        for (const auto &label : step.killed) std::cout << " " << label;
        std::cout << "\n";
    }
    std::cout << "stage 2 (inclined faces)\n";
    for (const auto &step : trace.stage2) std::cout << "  " << verts(step.face) << ": " << step.killed << "\n";
    std::cout << (trace.complete ? "complete: every unknown eliminated" : "incomplete") << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Whitney forms on the standard simplex, with exact arithmetic"};
    app.require_subcommand(1);

    Common common;
    CochainInput cochain_input;

    auto *whitney_cmd = app.add_subcommand("whitney", "Print the Whitney form W(c) of a cochain");
    add_common(whitney_cmd, common);
    add_cochain_input(whitney_cmd, cochain_input);

    std::string form_file, form_inline;
    auto *derham_cmd = app.add_subcommand("derham", "Integrate an affine-coefficient form over every k-face");
    add_common(derham_cmd, common);
    derham_cmd->add_option("input", form_file, "Form JSON file ('-' for stdin)");
    derham_cmd->add_option("--form", form_inline, "Form as inline JSON");

    auto *characterize_cmd =
        app.add_subcommand("characterize", "Solve the characterization conditions and compare with W(c)");
    add_common(characterize_cmd, common);
    add_cochain_input(characterize_cmd, cochain_input);

    int n_max = 5;
    int ceiling = 5;
    std::optional<int> verify_k;
    VerifyOptions options;
    auto *verify_cmd = app.add_subcommand("verify", "Run every exact check for all (n, k) up to --n-max");
    verify_cmd->add_option("--n-max", n_max, "Largest dimension to check")->capture_default_str();
    verify_cmd->add_option("--k", verify_k, "Only check this degree")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--samples", options.samples, "Random cochains per (n, k)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", options.seed, "Seed for random cochains")->capture_default_str();
    verify_cmd->add_option("--ceiling", ceiling, "Refuse --n-max above this")->capture_default_str();
    verify_cmd->add_option("--format", common.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}}, CLI::ignore_case));

    auto *dims_cmd = app.add_subcommand("dims", "Tabulate the dimension count for every k");
    add_common(dims_cmd, common, false);

    auto *trace_cmd = app.add_subcommand("trace", "Replay the two-stage elimination for the kernel");
    add_common(trace_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*whitney_cmd) return run_whitney(common, cochain_input);
        if (*derham_cmd) return run_derham(common, form_file, form_inline);
        if (*characterize_cmd) return run_characterize(common, cochain_input);
        if (*verify_cmd) return run_verify(common, n_max, verify_k, ceiling, options);
        if (*dims_cmd) return run_dims(common);
        if (*trace_cmd) return run_trace(common);
    } catch (const TheoremViolation &e) {
        std::cerr << "internal violation: " << e.what() << "\n";
        return kExitFailure;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
