#include "epset/app.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <linoep/crossterm.hpp>
#include <linoep/gsom.hpp>
#include <linoep/io.hpp>
#include <linoep/linoep.hpp>

#include "epset/report.hpp"

namespace epset {

namespace {

// Input caps of the tool; the library itself imposes none.
constexpr std::size_t kMaxVectors = 64;
constexpr std::size_t kMaxDimension = 65536;

struct CommandOptions {
    std::string input;
    std::string format;  // "", "csv" or "json"
    double tol = linoep::kDefaultTol;
    std::string output;
    std::string perm;
    std::size_t limit_n = linoep::kMaxPermutationSize;  // sweep only
};

struct GenOptions {
    std::string family;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string output;
};

std::optional<linoep::SetFormat> parse_format(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return name == "json" ? linoep::SetFormat::Json : linoep::SetFormat::Csv;
}

std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t n) {
    std::vector<std::size_t> indices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            text.substr(pos, comma == std::string::npos ? text.size() - pos
                                                        : comma - pos);
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("--perm: invalid index '" + token + "'");
        }
        indices.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (indices.size() != n) {
        throw std::invalid_argument("--perm lists " + std::to_string(indices.size()) +
                                    " indices for " + std::to_string(n) + " vectors");
    }
    return indices;
}

linoep::VectorSet load_input(const CommandOptions& opt) {
    linoep::VectorSet set =
        linoep::read_vector_set(opt.input, parse_format(opt.format));
    if (set.size() > kMaxVectors) {
        throw std::invalid_argument("input has " + std::to_string(set.size()) +
                                    " vectors; the CLI accepts at most " +
                                    std::to_string(kMaxVectors));
    }
    if (set.dim() > kMaxDimension) {
        throw std::invalid_argument("input dimension " + std::to_string(set.dim()) +
                                    " exceeds the CLI cap of " +
                                    std::to_string(kMaxDimension));
    }
    if (!opt.perm.empty()) {
        set = set.permuted(parse_permutation(opt.perm, set.size()));
    }
    return set;
}

void write_text(const std::string& text, const std::string& output_path,
                std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw linoep::FileError("cannot write '" + output_path + "'");
    file << text;
}

void add_common_options(CLI::App* cmd, CommandOptions& opt, bool with_perm) {
    cmd->add_option("--input", opt.input, "Vector set file, CSV or JSON")
        ->required();
    cmd->add_option("--format", opt.format,
                    "Input format override (default: by file extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tol", opt.tol, "Relative tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", opt.output,
                    "Write the report here instead of standard output");
    if (with_perm) {
        cmd->add_option("--perm", opt.perm,
                        "Comma-separated 0-based indices; reorders the input "
                        "before the run");
    }
}

std::string run_command(const std::string& name, const CommandOptions& opt) {
    const linoep::VectorSet input = load_input(opt);
    if (name == "gsom") {
        return gsom_report(input, linoep::gsom_transform(input, opt.tol), opt.tol);
    }
    if (name == "linoep" || name == "noep") {
        linoep::LinoepResult result = linoep::linoep_transform(input, opt.tol);
        result = linoep::noep_extend(std::move(result), linoep::sum_vectors(input),
                                     opt.tol);
        return name == "linoep" ? linoep_report(input, result, opt.tol)
                                : noep_report(input, result, opt.tol);
    }
    if (name == "analyze") {
        return analyze_report(input, linoep::classify(input, opt.tol), opt.tol);
    }
    // sweep
    if (input.size() > opt.limit_n) {
        throw linoep::TooManyPermutations(
            "sweep refused: input has " + std::to_string(input.size()) +
            " vectors, --limit-n is " + std::to_string(opt.limit_n));
    }
    return sweep_report(input, linoep::permutation_sweep(input, opt.tol), opt.tol);
}

std::string run_gen(const GenOptions& opt) {
    const linoep::VectorSet set = opt.family == "nested"
                                      ? linoep::make_nested_example(opt.seed)
                                      : linoep::make_cancellation_example(opt.seed);
    return opt.format == "json" ? linoep::format_json_set(set)
                                : linoep::format_csv_set(set);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"epset: energy-preserving vector set transforms"};
    app.require_subcommand(1);

    const std::vector<std::string> report_commands{"gsom", "linoep", "noep",
                                                   "analyze", "sweep"};
    std::vector<CommandOptions> options(report_commands.size());

    CLI::App* gsom = app.add_subcommand(
        "gsom", "Gram-Schmidt orthogonalization with coefficient bookkeeping");
    CLI::App* linoep_cmd = app.add_subcommand(
        "linoep",
        "Transform into linearly independent, non-orthogonal, energy-preserving "
        "vectors");
    CLI::App* noep = app.add_subcommand(
        "noep", "LINOEP transform plus the (n+1)-vector extension that "
                "reconstructs the input sum");
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Classify how a set achieves cross-term cancellation");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run the transform on every permutation of the input");
    CLI::App* subcommands[] = {gsom, linoep_cmd, noep, analyze, sweep};

    for (std::size_t i = 0; i < report_commands.size(); ++i) {
        const bool with_perm = report_commands[i] != "sweep";
        add_common_options(subcommands[i], options[i], with_perm);
    }
    sweep->add_option("--limit-n", options[4].limit_n,
                      "Refuse sweeps over sets larger than this (default 8)");

    GenOptions gen_options;
    CLI::App* gen = app.add_subcommand(
        "gen", "Emit a deterministic example vector set (not a report)");
    gen->add_option("--family", gen_options.family,
                    "Which structure the example shows")
        ->required()
        ->check(CLI::IsMember({"nested", "cancellation"}));
    gen->add_option("--seed", gen_options.seed, "Generator seed")->required();
    gen->add_option("--format", gen_options.format, "Output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    gen->add_option("--output", gen_options.output,
                    "Write the set here instead of standard output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("epset");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsageError;
    }

    std::string command = "gen";
    std::string output_path = gen_options.output;
    for (std::size_t i = 0; i < report_commands.size(); ++i) {
        if (app.got_subcommand(subcommands[i])) {
            command = report_commands[i];
            output_path = options[i].output;
        }
    }

    int code = kExitOk;
    try {
        if (command == "gen") {
            write_text(run_gen(gen_options), output_path, out);
            return kExitOk;
        }
        std::size_t index = 0;
        while (report_commands[index] != command) ++index;
        write_text(run_command(command, options[index]), output_path, out);
        return kExitOk;
    } catch (const linoep::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const linoep::FileError& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const linoep::DimensionMismatch& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const linoep::EmptySet& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const linoep::NotLinearlyIndependent& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const linoep::TooManyPermutations& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const linoep::DegenerateTailSum& e) {
        err << "numerical error: " << e.what() << "\n";
        code = kExitNumericalError;
    } catch (const linoep::GenerationFailed& e) {
        err << "numerical error: " << e.what() << "\n";
        code = kExitNumericalError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        code = kExitInputError;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << "\n";
        code = kExitNumericalError;
    }

    if (command != "gen") {
        try {
            write_text(error_report(command, code), output_path, out);
        } catch (const linoep::FileError& e) {
            err << "input error: " << e.what() << "\n";
            return kExitInputError;
        }
    }
    return code;
}

}  // namespace epset
