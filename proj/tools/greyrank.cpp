// greyrank: ranks decision alternatives with mixed real / interval /
// linguistic attribute values under interval grey degrees, via four methods
// fused by a weighted Borda count.

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "greymadm/document.hpp"
#include "greymadm/errors.hpp"
#include "greymadm/pipeline.hpp"

namespace {

using namespace greymadm;

struct CommandOptions {
    std::string file;
    std::optional<double> danger;
    std::optional<double> rho;
    std::optional<double> theta_plus;
    std::string incidence_form;
    std::string max_entropy_form;
    std::string normalization;
    std::string output; // "json" or "table"; empty means subcommand default
    std::string out_path;
    bool lenient = false;
    bool seed_check = false;
};

void add_tuning_flags(CLI::App* cmd, CommandOptions& opt) {
    cmd->add_option("--danger", opt.danger, "Risk attitude in [0, 1] (default 0.5)");
    cmd->add_option("--rho", opt.rho, "Distinguishing coefficient in (0, 1) (default 0.5)");
    cmd->add_option("--theta-plus", opt.theta_plus,
                    "Positive-ideal preference in (0, 1]; theta_minus = 1 - theta_plus");
    cmd->add_option("--incidence-form", opt.incidence_form,
                    "Incidence coefficient denominator form (default paper)")
        ->check(CLI::IsMember({"paper", "classic"}));
    cmd->add_option("--max-entropy-form", opt.max_entropy_form,
                    "Max-entropy blend weight form (default normalized)")
        ->check(CLI::IsMember({"normalized", "legacy"}));
    cmd->add_option("--normalization", opt.normalization,
                    "Cost-interval normalization mode (default strict-paper)")
        ->check(CLI::IsMember({"strict-paper", "symmetric"}));
    cmd->add_option("--out", opt.out_path, "Write the report to a file instead of stdout");
}

PipelineOptions to_pipeline_options(const CommandOptions& opt) {
    PipelineOptions options;
    options.danger = opt.danger;
    options.rho = opt.rho;
    options.theta_plus = opt.theta_plus;
    if (!opt.incidence_form.empty()) {
        options.incidence_form = incidence_form_from_label(opt.incidence_form);
    }
    if (!opt.max_entropy_form.empty()) {
        options.max_entropy_form = max_entropy_form_from_label(opt.max_entropy_form);
    }
    if (!opt.normalization.empty()) {
        options.normalization = normalization_from_label(opt.normalization);
    }
    return options;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 4;
    }
    out << text;
    if (!out) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return 4;
    }
    return 0;
}

int run_rank(const CommandOptions& opt) {
    std::ifstream in(opt.file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << opt.file << "'\n";
        return 4;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        std::cerr << "error: failed reading '" << opt.file << "'\n";
        return 4;
    }
    const std::string text = buffer.str();

    ParseResult parsed = parse_document(text, opt.lenient);
    const PipelineOptions options = to_pipeline_options(opt);
    const Report report = run_pipeline(parsed.document, options, parsed.warnings);

    if (opt.seed_check) {
        ParseResult reparsed = parse_document(text, opt.lenient);
        const Report second = run_pipeline(reparsed.document, options, reparsed.warnings);
        if (emit_report(report, ReportFormat::json) != emit_report(second, ReportFormat::json)) {
            std::cerr << "determinism check failed: two runs emitted different reports\n";
            return 1;
        }
        std::cerr << "determinism check passed: byte-identical reports\n";
    }

    const ReportFormat format = opt.output == "table" ? ReportFormat::table : ReportFormat::json;
    return write_output(emit_report(report, format), opt.out_path);
}

// Published reference results for the bundled example: the four score
// vectors and the shared final order A2 > A5 > A1 > A3 > A4.
struct ReferenceScores {
    const char* label;
    std::array<double, 5> scores;
};

constexpr std::array<ReferenceScores, 4> kReference = {{
    {"topsis", {0.5718, 0.8550, 0.4805, 0.2247, 0.5841}},
    {"incidence-approach", {0.4869, 0.5534, 0.4760, 0.4501, 0.5231}},
    {"membership", {0.4737, 0.6055, 0.4521, 0.4012, 0.5461}},
    {"max-entropy", {0.8083, 0.9327, 0.7969, 0.7821, 0.8729}},
}};

constexpr std::array<std::size_t, 5> kReferenceOrder = {1, 4, 0, 2, 3};

std::string order_line(const std::vector<std::string>& plans,
                       const std::vector<std::size_t>& order) {
    std::string line;
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0) line += " > ";
        line += plans[order[r]];
    }
    return line;
}

int run_paper_example(const CommandOptions& opt) {
    ParseResult parsed = parse_document(paper_example_json());
    const Report report = run_pipeline(parsed.document, to_pipeline_options(opt), parsed.warnings);

    if (!opt.output.empty()) {
        const ReportFormat format = opt.output == "table" ? ReportFormat::table : ReportFormat::json;
        return write_output(emit_report(report, format), opt.out_path);
    }

    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    out << "Bundled fighter-selection example: computed vs. reference scores\n";
    for (const MethodScores& method : report.methods) {
        const ReferenceScores* reference = nullptr;
        for (const ReferenceScores& candidate : kReference) {
            if (method_id(method.method) == candidate.label) reference = &candidate;
        }
        out << "\n" << method_id(method.method) << "\n";
        out << "  plan   computed  reference      delta\n";
        for (std::size_t i = 0; i < method.scores.size(); ++i) {
            out << "  " << std::left << std::setw(5) << report.plans[i] << std::right;
            out << std::setw(10) << method.scores[i];
            if (reference && i < reference->scores.size()) {
                out << std::setw(11) << reference->scores[i] << std::setw(11)
                    << (method.scores[i] - reference->scores[i]);
            }
            out << "\n";
        }
        out << "  computed order:  " << order_line(report.plans, method.ranking) << "\n";
        if (reference) {
            out << "  reference order: "
                << order_line(report.plans,
                              std::vector<std::size_t>(kReferenceOrder.begin(),
                                                       kReferenceOrder.end()))
                << "\n";
        }
    }
    out << "\nfinal (weighted Borda): " << order_line(report.plans, report.final_ranking.order)
        << "\n";
    out << "reference final order:  "
        << order_line(report.plans,
                      std::vector<std::size_t>(kReferenceOrder.begin(), kReferenceOrder.end()))
        << "\n";
    return write_output(out.str(), opt.out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank decision alternatives with mixed-type attribute values "
                 "under interval grey degrees"};
    app.require_subcommand(1);

    CommandOptions rank_opt;
    CLI::App* rank_cmd = app.add_subcommand("rank", "Rank the plans of a JSON decision document");
    rank_cmd->add_option("file", rank_opt.file, "Decision document (JSON)")->required();
    add_tuning_flags(rank_cmd, rank_opt);
    rank_opt.output = "json";
    rank_cmd->add_option("--output", rank_opt.output, "Report format (default json)")
        ->check(CLI::IsMember({"json", "table"}));
    rank_cmd->add_flag("--lenient", rank_opt.lenient,
                       "Warn about unknown document fields instead of rejecting them");
    rank_cmd->add_flag("--seed-check", rank_opt.seed_check,
                       "Run the pipeline twice and verify byte-identical reports");

    CommandOptions example_opt;
    CLI::App* example_cmd = app.add_subcommand(
        "paper-example",
        "Run the bundled fighter-selection example and compare against its reference scores");
    add_tuning_flags(example_cmd, example_opt);
    example_cmd->add_option("--output", example_opt.output,
                            "Emit a full report (json or table) instead of the comparison view")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank_cmd->parsed()) return run_rank(rank_opt);
        if (example_cmd->parsed()) return run_paper_example(example_opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
