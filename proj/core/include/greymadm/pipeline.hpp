#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greymadm/borda.hpp"
#include "greymadm/document.hpp"

namespace greymadm {

/// Command-line overrides; a set field wins over the document config.
struct PipelineOptions {
    std::optional<double> danger;
    std::optional<double> rho;
    std::optional<double> theta_plus;
    std::optional<IncidenceForm> incidence_form;
    std::optional<MaxEntropyForm> max_entropy_form;
    std::optional<NormalizationMode> normalization;
};

/// Fully resolved run parameters as echoed in the report.
struct ResolvedConfig {
    RankerConfig ranker;
    NormalizationMode normalization = NormalizationMode::strict_paper;
    std::map<Method, double> borda_weights; // normalized to sum 1

    friend bool operator==(const ResolvedConfig&, const ResolvedConfig&) = default;
};

/// Every intermediate artifact of a pipeline run, in computation order.
struct Report {
    std::vector<std::string> plans;
    std::vector<AttributeSpec> attributes;
    ResolvedConfig config;
    std::vector<std::string> warnings;

    CellGrid normalized;                      // X: per-kind normalization
    std::vector<Bounds> subjective_weights;   // expert interval hull
    std::vector<double> optimal_weights;      // deviation-maximizing beta
    std::array<std::vector<double>, 4> entropy_weights; // per tuple component
    std::vector<Bounds> objective_weights;    // hull of the five vectors
    std::vector<Bounds> final_weights;        // comprehensive w
    std::vector<Bounds> weight_grey_parts;    // r (defaults to [1, 1])
    GreyFuzzyWeights normalized_weights;      // cross-normalized (w, s)

    CellGrid blended;                         // Z = (Q + X) / 2
    ValueGrid weighted;                       // Y-tilde tuples
    std::vector<std::vector<GreyInterval>> weighted_grey; // t
    std::vector<std::vector<double>> sufficiency;         // G(t)
    ValueGrid effective;                      // Y = Y-tilde * G
    IdealPair ideals;

    std::vector<double> topsis_d_positive;
    std::vector<double> topsis_d_negative;
    IncidencePair incidence;                  // per-cell coefficients
    std::vector<double> incidence_g_positive; // row means
    std::vector<double> incidence_g_negative;
    MaxEntropyWeights beta;

    std::vector<MethodScores> methods;        // fixed order: the four methods
    FinalRanking final_ranking;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Runs normalize -> weights -> four rankers -> Borda fusion. Errors from
/// the stages are rethrown with a stage prefix. `initial_warnings` (e.g.
/// from parsing) are carried into the report ahead of pipeline warnings.
Report run_pipeline(const DecisionDocument& document, const PipelineOptions& options = {},
                    std::vector<std::string> initial_warnings = {});

enum class ReportFormat { json, table };

/// JSON: machine-readable, every field of Report, stable field order,
/// round-trips through parse_report. Table: plain-ASCII rank table with
/// per-method scores, configuration echo and warnings.
std::string emit_report(const Report& report, ReportFormat format = ReportFormat::json);

/// Inverse of emit_report for the JSON format.
Report parse_report(const std::string& json_text);

} // namespace greymadm
