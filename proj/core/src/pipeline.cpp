#include "greymadm/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <utility>

#include "greymadm/errors.hpp"
#include "json_util.hpp"

namespace greymadm {

using jsonutil::as_array;
using jsonutil::as_bool;
using jsonutil::as_number;
using jsonutil::as_number_pair;
using jsonutil::as_object;
using jsonutil::as_string;
using jsonutil::element_path;
using jsonutil::fail;
using jsonutil::json;
using jsonutil::require_field;

namespace {

constexpr Method kMethodOrder[] = {Method::topsis, Method::incidence_approach,
                                   Method::membership, Method::max_entropy};

template <typename F>
auto stage(const char* name, F&& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(name) + ": " + e.what());
    } catch (const DegenerateError& e) {
        throw DegenerateError(std::string(name) + ": " + e.what());
    }
}

} // namespace

Report run_pipeline(const DecisionDocument& document, const PipelineOptions& options,
                    std::vector<std::string> initial_warnings) {
    Report report;
    report.plans = document.plans;
    report.attributes = document.attributes;
    report.warnings = std::move(initial_warnings);

    const DocumentConfig& doc_config = document.config;
    ResolvedConfig& config = report.config;

    const bool danger_specified = options.danger.has_value() || doc_config.danger.has_value();
    config.ranker.danger =
        options.danger ? *options.danger : doc_config.danger ? *doc_config.danger : 0.5;
    config.ranker.rho = options.rho ? *options.rho : doc_config.rho ? *doc_config.rho : 0.5;
    const double theta_plus = options.theta_plus    ? *options.theta_plus
                              : doc_config.theta_plus ? *doc_config.theta_plus
                                                      : 0.5;
    config.ranker.theta_plus = theta_plus;
    config.ranker.theta_minus = 1.0 - theta_plus;
    config.ranker.incidence_form = options.incidence_form      ? *options.incidence_form
                                   : doc_config.incidence_form ? *doc_config.incidence_form
                                                               : IncidenceForm::paper;
    config.ranker.max_entropy_form = options.max_entropy_form      ? *options.max_entropy_form
                                     : doc_config.max_entropy_form ? *doc_config.max_entropy_form
                                                                   : MaxEntropyForm::normalized;
    config.normalization = options.normalization      ? *options.normalization
                           : doc_config.normalization ? *doc_config.normalization
                                                      : NormalizationMode::strict_paper;
    stage("config", [&] { config.ranker.validate(); });
    if (!danger_specified) {
        report.warnings.push_back("danger index not specified; defaulted to 0.5");
    }
    if (doc_config.borda_weights.empty()) {
        for (Method method : kMethodOrder) config.borda_weights[method] = 0.25;
        report.warnings.push_back("Borda method weights not specified; defaulted to equal");
    } else {
        double total = 0.0;
        for (const auto& [method, weight] : doc_config.borda_weights) total += weight;
        if (total <= 0.0) throw ValidationError("config: Borda method weights sum to zero");
        for (Method method : kMethodOrder) {
            const auto it = doc_config.borda_weights.find(method);
            config.borda_weights[method] =
                it == doc_config.borda_weights.end() ? 0.0 : it->second / total;
        }
    }

    const DecisionMatrix matrix = stage("ingest", [&] { return document.to_matrix(); });
    const std::size_t m = matrix.attribute_count();

    const DecisionMatrix normalized =
        stage("normalize", [&] { return normalize_matrix(matrix, config.normalization); });
    report.normalized = normalized.cells;

    stage("weights", [&] {
        if (document.experts.empty()) {
            throw ValidationError("at least one expert weight vector is required");
        }
        for (const auto& expert : document.experts) {
            if (expert.size() != m) {
                throw ValidationError("expert weight vector has " + std::to_string(expert.size()) +
                                      " entries, expected " + std::to_string(m));
            }
        }
        const GreyWeightVector subjective = aggregate_subjective(document.experts);
        report.subjective_weights = subjective.entries;
        report.optimal_weights = objective_optimal(normalized);
        for (int k = 1; k <= 4; ++k) {
            try {
                report.entropy_weights[k - 1] = objective_entropy(normalized, k);
            } catch (const DegenerateError&) {
                report.entropy_weights[k - 1].assign(m, 1.0 / static_cast<double>(m));
                report.warnings.push_back("entropy weights for tuple component " +
                                          std::to_string(k) +
                                          " are degenerate (uniform columns); defaulted to uniform");
            }
        }
        const GreyWeightVector objective =
            comprehensive_objective(report.optimal_weights, report.entropy_weights);
        report.objective_weights = objective.entries;
        const GreyWeightVector comprehensive = final_weights(subjective, objective);
        report.final_weights = comprehensive.entries;

        if (document.weight_grey) {
            if (document.weight_grey->size() != m) {
                throw ValidationError("weight grey parts have " +
                                      std::to_string(document.weight_grey->size()) +
                                      " entries, expected " + std::to_string(m));
            }
            for (const GreyInterval& g : *document.weight_grey) {
                report.weight_grey_parts.emplace_back(g.lo, g.hi);
            }
        } else {
            report.weight_grey_parts.assign(m, Bounds(1.0, 1.0));
            report.warnings.push_back("weight grey parts not specified; defaulted to [1, 1]");
        }
        report.normalized_weights = normalize_grey_fuzzy_weights(
            GreyFuzzyWeights{comprehensive.entries, report.weight_grey_parts});
    });

    stage("rank", [&] {
        if (document.preferences) {
            if (document.preferences->size() != matrix.plan_count()) {
                throw ValidationError("preferences have " +
                                      std::to_string(document.preferences->size()) +
                                      " entries, expected " + std::to_string(matrix.plan_count()));
            }
            report.blended = blend_preference(normalized, *document.preferences);
        } else {
            report.blended = normalized.cells;
            report.warnings.push_back(
                "plan preferences absent; ranking the normalized matrix unblended");
        }
        const CellGrid weighted = weight_and_grey(report.blended, report.normalized_weights);
        report.weighted.resize(weighted.size());
        report.weighted_grey.resize(weighted.size());
        for (std::size_t i = 0; i < weighted.size(); ++i) {
            for (const GreyFuzzyCell& cell : weighted[i]) {
                report.weighted[i].push_back(cell.value);
                report.weighted_grey[i].push_back(cell.grey);
            }
        }
        report.sufficiency = sufficiency_matrix(weighted, config.ranker.danger);
        report.effective = apply_sufficiency(weighted, config.ranker.danger);
        report.ideals = ideal_vectors(report.effective);

        report.topsis_d_positive = topsis_distances(report.effective, report.ideals.positive);
        report.topsis_d_negative = topsis_distances(report.effective, report.ideals.negative);
        MethodScores topsis = topsis_scores(report.effective, report.ideals);

        report.incidence = incidence_coefficients(report.effective, report.ideals,
                                                  config.ranker.rho, config.ranker.incidence_form);
        report.incidence_g_positive = incidence_degree(report.incidence.positive);
        report.incidence_g_negative = incidence_degree(report.incidence.negative);
        MethodScores approach = incidence_relative_approach(
            report.incidence_g_positive, report.incidence_g_negative, config.ranker.theta_plus,
            config.ranker.theta_minus);
        MethodScores membership =
            membership_scores(report.incidence_g_positive, report.incidence_g_negative);
        report.beta = max_entropy_beta(report.incidence_g_positive, report.incidence_g_negative,
                                       config.ranker.max_entropy_form);
        MethodScores entropy_blend = comprehensive_incidence(
            report.incidence_g_positive, report.incidence_g_negative, report.beta);

        report.methods = {std::move(topsis), std::move(approach), std::move(membership),
                          std::move(entropy_blend)};
    });

    stage("fuse", [&] {
        BordaConfig borda;
        borda.method_weights = config.borda_weights;
        report.final_ranking = weighted_borda(report.methods, borda);
        if (report.final_ranking.tied) {
            report.warnings.push_back(
                "final Borda scores contain ties; earlier-listed plans kept first");
        }
    });

    return report;
}

namespace {

json tuple_json(const GeneralizedValue& v) { return json::array({v.a1, v.a2, v.a3, v.a4}); }

json pair_json(double lo, double hi) { return json::array({lo, hi}); }

json bounds_list_json(const std::vector<Bounds>& list) {
    json out = json::array();
    for (const Bounds& b : list) out.push_back(pair_json(b.lo, b.hi));
    return out;
}

json cell_grid_json(const CellGrid& grid) {
    json rows = json::array();
    for (const auto& row : grid) {
        json rj = json::array();
        for (const GreyFuzzyCell& cell : row) {
            json cj = json::object();
            cj["value"] = tuple_json(cell.value);
            cj["grey"] = pair_json(cell.grey.lo, cell.grey.hi);
            rj.push_back(std::move(cj));
        }
        rows.push_back(std::move(rj));
    }
    return rows;
}

json value_grid_json(const ValueGrid& grid) {
    json rows = json::array();
    for (const auto& row : grid) {
        json rj = json::array();
        for (const GeneralizedValue& v : row) rj.push_back(tuple_json(v));
        rows.push_back(std::move(rj));
    }
    return rows;
}

json grey_grid_json(const std::vector<std::vector<GreyInterval>>& grid) {
    json rows = json::array();
    for (const auto& row : grid) {
        json rj = json::array();
        for (const GreyInterval& g : row) rj.push_back(pair_json(g.lo, g.hi));
        rows.push_back(std::move(rj));
    }
    return rows;
}

std::string emit_report_json(const Report& report) {
    json root = json::object();
    root["plans"] = report.plans;

    json attrs = json::array();
    for (const AttributeSpec& spec : report.attributes) {
        json aj = json::object();
        aj["name"] = spec.name;
        aj["orientation"] = orientation_label(spec.orientation);
        if (spec.declared_kind) aj["declared_kind"] = kind_hint_label(*spec.declared_kind);
        attrs.push_back(std::move(aj));
    }
    root["attributes"] = std::move(attrs);

    json cj = json::object();
    cj["danger"] = report.config.ranker.danger;
    cj["rho"] = report.config.ranker.rho;
    cj["theta_plus"] = report.config.ranker.theta_plus;
    cj["theta_minus"] = report.config.ranker.theta_minus;
    cj["incidence_form"] = incidence_form_label(report.config.ranker.incidence_form);
    cj["max_entropy_form"] = max_entropy_form_label(report.config.ranker.max_entropy_form);
    cj["normalization"] = normalization_label(report.config.normalization);
    json bw = json::object();
    for (const auto& [method, weight] : report.config.borda_weights) bw[method_id(method)] = weight;
    cj["borda_weights"] = std::move(bw);
    root["config"] = std::move(cj);

    root["warnings"] = report.warnings;
    root["normalized_matrix"] = cell_grid_json(report.normalized);

    json weights = json::object();
    weights["subjective"] = bounds_list_json(report.subjective_weights);
    weights["objective_optimal"] = report.optimal_weights;
    json entropy = json::array();
    for (const auto& component : report.entropy_weights) entropy.push_back(component);
    weights["entropy"] = std::move(entropy);
    weights["objective_comprehensive"] = bounds_list_json(report.objective_weights);
    weights["final"] = bounds_list_json(report.final_weights);
    weights["grey_parts"] = bounds_list_json(report.weight_grey_parts);
    weights["normalized_fuzzy"] = bounds_list_json(report.normalized_weights.fuzzy);
    weights["normalized_grey"] = bounds_list_json(report.normalized_weights.grey);
    root["weights"] = std::move(weights);

    root["blended_matrix"] = cell_grid_json(report.blended);
    root["weighted_matrix"] = value_grid_json(report.weighted);
    root["weighted_grey"] = grey_grid_json(report.weighted_grey);
    root["sufficiency"] = report.sufficiency;
    root["effective_matrix"] = value_grid_json(report.effective);

    json ideals = json::object();
    json pos = json::array();
    for (const GeneralizedValue& v : report.ideals.positive) pos.push_back(tuple_json(v));
    json neg = json::array();
    for (const GeneralizedValue& v : report.ideals.negative) neg.push_back(tuple_json(v));
    ideals["positive"] = std::move(pos);
    ideals["negative"] = std::move(neg);
    root["ideals"] = std::move(ideals);

    json topsis = json::object();
    topsis["d_positive"] = report.topsis_d_positive;
    topsis["d_negative"] = report.topsis_d_negative;
    root["topsis"] = std::move(topsis);

    json incidence = json::object();
    incidence["coefficients_positive"] = report.incidence.positive;
    incidence["coefficients_negative"] = report.incidence.negative;
    incidence["degree_positive"] = report.incidence_g_positive;
    incidence["degree_negative"] = report.incidence_g_negative;
    root["incidence"] = std::move(incidence);

    json max_entropy = json::object();
    max_entropy["beta_positive"] = report.beta.positive;
    max_entropy["beta_negative"] = report.beta.negative;
    root["max_entropy"] = std::move(max_entropy);

    json methods = json::array();
    for (const MethodScores& scores : report.methods) {
        json mj = json::object();
        mj["method"] = method_id(scores.method);
        mj["scores"] = scores.scores;
        mj["ranking"] = scores.ranking;
        methods.push_back(std::move(mj));
    }
    root["methods"] = std::move(methods);

    json fr = json::object();
    fr["order"] = report.final_ranking.order;
    fr["borda_scores"] = report.final_ranking.borda_scores;
    json pmr = json::object();
    for (const auto& [method, ranks] : report.final_ranking.per_method_ranks) {
        pmr[method_id(method)] = ranks;
    }
    fr["per_method_ranks"] = std::move(pmr);
    fr["tied"] = report.final_ranking.tied;
    root["final_ranking"] = std::move(fr);

    return root.dump(2) + "\n";
}

std::string emit_report_table(const Report& report) {
    std::ostringstream out;
    const std::string sep = "  ";

    std::size_t plan_width = 4; // "plan"
    for (const std::string& label : report.plans) plan_width = std::max(plan_width, label.size());
    std::vector<std::size_t> method_widths;
    for (const MethodScores& scores : report.methods) {
        method_widths.push_back(std::max<std::size_t>(8, method_id(scores.method).size()));
    }

    out << "Final ranking (weighted Borda)\n\n";
    out << std::setw(4) << "rank" << sep << std::left << std::setw(static_cast<int>(plan_width))
        << "plan" << std::right << sep << std::setw(8) << "borda";
    for (std::size_t k = 0; k < report.methods.size(); ++k) {
        out << sep << std::setw(static_cast<int>(method_widths[k]))
            << method_id(report.methods[k].method);
    }
    out << "\n";

    out << std::fixed << std::setprecision(4);
    for (std::size_t r = 0; r < report.final_ranking.order.size(); ++r) {
        const std::size_t p = report.final_ranking.order[r];
        out << std::setw(4) << (r + 1) << sep << std::left
            << std::setw(static_cast<int>(plan_width)) << report.plans[p] << std::right << sep
            << std::setw(8) << report.final_ranking.borda_scores[p];
        for (std::size_t k = 0; k < report.methods.size(); ++k) {
            out << sep << std::setw(static_cast<int>(method_widths[k]))
                << report.methods[k].scores[p];
        }
        out << "\n";
    }

    out << "\nConfiguration\n";
    out << "  danger=" << report.config.ranker.danger << "  rho=" << report.config.ranker.rho
        << "  theta_plus=" << report.config.ranker.theta_plus
        << "  theta_minus=" << report.config.ranker.theta_minus << "\n";
    out << "  incidence_form=" << incidence_form_label(report.config.ranker.incidence_form)
        << "  max_entropy_form=" << max_entropy_form_label(report.config.ranker.max_entropy_form)
        << "  normalization=" << normalization_label(report.config.normalization) << "\n";
    out << "  borda_weights:";
    for (const auto& [method, weight] : report.config.borda_weights) {
        out << " " << method_id(method) << "=" << weight;
    }
    out << "\n";

    out << "\nWarnings\n";
    if (report.warnings.empty()) {
        out << "  (none)\n";
    } else {
        for (const std::string& warning : report.warnings) out << "  - " << warning << "\n";
    }
    return out.str();
}

GeneralizedValue parse_tuple(const json& j, const std::string& path) {
    as_array(j, path);
    if (j.size() != 4) fail(path, "expected a 4-tuple, got " + std::to_string(j.size()) + " entries");
    double c[4];
    for (std::size_t k = 0; k < 4; ++k) c[k] = as_number(j[k], element_path(path, k));
    try {
        return GeneralizedValue::from_components(c[0], c[1], c[2], c[3]);
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

Bounds parse_bounds(const json& j, const std::string& path) {
    auto [lo, hi] = as_number_pair(j, path);
    try {
        return Bounds(lo, hi);
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

GreyInterval parse_grey_pair(const json& j, const std::string& path) {
    auto [lo, hi] = as_number_pair(j, path);
    try {
        return GreyInterval(lo, hi);
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

std::vector<Bounds> parse_bounds_list(const json& j, const std::string& path) {
    as_array(j, path);
    std::vector<Bounds> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_bounds(j[i], element_path(path, i)));
    return out;
}

std::vector<double> parse_double_list(const json& j, const std::string& path) {
    as_array(j, path);
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], element_path(path, i)));
    return out;
}

std::vector<std::size_t> parse_index_list(const json& j, const std::string& path) {
    as_array(j, path);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string ipath = element_path(path, i);
        if (!j[i].is_number_integer() && !j[i].is_number_unsigned()) {
            fail(ipath, "expected a nonnegative integer");
        }
        if (j[i].is_number_integer() && j[i].get<long long>() < 0) {
            fail(ipath, "expected a nonnegative integer");
        }
        out.push_back(j[i].get<std::size_t>());
    }
    return out;
}

std::vector<std::vector<double>> parse_double_grid(const json& j, const std::string& path) {
    as_array(j, path);
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_double_list(j[i], element_path(path, i)));
    return out;
}

CellGrid parse_cell_grid(const json& j, const std::string& path) {
    as_array(j, path);
    CellGrid grid;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_path = element_path(path, i);
        as_array(j[i], row_path);
        std::vector<GreyFuzzyCell> row;
        for (std::size_t c = 0; c < j[i].size(); ++c) {
            const std::string cpath = element_path(row_path, c);
            const json& cell = as_object(j[i][c], cpath);
            row.push_back(
                GreyFuzzyCell{parse_tuple(require_field(cell, cpath, "value"), cpath + ".value"),
                              parse_grey_pair(require_field(cell, cpath, "grey"), cpath + ".grey")});
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

ValueGrid parse_value_grid(const json& j, const std::string& path) {
    as_array(j, path);
    ValueGrid grid;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_path = element_path(path, i);
        as_array(j[i], row_path);
        std::vector<GeneralizedValue> row;
        for (std::size_t c = 0; c < j[i].size(); ++c) {
            row.push_back(parse_tuple(j[i][c], element_path(row_path, c)));
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

std::vector<std::vector<GreyInterval>> parse_grey_grid(const json& j, const std::string& path) {
    as_array(j, path);
    std::vector<std::vector<GreyInterval>> grid;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_path = element_path(path, i);
        as_array(j[i], row_path);
        std::vector<GreyInterval> row;
        for (std::size_t c = 0; c < j[i].size(); ++c) {
            row.push_back(parse_grey_pair(j[i][c], element_path(row_path, c)));
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

std::vector<GeneralizedValue> parse_tuple_list(const json& j, const std::string& path) {
    as_array(j, path);
    std::vector<GeneralizedValue> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_tuple(j[i], element_path(path, i)));
    return out;
}

} // namespace

std::string emit_report(const Report& report, ReportFormat format) {
    return format == ReportFormat::json ? emit_report_json(report) : emit_report_table(report);
}

Report parse_report(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("report root must be an object");

    Report report;

    const json& plans = as_array(require_field(root, "", "plans"), "plans");
    for (std::size_t i = 0; i < plans.size(); ++i) {
        report.plans.push_back(as_string(plans[i], element_path("plans", i)));
    }

    const json& attrs = as_array(require_field(root, "", "attributes"), "attributes");
    for (std::size_t j = 0; j < attrs.size(); ++j) {
        const std::string path = element_path("attributes", j);
        const json& aj = as_object(attrs[j], path);
        AttributeSpec spec;
        spec.name = as_string(require_field(aj, path, "name"), path + ".name");
        try {
            spec.orientation = orientation_from_label(
                as_string(require_field(aj, path, "orientation"), path + ".orientation"));
            if (auto it = aj.find("declared_kind"); it != aj.end()) {
                spec.declared_kind = kind_hint_from_label(as_string(*it, path + ".declared_kind"));
            }
        } catch (const ValidationError& e) {
            fail(path, e.what());
        }
        report.attributes.push_back(std::move(spec));
    }

    const std::string cpath = "config";
    const json& cj = as_object(require_field(root, "", "config"), cpath);
    report.config.ranker.danger = as_number(require_field(cj, cpath, "danger"), cpath + ".danger");
    report.config.ranker.rho = as_number(require_field(cj, cpath, "rho"), cpath + ".rho");
    report.config.ranker.theta_plus =
        as_number(require_field(cj, cpath, "theta_plus"), cpath + ".theta_plus");
    report.config.ranker.theta_minus =
        as_number(require_field(cj, cpath, "theta_minus"), cpath + ".theta_minus");
    try {
        report.config.ranker.incidence_form = incidence_form_from_label(
            as_string(require_field(cj, cpath, "incidence_form"), cpath + ".incidence_form"));
        report.config.ranker.max_entropy_form = max_entropy_form_from_label(
            as_string(require_field(cj, cpath, "max_entropy_form"), cpath + ".max_entropy_form"));
        report.config.normalization = normalization_from_label(
            as_string(require_field(cj, cpath, "normalization"), cpath + ".normalization"));
        const json& bw =
            as_object(require_field(cj, cpath, "borda_weights"), cpath + ".borda_weights");
        for (auto it = bw.begin(); it != bw.end(); ++it) {
            report.config.borda_weights[method_from_id(it.key())] =
                as_number(it.value(), cpath + ".borda_weights." + it.key());
        }
    } catch (const ValidationError& e) {
        fail(cpath, e.what());
    }

    const json& warnings = as_array(require_field(root, "", "warnings"), "warnings");
    for (std::size_t i = 0; i < warnings.size(); ++i) {
        report.warnings.push_back(as_string(warnings[i], element_path("warnings", i)));
    }

    report.normalized =
        parse_cell_grid(require_field(root, "", "normalized_matrix"), "normalized_matrix");

    const std::string wpath = "weights";
    const json& weights = as_object(require_field(root, "", "weights"), wpath);
    report.subjective_weights =
        parse_bounds_list(require_field(weights, wpath, "subjective"), wpath + ".subjective");
    report.optimal_weights = parse_double_list(
        require_field(weights, wpath, "objective_optimal"), wpath + ".objective_optimal");
    const json& entropy = as_array(require_field(weights, wpath, "entropy"), wpath + ".entropy");
    if (entropy.size() != 4) fail(wpath + ".entropy", "expected 4 component vectors");
    for (std::size_t k = 0; k < 4; ++k) {
        report.entropy_weights[k] =
            parse_double_list(entropy[k], element_path(wpath + ".entropy", k));
    }
    report.objective_weights =
        parse_bounds_list(require_field(weights, wpath, "objective_comprehensive"),
                          wpath + ".objective_comprehensive");
    report.final_weights =
        parse_bounds_list(require_field(weights, wpath, "final"), wpath + ".final");
    report.weight_grey_parts =
        parse_bounds_list(require_field(weights, wpath, "grey_parts"), wpath + ".grey_parts");
    report.normalized_weights.fuzzy = parse_bounds_list(
        require_field(weights, wpath, "normalized_fuzzy"), wpath + ".normalized_fuzzy");
    report.normalized_weights.grey = parse_bounds_list(
        require_field(weights, wpath, "normalized_grey"), wpath + ".normalized_grey");

    report.blended = parse_cell_grid(require_field(root, "", "blended_matrix"), "blended_matrix");
    report.weighted =
        parse_value_grid(require_field(root, "", "weighted_matrix"), "weighted_matrix");
    report.weighted_grey = parse_grey_grid(require_field(root, "", "weighted_grey"), "weighted_grey");
    report.sufficiency = parse_double_grid(require_field(root, "", "sufficiency"), "sufficiency");
    report.effective =
        parse_value_grid(require_field(root, "", "effective_matrix"), "effective_matrix");

    const json& ideals = as_object(require_field(root, "", "ideals"), "ideals");
    report.ideals.positive =
        parse_tuple_list(require_field(ideals, "ideals", "positive"), "ideals.positive");
    report.ideals.negative =
        parse_tuple_list(require_field(ideals, "ideals", "negative"), "ideals.negative");

    const json& topsis = as_object(require_field(root, "", "topsis"), "topsis");
    report.topsis_d_positive =
        parse_double_list(require_field(topsis, "topsis", "d_positive"), "topsis.d_positive");
    report.topsis_d_negative =
        parse_double_list(require_field(topsis, "topsis", "d_negative"), "topsis.d_negative");

    const json& incidence = as_object(require_field(root, "", "incidence"), "incidence");
    report.incidence.positive =
        parse_double_grid(require_field(incidence, "incidence", "coefficients_positive"),
                          "incidence.coefficients_positive");
    report.incidence.negative =
        parse_double_grid(require_field(incidence, "incidence", "coefficients_negative"),
                          "incidence.coefficients_negative");
    report.incidence_g_positive = parse_double_list(
        require_field(incidence, "incidence", "degree_positive"), "incidence.degree_positive");
    report.incidence_g_negative = parse_double_list(
        require_field(incidence, "incidence", "degree_negative"), "incidence.degree_negative");

    const json& max_entropy = as_object(require_field(root, "", "max_entropy"), "max_entropy");
    report.beta.positive = as_number(require_field(max_entropy, "max_entropy", "beta_positive"),
                                     "max_entropy.beta_positive");
    report.beta.negative = as_number(require_field(max_entropy, "max_entropy", "beta_negative"),
                                     "max_entropy.beta_negative");

    const json& methods = as_array(require_field(root, "", "methods"), "methods");
    for (std::size_t k = 0; k < methods.size(); ++k) {
        const std::string mpath = element_path("methods", k);
        const json& mj = as_object(methods[k], mpath);
        MethodScores scores;
        try {
            scores.method = method_from_id(as_string(require_field(mj, mpath, "method"), mpath + ".method"));
        } catch (const ValidationError& e) {
            fail(mpath + ".method", e.what());
        }
        scores.scores = parse_double_list(require_field(mj, mpath, "scores"), mpath + ".scores");
        scores.ranking = parse_index_list(require_field(mj, mpath, "ranking"), mpath + ".ranking");
        report.methods.push_back(std::move(scores));
    }

    const std::string fpath = "final_ranking";
    const json& fr = as_object(require_field(root, "", "final_ranking"), fpath);
    report.final_ranking.order =
        parse_index_list(require_field(fr, fpath, "order"), fpath + ".order");
    report.final_ranking.borda_scores =
        parse_double_list(require_field(fr, fpath, "borda_scores"), fpath + ".borda_scores");
    const json& pmr =
        as_object(require_field(fr, fpath, "per_method_ranks"), fpath + ".per_method_ranks");
    for (auto it = pmr.begin(); it != pmr.end(); ++it) {
        const std::string rpath = fpath + ".per_method_ranks." + it.key();
        Method method;
        try {
            method = method_from_id(it.key());
        } catch (const ValidationError& e) {
            fail(rpath, e.what());
        }
        report.final_ranking.per_method_ranks[method] = parse_double_list(it.value(), rpath);
    }
    report.final_ranking.tied = as_bool(require_field(fr, fpath, "tied"), fpath + ".tied");

    return report;
}

} // namespace greymadm
