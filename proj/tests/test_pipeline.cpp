#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "greymadm/errors.hpp"
#include "greymadm/pipeline.hpp"

using namespace greymadm;

namespace {

const std::vector<std::size_t> kExpectedOrder{1, 4, 0, 2, 3}; // A2, A5, A1, A3, A4

std::size_t count_warnings(const Report& report, const std::string& needle) {
    std::size_t count = 0;
    for (const auto& w : report.warnings) {
        if (w.find(needle) != std::string::npos) ++count;
    }
    return count;
}

std::string dominance_document() {
    return R"({
  "plans": ["strong", "weak"],
  "attributes": [
    {"name": "a1", "orientation": "effect"},
    {"name": "a2", "orientation": "effect"}
  ],
  "cells": [
    [{"type": "real", "value": 3.0, "grey": [0.2, 0.4]},
     {"type": "interval", "value": [4.0, 5.0], "grey": [0.3, 0.5]}],
    [{"type": "real", "value": 1.0, "grey": [0.2, 0.4]},
     {"type": "interval", "value": [1.0, 2.0], "grey": [0.3, 0.5]}]
  ],
  "experts": [[0.6, 0.4]]
})";
}

} // namespace

TEST_CASE("bundled example ranks 2, 5, 1, 3, 4 under every method") {
    Report report = run_pipeline(paper_example_document());

    REQUIRE(report.methods.size() == 4);
    CHECK(report.methods[0].method == Method::topsis);
    CHECK(report.methods[1].method == Method::incidence_approach);
    CHECK(report.methods[2].method == Method::membership);
    CHECK(report.methods[3].method == Method::max_entropy);
    for (const MethodScores& scores : report.methods) {
        CHECK(scores.ranking == kExpectedOrder);
    }
    CHECK(report.final_ranking.order == kExpectedOrder);
    CHECK_FALSE(report.final_ranking.tied);

    // resolved defaults
    CHECK(report.config.ranker.danger == 0.5);
    CHECK(report.config.ranker.rho == 0.5);
    CHECK(report.config.ranker.theta_plus == 0.5);
    CHECK(report.config.ranker.theta_minus == 0.5);
    CHECK(report.config.ranker.incidence_form == IncidenceForm::paper);
    CHECK(report.config.ranker.max_entropy_form == MaxEntropyForm::normalized);
    CHECK(report.config.normalization == NormalizationMode::strict_paper);
    for (const auto& [method, weight] : report.config.borda_weights) {
        CHECK(weight == 0.25);
    }

    // each defaulting warning appears exactly once; preferences exist
    CHECK(count_warnings(report, "danger index not specified") == 1);
    CHECK(count_warnings(report, "Borda method weights not specified") == 1);
    CHECK(count_warnings(report, "weight grey parts not specified") == 1);
    CHECK(count_warnings(report, "preferences absent") == 0);

    // the max-entropy blend weights sum to 1 exactly
    CHECK(report.beta.positive + report.beta.negative == 1.0);
}

TEST_CASE("report shape matches the document") {
    Report report = run_pipeline(paper_example_document());
    const std::size_t n = 5, m = 9;
    CHECK(report.plans.size() == n);
    CHECK(report.attributes.size() == m);
    CHECK(report.normalized.size() == n);
    CHECK(report.normalized[0].size() == m);
    CHECK(report.subjective_weights.size() == m);
    CHECK(report.optimal_weights.size() == m);
    for (const auto& component : report.entropy_weights) {
        CHECK(component.size() == m);
    }
    CHECK(report.objective_weights.size() == m);
    CHECK(report.final_weights.size() == m);
    CHECK(report.weight_grey_parts.size() == m);
    CHECK(report.normalized_weights.fuzzy.size() == m);
    CHECK(report.normalized_weights.grey.size() == m);
    CHECK(report.blended.size() == n);
    CHECK(report.weighted.size() == n);
    CHECK(report.weighted_grey.size() == n);
    CHECK(report.sufficiency.size() == n);
    CHECK(report.effective.size() == n);
    CHECK(report.ideals.positive.size() == m);
    CHECK(report.ideals.negative.size() == m);
    CHECK(report.topsis_d_positive.size() == n);
    CHECK(report.topsis_d_negative.size() == n);
    CHECK(report.incidence.positive.size() == n);
    CHECK(report.incidence_g_positive.size() == n);
    CHECK(report.incidence_g_negative.size() == n);
    for (const MethodScores& scores : report.methods) {
        CHECK(scores.scores.size() == n);
        CHECK(scores.ranking.size() == n);
    }
    CHECK(report.final_ranking.borda_scores.size() == n);

    // subjective weights are the expert hull as printed
    CHECK(report.subjective_weights[0].lo == 0.2305);
    CHECK(report.subjective_weights[0].hi == 0.3093);
}

TEST_CASE("pipeline is deterministic byte for byte") {
    DecisionDocument doc = paper_example_document();
    Report first = run_pipeline(doc);
    Report second = run_pipeline(doc);
    CHECK(first == second);
    CHECK(emit_report(first) == emit_report(second));
    CHECK(emit_report(first, ReportFormat::table) == emit_report(second, ReportFormat::table));
}

TEST_CASE("reports round-trip through JSON") {
    Report report = run_pipeline(paper_example_document());
    std::string text = emit_report(report);
    Report parsed = parse_report(text);
    CHECK(parsed == report);
    CHECK(emit_report(parsed) == text);

    CHECK_THROWS_AS(parse_report("{"), ValidationError);
    CHECK_THROWS_AS(parse_report("[]"), ValidationError);
    CHECK_THROWS_AS(parse_report("{}"), ValidationError);
}

TEST_CASE("table report lists the plans in final order") {
    Report report = run_pipeline(paper_example_document());
    std::string table = emit_report(report, ReportFormat::table);

    CHECK(table.find("Final ranking (weighted Borda)") != std::string::npos);
    CHECK(table.find("Configuration") != std::string::npos);
    CHECK(table.find("Warnings") != std::string::npos);
    CHECK(table.find("danger index not specified") != std::string::npos);

    std::vector<std::string> expected{"A2", "A5", "A1", "A3", "A4"};
    std::size_t cursor = 0;
    for (const auto& plan : expected) {
        std::size_t at = table.find(" " + plan + " ", cursor);
        REQUIRE(at != std::string::npos);
        cursor = at + 1;
    }

    // the JSON format carries the warnings array too
    std::string text = emit_report(report);
    CHECK(text.find("\"warnings\"") != std::string::npos);
    CHECK(text.find("danger index not specified") != std::string::npos);
}

TEST_CASE("a dominant plan wins under every method") {
    auto parsed = parse_document(dominance_document());
    Report report = run_pipeline(parsed.document, {}, parsed.warnings);
    for (const MethodScores& scores : report.methods) {
        CHECK(scores.ranking.front() == 0);
        CHECK(scores.scores[0] > scores.scores[1]);
    }
    CHECK(report.final_ranking.order.front() == 0);
    CHECK(count_warnings(report, "plan preferences absent") == 1);
}

TEST_CASE("plan relabeling only permutes the results") {
    DecisionDocument doc = paper_example_document();
    Report base = run_pipeline(doc);

    // new row j comes from old row src[j]
    const std::vector<std::size_t> src{2, 0, 4, 1, 3};
    DecisionDocument shuffled = doc;
    for (std::size_t j = 0; j < src.size(); ++j) {
        shuffled.plans[j] = doc.plans[src[j]];
        shuffled.cells[j] = doc.cells[src[j]];
        (*shuffled.preferences)[j] = (*doc.preferences)[src[j]];
    }
    Report moved = run_pipeline(shuffled);

    for (std::size_t k = 0; k < base.methods.size(); ++k) {
        for (std::size_t j = 0; j < src.size(); ++j) {
            CHECK(moved.methods[k].scores[j] ==
                  doctest::Approx(base.methods[k].scores[src[j]]).epsilon(1e-12));
        }
    }
    // the final order names the same plans in the same sequence
    std::vector<std::string> base_order, moved_order;
    for (std::size_t p : base.final_ranking.order) base_order.push_back(base.plans[p]);
    for (std::size_t p : moved.final_ranking.order) moved_order.push_back(moved.plans[p]);
    CHECK(moved_order == base_order);
}

TEST_CASE("configuration precedence: options beat document config") {
    DecisionDocument doc = paper_example_document();
    doc.config.danger = 0.9;
    doc.config.rho = 0.3;

    Report doc_config = run_pipeline(doc);
    CHECK(doc_config.config.ranker.danger == 0.9);
    CHECK(doc_config.config.ranker.rho == 0.3);
    CHECK(count_warnings(doc_config, "danger index not specified") == 0);

    PipelineOptions options;
    options.danger = 0.2;
    options.incidence_form = IncidenceForm::classic;
    Report overridden = run_pipeline(doc, options);
    CHECK(overridden.config.ranker.danger == 0.2);
    CHECK(overridden.config.ranker.rho == 0.3); // untouched by options
    CHECK(overridden.config.ranker.incidence_form == IncidenceForm::classic);
}

TEST_CASE("document Borda weights are normalized into the report") {
    DecisionDocument doc = paper_example_document();
    doc.config.borda_weights = {{Method::topsis, 3.0}, {Method::membership, 1.0}};
    Report report = run_pipeline(doc);
    CHECK(report.config.borda_weights.at(Method::topsis) == doctest::Approx(0.75));
    CHECK(report.config.borda_weights.at(Method::membership) == doctest::Approx(0.25));
    CHECK(report.config.borda_weights.at(Method::incidence_approach) == 0.0);
    CHECK(report.config.borda_weights.at(Method::max_entropy) == 0.0);
    CHECK(count_warnings(report, "Borda method weights not specified") == 0);
    // unanimous example: restricting the fusion to two methods keeps the order
    CHECK(report.final_ranking.order == kExpectedOrder);
}

TEST_CASE("degenerate entropy components fall back to uniform with a warning") {
    std::string text = R"({
  "plans": ["p1", "p2"],
  "attributes": [{"name": "a", "orientation": "effect"}],
  "cells": [
    [{"type": "interval", "value": [1.0, 2.0], "grey": [0.2, 0.4]}],
    [{"type": "interval", "value": [1.0, 3.0], "grey": [0.2, 0.4]}]
  ],
  "experts": [[1.0]]
})";
    auto parsed = parse_document(text);
    Report report = run_pipeline(parsed.document, {}, parsed.warnings);
    // shared lower bounds make components 1 and 2 uniform after normalization
    CHECK(count_warnings(report, "entropy weights for tuple component 1 are degenerate") == 1);
    CHECK(count_warnings(report, "entropy weights for tuple component 2 are degenerate") == 1);
    CHECK(count_warnings(report, "entropy weights for tuple component 3 are degenerate") == 0);
    CHECK(report.entropy_weights[0] == std::vector<double>{1.0});
    // the wider plan dominates
    CHECK(report.final_ranking.order.front() == 1);
}

TEST_CASE("stage errors carry a stage prefix") {
    std::string text = R"({
  "plans": ["p1", "p2"],
  "attributes": [{"name": "a", "orientation": "cost"}],
  "cells": [
    [{"type": "real", "value": 0.0, "grey": [0.2, 0.4]}],
    [{"type": "real", "value": 3.0, "grey": [0.2, 0.4]}]
  ],
  "experts": [[1.0]]
})";
    auto parsed = parse_document(text);
    try {
        run_pipeline(parsed.document);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).rfind("normalize:", 0) == 0);
    }

    // all-identical plans degenerate inside the weights stage
    std::string identical = R"({
  "plans": ["p1", "p2"],
  "attributes": [{"name": "a", "orientation": "effect"}],
  "cells": [
    [{"type": "real", "value": 2.0, "grey": [0.2, 0.4]}],
    [{"type": "real", "value": 2.0, "grey": [0.2, 0.4]}]
  ],
  "experts": [[1.0]]
})";
    auto parsed_identical = parse_document(identical);
    try {
        run_pipeline(parsed_identical.document);
        FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
        CHECK(std::string(e.what()).rfind("weights:", 0) == 0);
    }

    // expert vectors of the wrong length are caught before weighting
    DecisionDocument bad_experts = parse_document(dominance_document()).document;
    bad_experts.experts = {{0.5}};
    CHECK_THROWS_AS(run_pipeline(bad_experts), ValidationError);
}

TEST_CASE("initial warnings are carried into the report") {
    auto parsed = parse_document(dominance_document());
    Report report = run_pipeline(parsed.document, {}, {"synthetic note"});
    REQUIRE_FALSE(report.warnings.empty());
    CHECK(report.warnings.front() == "synthetic note");
}

TEST_CASE("document weight grey parts flow into the weighting") {
    DecisionDocument doc = paper_example_document();
    doc.weight_grey = std::vector<GreyInterval>(9, GreyInterval(0.5, 0.5));
    Report report = run_pipeline(doc);
    CHECK(count_warnings(report, "weight grey parts not specified") == 0);
    CHECK(report.weight_grey_parts[0].lo == 0.5);
    // uniform grey parts normalize to 1/m each, so scores match the default run
    Report base = run_pipeline(paper_example_document());
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(report.methods[k].scores[i] ==
                  doctest::Approx(base.methods[k].scores[i]).epsilon(1e-12));
        }
    }
}
