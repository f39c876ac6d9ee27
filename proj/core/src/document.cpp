#include "greymadm/document.hpp"

#include <initializer_list>
#include <set>
#include <utility>

#include "greymadm/errors.hpp"
#include "json_util.hpp"

namespace greymadm {

using jsonutil::as_array;
using jsonutil::as_number;
using jsonutil::as_number_pair;
using jsonutil::as_object;
using jsonutil::as_string;
using jsonutil::element_path;
using jsonutil::fail;
using jsonutil::json;
using jsonutil::require_field;

std::string_view orientation_label(Orientation orientation) {
    return orientation == Orientation::cost ? "cost" : "effect";
}

std::string_view kind_hint_label(KindHint hint) {
    switch (hint) {
        case KindHint::real: return "real";
        case KindHint::interval: return "interval";
        case KindHint::linguistic: return "linguistic";
        case KindHint::uncertain: return "uncertain-linguistic";
        default: return "mixed";
    }
}

std::string_view incidence_form_label(IncidenceForm form) {
    return form == IncidenceForm::paper ? "paper" : "classic";
}

std::string_view max_entropy_form_label(MaxEntropyForm form) {
    return form == MaxEntropyForm::normalized ? "normalized" : "legacy";
}

std::string_view normalization_label(NormalizationMode mode) {
    return mode == NormalizationMode::strict_paper ? "strict-paper" : "symmetric";
}

Orientation orientation_from_label(std::string_view label) {
    if (label == "cost") return Orientation::cost;
    if (label == "effect") return Orientation::effect;
    throw ValidationError("unknown orientation '" + std::string(label) +
                          "' (expected cost or effect)");
}

KindHint kind_hint_from_label(std::string_view label) {
    if (label == "real") return KindHint::real;
    if (label == "interval") return KindHint::interval;
    if (label == "linguistic") return KindHint::linguistic;
    if (label == "uncertain-linguistic" || label == "uncertain") return KindHint::uncertain;
    if (label == "mixed") return KindHint::mixed;
    throw ValidationError("unknown kind '" + std::string(label) +
                          "' (expected real, interval, linguistic, uncertain-linguistic or mixed)");
}

IncidenceForm incidence_form_from_label(std::string_view label) {
    if (label == "paper") return IncidenceForm::paper;
    if (label == "classic") return IncidenceForm::classic;
    throw ValidationError("unknown incidence form '" + std::string(label) +
                          "' (expected paper or classic)");
}

MaxEntropyForm max_entropy_form_from_label(std::string_view label) {
    if (label == "normalized") return MaxEntropyForm::normalized;
    if (label == "legacy") return MaxEntropyForm::legacy;
    throw ValidationError("unknown max-entropy form '" + std::string(label) +
                          "' (expected normalized or legacy)");
}

NormalizationMode normalization_from_label(std::string_view label) {
    if (label == "strict-paper") return NormalizationMode::strict_paper;
    if (label == "symmetric") return NormalizationMode::symmetric;
    throw ValidationError("unknown normalization mode '" + std::string(label) +
                          "' (expected strict-paper or symmetric)");
}

namespace {

void check_known_fields(const json& obj, const std::string& path,
                        std::initializer_list<const char*> known, bool lenient,
                        std::vector<std::string>& warnings) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool recognized = false;
        for (const char* key : known) {
            if (it.key() == key) {
                recognized = true;
                break;
            }
        }
        if (!recognized) {
            const std::string where = path.empty() ? it.key() : path + "." + it.key();
            if (lenient) {
                warnings.push_back("ignoring unknown field '" + where + "'");
            } else {
                fail(where, "unknown field (rerun with --lenient to ignore)");
            }
        }
    }
}

GreyInterval parse_grey(const json& j, const std::string& path) {
    auto [lo, hi] = as_number_pair(j, path);
    try {
        return GreyInterval(lo, hi);
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

KindHint raw_kind(const RawValue& value) {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RealValue>) return KindHint::real;
            else if constexpr (std::is_same_v<T, IntervalValue>) return KindHint::interval;
            else if constexpr (std::is_same_v<T, LinguisticValue>) return KindHint::linguistic;
            else return KindHint::uncertain;
        },
        value);
}

std::string canonical_term(const json& j, const std::string& path, const LinguisticScale& scale) {
    const std::string term = as_string(j, path);
    try {
        return scale.canonical(term);
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

DocumentCell parse_cell(const json& j, const std::string& path, bool lenient,
                        std::vector<std::string>& warnings, const LinguisticScale& scale) {
    as_object(j, path);
    check_known_fields(j, path, {"type", "value", "grey"}, lenient, warnings);
    const std::string type = as_string(require_field(j, path, "type"), path + ".type");
    const json& value = require_field(j, path, "value");
    const std::string vpath = path + ".value";

    DocumentCell cell;
    if (type == "real") {
        cell.value = RealValue{as_number(value, vpath)};
    } else if (type == "interval") {
        auto [lo, hi] = as_number_pair(value, vpath);
        if (lo > hi) {
            fail(vpath, "interval bounds out of order: [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
        }
        cell.value = IntervalValue{lo, hi};
    } else if (type == "linguistic") {
        cell.value = LinguisticValue{canonical_term(value, vpath, scale)};
    } else if (type == "uncertain") {
        as_array(value, vpath);
        if (value.size() != 2) fail(vpath, "expected a 2-element array of terms");
        UncertainValue span{canonical_term(value[0], vpath + "[0]", scale),
                            canonical_term(value[1], vpath + "[1]", scale)};
        if (scale.index_of(span.lower) > scale.index_of(span.upper)) {
            fail(vpath, "span terms out of order: '" + span.lower + "' is above '" + span.upper +
                            "' on the scale");
        }
        cell.value = std::move(span);
    } else {
        fail(path + ".type",
             "unknown value type '" + type + "' (expected real, interval, linguistic or uncertain)");
    }

    if (auto it = j.find("grey"); it != j.end()) {
        cell.grey = parse_grey(*it, path + ".grey");
    } else {
        cell.grey = GreyInterval(1.0, 1.0);
        warnings.push_back(path + ": grey degree missing, defaulted to [1, 1]");
    }
    return cell;
}

void parse_config(const json& j, DocumentConfig& config, bool lenient,
                  std::vector<std::string>& warnings) {
    const std::string path = "config";
    as_object(j, path);
    check_known_fields(j, path,
                       {"danger", "rho", "theta_plus", "incidence_form", "max_entropy_form",
                        "normalization", "borda_weights"},
                       lenient, warnings);
    if (auto it = j.find("danger"); it != j.end()) {
        const double danger = as_number(*it, path + ".danger");
        if (danger < 0.0 || danger > 1.0) fail(path + ".danger", "must lie in [0, 1]");
        config.danger = danger;
    }
    if (auto it = j.find("rho"); it != j.end()) {
        const double rho = as_number(*it, path + ".rho");
        if (rho <= 0.0 || rho >= 1.0) fail(path + ".rho", "must lie strictly between 0 and 1");
        config.rho = rho;
    }
    if (auto it = j.find("theta_plus"); it != j.end()) {
        const double theta = as_number(*it, path + ".theta_plus");
        if (theta <= 0.0 || theta > 1.0) fail(path + ".theta_plus", "must lie in (0, 1]");
        config.theta_plus = theta;
    }
    if (auto it = j.find("incidence_form"); it != j.end()) {
        try {
            config.incidence_form =
                incidence_form_from_label(as_string(*it, path + ".incidence_form"));
        } catch (const ValidationError& e) {
            fail(path + ".incidence_form", e.what());
        }
    }
    if (auto it = j.find("max_entropy_form"); it != j.end()) {
        try {
            config.max_entropy_form =
                max_entropy_form_from_label(as_string(*it, path + ".max_entropy_form"));
        } catch (const ValidationError& e) {
            fail(path + ".max_entropy_form", e.what());
        }
    }
    if (auto it = j.find("normalization"); it != j.end()) {
        try {
            config.normalization =
                normalization_from_label(as_string(*it, path + ".normalization"));
        } catch (const ValidationError& e) {
            fail(path + ".normalization", e.what());
        }
    }
    if (auto it = j.find("borda_weights"); it != j.end()) {
        as_object(*it, path + ".borda_weights");
        double total = 0.0;
        for (auto entry = it->begin(); entry != it->end(); ++entry) {
            const std::string wpath = path + ".borda_weights." + entry.key();
            Method method;
            try {
                method = method_from_id(entry.key());
            } catch (const ValidationError& e) {
                fail(wpath, e.what());
            }
            const double weight = as_number(entry.value(), wpath);
            if (weight < 0.0) fail(wpath, "must be nonnegative");
            config.borda_weights[method] = weight;
            total += weight;
        }
        if (!config.borda_weights.empty() && total <= 0.0) {
            fail(path + ".borda_weights", "weights sum to zero");
        }
    }
}

json emit_value(const RawValue& value) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RealValue>) return v.value;
            else if constexpr (std::is_same_v<T, IntervalValue>) return json::array({v.lo, v.hi});
            else if constexpr (std::is_same_v<T, LinguisticValue>) return v.term;
            else return json::array({v.lower, v.upper});
        },
        value);
}

std::string value_type_tag(const RawValue& value) {
    switch (raw_kind(value)) {
        case KindHint::real: return "real";
        case KindHint::interval: return "interval";
        case KindHint::linguistic: return "linguistic";
        default: return "uncertain";
    }
}

} // namespace

ParseResult parse_document(const std::string& json_text, bool lenient,
                           const LinguisticScale& scale) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("document root must be an object");

    ParseResult result;
    DecisionDocument& doc = result.document;
    std::vector<std::string>& warnings = result.warnings;

    check_known_fields(root, "",
                       {"plans", "attributes", "cells", "experts", "preferences", "weight_grey",
                        "config"},
                       lenient, warnings);

    const json& plans = as_array(require_field(root, "", "plans"), "plans");
    std::set<std::string> seen_plans;
    for (std::size_t i = 0; i < plans.size(); ++i) {
        const std::string path = element_path("plans", i);
        std::string label = as_string(plans[i], path);
        if (label.empty()) fail(path, "plan label must not be empty");
        if (!seen_plans.insert(label).second) fail(path, "duplicate plan label '" + label + "'");
        doc.plans.push_back(std::move(label));
    }
    if (doc.plans.size() < 2) fail("plans", "at least two plans are required");

    const json& attrs = as_array(require_field(root, "", "attributes"), "attributes");
    std::set<std::string> seen_attrs;
    for (std::size_t j = 0; j < attrs.size(); ++j) {
        const std::string path = element_path("attributes", j);
        const json& aj = as_object(attrs[j], path);
        check_known_fields(aj, path, {"name", "orientation", "declared_kind"}, lenient, warnings);
        AttributeSpec spec;
        spec.name = as_string(require_field(aj, path, "name"), path + ".name");
        if (spec.name.empty()) fail(path + ".name", "attribute name must not be empty");
        if (!seen_attrs.insert(spec.name).second) {
            fail(path + ".name", "duplicate attribute name '" + spec.name + "'");
        }
        try {
            spec.orientation = orientation_from_label(
                as_string(require_field(aj, path, "orientation"), path + ".orientation"));
        } catch (const ValidationError& e) {
            fail(path + ".orientation", e.what());
        }
        if (auto it = aj.find("declared_kind"); it != aj.end()) {
            try {
                spec.declared_kind = kind_hint_from_label(as_string(*it, path + ".declared_kind"));
            } catch (const ValidationError& e) {
                fail(path + ".declared_kind", e.what());
            }
        }
        doc.attributes.push_back(std::move(spec));
    }
    if (doc.attributes.empty()) fail("attributes", "at least one attribute is required");

    const std::size_t n = doc.plans.size();
    const std::size_t m = doc.attributes.size();

    const json& cells = as_array(require_field(root, "", "cells"), "cells");
    if (cells.size() != n) {
        fail("cells", "expected " + std::to_string(n) + " rows (one per plan), got " +
                          std::to_string(cells.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row_path = element_path("cells", i);
        const json& row = as_array(cells[i], row_path);
        if (row.size() != m) {
            fail(row_path, "expected " + std::to_string(m) + " cells (one per attribute), got " +
                               std::to_string(row.size()));
        }
        std::vector<DocumentCell> parsed_row;
        for (std::size_t j = 0; j < m; ++j) {
            parsed_row.push_back(
                parse_cell(row[j], element_path(row_path, j), lenient, warnings, scale));
        }
        doc.cells.push_back(std::move(parsed_row));
    }

    const json& experts = as_array(require_field(root, "", "experts"), "experts");
    if (experts.empty()) fail("experts", "at least one expert weight vector is required");
    for (std::size_t l = 0; l < experts.size(); ++l) {
        const std::string path = element_path("experts", l);
        const json& vec = as_array(experts[l], path);
        if (vec.size() != m) {
            fail(path, "expected " + std::to_string(m) + " weights (one per attribute), got " +
                           std::to_string(vec.size()));
        }
        std::vector<double> weights;
        for (std::size_t j = 0; j < m; ++j) {
            const std::string wpath = element_path(path, j);
            const double w = as_number(vec[j], wpath);
            if (w < 0.0) fail(wpath, "subjective weights must be nonnegative");
            weights.push_back(w);
        }
        doc.experts.push_back(std::move(weights));
    }

    if (auto it = root.find("preferences"); it != root.end()) {
        const json& prefs = as_array(*it, "preferences");
        if (prefs.size() != n) {
            fail("preferences", "expected " + std::to_string(n) + " entries (one per plan), got " +
                                    std::to_string(prefs.size()));
        }
        std::vector<GeneralizedValue> parsed;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string path = element_path("preferences", i);
            const json& q = as_array(prefs[i], path);
            if (q.size() != 4) {
                fail(path, "expected a 4-tuple, got " + std::to_string(q.size()) + " entries");
            }
            double c[4];
            for (std::size_t k = 0; k < 4; ++k) c[k] = as_number(q[k], element_path(path, k));
            try {
                parsed.push_back(GeneralizedValue::from_components(c[0], c[1], c[2], c[3]));
            } catch (const ValidationError& e) {
                fail(path, e.what());
            }
        }
        doc.preferences = std::move(parsed);
    }

    if (auto it = root.find("weight_grey"); it != root.end()) {
        const json& greys = as_array(*it, "weight_grey");
        if (greys.size() != m) {
            fail("weight_grey", "expected " + std::to_string(m) +
                                    " entries (one per attribute), got " +
                                    std::to_string(greys.size()));
        }
        std::vector<GreyInterval> parsed;
        for (std::size_t j = 0; j < m; ++j) {
            parsed.push_back(parse_grey(greys[j], element_path("weight_grey", j)));
        }
        doc.weight_grey = std::move(parsed);
    }

    if (auto it = root.find("config"); it != root.end()) {
        parse_config(*it, doc.config, lenient, warnings);
    }

    return result;
}

DecisionMatrix DecisionDocument::to_matrix(const LinguisticScale& scale) const {
    DecisionMatrix matrix;
    matrix.plans = plans;
    matrix.attributes = attributes;
    matrix.cells.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            const std::string path = element_path(element_path("cells", i), j);
            const DocumentCell& cell = cells[i][j];
            if (j < attributes.size() && attributes[j].declared_kind &&
                *attributes[j].declared_kind != KindHint::mixed &&
                *attributes[j].declared_kind != raw_kind(cell.value)) {
                throw ValidationError(
                    path + ": " + value_type_tag(cell.value) + " value conflicts with attribute '" +
                    attributes[j].name + "' declared kind " +
                    std::string(kind_hint_label(*attributes[j].declared_kind)));
            }
            GeneralizedValue value;
            try {
                value = to_generalized(cell.value, scale);
            } catch (const ValidationError& e) {
                throw ValidationError(path + ": " + e.what());
            }
            matrix.cells[i].push_back(GreyFuzzyCell{value, cell.grey});
        }
    }
    matrix.validate();
    return matrix;
}

std::string emit_document(const DecisionDocument& document) {
    json root = json::object();
    root["plans"] = document.plans;

    json attrs = json::array();
    for (const AttributeSpec& spec : document.attributes) {
        json aj = json::object();
        aj["name"] = spec.name;
        aj["orientation"] = orientation_label(spec.orientation);
        if (spec.declared_kind) aj["declared_kind"] = kind_hint_label(*spec.declared_kind);
        attrs.push_back(std::move(aj));
    }
    root["attributes"] = std::move(attrs);

    json rows = json::array();
    for (const auto& row : document.cells) {
        json rj = json::array();
        for (const DocumentCell& cell : row) {
            json cj = json::object();
            cj["type"] = value_type_tag(cell.value);
            cj["value"] = emit_value(cell.value);
            cj["grey"] = json::array({cell.grey.lo, cell.grey.hi});
            rj.push_back(std::move(cj));
        }
        rows.push_back(std::move(rj));
    }
    root["cells"] = std::move(rows);

    root["experts"] = document.experts;

    if (document.preferences) {
        json prefs = json::array();
        for (const GeneralizedValue& q : *document.preferences) {
            prefs.push_back(json::array({q.a1, q.a2, q.a3, q.a4}));
        }
        root["preferences"] = std::move(prefs);
    }
    if (document.weight_grey) {
        json greys = json::array();
        for (const GreyInterval& g : *document.weight_grey) {
            greys.push_back(json::array({g.lo, g.hi}));
        }
        root["weight_grey"] = std::move(greys);
    }

    const DocumentConfig& config = document.config;
    const bool has_config = config.danger || config.rho || config.theta_plus ||
                            config.incidence_form || config.max_entropy_form ||
                            config.normalization || !config.borda_weights.empty();
    if (has_config) {
        json cj = json::object();
        if (config.danger) cj["danger"] = *config.danger;
        if (config.rho) cj["rho"] = *config.rho;
        if (config.theta_plus) cj["theta_plus"] = *config.theta_plus;
        if (config.incidence_form) cj["incidence_form"] = incidence_form_label(*config.incidence_form);
        if (config.max_entropy_form) {
            cj["max_entropy_form"] = max_entropy_form_label(*config.max_entropy_form);
        }
        if (config.normalization) cj["normalization"] = normalization_label(*config.normalization);
        if (!config.borda_weights.empty()) {
            json bw = json::object();
            for (const auto& [method, weight] : config.borda_weights) {
                bw[method_id(method)] = weight;
            }
            cj["borda_weights"] = std::move(bw);
        }
        root["config"] = std::move(cj);
    }

    return root.dump(2) + "\n";
}

std::string paper_example_json() {
    // Five fighter development plans scored on nine attributes: G1 empty
    // body weight (kg), G2 flight radius (km), G3 maximum speed (km/h),
    // G4 development cost, G5 overhaul interval (h), G6 maintainability,
    // G7 security, G8 developer reliability, G9 environmental impact.
    // The two expert vectors are the componentwise bounds of the published
    // group interval weights.
    return R"json({
  "plans": ["A1", "A2", "A3", "A4", "A5"],
  "attributes": [
    {"name": "G1", "orientation": "cost"},
    {"name": "G2", "orientation": "effect"},
    {"name": "G3", "orientation": "effect"},
    {"name": "G4", "orientation": "cost"},
    {"name": "G5", "orientation": "effect"},
    {"name": "G6", "orientation": "effect"},
    {"name": "G7", "orientation": "effect"},
    {"name": "G8", "orientation": "effect"},
    {"name": "G9", "orientation": "cost"}
  ],
  "cells": [
    [
      {"type": "real", "value": 3610, "grey": [0.2, 0.4]},
      {"type": "real", "value": 490, "grey": [0.3, 0.5]},
      {"type": "interval", "value": [465, 485], "grey": [0.2, 0.25]},
      {"type": "real", "value": 4890, "grey": [0.4, 0.6]},
      {"type": "interval", "value": [850, 950], "grey": [0.2, 0.4]},
      {"type": "linguistic", "value": "very high", "grey": [0.3, 0.5]},
      {"type": "linguistic", "value": "rather high", "grey": [0.4, 0.6]},
      {"type": "uncertain", "value": ["a little high", "rather high"], "grey": [0.5, 0.7]},
      {"type": "linguistic", "value": "rather low", "grey": [0.3, 0.5]}
    ],
    [
      {"type": "interval", "value": [3540, 3640], "grey": [0.3, 0.5]},
      {"type": "real", "value": 520, "grey": [0.2, 0.4]},
      {"type": "interval", "value": [480, 490], "grey": [0.5, 0.6]},
      {"type": "interval", "value": [4680, 4790], "grey": [0.2, 0.4]},
      {"type": "interval", "value": [800, 900], "grey": [0.4, 0.6]},
      {"type": "uncertain", "value": ["rather high", "very high"], "grey": [0.3, 0.5]},
      {"type": "linguistic", "value": "high", "grey": [0.6, 0.7]},
      {"type": "uncertain", "value": ["high", "very high"], "grey": [0.2, 0.4]},
      {"type": "uncertain", "value": ["low", "rather low"], "grey": [0.5, 0.6]}
    ],
    [
      {"type": "real", "value": 3700, "grey": [0.1, 0.3]},
      {"type": "interval", "value": [460, 500], "grey": [0.3, 0.5]},
      {"type": "real", "value": 470, "grey": [0.2, 0.3]},
      {"type": "interval", "value": [4600, 4720], "grey": [0.3, 0.5]},
      {"type": "interval", "value": [700, 800], "grey": [0.5, 0.7]},
      {"type": "uncertain", "value": ["rather high", "high"], "grey": [0.3, 0.6]},
      {"type": "uncertain", "value": ["a little high", "high"], "grey": [0.4, 0.7]},
      {"type": "linguistic", "value": "high", "grey": [0.3, 0.5]},
      {"type": "uncertain", "value": ["very low", "rather low"], "grey": [0.2, 0.4]}
    ],
    [
      {"type": "interval", "value": [3730, 3830], "grey": [0.2, 0.4]},
      {"type": "real", "value": 470, "grey": [0.1, 0.3]},
      {"type": "interval", "value": [460, 475], "grey": [0.3, 0.5]},
      {"type": "real", "value": 4715, "grey": [0.2, 0.3]},
      {"type": "interval", "value": [700, 750], "grey": [0.4, 0.6]},
      {"type": "linguistic", "value": "general", "grey": [0.2, 0.5]},
      {"type": "linguistic", "value": "a little high", "grey": [0.3, 0.6]},
      {"type": "uncertain", "value": ["general", "rather high"], "grey": [0.4, 0.6]},
      {"type": "uncertain", "value": ["rather low", "a little low"], "grey": [0.3, 0.5]}
    ],
    [
      {"type": "real", "value": 3690, "grey": [0.3, 0.4]},
      {"type": "interval", "value": [490, 530], "grey": [0.2, 0.4]},
      {"type": "interval", "value": [470, 485], "grey": [0.4, 0.6]},
      {"type": "interval", "value": [4790, 4850], "grey": [0.2, 0.3]},
      {"type": "interval", "value": [750, 850], "grey": [0.4, 0.5]},
      {"type": "linguistic", "value": "rather high", "grey": [0.3, 0.6]},
      {"type": "uncertain", "value": ["rather high", "rery high"], "grey": [0.2, 0.5]},
      {"type": "uncertain", "value": ["rather high", "high"], "grey": [0.3, 0.5]},
      {"type": "uncertain", "value": ["very low", "low"], "grey": [0.2, 0.4]}
    ]
  ],
  "experts": [
    [0.2305, 0.1501, 0.1262, 0.1323, 0.0815, 0.0557, 0.0431, 0.0492, 0.0352],
    [0.3093, 0.1675, 0.1761, 0.1348, 0.0948, 0.0622, 0.0623, 0.0515, 0.0376]
  ],
  "preferences": [
    [0.2, 0.3, 0.3, 0.4],
    [0.2, 0.4, 0.4, 0.5],
    [0.1, 0.2, 0.3, 0.4],
    [0.1, 0.2, 0.3, 0.4],
    [0.2, 0.3, 0.4, 0.5]
  ]
}
)json";
}

DecisionDocument paper_example_document() {
    return parse_document(paper_example_json()).document;
}

} // namespace greymadm
