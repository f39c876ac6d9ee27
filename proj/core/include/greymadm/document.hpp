#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greymadm/borda.hpp"
#include "greymadm/matrix.hpp"
#include "greymadm/normalize.hpp"
#include "greymadm/rankers.hpp"
#include "greymadm/weights.hpp"

namespace greymadm {

// Canonical schema spellings for the enumerated fields, and their inverses.
// The *_from_label functions throw ValidationError on unknown labels.
std::string_view orientation_label(Orientation orientation);
std::string_view kind_hint_label(KindHint hint);
std::string_view incidence_form_label(IncidenceForm form);
std::string_view max_entropy_form_label(MaxEntropyForm form);
std::string_view normalization_label(NormalizationMode mode);
Orientation orientation_from_label(std::string_view label);
KindHint kind_hint_from_label(std::string_view label);
IncidenceForm incidence_form_from_label(std::string_view label);
MaxEntropyForm max_entropy_form_from_label(std::string_view label);
NormalizationMode normalization_from_label(std::string_view label);

/// One matrix entry as written in an input document: the tagged source
/// value plus its grey degree ([1, 1] when the document omitted it).
struct DocumentCell {
    RawValue value;
    GreyInterval grey;

    friend bool operator==(const DocumentCell&, const DocumentCell&) = default;
};

/// Optional parameter overrides carried inside a document. Unset fields
/// fall back to built-in defaults (recorded as warnings where they matter).
struct DocumentConfig {
    std::optional<double> danger;
    std::optional<double> rho;
    std::optional<double> theta_plus; // theta_minus is always 1 - theta_plus
    std::optional<IncidenceForm> incidence_form;
    std::optional<MaxEntropyForm> max_entropy_form;
    std::optional<NormalizationMode> normalization;
    std::map<Method, double> borda_weights; // empty = equal weights

    friend bool operator==(const DocumentConfig&, const DocumentConfig&) = default;
};

/// A complete ranking problem: labeled plans and attributes, the n x m cell
/// grid, expert weight vectors, and optional preferences / weight grey
/// parts / configuration.
struct DecisionDocument {
    std::vector<std::string> plans;
    std::vector<AttributeSpec> attributes;
    std::vector<std::vector<DocumentCell>> cells; // [plan][attribute]
    ExpertWeights experts;
    std::optional<std::vector<GeneralizedValue>> preferences; // one per plan
    std::optional<std::vector<GreyInterval>> weight_grey;     // one per attribute
    DocumentConfig config;

    /// Converts the tagged cells into a validated DecisionMatrix. Cells are
    /// checked against declared_kind hints (`mixed` and absent allow any).
    DecisionMatrix to_matrix(const LinguisticScale& scale = LinguisticScale::standard()) const;

    friend bool operator==(const DecisionDocument&, const DecisionDocument&) = default;
};

struct ParseResult {
    DecisionDocument document;
    std::vector<std::string> warnings; // defaulted grey degrees etc.
};

/// Parses and validates a JSON document. Errors carry the offending field
/// path. Unknown fields are rejected unless `lenient`, which downgrades
/// them to warnings. Linguistic labels are resolved to canonical spellings.
ParseResult parse_document(const std::string& json_text, bool lenient = false,
                           const LinguisticScale& scale = LinguisticScale::standard());

/// Serializes a document back to JSON (2-space indent, trailing newline).
/// parse_document(emit_document(d)) reproduces d exactly.
std::string emit_document(const DecisionDocument& document);

/// The bundled five-plan, nine-attribute fighter-selection example,
/// including its expert weight vectors and plan preferences.
std::string paper_example_json();
DecisionDocument paper_example_document();

} // namespace greymadm
