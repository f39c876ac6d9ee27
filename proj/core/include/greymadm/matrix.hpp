#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "greymadm/value.hpp"

namespace greymadm {

/// Whether smaller (cost) or larger (effect) attribute values are preferred.
enum class Orientation { cost, effect };

/// Optional per-attribute value-kind declaration; `mixed` allows any.
enum class KindHint { real, interval, linguistic, uncertain, mixed };

struct AttributeSpec {
    std::string name;
    Orientation orientation = Orientation::effect;
    std::optional<KindHint> declared_kind;

    friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

/// n x m grid of grey-fuzzy cells; rows are plans, columns attributes.
/// Columns may freely mix value kinds.
struct DecisionMatrix {
    std::vector<std::string> plans;
    std::vector<AttributeSpec> attributes;
    std::vector<std::vector<GreyFuzzyCell>> cells; // [plan][attribute]

    std::size_t plan_count() const { return plans.size(); }
    std::size_t attribute_count() const { return attributes.size(); }

    /// Throws ValidationError unless n >= 2, m >= 1 and the grid matches
    /// the label lists.
    void validate() const;

    std::vector<GeneralizedValue> column_values(std::size_t j) const;

    friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;
};

} // namespace greymadm
