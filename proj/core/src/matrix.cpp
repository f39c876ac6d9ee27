#include "greymadm/matrix.hpp"

#include <string>

#include "greymadm/errors.hpp"

namespace greymadm {

void DecisionMatrix::validate() const {
    if (plans.size() < 2) {
        throw ValidationError("decision matrix needs at least two plans");
    }
    if (attributes.empty()) {
        throw ValidationError("decision matrix needs at least one attribute");
    }
    for (const AttributeSpec& spec : attributes) {
        if (spec.name.empty()) {
            throw ValidationError("attribute names must be nonempty");
        }
    }
    if (cells.size() != plans.size()) {
        throw ValidationError("cell grid has " + std::to_string(cells.size()) +
                              " rows but " + std::to_string(plans.size()) + " plans");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() != attributes.size()) {
            throw ValidationError("plan '" + plans[i] + "' has " +
                                  std::to_string(cells[i].size()) + " cells but " +
                                  std::to_string(attributes.size()) + " attributes");
        }
    }
}

std::vector<GeneralizedValue> DecisionMatrix::column_values(std::size_t j) const {
    std::vector<GeneralizedValue> column;
    column.reserve(cells.size());
    for (const auto& row : cells) {
        column.push_back(row.at(j).value);
    }
    return column;
}

} // namespace greymadm
