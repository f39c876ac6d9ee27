#include "greymadm/normalize.hpp"

#include <string>

#include "greymadm/errors.hpp"

namespace greymadm {

namespace {

bool numeric_kind(ValueKind k) {
    return k == ValueKind::real || k == ValueKind::interval;
}

GeneralizedValue complement(const GeneralizedValue& v) {
    return GeneralizedValue::from_components(1.0 - v.a4, 1.0 - v.a3, 1.0 - v.a2, 1.0 - v.a1);
}

void require_positive_denominator(double sum, const char* which) {
    if (!(sum > 0.0)) {
        throw DegenerateError(std::string("normalization denominator over ") + which +
                              " components is not positive");
    }
}

} // namespace

std::vector<GeneralizedValue> normalize_column(const std::vector<GeneralizedValue>& column,
                                               Orientation orientation,
                                               NormalizationMode mode) {
    if (column.empty()) {
        throw ValidationError("cannot normalize an empty column");
    }

    const bool cost = orientation == Orientation::cost;

    // Under cost orientation linguistic-family cells are complemented up
    // front and then treated as effect-type; numeric cells keep their raw
    // values and go through the reciprocal formula.
    std::vector<GeneralizedValue> prepared;
    prepared.reserve(column.size());
    bool any_reciprocal = false;
    for (std::size_t i = 0; i < column.size(); ++i) {
        const GeneralizedValue& v = column[i];
        if (cost && numeric_kind(v.kind)) {
            if (!(v.a1 > 0.0)) {
                throw ValidationError("plan " + std::to_string(i + 1) +
                                      ": cost-type normalization requires strictly positive values");
            }
            any_reciprocal = true;
            prepared.push_back(v);
        } else if (cost) {
            if (v.a1 < 0.0 || v.a4 > 1.0) {
                throw ValidationError("plan " + std::to_string(i + 1) +
                                      ": cost-type complement needs values inside [0, 1]");
            }
            prepared.push_back(complement(v));
        } else {
            prepared.push_back(v);
        }
    }

    // Column denominators over matching components. Kinds lacking a natural
    // a* / a** contribute their a2 / a3 midpoints.
    double sum_a1 = 0.0, sum_a2 = 0.0, sum_a3 = 0.0, sum_a4 = 0.0;
    double sum_inv_a1 = 0.0, sum_inv_a4 = 0.0;
    for (const GeneralizedValue& v : prepared) {
        sum_a1 += v.a1;
        sum_a2 += v.a2;
        sum_a3 += v.a3;
        sum_a4 += v.a4;
        if (any_reciprocal) {
            if (!(v.a1 > 0.0) || !(v.a4 > 0.0)) {
                throw ValidationError(
                    "cost-type reciprocal normalization needs every bound in the column positive");
            }
            sum_inv_a1 += 1.0 / v.a1;
            sum_inv_a4 += 1.0 / v.a4;
        }
    }

    std::vector<GeneralizedValue> out;
    out.reserve(prepared.size());
    for (const GeneralizedValue& v : prepared) {
        if (cost && numeric_kind(v.kind)) {
            require_positive_denominator(sum_inv_a4, "reciprocal upper-bound");
            const double denom_lo =
                mode == NormalizationMode::symmetric ? sum_inv_a1 : sum_inv_a4;
            require_positive_denominator(denom_lo, "reciprocal lower-bound");
            const double lo = (1.0 / v.a4) / denom_lo;
            const double hi = (1.0 / v.a1) / sum_inv_a4;
            out.push_back(GeneralizedValue::from_unsorted(lo, lo, hi, hi));
        } else if (numeric_kind(v.kind)) {
            require_positive_denominator(sum_a4, "upper-bound");
            require_positive_denominator(sum_a1, "lower-bound");
            const double lo = v.a1 / sum_a4;
            const double hi = v.a4 / sum_a1;
            out.push_back(GeneralizedValue::from_unsorted(lo, lo, hi, hi));
        } else if (v.kind == ValueKind::linguistic) {
            require_positive_denominator(sum_a2, "midpoint");
            out.push_back(GeneralizedValue::from_unsorted(v.a1 / sum_a2, v.a2 / sum_a2,
                                                          v.a3 / sum_a2, v.a4 / sum_a2));
        } else {
            require_positive_denominator(sum_a2, "lower-midpoint");
            require_positive_denominator(sum_a3, "upper-midpoint");
            out.push_back(GeneralizedValue::from_unsorted(v.a1 / sum_a2, v.a2 / sum_a2,
                                                          v.a3 / sum_a3, v.a4 / sum_a3));
        }
    }
    return out;
}

DecisionMatrix normalize_matrix(const DecisionMatrix& matrix, NormalizationMode mode) {
    matrix.validate();

    DecisionMatrix out;
    out.plans = matrix.plans;
    out.attributes = matrix.attributes;
    out.cells.assign(matrix.plan_count(), std::vector<GreyFuzzyCell>(matrix.attribute_count()));

    for (std::size_t j = 0; j < matrix.attribute_count(); ++j) {
        std::vector<GeneralizedValue> normalized;
        try {
            normalized = normalize_column(matrix.column_values(j),
                                          matrix.attributes[j].orientation, mode);
        } catch (const ValidationError& e) {
            throw ValidationError("attribute '" + matrix.attributes[j].name + "' (column " +
                                  std::to_string(j + 1) + "): " + e.what());
        } catch (const DegenerateError& e) {
            throw DegenerateError("attribute '" + matrix.attributes[j].name + "' (column " +
                                  std::to_string(j + 1) + "): " + e.what());
        }
        for (std::size_t i = 0; i < matrix.plan_count(); ++i) {
            out.cells[i][j] = {normalized[i], matrix.cells[i][j].grey};
        }
    }
    return out;
}

} // namespace greymadm
