#pragma once

#include <vector>

#include "greymadm/matrix.hpp"

namespace greymadm {

/// Denominator convention for cost-type interval normalization. The printed
/// formula divides both bounds by the sum of upper-bound reciprocals;
/// `symmetric` divides the lower bound by the sum of lower-bound reciprocals
/// instead, mirroring the cross pattern of the effect-type formula.
enum class NormalizationMode { strict_paper, symmetric };

/// Normalizes one attribute column. Each cell uses the formula matching its
/// own kind; denominators are shared across the column, summing the matching
/// component of every plan:
///   interval/real, effect:  x_lo = a_lo / sum(a_hi),  x_hi = a_hi / sum(a_lo)
///   interval/real, cost:    x_lo = (1/a_hi) / sum(1/a_hi),
///                           x_hi = (1/a_lo) / sum(1/a_hi)   (strict_paper)
///   3-point (linguistic):   each component / sum(a2)
///   4-point (uncertain):    a1, a2 / sum(a2);  a3, a4 / sum(a3)
/// Cost-type linguistic and uncertain cells are complemented in [0, 1]
/// ((a1..a4) -> (1-a4..1-a1)) and then normalized as effect-type.
/// Normalized bounds may exceed 1; only the component ordering is enforced.
std::vector<GeneralizedValue> normalize_column(const std::vector<GeneralizedValue>& column,
                                               Orientation orientation,
                                               NormalizationMode mode = NormalizationMode::strict_paper);

/// Column-by-column normalization of a whole matrix; grey degrees are copied
/// through unchanged. Errors are annotated with the attribute name.
DecisionMatrix normalize_matrix(const DecisionMatrix& matrix,
                                NormalizationMode mode = NormalizationMode::strict_paper);

} // namespace greymadm
