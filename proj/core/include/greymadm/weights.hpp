#pragma once

#include <array>
#include <vector>

#include "greymadm/matrix.hpp"

namespace greymadm {

/// Closed interval used for weights. Unlike GreyInterval, bounds are not
/// restricted to [0, 1]: the cross-normalization patterns below routinely
/// push upper bounds past 1.
struct Bounds {
    double lo = 0.0;
    double hi = 0.0;

    Bounds() = default;
    Bounds(double lo, double hi);

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

enum class WeightRole { subjective, objective, comprehensive };

/// Per-attribute interval weights: subjective alpha, objective beta, or the
/// final comprehensive w.
struct GreyWeightVector {
    std::vector<Bounds> entries;
    WeightRole role = WeightRole::subjective;

    friend bool operator==(const GreyWeightVector&, const GreyWeightVector&) = default;
};

/// Weight vector whose entries carry a fuzzy part [w-, w+] and a grey part
/// [s-, s+], one of each per attribute.
struct GreyFuzzyWeights {
    std::vector<Bounds> fuzzy;
    std::vector<Bounds> grey;

    friend bool operator==(const GreyFuzzyWeights&, const GreyFuzzyWeights&) = default;
};

/// One subjective weight vector per expert, all of length m.
using ExpertWeights = std::vector<std::vector<double>>;

/// Interval hull of the expert vectors: entry j = [min_l, max_l].
GreyWeightVector aggregate_subjective(const ExpertWeights& experts);

/// Deviation-maximizing crisp weights: attribute j gets the total pairwise
/// 4-D distance of its column, normalized to sum 1. Throws DegenerateError
/// when every plan is identical in every attribute.
std::vector<double> objective_optimal(const DecisionMatrix& normalized);

/// Entropy weights for tuple component k (1..4). Uses the 0*ln(0) = 0
/// convention. Throws DegenerateError when every column is uniform.
std::vector<double> objective_entropy(const DecisionMatrix& normalized, int component);

/// Interval hull of the five crisp objective vectors per attribute.
GreyWeightVector comprehensive_objective(const std::vector<double>& optimal,
                                         const std::array<std::vector<double>, 4>& entropy);

/// Final comprehensive weights: interval products alpha_j * beta_j divided
/// by the opposite-bound sums, w_j = [lo_j / sum(hi), hi_j / sum(lo)].
GreyWeightVector final_weights(const GreyWeightVector& subjective,
                               const GreyWeightVector& objective);

/// Cross-normalizes fuzzy and grey parts independently:
/// lo / sum(hi), hi / sum(lo). Bounds above 1 are kept.
GreyFuzzyWeights normalize_grey_fuzzy_weights(const GreyFuzzyWeights& weights);

} // namespace greymadm
