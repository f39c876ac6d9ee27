#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "greymadm/matrix.hpp"
#include "greymadm/weights.hpp"

namespace greymadm {

/// Incidence-coefficient denominator. `paper` keeps the distinguishing
/// coefficient rho out of the denominator; `classic` is the Deng form with
/// rho on both sides (the only form under which a perfect match scores 1).
enum class IncidenceForm { paper, classic };

/// Closed form for the max-entropy blend weights. `normalized` is the
/// stationary point of the constrained problem (weights sum to 1 exactly);
/// `legacy` reproduces an alternative denominator kept for comparison.
enum class MaxEntropyForm { normalized, legacy };

struct RankerConfig {
    double danger = 0.5;      // risk attitude in [0, 1]
    double rho = 0.5;         // distinguishing coefficient in (0, 1)
    double theta_plus = 0.5;  // preference toward the positive ideal
    double theta_minus = 0.5; // theta_plus + theta_minus == 1
    IncidenceForm incidence_form = IncidenceForm::paper;
    MaxEntropyForm max_entropy_form = MaxEntropyForm::normalized;

    void validate() const;

    friend bool operator==(const RankerConfig&, const RankerConfig&) = default;
};

enum class Method { topsis, incidence_approach, membership, max_entropy };

const std::string& method_id(Method m);
Method method_from_id(const std::string& id);

/// Scores for one method over all plans plus the induced ranking, the
/// stable descending argsort of the scores (best plan first).
struct MethodScores {
    Method method = Method::topsis;
    std::vector<double> scores;
    std::vector<std::size_t> ranking;

    friend bool operator==(const MethodScores&, const MethodScores&) = default;
};

MethodScores make_method_scores(Method method, std::vector<double> scores);

/// Componentwise column extrema over all plans.
struct IdealPair {
    std::vector<GeneralizedValue> positive;
    std::vector<GeneralizedValue> negative;

    friend bool operator==(const IdealPair&, const IdealPair&) = default;
};

using CellGrid = std::vector<std::vector<GreyFuzzyCell>>;
using ValueGrid = std::vector<std::vector<GeneralizedValue>>;

/// Averages each cell with the plan's subjective preference tuple,
/// z = (q + x) / 2 componentwise; grey degrees are carried unblended.
CellGrid blend_preference(const DecisionMatrix& normalized,
                          const std::vector<GeneralizedValue>& preferences);

/// Applies the normalized grey-fuzzy weights: tuple components 1 and 2 are
/// scaled by the fuzzy lower bound, 3 and 4 by the upper bound; cell grey
/// degrees are multiplied by the weight grey part and clamped into [0, 1].
CellGrid weight_and_grey(const CellGrid& blended, const GreyFuzzyWeights& weights);

/// Information sufficiency of a grey degree under risk attitude `danger`:
/// 1 - (midpoint + (2*danger - 1) * halfwidth). 1 at [0,0], 0 at [1,1].
double sufficiency(const GreyInterval& grey, double danger);

std::vector<std::vector<double>> sufficiency_matrix(const CellGrid& weighted, double danger);

/// Scales each cell's tuple by its information sufficiency.
ValueGrid apply_sufficiency(const CellGrid& weighted, double danger);

IdealPair ideal_vectors(const ValueGrid& final_matrix);

/// Per-plan distance to one ideal vector: all 4m squared component gaps
/// aggregated under a single square root.
std::vector<double> topsis_distances(const ValueGrid& final_matrix,
                                     const std::vector<GeneralizedValue>& ideal);

/// Relative approach degree C_i = D- / (D+ + D-) where D+- aggregates all
/// squared component gaps to an ideal under one square root. Throws
/// DegenerateError when a plan coincides with both ideals.
MethodScores topsis_scores(const ValueGrid& final_matrix, const IdealPair& ideals);

/// Per-cell grey incidence coefficients against both ideals.
struct IncidencePair {
    std::vector<std::vector<double>> positive;
    std::vector<std::vector<double>> negative;

    friend bool operator==(const IncidencePair&, const IncidencePair&) = default;
};

IncidencePair incidence_coefficients(const ValueGrid& final_matrix, const IdealPair& ideals,
                                     double rho, IncidenceForm form);

/// Row mean of an incidence coefficient matrix.
std::vector<double> incidence_degree(const std::vector<std::vector<double>>& coefficients);

/// Preference-weighted approach degree between the two incidence degrees;
/// collapses to the positive degree itself when theta_minus == 0.
MethodScores incidence_relative_approach(const std::vector<double>& positive_degree,
                                         const std::vector<double>& negative_degree,
                                         double theta_plus, double theta_minus);

/// Membership of each plan in the positive ideal, the closed-form minimizer
/// u_i = G+^2 / (G+^2 + G-^2) of the squared-residual objective.
MethodScores membership_scores(const std::vector<double>& positive_degree,
                               const std::vector<double>& negative_degree);

struct MaxEntropyWeights {
    double positive = 0.5;
    double negative = 0.5;

    friend bool operator==(const MaxEntropyWeights&, const MaxEntropyWeights&) = default;
};

/// Entropy-regularized blend weights. With S the sum of all incidence
/// degrees and n the plan count, the normalized form is the logistic pair
/// (sigma(S-n), 1-sigma(S-n)), summing to 1 exactly.
MaxEntropyWeights max_entropy_beta(const std::vector<double>& positive_degree,
                                   const std::vector<double>& negative_degree,
                                   MaxEntropyForm form = MaxEntropyForm::normalized);

/// Comprehensive incidence degree beta1 * G+ + beta2 * (1 - G-).
MethodScores comprehensive_incidence(const std::vector<double>& positive_degree,
                                     const std::vector<double>& negative_degree,
                                     const MaxEntropyWeights& beta);

} // namespace greymadm
