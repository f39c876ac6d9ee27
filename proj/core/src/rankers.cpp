#include "greymadm/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "greymadm/errors.hpp"

namespace greymadm {

void RankerConfig::validate() const {
    if (!(danger >= 0.0 && danger <= 1.0)) {
        throw ValidationError("danger index must lie in [0, 1]");
    }
    if (!(rho > 0.0 && rho < 1.0)) {
        throw ValidationError("distinguishing coefficient rho must lie in (0, 1)");
    }
    if (!(theta_plus > 0.0 && theta_plus <= 1.0) || !(theta_minus >= 0.0 && theta_minus <= 1.0)) {
        throw ValidationError("preference coefficients must lie in (0, 1]");
    }
    if (std::abs(theta_plus + theta_minus - 1.0) > 1e-12) {
        throw ValidationError("preference coefficients must sum to 1");
    }
}

const std::string& method_id(Method m) {
    static const std::string ids[] = {"topsis", "incidence-approach", "membership",
                                      "max-entropy"};
    return ids[static_cast<int>(m)];
}

Method method_from_id(const std::string& id) {
    for (Method m : {Method::topsis, Method::incidence_approach, Method::membership,
                     Method::max_entropy}) {
        if (method_id(m) == id) return m;
    }
    throw ValidationError("unknown method id '" + id + "'");
}

MethodScores make_method_scores(Method method, std::vector<double> scores) {
    std::vector<std::size_t> ranking(scores.size());
    std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&scores](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return {method, std::move(scores), std::move(ranking)};
}

CellGrid blend_preference(const DecisionMatrix& normalized,
                          const std::vector<GeneralizedValue>& preferences) {
    normalized.validate();
    if (preferences.size() != normalized.plan_count()) {
        throw ValidationError("preference vector length does not match plan count");
    }

    CellGrid out(normalized.plan_count());
    for (std::size_t i = 0; i < normalized.plan_count(); ++i) {
        const GeneralizedValue& q = preferences[i];
        out[i].reserve(normalized.attribute_count());
        for (const GreyFuzzyCell& cell : normalized.cells[i]) {
            const GeneralizedValue& x = cell.value;
            out[i].push_back({GeneralizedValue::from_components(
                                  0.5 * (q.a1 + x.a1), 0.5 * (q.a2 + x.a2),
                                  0.5 * (q.a3 + x.a3), 0.5 * (q.a4 + x.a4)),
                              cell.grey});
        }
    }
    return out;
}

CellGrid weight_and_grey(const CellGrid& blended, const GreyFuzzyWeights& weights) {
    CellGrid out(blended.size());
    for (std::size_t i = 0; i < blended.size(); ++i) {
        if (blended[i].size() != weights.fuzzy.size()) {
            throw ValidationError("weight vector length does not match attribute count");
        }
        out[i].reserve(blended[i].size());
        for (std::size_t j = 0; j < blended[i].size(); ++j) {
            const GeneralizedValue& z = blended[i][j].value;
            const Bounds& w = weights.fuzzy[j];
            const Bounds& s = weights.grey[j];
            const GreyInterval& mu = blended[i][j].grey;
            // Lower components stay pessimistic, upper ones optimistic.
            GeneralizedValue y = GeneralizedValue::from_components(
                z.a1 * w.lo, z.a2 * w.lo, z.a3 * w.hi, z.a4 * w.hi);
            // Grey parts of the weights may exceed 1 after normalization.
            GreyInterval t(std::clamp(mu.lo * s.lo, 0.0, 1.0),
                           std::clamp(mu.hi * s.hi, 0.0, 1.0));
            out[i].push_back({y, t});
        }
    }
    return out;
}

double sufficiency(const GreyInterval& grey, double danger) {
    const double midpoint = 0.5 * (grey.lo + grey.hi);
    const double halfwidth = 0.5 * (grey.hi - grey.lo);
    // Mathematically in [0, 1]; the clamp only absorbs rounding fuzz.
    return std::clamp(1.0 - (midpoint + (2.0 * danger - 1.0) * halfwidth), 0.0, 1.0);
}

std::vector<std::vector<double>> sufficiency_matrix(const CellGrid& weighted, double danger) {
    std::vector<std::vector<double>> out(weighted.size());
    for (std::size_t i = 0; i < weighted.size(); ++i) {
        out[i].reserve(weighted[i].size());
        for (const GreyFuzzyCell& cell : weighted[i]) {
            out[i].push_back(sufficiency(cell.grey, danger));
        }
    }
    return out;
}

ValueGrid apply_sufficiency(const CellGrid& weighted, double danger) {
    ValueGrid out(weighted.size());
    for (std::size_t i = 0; i < weighted.size(); ++i) {
        out[i].reserve(weighted[i].size());
        for (const GreyFuzzyCell& cell : weighted[i]) {
            const double g = sufficiency(cell.grey, danger);
            const GeneralizedValue& y = cell.value;
            out[i].push_back(GeneralizedValue::from_components(y.a1 * g, y.a2 * g,
                                                               y.a3 * g, y.a4 * g));
        }
    }
    return out;
}

IdealPair ideal_vectors(const ValueGrid& final_matrix) {
    if (final_matrix.empty() || final_matrix.front().empty()) {
        throw ValidationError("cannot take ideals of an empty matrix");
    }
    const std::size_t m = final_matrix.front().size();

    IdealPair ideals;
    ideals.positive.reserve(m);
    ideals.negative.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        double hi1 = -std::numeric_limits<double>::infinity(), hi2 = hi1, hi3 = hi1, hi4 = hi1;
        double lo1 = std::numeric_limits<double>::infinity(), lo2 = lo1, lo3 = lo1, lo4 = lo1;
        for (const auto& row : final_matrix) {
            const GeneralizedValue& y = row[j];
            hi1 = std::max(hi1, y.a1);
            hi2 = std::max(hi2, y.a2);
            hi3 = std::max(hi3, y.a3);
            hi4 = std::max(hi4, y.a4);
            lo1 = std::min(lo1, y.a1);
            lo2 = std::min(lo2, y.a2);
            lo3 = std::min(lo3, y.a3);
            lo4 = std::min(lo4, y.a4);
        }
        ideals.positive.push_back(GeneralizedValue::from_components(hi1, hi2, hi3, hi4));
        ideals.negative.push_back(GeneralizedValue::from_components(lo1, lo2, lo3, lo4));
    }
    return ideals;
}

std::vector<double> topsis_distances(const ValueGrid& final_matrix,
                                     const std::vector<GeneralizedValue>& ideal) {
    std::vector<double> distances;
    distances.reserve(final_matrix.size());
    for (const auto& row : final_matrix) {
        double total = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const auto y = row[j].components();
            const auto target = ideal[j].components();
            for (int k = 0; k < 4; ++k) total += (y[k] - target[k]) * (y[k] - target[k]);
        }
        distances.push_back(std::sqrt(total));
    }
    return distances;
}

MethodScores topsis_scores(const ValueGrid& final_matrix, const IdealPair& ideals) {
    const auto d_pos = topsis_distances(final_matrix, ideals.positive);
    const auto d_neg = topsis_distances(final_matrix, ideals.negative);
    std::vector<double> scores;
    scores.reserve(final_matrix.size());
    for (std::size_t i = 0; i < final_matrix.size(); ++i) {
        if (d_pos[i] + d_neg[i] == 0.0) {
            throw DegenerateError("plan coincides with both ideal vectors; "
                                  "all plans are identical");
        }
        scores.push_back(d_neg[i] / (d_pos[i] + d_neg[i]));
    }
    return make_method_scores(Method::topsis, std::move(scores));
}

IncidencePair incidence_coefficients(const ValueGrid& final_matrix, const IdealPair& ideals,
                                     double rho, IncidenceForm form) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw ValidationError("distinguishing coefficient rho must lie in (0, 1)");
    }

    auto coefficients = [&](const std::vector<GeneralizedValue>& ideal) {
        std::vector<std::vector<double>> delta(final_matrix.size());
        double delta_min = std::numeric_limits<double>::infinity();
        double delta_max = 0.0;
        for (std::size_t i = 0; i < final_matrix.size(); ++i) {
            delta[i].reserve(final_matrix[i].size());
            for (std::size_t j = 0; j < final_matrix[i].size(); ++j) {
                const double d = distance(final_matrix[i][j], ideal[j]);
                delta[i].push_back(d);
                delta_min = std::min(delta_min, d);
                delta_max = std::max(delta_max, d);
            }
        }

        std::vector<std::vector<double>> out(delta.size());
        for (std::size_t i = 0; i < delta.size(); ++i) {
            out[i].reserve(delta[i].size());
            for (double d : delta[i]) {
                if (delta_max == 0.0) {
                    out[i].push_back(1.0); // every cell equals the ideal
                } else if (form == IncidenceForm::classic) {
                    out[i].push_back((delta_min + rho * delta_max) / (d + rho * delta_max));
                } else {
                    out[i].push_back((delta_min + rho * delta_max) / (d + delta_max));
                }
            }
        }
        return out;
    };

    return {coefficients(ideals.positive), coefficients(ideals.negative)};
}

std::vector<double> incidence_degree(const std::vector<std::vector<double>>& coefficients) {
    std::vector<double> out;
    out.reserve(coefficients.size());
    for (const auto& row : coefficients) {
        if (row.empty()) {
            throw ValidationError("incidence coefficient rows must be nonempty");
        }
        out.push_back(std::accumulate(row.begin(), row.end(), 0.0) /
                      static_cast<double>(row.size()));
    }
    return out;
}

MethodScores incidence_relative_approach(const std::vector<double>& positive_degree,
                                         const std::vector<double>& negative_degree,
                                         double theta_plus, double theta_minus) {
    if (positive_degree.size() != negative_degree.size()) {
        throw ValidationError("incidence degree vectors differ in length");
    }
    std::vector<double> scores;
    scores.reserve(positive_degree.size());
    for (std::size_t i = 0; i < positive_degree.size(); ++i) {
        if (theta_minus == 0.0) {
            scores.push_back(positive_degree[i]);
        } else {
            scores.push_back(positive_degree[i] * theta_plus /
                             (positive_degree[i] * theta_plus +
                              negative_degree[i] * theta_minus));
        }
    }
    return make_method_scores(Method::incidence_approach, std::move(scores));
}

MethodScores membership_scores(const std::vector<double>& positive_degree,
                               const std::vector<double>& negative_degree) {
    if (positive_degree.size() != negative_degree.size()) {
        throw ValidationError("incidence degree vectors differ in length");
    }
    std::vector<double> scores;
    scores.reserve(positive_degree.size());
    for (std::size_t i = 0; i < positive_degree.size(); ++i) {
        const double p = positive_degree[i] * positive_degree[i];
        const double q = negative_degree[i] * negative_degree[i];
        scores.push_back(p / (p + q));
    }
    return make_method_scores(Method::membership, std::move(scores));
}

MaxEntropyWeights max_entropy_beta(const std::vector<double>& positive_degree,
                                   const std::vector<double>& negative_degree,
                                   MaxEntropyForm form) {
    if (positive_degree.size() != negative_degree.size()) {
        throw ValidationError("incidence degree vectors differ in length");
    }
    const double n = static_cast<double>(positive_degree.size());
    double total = 0.0;
    for (std::size_t i = 0; i < positive_degree.size(); ++i) {
        total += positive_degree[i] + negative_degree[i];
    }

    if (form == MaxEntropyForm::legacy) {
        const double beta1 = std::exp(total - n) / (1.0 + std::exp(total));
        const double beta2 = 1.0 / (1.0 + std::exp(total));
        return {beta1, beta2};
    }

    // Logistic in (total - n), evaluated on the nonpositive side to avoid
    // overflow; the pair sums to 1 exactly by construction.
    const double gap = total - n;
    double beta1;
    if (gap >= 0.0) {
        beta1 = 1.0 / (1.0 + std::exp(-gap));
    } else {
        const double e = std::exp(gap);
        beta1 = e / (1.0 + e);
    }
    return {beta1, 1.0 - beta1};
}

MethodScores comprehensive_incidence(const std::vector<double>& positive_degree,
                                     const std::vector<double>& negative_degree,
                                     const MaxEntropyWeights& beta) {
    if (positive_degree.size() != negative_degree.size()) {
        throw ValidationError("incidence degree vectors differ in length");
    }
    std::vector<double> scores;
    scores.reserve(positive_degree.size());
    for (std::size_t i = 0; i < positive_degree.size(); ++i) {
        scores.push_back(beta.positive * positive_degree[i] +
                         beta.negative * (1.0 - negative_degree[i]));
    }
    return make_method_scores(Method::max_entropy, std::move(scores));
}

} // namespace greymadm
