#include "greymadm/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "greymadm/errors.hpp"

namespace greymadm {

Bounds::Bounds(double lo, double hi) : lo(lo), hi(hi) {
    if (!(lo <= hi)) {
        throw ValidationError("weight interval [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "] has lo > hi");
    }
}

GreyWeightVector aggregate_subjective(const ExpertWeights& experts) {
    if (experts.empty()) {
        throw ValidationError("need at least one expert weight vector");
    }
    const std::size_t m = experts.front().size();
    for (std::size_t l = 1; l < experts.size(); ++l) {
        if (experts[l].size() != m) {
            throw ValidationError("expert " + std::to_string(l + 1) + " has " +
                                  std::to_string(experts[l].size()) + " weights, expected " +
                                  std::to_string(m));
        }
    }

    GreyWeightVector out;
    out.role = WeightRole::subjective;
    out.entries.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = experts[0][j];
        double hi = experts[0][j];
        for (const auto& expert : experts) {
            lo = std::min(lo, expert[j]);
            hi = std::max(hi, expert[j]);
        }
        out.entries.emplace_back(lo, hi);
    }
    return out;
}

std::vector<double> objective_optimal(const DecisionMatrix& normalized) {
    normalized.validate();
    const std::size_t n = normalized.plan_count();
    const std::size_t m = normalized.attribute_count();

    std::vector<double> deviation(m, 0.0);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = i + 1; k < n; ++k) {
                // Each unordered pair appears twice in the double sum.
                deviation[j] += 2.0 * distance(normalized.cells[i][j].value,
                                               normalized.cells[k][j].value);
            }
        }
        total += deviation[j];
    }
    if (!(total > 0.0)) {
        throw DegenerateError("every plan is identical in every attribute; "
                              "deviation weights are undefined");
    }
    for (double& d : deviation) d /= total;
    return deviation;
}

std::vector<double> objective_entropy(const DecisionMatrix& normalized, int component) {
    normalized.validate();
    if (component < 1 || component > 4) {
        throw ValidationError("entropy component index must be 1..4");
    }
    const std::size_t n = normalized.plan_count();
    const std::size_t m = normalized.attribute_count();
    const std::size_t k = static_cast<std::size_t>(component - 1);

    std::vector<double> eta(m, 0.0);
    double eta_sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double column_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = normalized.cells[i][j].value.components()[k];
            if (x < 0.0) {
                throw ValidationError("attribute '" + normalized.attributes[j].name +
                                      "': entropy weights need nonnegative components");
            }
            column_sum += x;
        }
        if (!(column_sum > 0.0)) {
            throw ValidationError("attribute '" + normalized.attributes[j].name +
                                  "': entropy weights need a positive column sum");
        }

        double entropy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double p = normalized.cells[i][j].value.components()[k] / column_sum;
            if (p > 0.0) entropy += p * std::log(p); // 0*ln(0) = 0
        }
        entropy *= -1.0 / std::log(static_cast<double>(n));
        eta[j] = 1.0 - entropy;
        eta_sum += eta[j];
    }

    if (!(eta_sum > 0.0)) {
        throw DegenerateError("all attribute columns are uniform; entropy weights are undefined");
    }
    for (double& e : eta) e /= eta_sum;
    return eta;
}

GreyWeightVector comprehensive_objective(const std::vector<double>& optimal,
                                         const std::array<std::vector<double>, 4>& entropy) {
    const std::size_t m = optimal.size();
    for (const auto& vec : entropy) {
        if (vec.size() != m) {
            throw ValidationError("objective weight vectors disagree on attribute count");
        }
    }

    GreyWeightVector out;
    out.role = WeightRole::objective;
    out.entries.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = optimal[j];
        double hi = optimal[j];
        for (const auto& vec : entropy) {
            lo = std::min(lo, vec[j]);
            hi = std::max(hi, vec[j]);
        }
        out.entries.emplace_back(lo, hi);
    }
    return out;
}

GreyWeightVector final_weights(const GreyWeightVector& subjective,
                               const GreyWeightVector& objective) {
    if (subjective.entries.size() != objective.entries.size()) {
        throw ValidationError("subjective and objective weight vectors differ in length");
    }

    double sum_lo = 0.0;
    double sum_hi = 0.0;
    std::vector<Bounds> products;
    products.reserve(subjective.entries.size());
    for (std::size_t j = 0; j < subjective.entries.size(); ++j) {
        const Bounds& a = subjective.entries[j];
        const Bounds& b = objective.entries[j];
        if (a.lo < 0.0 || b.lo < 0.0) {
            throw ValidationError("weight bounds must be nonnegative");
        }
        products.emplace_back(a.lo * b.lo, a.hi * b.hi);
        sum_lo += products.back().lo;
        sum_hi += products.back().hi;
    }
    if (!(sum_lo > 0.0) || !(sum_hi > 0.0)) {
        throw DegenerateError("all subjective-objective weight products are zero");
    }

    GreyWeightVector out;
    out.role = WeightRole::comprehensive;
    out.entries.reserve(products.size());
    for (const Bounds& p : products) {
        out.entries.emplace_back(p.lo / sum_hi, p.hi / sum_lo);
    }
    return out;
}

GreyFuzzyWeights normalize_grey_fuzzy_weights(const GreyFuzzyWeights& weights) {
    if (weights.fuzzy.size() != weights.grey.size()) {
        throw ValidationError("fuzzy and grey weight parts differ in length");
    }

    auto cross_normalize = [](const std::vector<Bounds>& parts, const char* label) {
        double sum_lo = 0.0;
        double sum_hi = 0.0;
        for (const Bounds& b : parts) {
            sum_lo += b.lo;
            sum_hi += b.hi;
        }
        if (!(sum_lo > 0.0) || !(sum_hi > 0.0)) {
            throw DegenerateError(std::string("cannot normalize ") + label +
                                  " weight parts with zero sums");
        }
        std::vector<Bounds> out;
        out.reserve(parts.size());
        for (const Bounds& b : parts) {
            out.emplace_back(b.lo / sum_hi, b.hi / sum_lo);
        }
        return out;
    };

    return {cross_normalize(weights.fuzzy, "fuzzy"), cross_normalize(weights.grey, "grey")};
}

} // namespace greymadm
