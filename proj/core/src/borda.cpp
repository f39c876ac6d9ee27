#include "greymadm/borda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "greymadm/errors.hpp"

namespace greymadm {

std::vector<double> tie_averaged_ranks(const std::vector<double>& scores) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });

    std::vector<double> ranks(n, 0.0);
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t end = pos + 1;
        while (end < n && scores[idx[end]] == scores[idx[pos]]) ++end;
        // Positions pos..end-1 (0-based) share the average 1-based rank.
        const double shared = 0.5 * static_cast<double>(pos + 1 + end);
        for (std::size_t k = pos; k < end; ++k) ranks[idx[k]] = shared;
        pos = end;
    }
    return ranks;
}

FinalRanking weighted_borda(const std::vector<MethodScores>& methods,
                            const BordaConfig& config) {
    if (methods.empty()) throw ValidationError("borda: no method scores supplied");
    const std::size_t n = methods.front().scores.size();
    if (n == 0) throw ValidationError("borda: method scores are empty");
    for (const auto& m : methods) {
        if (m.scores.size() != n) {
            throw ValidationError("borda: method '" + std::string(method_id(m.method)) +
                                  "' scores " + std::to_string(m.scores.size()) +
                                  " plans, expected " + std::to_string(n));
        }
    }

    std::map<Method, double> weights;
    if (config.method_weights.empty()) {
        for (const auto& m : methods) weights[m.method] = 1.0;
    } else {
        for (const auto& [method, w] : config.method_weights) {
            if (w < 0.0 || !std::isfinite(w)) {
                throw ValidationError("borda: weight for method '" +
                                      std::string(method_id(method)) +
                                      "' must be finite and nonnegative");
            }
            weights[method] = w;
        }
    }
    double total = 0.0;
    for (const auto& m : methods) {
        auto it = weights.find(m.method);
        if (it != weights.end()) total += it->second;
    }
    if (total <= 0.0) throw ValidationError("borda: method weights sum to zero");

    // Accumulate in canonical method order so the fused scores depend only
    // on the set of method scores, not the order they were supplied in
    // (summation is not associative in floating point).
    std::vector<std::size_t> by_method(methods.size());
    std::iota(by_method.begin(), by_method.end(), std::size_t{0});
    std::stable_sort(by_method.begin(), by_method.end(), [&](std::size_t a, std::size_t b) {
        return methods[a].method < methods[b].method;
    });

    FinalRanking result;
    result.borda_scores.assign(n, 0.0);
    for (std::size_t k : by_method) {
        const auto& m = methods[k];
        auto ranks = tie_averaged_ranks(m.scores);
        double w = 0.0;
        if (auto it = weights.find(m.method); it != weights.end()) w = it->second / total;
        for (std::size_t i = 0; i < n; ++i) {
            result.borda_scores[i] += w * (static_cast<double>(n) - ranks[i]);
        }
        result.per_method_ranks[m.method] = std::move(ranks);
    }

    result.order.resize(n);
    std::iota(result.order.begin(), result.order.end(), std::size_t{0});
    std::stable_sort(result.order.begin(), result.order.end(), [&](std::size_t a, std::size_t b) {
        return result.borda_scores[a] > result.borda_scores[b];
    });
    for (std::size_t i = 0; i + 1 < n && !result.tied; ++i) {
        if (result.borda_scores[result.order[i]] == result.borda_scores[result.order[i + 1]]) {
            result.tied = true;
        }
    }
    return result;
}

}  // namespace greymadm
