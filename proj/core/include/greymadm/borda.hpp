#pragma once

#include <map>
#include <vector>

#include "greymadm/rankers.hpp"

namespace greymadm {

struct BordaConfig {
    // Per-method weights; missing methods get weight 0, an empty map means
    // equal weights for every method present in the input.
    std::map<Method, double> method_weights;
};

struct FinalRanking {
    std::vector<std::size_t> order;          // plan indices, best first
    std::vector<double> borda_scores;        // per plan
    std::map<Method, std::vector<double>> per_method_ranks;  // tie-averaged, 1-based
    bool tied = false;                       // any shared Borda score

    friend bool operator==(const FinalRanking&, const FinalRanking&) = default;
};

// Tie-averaged ranks (1-based) from scores sorted descending: plans with equal
// scores share the mean of the positions they occupy.
std::vector<double> tie_averaged_ranks(const std::vector<double>& scores);

FinalRanking weighted_borda(const std::vector<MethodScores>& methods,
                            const BordaConfig& config = {});

}  // namespace greymadm
