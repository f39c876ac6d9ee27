#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "greymadm/borda.hpp"
#include "greymadm/errors.hpp"

using namespace greymadm;

namespace {

MethodScores scores_of(Method method, std::vector<double> scores) {
    return make_method_scores(method, std::move(scores));
}

} // namespace

TEST_CASE("tie-averaged ranks") {
    auto plain = tie_averaged_ranks({0.9, 0.5, 0.7});
    CHECK(plain == std::vector<double>{1.0, 3.0, 2.0});

    // the two 0.8 plans share positions 1 and 2
    auto tied = tie_averaged_ranks({0.8, 0.8, 0.1});
    CHECK(tied == std::vector<double>{1.5, 1.5, 3.0});

    auto all_tied = tie_averaged_ranks({0.4, 0.4, 0.4, 0.4});
    CHECK(all_tied == std::vector<double>{2.5, 2.5, 2.5, 2.5});
}

TEST_CASE("single method reproduces its own order") {
    auto method = scores_of(Method::topsis, {0.2, 0.9, 0.5});
    auto result = weighted_borda({method});
    CHECK(result.order == std::vector<std::size_t>{1, 2, 0});
    CHECK_FALSE(result.tied);
    // n - rank: plan 2 earns 2 points, plan 3 one, plan 1 none
    CHECK(result.borda_scores == std::vector<double>{0.0, 2.0, 1.0});
    CHECK(result.per_method_ranks.at(Method::topsis) == std::vector<double>{3.0, 1.0, 2.0});
}

TEST_CASE("unanimous methods keep the common order") {
    std::vector<MethodScores> methods{
        scores_of(Method::topsis, {0.1, 0.9, 0.5}),
        scores_of(Method::incidence_approach, {0.2, 0.8, 0.6}),
        scores_of(Method::membership, {0.3, 0.7, 0.5}),
        scores_of(Method::max_entropy, {0.25, 0.95, 0.4}),
    };
    auto result = weighted_borda(methods);
    CHECK(result.order == std::vector<std::size_t>{1, 2, 0});
    CHECK_FALSE(result.tied);
}

TEST_CASE("opposed methods tie every plan, stable order kept") {
    std::vector<MethodScores> methods{
        scores_of(Method::topsis, {0.9, 0.5, 0.1}),            // 1 > 2 > 3
        scores_of(Method::incidence_approach, {0.1, 0.5, 0.9}) // 3 > 2 > 1
    };
    auto result = weighted_borda(methods);
    CHECK(result.tied);
    CHECK(result.order == std::vector<std::size_t>{0, 1, 2}); // stable input order
    // every plan earns (n - 1) on one method average: (2 + 0)/2 = 1 each
    for (double score : result.borda_scores) {
        CHECK(score == doctest::Approx(1.0));
    }
}

TEST_CASE("equal-weight fusion is invariant under method permutation") {
    std::vector<MethodScores> methods{
        scores_of(Method::topsis, {0.4, 0.9, 0.5, 0.2}),
        scores_of(Method::incidence_approach, {0.6, 0.3, 0.8, 0.1}),
        scores_of(Method::membership, {0.2, 0.7, 0.6, 0.9}),
    };
    auto base = weighted_borda(methods);

    std::vector<MethodScores> permuted{methods[2], methods[0], methods[1]};
    auto shuffled = weighted_borda(permuted);
    CHECK(shuffled.order == base.order);
    CHECK(shuffled.borda_scores == base.borda_scores);
}

TEST_CASE("a fully tied method never changes the final order") {
    std::vector<MethodScores> methods{
        scores_of(Method::topsis, {0.4, 0.9, 0.5, 0.2}),
        scores_of(Method::incidence_approach, {0.6, 0.3, 0.8, 0.1}),
    };
    auto base = weighted_borda(methods);

    auto with_flat = methods;
    with_flat.push_back(scores_of(Method::membership, {0.5, 0.5, 0.5, 0.5}));
    auto result = weighted_borda(with_flat);
    CHECK(result.order == base.order);
}

TEST_CASE("unanimity: a plan ranked above another by every method stays above") {
    std::mt19937 rng(20260815u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 4;
        std::vector<MethodScores> methods;
        for (Method m : {Method::topsis, Method::incidence_approach, Method::membership}) {
            std::vector<double> scores(n);
            for (auto& s : scores) s = unit(rng);
            methods.push_back(scores_of(m, std::move(scores)));
        }
        auto result = weighted_borda(methods);

        std::vector<std::size_t> position(n);
        for (std::size_t pos = 0; pos < n; ++pos) position[result.order[pos]] = pos;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                bool always_above = true;
                for (const auto& m : methods) {
                    if (!(m.scores[a] > m.scores[b])) {
                        always_above = false;
                        break;
                    }
                }
                if (always_above) {
                    CHECK(position[a] < position[b]);
                }
            }
        }
    }
}

TEST_CASE("method weights shift the fusion") {
    std::vector<MethodScores> methods{
        scores_of(Method::topsis, {0.9, 0.1}),            // plan 1 first
        scores_of(Method::incidence_approach, {0.1, 0.9}) // plan 2 first
    };
    BordaConfig config;
    config.method_weights = {{Method::topsis, 3.0}, {Method::incidence_approach, 1.0}};
    auto result = weighted_borda(methods, config);
    CHECK(result.order == std::vector<std::size_t>{0, 1});
    // normalized weights 0.75/0.25: plan 1 earns 0.75, plan 2 earns 0.25
    CHECK(result.borda_scores[0] == doctest::Approx(0.75));
    CHECK(result.borda_scores[1] == doctest::Approx(0.25));

    config.method_weights = {{Method::topsis, 1.0}, {Method::incidence_approach, 3.0}};
    auto flipped = weighted_borda(methods, config);
    CHECK(flipped.order == std::vector<std::size_t>{1, 0});

    // a method missing from the map gets weight zero
    config.method_weights = {{Method::topsis, 1.0}};
    auto solo = weighted_borda(methods, config);
    CHECK(solo.order == std::vector<std::size_t>{0, 1});
    CHECK(solo.borda_scores[1] == doctest::Approx(0.0));
}

TEST_CASE("borda input validation") {
    CHECK_THROWS_AS(weighted_borda({}), ValidationError);

    std::vector<MethodScores> mismatched{
        scores_of(Method::topsis, {0.9, 0.1}),
        scores_of(Method::incidence_approach, {0.1, 0.9, 0.5}),
    };
    CHECK_THROWS_AS(weighted_borda(mismatched), ValidationError);

    std::vector<MethodScores> methods{scores_of(Method::topsis, {0.9, 0.1})};
    BordaConfig negative;
    negative.method_weights = {{Method::topsis, -1.0}};
    CHECK_THROWS_AS(weighted_borda(methods, negative), ValidationError);

    BordaConfig zero;
    zero.method_weights = {{Method::incidence_approach, 1.0}}; // topsis absent -> weight 0
    CHECK_THROWS_AS(weighted_borda(methods, zero), ValidationError);
}

TEST_CASE("tied ranks split the positional points") {
    // method scores tie plans 1 and 2; both occupy positions 1-2 -> rank 1.5
    std::vector<MethodScores> methods{scores_of(Method::topsis, {0.8, 0.8, 0.2})};
    auto result = weighted_borda(methods);
    CHECK(result.per_method_ranks.at(Method::topsis) == std::vector<double>{1.5, 1.5, 3.0});
    CHECK(result.borda_scores[0] == doctest::Approx(1.5));
    CHECK(result.borda_scores[1] == doctest::Approx(1.5));
    CHECK(result.borda_scores[2] == doctest::Approx(0.0));
    CHECK(result.tied);
}
