#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "greymadm/errors.hpp"
#include "greymadm/scale.hpp"
#include "greymadm/value.hpp"

using namespace greymadm;

TEST_CASE("standard scale terms and aliases") {
    const auto& scale = LinguisticScale::standard();
    CHECK(scale.size() == 11);

    const Triangle& high = scale.lookup("high");
    CHECK(high.lo == doctest::Approx(0.7));
    CHECK(high.mid == doctest::Approx(0.8));
    CHECK(high.hi == doctest::Approx(0.9));

    const Triangle& lowest = scale.lookup("extremely low");
    CHECK(lowest.lo == doctest::Approx(0.0));
    CHECK(lowest.mid == doctest::Approx(0.0));
    CHECK(lowest.hi == doctest::Approx(0.1));

    const Triangle& rather_high = scale.lookup("rather high");
    CHECK(rather_high.lo == doctest::Approx(0.6));
    CHECK(rather_high.mid == doctest::Approx(0.7));
    CHECK(rather_high.hi == doctest::Approx(0.8));

    CHECK(scale.canonical("rather high") == "comparatively high");
    CHECK(scale.canonical("rather low") == "comparatively low");
    CHECK(scale.canonical("rery high") == "very high");
    CHECK(scale.canonical("rery low") == "very low");
    CHECK(scale.canonical("ordinary") == "general");
    CHECK(scale.canonical("high") == "high");

    CHECK_THROWS_AS(scale.lookup("no such term"), ValidationError);
    CHECK_THROWS_AS(scale.canonical(""), ValidationError);
}

TEST_CASE("scale ordering and triangle monotonicity") {
    const auto& scale = LinguisticScale::standard();
    CHECK(scale.index_of("extremely low") == 0);
    CHECK(scale.index_of("extremely high") == 10);
    CHECK(scale.index_of("rather high") < scale.index_of("high"));
    CHECK(scale.index_of("a little high") < scale.index_of("rather high"));

    for (std::size_t i = 0; i + 1 < scale.size(); ++i) {
        const Triangle& a = scale.lookup(scale.terms()[i]);
        const Triangle& b = scale.lookup(scale.terms()[i + 1]);
        CHECK(a.mid < b.mid);
        CHECK(a.lo <= b.lo);
        CHECK(a.hi <= b.hi);
    }
    for (const std::string& term : scale.terms()) {
        const Triangle& t = scale.lookup(term);
        CHECK(t.lo <= t.mid);
        CHECK(t.mid <= t.hi);
        CHECK(t.lo >= 0.0);
        CHECK(t.hi <= 1.0);
    }
}

TEST_CASE("generalized embeddings per kind") {
    const auto& scale = LinguisticScale::standard();

    GeneralizedValue r = to_generalized(RealValue{3610.0}, scale);
    CHECK(r.kind == ValueKind::real);
    CHECK(r == GeneralizedValue::from_real(3610.0));
    CHECK(r.a1 == 3610.0);
    CHECK(r.a4 == 3610.0);

    GeneralizedValue iv = to_generalized(IntervalValue{465.0, 485.0}, scale);
    CHECK(iv.kind == ValueKind::interval);
    CHECK(iv.a1 == 465.0);
    CHECK(iv.a2 == 465.0);
    CHECK(iv.a3 == 485.0);
    CHECK(iv.a4 == 485.0);

    GeneralizedValue lv = to_generalized(LinguisticValue{"high"}, scale);
    CHECK(lv.kind == ValueKind::linguistic);
    CHECK(lv.a1 == doctest::Approx(0.7));
    CHECK(lv.a2 == doctest::Approx(0.8));
    CHECK(lv.a3 == doctest::Approx(0.8));
    CHECK(lv.a4 == doctest::Approx(0.9));

    GeneralizedValue uv = to_generalized(UncertainValue{"a little high", "rather high"}, scale);
    CHECK(uv.kind == ValueKind::uncertain);
    CHECK(uv.a1 == doctest::Approx(0.5));
    CHECK(uv.a2 == doctest::Approx(0.6));
    CHECK(uv.a3 == doctest::Approx(0.7));
    CHECK(uv.a4 == doctest::Approx(0.8));

    CHECK_THROWS_AS(to_generalized(IntervalValue{485.0, 465.0}, scale), ValidationError);
    CHECK_THROWS_AS(to_generalized(UncertainValue{"rather high", "a little high"}, scale),
                    ValidationError);
    CHECK_THROWS_AS(to_generalized(LinguisticValue{"no such"}, scale), ValidationError);
}

TEST_CASE("component classification") {
    CHECK(GeneralizedValue::from_components(2, 2, 2, 2).kind == ValueKind::real);
    CHECK(GeneralizedValue::from_components(1, 1, 2, 2).kind == ValueKind::interval);
    CHECK(GeneralizedValue::from_components(1, 2, 2, 3).kind == ValueKind::linguistic);
    CHECK(GeneralizedValue::from_components(1, 2, 3, 4).kind == ValueKind::uncertain);
    CHECK_THROWS_AS(GeneralizedValue::from_components(2, 1, 3, 4), ValidationError);
    CHECK_THROWS_AS(GeneralizedValue::from_components(1, 2, 4, 3), ValidationError);

    GeneralizedValue sorted = GeneralizedValue::from_unsorted(4, 1, 3, 2);
    CHECK(sorted == GeneralizedValue::from_components(1, 2, 3, 4));
}

TEST_CASE("distance examples") {
    GeneralizedValue zero = GeneralizedValue::from_real(0.0);
    GeneralizedValue one = GeneralizedValue::from_real(1.0);
    CHECK(distance(zero, one) == doctest::Approx(2.0));

    GeneralizedValue a = GeneralizedValue::from_components(0.1, 0.2, 0.3, 0.4);
    GeneralizedValue b = GeneralizedValue::from_components(0.2, 0.4, 0.6, 0.8);
    CHECK(distance(a, b) == doctest::Approx(std::sqrt(0.30)));
    CHECK(distance(a, a) == 0.0);
}

TEST_CASE("distance metric axioms on random tuples") {
    std::mt19937 rng(20260815u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_tuple = [&] {
        return GeneralizedValue::from_unsorted(unit(rng), unit(rng), unit(rng), unit(rng));
    };

    for (int trial = 0; trial < 1000; ++trial) {
        GeneralizedValue a = random_tuple();
        GeneralizedValue b = random_tuple();
        GeneralizedValue c = random_tuple();
        double ab = distance(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab == distance(b, a));
        CHECK(ab <= distance(a, c) + distance(c, b) + 1e-12);
        CHECK(distance(a, a) == 0.0);
        if (ab == 0.0) {
            CHECK(a.components() == b.components());
        }
    }
}

TEST_CASE("grey interval bounds and product") {
    CHECK(GreyInterval{}.lo == 1.0);
    CHECK(GreyInterval{}.hi == 1.0);
    CHECK_THROWS_AS(GreyInterval(0.5, 0.4), ValidationError);
    CHECK_THROWS_AS(GreyInterval(-0.1, 0.4), ValidationError);
    CHECK_THROWS_AS(GreyInterval(0.5, 1.1), ValidationError);

    CHECK(grey_product(GreyInterval(1, 1), GreyInterval(0.3, 0.5)) == GreyInterval(0.3, 0.5));
    CHECK(grey_product(GreyInterval(0, 0), GreyInterval(0.3, 0.5)) == GreyInterval(0, 0));

    GreyInterval p = grey_product(GreyInterval(0.2, 0.4), GreyInterval(0.5, 0.5));
    CHECK(p.lo == doctest::Approx(0.10));
    CHECK(p.hi == doctest::Approx(0.20));
}

TEST_CASE("grey product stays inside the unit interval") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        double a = unit(rng), b = unit(rng), c = unit(rng), d = unit(rng);
        GreyInterval g(std::min(a, b), std::max(a, b));
        GreyInterval h(std::min(c, d), std::max(c, d));
        GreyInterval p = grey_product(g, h);
        CHECK(p.lo >= 0.0);
        CHECK(p.hi <= 1.0);
        CHECK(p.lo <= p.hi);
    }
}
