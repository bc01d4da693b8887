#include "oracles.hpp"

#include <hodge/atypicality.hpp>
#include <hodge/error.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hodge;

namespace {

CodimInput make(std::map<int, Dim> g, std::map<int, Dim> h, Dim t0p, Dim t0ph) {
    return CodimInput{std::move(g), std::move(h), t0p, t0ph};
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidInput;
}

}  // namespace

TEST(ExpectedCodim, Examples) {
    EXPECT_EQ(expected_codim(make({{1, 3}, {2, 1}}, {{1, 2}, {2, 1}}, 2, 1)), 3);
    EXPECT_EQ(expected_codim(make({{1, 3}, {2, 1}}, {{1, 3}, {2, 1}}, 4, 4)), 0);
    EXPECT_EQ(expected_codim(make({{1, 3}, {2, 1}}, {}, 4, 0)), 4);
}

TEST(IsAtypical, Examples) {
    const auto v = is_atypical(make({{1, 3}, {2, 1}}, {{1, 2}, {2, 1}}, 2, 2));
    EXPECT_EQ(v.expected, 3);
    EXPECT_EQ(v.actual, 2);
    EXPECT_TRUE(v.atypical);

    const auto eq = is_atypical(make({{1, 3}, {2, 1}}, {{1, 2}, {2, 1}}, 2, 1));
    EXPECT_EQ(eq.expected, eq.actual);
    EXPECT_FALSE(eq.atypical);

    const auto full = is_atypical(make({{1, 3}, {2, 1}}, {{1, 3}, {2, 1}}, 2, 2));
    EXPECT_FALSE(full.atypical);
}

TEST(Validate, RejectsInconsistentDimensions) {
    EXPECT_EQ(kind_of([] { validate(make({{1, 2}}, {{1, 3}}, 1, 0)); }), ErrorKind::InconsistentDims);
    EXPECT_EQ(kind_of([] { validate(make({{1, 2}}, {{1, 1}}, 3, 0)); }), ErrorKind::InconsistentDims);
    EXPECT_EQ(kind_of([] { validate(make({{1, 2}}, {{1, 1}}, 2, 2)); }), ErrorKind::InconsistentDims);
    EXPECT_EQ(kind_of([] { validate(make({{1, -1}}, {}, 0, 0)); }), ErrorKind::InconsistentDims);
    EXPECT_EQ(kind_of([] { validate(make({{0, 1}}, {}, 0, 0)); }), ErrorKind::InconsistentDims);
    EXPECT_EQ(kind_of([] { is_atypical(make({{1, 1}}, {{1, 2}}, 0, 0)); }), ErrorKind::InconsistentDims);
    // h = g and T0P = g^- force T0P_H = T0P.
    EXPECT_EQ(kind_of([] { is_atypical(make({{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}, 3, 1)); }),
              ErrorKind::InconsistentDims);
    // T0P_H must contain T0P ∩ h^{-1} when both sit in degree one.
    EXPECT_EQ(kind_of([] { forcing_check(make({{1, 3}}, {{1, 3}}, 2, 1)); }), ErrorKind::InconsistentDims);
}

TEST(Forcing, DeficitInDegreeTwoIsAContradiction) {
    const auto r = forcing_check(make({{1, 3}, {2, 2}}, {{1, 3}, {2, 1}}, 2, 2));
    EXPECT_FALSE(r.vacuous);
    EXPECT_EQ(r.forced_degrees, std::vector<int>{2});
    EXPECT_EQ(r.deficits.at(2), 1);
    EXPECT_TRUE(r.violates_forcing());
    EXPECT_FALSE(r.equality_holds);
}

TEST(Forcing, NoDeficitIsConsistent) {
    const auto r = forcing_check(make({{1, 3}, {2, 2}, {3, 1}}, {{1, 2}, {2, 2}, {3, 1}}, 2, 1));
    EXPECT_FALSE(r.violates_forcing());
    EXPECT_EQ(r.forced_degrees, (std::vector<int>{2, 3}));
    EXPECT_TRUE(r.equality_holds);
}

TEST(Forcing, DegreeOneOnlyIsVacuous) {
    for (Dim h1 = 0; h1 <= 3; ++h1) {
        const auto r = forcing_check(make({{1, 3}}, {{1, h1}}, 3, h1));
        EXPECT_TRUE(r.vacuous);
        EXPECT_FALSE(r.violates_forcing());
    }
}

// Exhaustive comparison with the equality written from the definitions.
TEST(Forcing, ExhaustiveAgainstBruteForceEquality) {
    std::size_t checked = 0;
    oracle::for_each_horizontal_input(3, 3, [&](const CodimInput& in) {
        bool deficit = false;
        for (const auto& [p, g] : in.dim_g_minus) deficit = deficit || (p >= 2 && in.dim_h_minus.at(p) < g);
        const auto r = forcing_check(in);
        const auto v = is_atypical(in);
        ASSERT_EQ(r.violates_forcing(), deficit);
        ASSERT_EQ(r.equality_holds, oracle::typical_equality(in));
        ASSERT_EQ(v.atypical, !oracle::typical_equality(in));
        if (deficit) ASSERT_TRUE(v.atypical);
        ++checked;
    });
    EXPECT_GT(checked, 1000u);
}

// A larger intersection only lowers the actual codimension, so once atypical
// an input stays atypical as dim_T0PH grows.
TEST(IsAtypical, MonotoneInT0PH) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Dim> dim(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        CodimInput in;
        for (int p = 1; p <= 3; ++p) {
            in.dim_g_minus[p] = dim(rng);
            in.dim_h_minus[p] = std::uniform_int_distribution<Dim>(0, in.dim_g_minus[p])(rng);
        }
        in.dim_T0P = std::uniform_int_distribution<Dim>(0, total_g_minus(in))(rng);
        const Dim cap = std::min(in.dim_T0P, total_h_minus(in));
        const Dim floor = std::max<Dim>(0, in.dim_T0P + total_h_minus(in) - total_g_minus(in));
        bool seen_atypical = false;
        for (Dim t = floor; t <= cap; ++t) {
            in.dim_T0PH = t;
            const auto v = is_atypical(in);
            if (seen_atypical) ASSERT_TRUE(v.atypical);
            seen_atypical = seen_atypical || v.atypical;
            ASSERT_EQ(correction_term(v.expected, v.actual) == 0, !v.atypical);
        }
    }
}

TEST(NLBounds, WeightFourRefinement) {
    const auto b = nl_bounds(NLInput{{1, 30}, 5, 4, std::nullopt});
    EXPECT_EQ(b.naive_upper, 30);
    EXPECT_EQ(b.refined_upper, 25);
    EXPECT_EQ(b.coarse_upper, std::optional<Dim>(31));
    EXPECT_EQ(correction_term(30, 25), 5);

    const auto zero = nl_bounds(NLInput{{1, 30}, 0, 4, std::nullopt});
    EXPECT_EQ(zero.refined_upper, zero.naive_upper);
}

TEST(NLBounds, QuinticSurface) {
    const auto b = nl_bounds(NLInput{{4, 45, 4}, 0, 2, 5});
    EXPECT_EQ(b.naive_upper, 4);
    EXPECT_EQ(b.lower, std::optional<Dim>(2));
    EXPECT_FALSE(b.coarse_upper);
}

TEST(NLBounds, Errors) {
    EXPECT_EQ(kind_of([] { nl_bounds(NLInput{{1, 2, 1}, 0, 3, std::nullopt}); }), ErrorKind::UnsupportedWeight);
    EXPECT_EQ(kind_of([] { nl_bounds(NLInput{{1}, 0, 4, std::nullopt}); }), ErrorKind::MissingHodgeNumber);
    EXPECT_EQ(kind_of([] { nl_bounds(NLInput{{}, 0, 2, std::nullopt}); }), ErrorKind::MissingHodgeNumber);
    EXPECT_EQ(kind_of([] { nl_bounds(NLInput{{1, 30}, 31, 4, std::nullopt}); }), ErrorKind::InconsistentDims);
}

TEST(Correction, Examples) {
    EXPECT_EQ(correction_term(3, 2), 1);
    EXPECT_EQ(correction_term(7, 7), 0);
    EXPECT_EQ(kind_of([] { correction_term(2, 3); }), ErrorKind::NegativeCorrection);
}

TEST(Json, CodimInputAcceptsObjectAndArrayForms) {
    const auto a = codim_input_from_json(nlohmann::json::parse(
        R"({"dim_g_minus": {"1": 3, "2": 1}, "dim_h_minus": {"1": 2, "2": 1}, "dim_T0P": 2, "dim_T0PH": 2})"));
    const auto b = codim_input_from_json(nlohmann::json::parse(
        R"({"dim_g_minus": [3, 1], "dim_h_minus": [2, 1], "dim_T0P": 2, "dim_T0PH": 2})"));
    EXPECT_EQ(a.dim_g_minus, b.dim_g_minus);
    EXPECT_EQ(a.dim_h_minus, b.dim_h_minus);
    EXPECT_TRUE(is_atypical(a).atypical);
    EXPECT_EQ(kind_of([] { codim_input_from_json(nlohmann::json::parse(R"({"dim_g_minus": "x"})")); }),
              ErrorKind::InvalidInput);
}
