#include <hodge/error.hpp>
#include <hodge/grading.hpp>
#include <hodge/verification.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace hodge;

namespace {

GradedDecomposition grade_of(const std::string& type, std::vector<int> e) {
    return grade(build_root_system(CartanSpec::named(type)), GradingElement{std::move(e)});
}

std::vector<std::vector<int>> coords_of(const std::vector<Root>& roots) {
    std::vector<std::vector<int>> out;
    for (const auto& r : roots) out.push_back(r.coords);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Grade, A2WithFirstSimpleRoot) {
    const auto dec = grade_of("A2", {1, 0});
    EXPECT_EQ(coords_of(dec.roots_of_degree(1)), (std::vector<std::vector<int>>{{1, 0}, {1, 1}}));
    EXPECT_EQ(coords_of(dec.roots_of_degree(0)), (std::vector<std::vector<int>>{{0, -1}, {0, 1}}));
    EXPECT_EQ(coords_of(dec.roots_of_degree(-1)), (std::vector<std::vector<int>>{{-1, -1}, {-1, 0}}));
    EXPECT_EQ(dec.dim(0), 4u);  // two roots plus the rank-2 torus
    EXPECT_EQ(level(dec), 1);
    EXPECT_TRUE(is_classical(dec));
    EXPECT_TRUE(generates_criterion(dec));
}

TEST(Grade, ZeroElementPutsEverythingInDegreeZero) {
    const auto dec = grade_of("E6", std::vector<int>(6, 0));
    EXPECT_EQ(dec.dim(0), 78u);
    EXPECT_EQ(level(dec), 0);
    EXPECT_TRUE(is_classical(dec));
    EXPECT_TRUE(generates_oracle(dec));  // vacuous: g^+ is empty
}

TEST(Grade, G2Levels) {
    const auto top = grade_of("G2", {1, 1});
    EXPECT_EQ(level(top), 5);
    EXPECT_EQ(top.max_nonempty_degree(), 5);
    EXPECT_EQ(coords_of(top.roots_of_degree(5)), (std::vector<std::vector<int>>{{3, 2}}));
    EXPECT_FALSE(is_classical(top));
    EXPECT_EQ(level(grade_of("G2", {0, 1})), 2);
}

TEST(Grade, CriterionAndOracleExamples) {
    EXPECT_TRUE(generates_criterion(grade_of("A3", {1, 1, 1})));
    EXPECT_TRUE(generates_oracle(grade_of("A3", {1, 1, 1})));
    EXPECT_FALSE(generates_criterion(grade_of("G2", {0, 2})));
    EXPECT_FALSE(generates_oracle(grade_of("G2", {0, 2})));
}

TEST(Grade, RejectsBadElements) {
    const RootSystem rs = build_root_system(CartanSpec::named("A2"));
    try {
        grade(rs, GradingElement{{1, -1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NegativeGradingEntry);
    }
    try {
        grade(rs, GradingElement{{1, 1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(Grade, DegreesAreAntisymmetricAndBracketCompatible) {
    const auto dec = grade_of("F4", {0, 1, 2, 0});
    const RootSystem& rs = dec.roots();
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        EXPECT_EQ(dec.degree(rs.negate_index(i)), -dec.degree(i));
    }
    for (int k = 1; k <= level(dec); ++k) EXPECT_EQ(dec.dim(k), dec.dim(-k));
    EXPECT_TRUE(brackets_respect_grading(dec));
}

TEST(Closure, A2Examples) {
    const RootSystem rs = build_root_system(CartanSpec::named("A2"));
    const std::vector<Root> simple{{1, 0}, {0, 1}};
    EXPECT_EQ(coords_of(subalgebra_closure(rs, simple).to_roots()),
              (std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}}));
    EXPECT_TRUE(subalgebra_closure(rs, std::vector<Root>{}).empty());

    const std::vector<Root> mixed{{1, 1}, {-1, 0}};
    const auto h = subalgebra_closure(rs, mixed);
    EXPECT_EQ(coords_of(h.to_roots()), (std::vector<std::vector<int>>{{-1, 0}, {0, 1}, {1, 1}}));
    EXPECT_TRUE(h.is_closed());
    EXPECT_FALSE(h.touches_cartan());

    const std::vector<Root> pair{{1, 0}, {-1, 0}};
    const auto sl2 = subalgebra_closure(rs, pair);
    EXPECT_EQ(sl2.size(), 2u);
    EXPECT_TRUE(sl2.touches_cartan());
    EXPECT_TRUE(sl2.is_symmetric());
}

// Idempotence and monotonicity of closure on random seed sets.
TEST(Closure, IdempotentAndMonotone) {
    std::mt19937 rng(7);
    for (const char* type : {"A4", "B3", "C4", "D5", "G2", "F4", "E6"}) {
        const RootSystem rs = build_root_system(CartanSpec::named(type));
        std::uniform_int_distribution<std::size_t> pick(0, rs.num_roots() - 1);
        std::uniform_int_distribution<int> count(0, 4);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::size_t> seeds;
            for (int i = count(rng); i > 0; --i) seeds.push_back(pick(rng));
            const auto h = subalgebra_closure_indices(rs, seeds);
            ASSERT_TRUE(h.is_closed());
            const auto idx = h.indices();
            ASSERT_EQ(subalgebra_closure_indices(rs, idx), h);

            std::vector<std::size_t> more = seeds;
            more.push_back(pick(rng));
            const auto bigger = subalgebra_closure_indices(rs, more);
            for (std::size_t i : idx) ASSERT_TRUE(bigger.contains(i)) << type;
        }
    }
}

TEST(DegreeOneRecovery, Examples) {
    const RootSystem a3 = build_root_system(CartanSpec::named("A3"));
    EXPECT_EQ(verify_degree_one_recovery(a3, GradingElement{{1, 1, 1}}).verdict(), Status::Holds);

    const RootSystem a2 = build_root_system(CartanSpec::named("A2"));
    const auto low = verify_degree_one_recovery(a2, GradingElement{{1, 1}});
    EXPECT_EQ(low.verdict(), Status::NotApplicable);
    EXPECT_EQ(low.failed_hypothesis(), std::optional<std::string>("level >= 3"));

    const RootSystem g2 = build_root_system(CartanSpec::named("G2"));
    EXPECT_EQ(verify_degree_one_recovery(g2, GradingElement{{1, 1}}).verdict(), Status::Holds);
}

TEST(DegreeThreeWitness, Examples) {
    const RootSystem a3 = build_root_system(CartanSpec::named("A3"));
    const auto w = find_degree_three_witness(a3, GradingElement{{1, 1, 1}});
    ASSERT_TRUE(w);
    EXPECT_EQ((*w)[0] + (*w)[1] + (*w)[2], (Root{1, 1, 1}));

    const RootSystem b3 = build_root_system(CartanSpec::named("B3"));
    const auto wb = find_degree_three_witness(b3, GradingElement{{1, 1, 1}});
    ASSERT_TRUE(wb);
    EXPECT_TRUE(is_root(b3, ((*wb)[0] + (*wb)[1] + (*wb)[2]).coords));
    EXPECT_TRUE(is_root(b3, ((*wb)[0] + (*wb)[1]).coords));

    const RootSystem a2 = build_root_system(CartanSpec::named("A2"));
    try {
        find_degree_three_witness(a2, GradingElement{{1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
    }
}

TEST(PositivePartRecovery, Examples) {
    const RootSystem a3 = build_root_system(CartanSpec::named("A3"));
    const GradingElement e3{{1, 1, 1}};
    const auto dec = grade(a3, e3);
    const auto h = subalgebra_closure_indices(a3, roots_with_abs_degree_at_least(dec, 2));
    const auto report = verify_positive_part_recovery(a3, e3, h);
    EXPECT_TRUE(report.hypotheses_hold());
    EXPECT_EQ(report.verdict(), Status::Holds);

    std::vector<std::size_t> all(a3.num_roots());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    EXPECT_EQ(verify_positive_part_recovery(a3, e3, subalgebra_closure_indices(a3, all)).conclusion, Status::Holds);

    // Level 2: the hypothesis fails and so does the conclusion.
    const RootSystem a2 = build_root_system(CartanSpec::named("A2"));
    const GradingElement e2{{1, 1}};
    const auto h2 = subalgebra_closure_indices(a2, roots_with_abs_degree_at_least(grade(a2, e2), 2));
    EXPECT_EQ(h2.size(), 2u);
    const auto r2 = verify_positive_part_recovery(a2, e2, h2);
    EXPECT_EQ(r2.verdict(), Status::NotApplicable);
    EXPECT_EQ(r2.conclusion, Status::Fails);
}

TEST(VerdictReport, JsonShape) {
    const RootSystem a2 = build_root_system(CartanSpec::named("A2"));
    const auto j = to_json(verify_degree_one_recovery(a2, GradingElement{{1, 1}}));
    EXPECT_EQ(j["verdict"], "not_applicable");
    EXPECT_TRUE(j["hypotheses"].is_array());
    EXPECT_EQ(j["hypotheses"][1]["status"], "fails");
}

TEST(Grid, SmallGridHolds) {
    GridConfig config;
    config.max_rank = 2;
    const GridSummary s = run_grading_grid(config);
    EXPECT_TRUE(s.all_hold());
    EXPECT_GT(s.lemma_cases, 0u);
    EXPECT_EQ(s.lemma_cases, s.degree_one_recovery_holds);
    EXPECT_EQ(s.lemma_cases, s.witness_found);
}

TEST(Grid, RankOneTypeAIsVacuous) {
    GridConfig config;
    config.types = "A";
    config.max_rank = 1;
    const GridSummary s = run_grading_grid(config);
    EXPECT_EQ(s.points, 3u);
    EXPECT_EQ(s.lemma_cases, 0u);
    EXPECT_TRUE(s.all_hold());
}

TEST(Grid, ElementsAreLexOrdered) {
    const auto es = grid_elements(2, 2);
    ASSERT_EQ(es.size(), 9u);
    EXPECT_EQ(es.front(), (std::vector<int>{0, 0}));
    EXPECT_EQ(es[1], (std::vector<int>{0, 1}));
    EXPECT_EQ(es.back(), (std::vector<int>{2, 2}));
}
