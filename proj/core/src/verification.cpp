#include "hodge/verification.hpp"

#include "hodge/error.hpp"
#include "hodge/grading.hpp"

#include <sstream>

namespace hodge {

namespace {

std::string describe(const CartanSpec& spec, const std::vector<int>& e) {
    std::ostringstream os;
    os << spec.name() << " E=(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

bool is_simple(const Root& r) {
    return r.height() == 1;
}

}  // namespace

std::vector<CartanSpec> grid_types(const GridConfig& config) {
    struct Range {
        char letter;
        int lo;
        int hi;
    };
    static constexpr Range kRanges[] = {
        {'A', 1, 99}, {'B', 2, 99}, {'C', 3, 99}, {'D', 4, 99}, {'E', 6, 8}, {'F', 4, 4}, {'G', 2, 2},
    };
    std::vector<CartanSpec> out;
    for (const auto& range : kRanges) {
        if (config.types.find(range.letter) == std::string::npos) {
            continue;
        }
        for (int r = range.lo; r <= std::min(range.hi, config.max_rank); ++r) {
            out.push_back(CartanSpec::named(range.letter, r));
        }
    }
    return out;
}

std::vector<std::vector<int>> grid_elements(std::size_t rank, int max_entry) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(rank, 0);
    while (true) {
        out.push_back(e);
        std::size_t i = rank;
        while (i > 0 && e[i - 1] == max_entry) {
            e[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

GridSummary run_grading_grid(const GridConfig& config) {
    if (config.max_rank < 1 || config.max_entry < 0) {
        throw Error(ErrorKind::InvalidInput, "grid bounds must be positive");
    }
    GridSummary s;
    for (const CartanSpec& spec : grid_types(config)) {
        const RootSystem rs = build_root_system(spec, config.budget);
        TypeTally tally{spec.name()};
        for (const auto& values : grid_elements(rs.rank(), config.max_entry)) {
            const GradingElement e{values};
            const GradedDecomposition dec = grade(rs, e);
            const std::string where = describe(spec, values);
            ++s.points;
            ++tally.points;

            const bool criterion = generates_criterion(dec);
            if (criterion != generates_oracle(dec)) {
                ++s.criterion_oracle_disagreements;
                s.counterexamples.push_back(where + ": generation criterion disagrees with closure oracle");
            }
            const int lvl = level(dec);
            if (lvl != dec.max_nonempty_degree()) {
                ++s.level_disagreements;
                s.counterexamples.push_back(where + ": level differs from max nonempty degree");
            }
            if (is_classical(dec) != (dec.max_nonempty_degree() <= 2)) {
                ++s.classical_disagreements;
                s.counterexamples.push_back(where + ": classical test disagrees with degree bound");
            }
            if (!brackets_respect_grading(dec)) {
                ++s.bracket_violations;
                s.counterexamples.push_back(where + ": bracket does not respect grading");
            }
            for (int k = 1; k <= lvl; ++k) {
                if (dec.dim(k) != dec.dim(-k)) {
                    ++s.dimension_asymmetries;
                    s.counterexamples.push_back(where + ": dim g^k != dim g^-k");
                    break;
                }
            }

            if (!criterion || lvl < 3) {
                continue;
            }
            ++s.lemma_cases;
            ++tally.lemma_cases;
            if (verify_degree_one_recovery(rs, e).verdict() == Status::Holds) {
                ++s.degree_one_recovery_holds;
            } else {
                s.counterexamples.push_back(where + ": high-degree subalgebra misses a degree-one root");
            }
            if (auto w = find_degree_three_witness(rs, e)) {
                ++s.witness_found;
                if (is_simple((*w)[0]) && is_simple((*w)[1]) && is_simple((*w)[2])) {
                    ++s.simple_witness_found;
                }
            } else {
                s.counterexamples.push_back(where + ": no degree-three witness");
            }
            const auto seeds = roots_with_abs_degree_at_least(dec, 2);
            const SubalgebraRootSet h = subalgebra_closure_indices(rs, seeds);
            if (verify_positive_part_recovery(rs, e, h).verdict() == Status::Holds) {
                ++s.positive_part_recovery_holds;
            } else {
                s.counterexamples.push_back(where + ": positive part not recovered");
            }
        }
        s.per_type.push_back(std::move(tally));
    }
    return s;
}

nlohmann::json to_json(const GridSummary& s) {
    nlohmann::json types = nlohmann::json::array();
    for (const auto& t : s.per_type) {
        types.push_back({{"type", t.type}, {"points", t.points}, {"lemma_cases", t.lemma_cases}});
    }
    return {
        {"points", s.points},
        {"criterion_oracle_disagreements", s.criterion_oracle_disagreements},
        {"level_disagreements", s.level_disagreements},
        {"classical_disagreements", s.classical_disagreements},
        {"bracket_violations", s.bracket_violations},
        {"dimension_asymmetries", s.dimension_asymmetries},
        {"lemma_cases", s.lemma_cases},
        {"degree_one_recovery_holds", s.degree_one_recovery_holds},
        {"witness_found", s.witness_found},
        {"simple_witness_found", s.simple_witness_found},
        {"positive_part_recovery_holds", s.positive_part_recovery_holds},
        {"counterexamples", s.counterexamples},
        {"per_type", std::move(types)},
        {"all_hold", s.all_hold()},
    };
}

}  // namespace hodge
