#pragma once

#include "hodge/rootsys.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hodge {

struct GridConfig {
    std::string types = "ABCDEFG";
    int max_rank = 6;
    int max_entry = 2;
    std::size_t budget = kDefaultClosureBudget;
};

/// Named simple types allowed by the config, in (letter, rank) order. Ranks
/// start where the type is new: B2, C3, D4.
std::vector<CartanSpec> grid_types(const GridConfig& config);

/// All grading elements with entries in [0, max_entry], lexicographic.
std::vector<std::vector<int>> grid_elements(std::size_t rank, int max_entry);

struct TypeTally {
    std::string type;
    std::size_t points = 0;
    std::size_t lemma_cases = 0;  // criterion true and level >= 3
};

/// Aggregate of every per-point check over the grid.
struct GridSummary {
    std::size_t points = 0;
    std::size_t criterion_oracle_disagreements = 0;
    std::size_t level_disagreements = 0;       // pairing vs max nonempty degree
    std::size_t classical_disagreements = 0;   // is_classical vs level <= 2
    std::size_t bracket_violations = 0;
    std::size_t dimension_asymmetries = 0;     // dim g^k != dim g^-k
    std::size_t lemma_cases = 0;
    std::size_t degree_one_recovery_holds = 0;
    std::size_t witness_found = 0;
    std::size_t simple_witness_found = 0;      // witness made of simple roots
    std::size_t positive_part_recovery_holds = 0;
    std::vector<std::string> counterexamples;
    std::vector<TypeTally> per_type;

    std::size_t counterexample_count() const noexcept { return counterexamples.size(); }
    bool all_hold() const noexcept { return counterexamples.empty(); }
};

/// Runs every grading check on every grid point. Output order is fixed by
/// (type letter, rank, E lexicographic).
GridSummary run_grading_grid(const GridConfig& config);

nlohmann::json to_json(const GridSummary& s);

}  // namespace hodge
