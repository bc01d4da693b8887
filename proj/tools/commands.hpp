#pragma once

#include <hodge/rootsys.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hodge::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerdictFails = 1,
    kInvalidInput = 2,
    kBudgetExceeded = 3,
};

/// A finished command: the JSON document, its text rendering, and the exit code.
struct Report {
    nlohmann::json json;
    std::string text;
    int exit_code = kSuccess;
};

struct RunConfig {
    std::size_t budget = kDefaultClosureBudget;
    int max_rank = 6;
    int max_entry = 2;
    std::string types = "ABCDEFG";
};

/// Named type ("E8") or, when `matrix_json` is set, a custom Cartan matrix.
CartanSpec parse_cartan(const std::string& type, const std::optional<std::string>& matrix_json);

/// "1,1,1" or "[1,1,1]".
std::vector<int> parse_int_list(const std::string& text);

Report cmd_roots(const CartanSpec& spec, const RunConfig& config);
Report cmd_grade(const CartanSpec& spec, const std::vector<int>& e, const RunConfig& config);
Report cmd_lemmas(const CartanSpec& spec, const std::vector<int>& e, const RunConfig& config);
Report cmd_verify(const RunConfig& config);

struct HypersurfaceOptions {
    int n = 0;
    int d = 0;
    int k = 3;
    std::optional<nlohmann::json> polynomial;  // explicit F; Fermat when absent
};

Report cmd_hypersurface(const HypersurfaceOptions& opts);
Report cmd_mult(const HypersurfaceOptions& opts, int a, bool include_entries);
Report cmd_piece(const HypersurfaceOptions& opts, int m);
Report cmd_sigma(const HypersurfaceOptions& opts, const nlohmann::json& forms);
Report cmd_atypical(const nlohmann::json& input);
Report cmd_nl(const nlohmann::json& input);
Report cmd_correction(long expected, long actual);

/// Maps a library error kind to an exit code.
int exit_code_for(const std::exception& e);

}  // namespace hodge::cli
