#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hodge {

/// Three-valued outcome so that a failed hypothesis is never confused with a
/// failed conclusion.
enum class Status { Holds, Fails, NotApplicable };

std::string_view to_string(Status s) noexcept;

struct Hypothesis {
    std::string name;
    Status status = Status::NotApplicable;
};

/// Outcome of a mechanized lemma check.
struct VerdictReport {
    std::string check;
    std::vector<Hypothesis> hypotheses;
    /// Evaluated even when a hypothesis fails, to show what the hypothesis buys.
    Status conclusion = Status::NotApplicable;
    nlohmann::json witness;  // null when absent
    std::vector<std::string> notes;

    bool hypotheses_hold() const;
    /// NotApplicable if any hypothesis fails, otherwise the conclusion.
    Status verdict() const;
    /// First failing hypothesis, if any.
    std::optional<std::string> failed_hypothesis() const;
};

Status holds_if(bool b) noexcept;

nlohmann::json to_json(const VerdictReport& r);

}  // namespace hodge
