#include "hodge/report.hpp"

#include <algorithm>

namespace hodge {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

Status holds_if(bool b) noexcept {
    return b ? Status::Holds : Status::Fails;
}

bool VerdictReport::hypotheses_hold() const {
    return std::ranges::all_of(hypotheses, [](const Hypothesis& h) { return h.status == Status::Holds; });
}

Status VerdictReport::verdict() const {
    return hypotheses_hold() ? conclusion : Status::NotApplicable;
}

std::optional<std::string> VerdictReport::failed_hypothesis() const {
    for (const auto& h : hypotheses) {
        if (h.status != Status::Holds) {
            return h.name;
        }
    }
    return std::nullopt;
}

nlohmann::json to_json(const VerdictReport& r) {
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : r.hypotheses) {
        hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}});
    }
    nlohmann::json out{
        {"check", r.check},
        {"hypotheses", std::move(hyps)},
        {"conclusion", to_string(r.conclusion)},
        {"verdict", to_string(r.verdict())},
    };
    if (!r.witness.is_null()) {
        out["witness"] = r.witness;
    }
    if (!r.notes.empty()) {
        out["notes"] = r.notes;
    }
    return out;
}

}  // namespace hodge
