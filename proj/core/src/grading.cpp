#include "hodge/grading.hpp"

#include "hodge/error.hpp"

#include <algorithm>

namespace hodge {

GradedDecomposition::GradedDecomposition(RootSystem rs, GradingElement e)
    : rs_(std::move(rs)), e_(std::move(e)) {
    const std::size_t n = rs_.num_positive();
    degree_.assign(2 * n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        int d = 0;
        const auto& c = rs_.positive_roots()[k].coords;
        for (std::size_t i = 0; i < c.size(); ++i) {
            d += c[i] * e_.values[i];
        }
        degree_[k] = d;
        degree_[k + n] = -d;
        max_degree_ = std::max(max_degree_, d);
    }
    for (std::size_t idx = 0; idx < 2 * n; ++idx) {
        by_degree_[degree_[idx]].push_back(idx);
    }
}

int GradedDecomposition::degree(const Root& r) const {
    auto idx = rs_.index_of(r.coords);
    if (!idx) {
        throw Error(ErrorKind::InvalidInput, to_string(r) + " is not a root");
    }
    return degree_[*idx];
}

std::span<const std::size_t> GradedDecomposition::indices_of_degree(int k) const {
    auto it = by_degree_.find(k);
    if (it == by_degree_.end()) {
        return {};
    }
    return it->second;
}

std::vector<Root> GradedDecomposition::roots_of_degree(int k) const {
    std::vector<Root> out;
    for (std::size_t idx : indices_of_degree(k)) {
        out.push_back(rs_.root(idx));
    }
    return out;
}

std::size_t GradedDecomposition::dim(int k) const {
    return indices_of_degree(k).size() + (k == 0 ? rs_.rank() : 0);
}

GradedDecomposition grade(const RootSystem& rs, const GradingElement& e) {
    if (e.values.size() != rs.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "grading element has " + std::to_string(e.values.size()) +
                                                      " entries, rank is " + std::to_string(rs.rank()));
    }
    for (std::size_t i = 0; i < e.values.size(); ++i) {
        if (e.values[i] < 0) {
            throw Error(ErrorKind::NegativeGradingEntry, "entry " + std::to_string(i) + " is negative");
        }
    }
    return GradedDecomposition(rs, e);
}

int level(const GradedDecomposition& dec) {
    const auto& highest = dec.roots().highest().coords;
    const auto& values = dec.element().values;
    int pairing = 0;
    for (std::size_t i = 0; i < highest.size(); ++i) {
        pairing += highest[i] * values[i];
    }
    return pairing;
}

bool is_classical(const GradedDecomposition& dec) {
    return level(dec) <= 2;
}

bool generates_criterion(const GradedDecomposition& dec) {
    return std::ranges::all_of(dec.element().values, [](int v) { return v == 0 || v == 1; });
}

bool generates_oracle(const GradedDecomposition& dec) {
    const RootSystem& rs = dec.roots();
    const std::size_t total = rs.num_roots();
    std::vector<bool> reached(total, false);
    std::vector<std::size_t> members;
    for (std::size_t idx : dec.indices_of_degree(1)) {
        reached[idx] = true;
        members.push_back(idx);
    }
    // Sums of positive-degree elements stay in positive degree, so plain
    // closure of the degree-one set is the positive-degree closure.
    for (std::size_t cursor = 0; cursor < members.size(); ++cursor) {
        const std::size_t x = members[cursor];
        for (std::size_t j = 0; j <= cursor; ++j) {
            if (auto s = rs.sum_index(x, members[j]); s && !reached[*s]) {
                reached[*s] = true;
                members.push_back(*s);
            }
        }
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        if ((dec.degree(idx) > 0) != reached[idx]) {
            return false;
        }
    }
    return true;
}

SubalgebraRootSet::SubalgebraRootSet(RootSystem rs) : rs_(std::move(rs)), member_(rs_.num_roots(), false) {}

bool SubalgebraRootSet::contains(const Root& r) const {
    auto idx = rs_.index_of(r.coords);
    return idx && member_[*idx];
}

void SubalgebraRootSet::insert(std::size_t index) {
    if (!member_.at(index)) {
        member_[index] = true;
        ++count_;
    }
}

std::vector<std::size_t> SubalgebraRootSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i]) out.push_back(i);
    }
    return out;
}

std::vector<Root> SubalgebraRootSet::to_roots() const {
    std::vector<Root> out;
    for (std::size_t i : indices()) {
        out.push_back(rs_.root(i));
    }
    return out;
}

bool SubalgebraRootSet::is_closed() const {
    const auto idx = indices();
    for (std::size_t a : idx) {
        for (std::size_t b : idx) {
            if (auto s = rs_.sum_index(a, b); s && !member_[*s]) {
                return false;
            }
        }
    }
    return true;
}

bool SubalgebraRootSet::is_symmetric() const {
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i] && !member_[rs_.negate_index(i)]) {
            return false;
        }
    }
    return true;
}

SubalgebraRootSet subalgebra_closure_indices(const RootSystem& rs, std::span<const std::size_t> seeds) {
    SubalgebraRootSet out(rs);
    std::vector<std::size_t> members;
    for (std::size_t s : seeds) {
        if (!out.contains(s)) {
            out.insert(s);
            members.push_back(s);
        }
    }
    for (std::size_t cursor = 0; cursor < members.size(); ++cursor) {
        const std::size_t x = members[cursor];
        for (std::size_t j = 0; j <= cursor; ++j) {
            const std::size_t y = members[j];
            if (y == rs.negate_index(x)) {
                // [g_a, g_{-a}] lies in t, and [t, g_b] = g_b adds no root space.
                out.touches_cartan_ = true;
                continue;
            }
            if (auto s = rs.sum_index(x, y); s && !out.contains(*s)) {
                out.insert(*s);
                members.push_back(*s);
            }
        }
    }
    return out;
}

SubalgebraRootSet subalgebra_closure(const RootSystem& rs, std::span<const Root> seeds) {
    std::vector<std::size_t> idx;
    idx.reserve(seeds.size());
    for (const Root& r : seeds) {
        if (r.rank() != rs.rank()) {
            throw Error(ErrorKind::DimensionMismatch, "seed " + to_string(r) + " has the wrong rank");
        }
        auto i = rs.index_of(r.coords);
        if (!i) {
            throw Error(ErrorKind::InvalidInput, "seed " + to_string(r) + " is not a root");
        }
        idx.push_back(*i);
    }
    return subalgebra_closure_indices(rs, idx);
}

std::vector<std::size_t> roots_with_abs_degree_at_least(const GradedDecomposition& dec, int min_abs_degree) {
    std::vector<std::size_t> out;
    for (std::size_t idx = 0; idx < dec.roots().num_roots(); ++idx) {
        if (std::abs(dec.degree(idx)) >= min_abs_degree) {
            out.push_back(idx);
        }
    }
    return out;
}

namespace {

std::vector<Hypothesis> generation_hypotheses(const GradedDecomposition& dec) {
    return {
        {"g^1 generates g^+", holds_if(generates_criterion(dec))},
        {"level >= 3", holds_if(level(dec) >= 3)},
    };
}

nlohmann::json root_json(const Root& r) {
    return r.coords;
}

}  // namespace

VerdictReport verify_degree_one_recovery(const RootSystem& rs, const GradingElement& e) {
    const GradedDecomposition dec = grade(rs, e);
    VerdictReport report;
    report.check = "degree_one_recovery";
    report.hypotheses = generation_hypotheses(dec);

    const auto seeds = roots_with_abs_degree_at_least(dec, 2);
    const SubalgebraRootSet closure = subalgebra_closure_indices(rs, seeds);
    std::vector<Root> missing;
    for (int k : {1, -1}) {
        for (std::size_t idx : dec.indices_of_degree(k)) {
            if (!closure.contains(idx)) {
                missing.push_back(rs.root(idx));
            }
        }
    }
    report.conclusion = holds_if(missing.empty());
    report.witness = nlohmann::json{{"generated_roots", closure.size()}, {"seed_roots", seeds.size()}};
    if (!missing.empty()) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& r : missing) m.push_back(root_json(r));
        report.witness["missing_degree_one_roots"] = std::move(m);
    }
    return report;
}

std::optional<std::array<Root, 3>> find_degree_three_witness(const RootSystem& rs, const GradingElement& e) {
    const GradedDecomposition dec = grade(rs, e);
    if (!generates_criterion(dec)) {
        throw Error(ErrorKind::HypothesisFailed, "g^1 does not generate g^+");
    }
    if (level(dec) < 3) {
        throw Error(ErrorKind::HypothesisFailed, "level " + std::to_string(level(dec)) + " < 3");
    }

    const auto search = [&](const std::vector<std::size_t>& candidates) -> std::optional<std::array<Root, 3>> {
        for (std::size_t a : candidates) {
            for (std::size_t b : candidates) {
                const auto ab = rs.sum_index(a, b);
                if (!ab) continue;
                for (std::size_t c : candidates) {
                    if (rs.sum_index(*ab, c)) {
                        return std::array<Root, 3>{rs.root(a), rs.root(b), rs.root(c)};
                    }
                }
            }
        }
        return std::nullopt;
    };

    std::vector<std::size_t> simple;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (e.values[i] == 1) {
            std::vector<int> unit(rs.rank(), 0);
            unit[i] = 1;
            simple.push_back(*rs.index_of(unit));
        }
    }
    if (auto w = search(simple)) {
        return w;
    }
    // With zero entries in E, g^1 contains non-simple roots and a simple
    // triple need not exist.
    const auto deg1 = dec.indices_of_degree(1);
    return search(std::vector<std::size_t>(deg1.begin(), deg1.end()));
}

VerdictReport verify_positive_part_recovery(const RootSystem& rs, const GradingElement& e,
                                            const SubalgebraRootSet& h) {
    const GradedDecomposition dec = grade(rs, e);
    VerdictReport report;
    report.check = "positive_part_recovery";

    bool high_degrees_agree = true;
    for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
        if (dec.degree(idx) >= 2 && !h.contains(idx)) {
            high_degrees_agree = false;
        }
    }
    report.hypotheses = {
        {"h is bracket-closed", holds_if(h.is_closed())},
        {"h is stable under negation", holds_if(h.is_symmetric())},
    };
    for (auto& hyp : generation_hypotheses(dec)) {
        report.hypotheses.push_back(std::move(hyp));
    }
    report.hypotheses.push_back({"h^k = g^k for all k >= 2", holds_if(high_degrees_agree)});

    std::size_t missing = 0;
    for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
        if (dec.degree(idx) > 0 && !h.contains(idx)) {
            ++missing;
        }
    }
    report.conclusion = holds_if(missing == 0);
    report.witness = nlohmann::json{{"missing_positive_degree_roots", missing}};
    return report;
}

bool brackets_respect_grading(const GradedDecomposition& dec) {
    const RootSystem& rs = dec.roots();
    for (std::size_t a = 0; a < rs.num_roots(); ++a) {
        for (std::size_t b = 0; b < rs.num_roots(); ++b) {
            if (auto s = rs.sum_index(a, b); s && dec.degree(*s) != dec.degree(a) + dec.degree(b)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace hodge
