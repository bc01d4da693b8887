#pragma once

#include "hodge/report.hpp"
#include "hodge/rootsys.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hodge {

/// Values of a Cartan grading element on the simple roots; all nonnegative.
struct GradingElement {
    std::vector<int> values;

    bool operator==(const GradingElement&) const = default;
};

/// Decomposition g = sum_k g^k of the roots by their E-degree.
class GradedDecomposition {
public:
    const RootSystem& roots() const noexcept { return rs_; }
    const GradingElement& element() const noexcept { return e_; }

    /// Degree of a root given by signed index.
    int degree(std::size_t index) const { return degree_.at(index); }
    int degree(const Root& r) const;

    /// Roots of degree k, in signed-index order.
    std::span<const std::size_t> indices_of_degree(int k) const;
    std::vector<Root> roots_of_degree(int k) const;
    /// dim g^k, counting the Cartan subalgebra in degree 0.
    std::size_t dim(int k) const;
    std::size_t cartan_in_zero() const noexcept { return rs_.rank(); }

    /// Largest k with a root of degree k (0 when every root has degree 0).
    int max_nonempty_degree() const noexcept { return max_degree_; }
    const std::map<int, std::vector<std::size_t>>& by_degree() const noexcept { return by_degree_; }

private:
    GradedDecomposition(RootSystem rs, GradingElement e);
    friend GradedDecomposition grade(const RootSystem&, const GradingElement&);

    RootSystem rs_;
    GradingElement e_;
    std::vector<int> degree_;
    std::map<int, std::vector<std::size_t>> by_degree_;
    int max_degree_ = 0;
};

/// A set of roots closed under root addition; models a regular subalgebra
/// sharing the Cartan subalgebra of g.
class SubalgebraRootSet {
public:
    explicit SubalgebraRootSet(RootSystem rs);

    const RootSystem& roots() const noexcept { return rs_; }
    bool contains(std::size_t index) const { return member_.at(index); }
    bool contains(const Root& r) const;
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    /// Members in signed-index order.
    std::vector<std::size_t> indices() const;
    std::vector<Root> to_roots() const;
    /// True if some bracket of two members produces a root outside the set.
    bool is_closed() const;
    /// Whether -a is a member whenever a is.
    bool is_symmetric() const;
    /// Whether a pair of opposite roots was bracketed during closure.
    bool touches_cartan() const noexcept { return touches_cartan_; }

    bool operator==(const SubalgebraRootSet& other) const { return member_ == other.member_; }

    void insert(std::size_t index);

private:
    friend SubalgebraRootSet subalgebra_closure_indices(const RootSystem&, std::span<const std::size_t>);

    RootSystem rs_;
    std::vector<bool> member_;
    std::size_t count_ = 0;
    bool touches_cartan_ = false;
};

/// Throws Error(NegativeGradingEntry) or Error(DimensionMismatch).
GradedDecomposition grade(const RootSystem& rs, const GradingElement& e);

/// Pairing of the highest root with E.
int level(const GradedDecomposition& dec);

/// Level at most two.
bool is_classical(const GradedDecomposition& dec);

/// Every simple root has E-value 0 or 1.
bool generates_criterion(const GradedDecomposition& dec);

/// Brute force: closes the degree-one roots under addition and compares with
/// the set of all positive-degree roots.
bool generates_oracle(const GradedDecomposition& dec);

/// Smallest root set containing the seeds and closed under addition.
SubalgebraRootSet subalgebra_closure(const RootSystem& rs, std::span<const Root> seeds);
SubalgebraRootSet subalgebra_closure_indices(const RootSystem& rs, std::span<const std::size_t> seeds);

/// Roots with |degree| >= min_abs_degree.
std::vector<std::size_t> roots_with_abs_degree_at_least(const GradedDecomposition& dec, int min_abs_degree);

/// The subalgebra generated by the root spaces of degree at least two in
/// absolute value contains every root space of degree +1 and -1, provided
/// g^1 generates g^+ and the level is at least three.
VerdictReport verify_degree_one_recovery(const RootSystem& rs, const GradingElement& e);

/// Degree-one roots b1, b2, b3 with b1 + b2 and b1 + b2 + b3 roots, so that
/// [g_{b1+b2+b3}, g_{-b1-b2}] = g_{b3} is a nonzero element of [g^{-2}, g^3]
/// inside g^1. Simple-root triples are tried first.
/// Throws Error(HypothesisFailed) unless the generation criterion holds and
/// the level is at least three.
std::optional<std::array<Root, 3>> find_degree_three_witness(const RootSystem& rs, const GradingElement& e);

/// A subalgebra agreeing with g in every degree of absolute value >= 2 agrees
/// with g in all positive degrees, under the same hypotheses.
VerdictReport verify_positive_part_recovery(const RootSystem& rs, const GradingElement& e,
                                            const SubalgebraRootSet& h);

/// Bracket compatibility: deg(a + b) = deg(a) + deg(b) for every root sum.
bool brackets_respect_grading(const GradedDecomposition& dec);

}  // namespace hodge
