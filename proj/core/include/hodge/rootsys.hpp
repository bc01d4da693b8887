#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hodge {

using IntMatrix = std::vector<std::vector<int>>;

/// A Cartan matrix, either one of the named simple types or a custom matrix.
///
/// Convention: entry (i, j) is <beta_i^vee, beta_j>, so the pairing of a root
/// with coordinates c against the coroot of beta_i is (A c)_i. With this
/// convention G2 = [[2,-3],[-1,2]] has highest root (3,2).
class CartanSpec {
public:
    /// "A1".."A*", "B2".., "C2".., "D3".., "E6", "E7", "E8", "F4", "G2".
    static CartanSpec named(const std::string& name);
    static CartanSpec named(char letter, int rank);
    static CartanSpec custom(IntMatrix matrix);

    const IntMatrix& matrix() const noexcept { return matrix_; }
    std::size_t rank() const noexcept { return matrix_.size(); }
    /// Empty for custom matrices.
    const std::string& name() const noexcept { return name_; }
    bool is_named() const noexcept { return !name_.empty(); }

    int operator()(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

private:
    CartanSpec(IntMatrix matrix, std::string name);

    IntMatrix matrix_;
    std::string name_;
};

/// The standard Cartan matrix of a named type. Throws Error(NonCartanMatrix)
/// for an unknown letter or an out-of-range rank.
IntMatrix standard_cartan_matrix(char letter, int rank);

/// A root written in the simple-root basis.
struct Root {
    std::vector<int> coords;

    Root() = default;
    explicit Root(std::vector<int> c) : coords(std::move(c)) {}
    Root(std::initializer_list<int> c) : coords(c) {}

    std::size_t rank() const noexcept { return coords.size(); }
    int height() const;
    bool is_positive() const;
    Root operator-() const;
    Root operator+(const Root& other) const;

    bool operator==(const Root&) const = default;
    /// Height first, then lexicographic coordinates.
    std::strong_ordering operator<=>(const Root& other) const;
};

std::string to_string(const Root& r);

/// [g_a, g_{-a}] lands in the Cartan subalgebra.
struct CartanMarker {
    bool operator==(const CartanMarker&) const = default;
};

/// Result of bracketing two root spaces: zero, a root space, or the Cartan
/// subalgebra.
using RootSum = std::variant<std::monostate, Root, CartanMarker>;

inline constexpr std::size_t kDefaultClosureBudget = 10'000;

/// Root system of one simple factor. Immutable; copies share storage.
///
/// Roots are also addressed by a signed index: 0..N-1 are the positive roots
/// in the stored order, N..2N-1 their negatives in the same order.
class RootSystem {
public:
    const CartanSpec& cartan() const noexcept;
    std::size_t rank() const noexcept;
    const std::vector<Root>& positive_roots() const noexcept;
    std::size_t num_positive() const noexcept { return positive_roots().size(); }
    std::size_t num_roots() const noexcept { return 2 * num_positive(); }
    const Root& highest() const noexcept;

    /// Root for a signed index.
    Root root(std::size_t index) const;
    /// Signed index of a root, or nullopt.
    std::optional<std::size_t> index_of(const std::vector<int>& coords) const;
    std::size_t negate_index(std::size_t index) const noexcept {
        const std::size_t n = num_positive();
        return index < n ? index + n : index - n;
    }
    /// Signed index of root(i) + root(j) when that is a root. A zero sum gives
    /// nullopt here; root_sum reports it as CartanMarker.
    std::optional<std::size_t> sum_index(std::size_t i, std::size_t j) const;

private:
    struct Impl;
    explicit RootSystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    friend RootSystem build_root_system(const CartanSpec&, std::size_t);

    std::shared_ptr<const Impl> impl_;
};

/// Validates the Cartan invariants. Throws Error(NonCartanMatrix).
void validate_cartan(const IntMatrix& matrix);

/// Enumerates the positive roots by the root-string method: for a positive
/// root a and simple root b_i, a + b_i is a root iff q > 0 where
/// q = p - <a, b_i^vee> and p is the length of the b_i-string below a.
/// Throws Error(ClosureBudgetExceeded) if more than `budget` positive roots
/// appear, which is how non-finite-type matrices are rejected.
RootSystem build_root_system(const CartanSpec& spec, std::size_t budget = kDefaultClosureBudget);

/// True iff v or -v is a positive root. Throws Error(DimensionMismatch).
bool is_root(const RootSystem& rs, const std::vector<int>& v);

/// Models [g_a, g_b]. Throws Error(DimensionMismatch) for wrong lengths and
/// Error(InvalidInput) when a or b is not a root.
RootSum root_sum(const RootSystem& rs, const Root& a, const Root& b);

}  // namespace hodge
