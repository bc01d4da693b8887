#pragma once

#include "hodge/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hodge {

using Exponent = std::vector<int>;

inline constexpr int kMaxVariables = 8;

/// Monomials of total degree `degree` in `nvars` variables, in descending
/// lexicographic order (x_0^degree first).
std::vector<Exponent> enumerate_monomials(int nvars, int degree);

/// Injective key for exponents with at most kMaxVariables entries below 256.
std::uint64_t pack(const Exponent& e);

/// Multivariate polynomial with rational coefficients; zero terms are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const noexcept { return nvars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c);
    Polynomial derivative(int var) const;
    Polynomial operator*(const Polynomial& rhs) const;

    /// Total degree when homogeneous, -1 otherwise (and for zero).
    int homogeneous_degree() const;

private:
    int nvars_ = 0;
    std::map<Exponent, Rational> terms_;
};

}  // namespace hodge
