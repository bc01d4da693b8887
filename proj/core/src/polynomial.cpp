#include "hodge/polynomial.hpp"

#include "hodge/error.hpp"

#include <numeric>

namespace hodge {

namespace {

void compose(int nvars, int var, int remaining, Exponent& current, std::vector<Exponent>& out) {
    if (var == nvars - 1) {
        current[var] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[var] = k;
        compose(nvars, var + 1, remaining - k, current, out);
    }
}

}  // namespace

std::vector<Exponent> enumerate_monomials(int nvars, int degree) {
    if (nvars < 1 || nvars > kMaxVariables) {
        throw Error(ErrorKind::InvalidInput, "number of variables must be in [1, 8]");
    }
    if (degree < 0) {
        return {};
    }
    std::vector<Exponent> out;
    Exponent current(static_cast<std::size_t>(nvars), 0);
    compose(nvars, 0, degree, current, out);
    return out;
}

std::uint64_t pack(const Exponent& e) {
    std::uint64_t key = 0;
    for (int x : e) {
        if (x < 0 || x > 255) {
            throw Error(ErrorKind::InvalidInput, "exponent out of range");
        }
        key = (key << 8) | static_cast<std::uint64_t>(x);
    }
    return key;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) {
        throw Error(ErrorKind::DimensionMismatch, "exponent vector has the wrong length");
    }
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent de = e;
        --de[var];
        out.add_term(de, c * e[var]);
    }
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_) {
        throw Error(ErrorKind::DimensionMismatch, "polynomials live in different rings");
    }
    Polynomial out(nvars_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            Exponent s = a;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            out.add_term(s, ca * cb);
        }
    }
    return out;
}

int Polynomial::homogeneous_degree() const {
    int degree = -1;
    for (const auto& [e, c] : terms_) {
        const int t = std::accumulate(e.begin(), e.end(), 0);
        if (degree >= 0 && t != degree) {
            return -1;
        }
        degree = t;
    }
    return degree;
}

}  // namespace hodge
