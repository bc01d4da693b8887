#include "hodge/linalg.hpp"

#include "hodge/error.hpp"

#include <map>

namespace hodge {

namespace {

using Accumulator = std::map<std::size_t, Integer>;

Accumulator to_integer_row(std::span<const std::pair<std::size_t, Rational>> v) {
    Integer denom_lcm = 1;
    for (const auto& [col, q] : v) {
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    Accumulator acc;
    for (const auto& [col, q] : v) {
        if (sgn(q) == 0) {
            continue;
        }
        Integer scaled = q.get_num() * (denom_lcm / q.get_den());
        acc[col] += scaled;
        if (sgn(acc[col]) == 0) {
            acc.erase(col);
        }
    }
    return acc;
}

void make_primitive(Accumulator& acc) {
    Integer g = 0;
    for (const auto& [col, a] : acc) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (sgn(acc.begin()->second) < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& [col, a] : acc) {
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        }
    }
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonCartanMatrix: return "NonCartanMatrix";
        case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NegativeGradingEntry: return "NegativeGradingEntry";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::InconsistentDims: return "InconsistentDims";
        case ErrorKind::UnsupportedWeight: return "UnsupportedWeight";
        case ErrorKind::MissingHodgeNumber: return "MissingHodgeNumber";
        case ErrorKind::NegativeCorrection: return "NegativeCorrection";
        case ErrorKind::SingularitySuspected: return "SingularitySuspected";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    const auto bad = [&] { return Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'"); };
    if (s.empty()) {
        throw bad();
    }
    const auto slash = s.find('/');
    const auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
            t.remove_prefix(1);
        }
        if (t.empty()) {
            return false;
        }
        for (char c : t) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
        throw bad();
    }
    if (num.front() == '+') {
        num.erase(0, 1);
    }
    Integer n(num), d(den);
    if (d == 0) {
        throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

EchelonBasis::EchelonBasis(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

bool EchelonBasis::insert(std::span<const std::pair<std::size_t, Rational>> v) {
    if (rows_.size() == ncols_) {
        return false;
    }
    Accumulator acc = to_integer_row(v);
    auto it = acc.begin();
    while (it != acc.end()) {
        const std::size_t col = it->first;
        if (col >= ncols_) {
            throw Error(ErrorKind::DimensionMismatch, "vector column out of range");
        }
        const long r = pivot_row_[col];
        if (r < 0) {
            ++it;
            continue;
        }
        const Row& row = rows_[static_cast<std::size_t>(r)];
        const Integer& p = row.entries.front().second;
        const Integer a = it->second;
        // acc <- p*acc - a*row, with the content of (p, a) divided out first.
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
        const Integer ps = p / g;
        const Integer as = a / g;
        if (ps != 1) {
            for (auto& [c, x] : acc) {
                x *= ps;
            }
        }
        for (const auto& [c, x] : row.entries) {
            auto [slot, inserted] = acc.try_emplace(c, 0);
            slot->second -= as * x;
            if (sgn(slot->second) == 0) {
                acc.erase(slot);
            }
        }
        it = acc.upper_bound(col);
    }
    if (acc.empty()) {
        return false;
    }
    make_primitive(acc);
    Row row;
    row.entries.assign(acc.begin(), acc.end());
    pivot_row_[row.entries.front().first] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

SparseVector EchelonBasis::reduce(std::span<const std::pair<std::size_t, Rational>> v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [col, q] : v) {
        if (col >= ncols_) {
            throw Error(ErrorKind::DimensionMismatch, "vector column out of range");
        }
        acc[col] += q;
    }
    std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
    auto it = acc.begin();
    while (it != acc.end()) {
        const std::size_t col = it->first;
        const long r = pivot_row_[col];
        if (r < 0) {
            ++it;
            continue;
        }
        const Row& row = rows_[static_cast<std::size_t>(r)];
        const Rational factor = it->second / Rational(row.entries.front().second);
        for (const auto& [c, x] : row.entries) {
            auto [slot, inserted] = acc.try_emplace(c, 0);
            slot->second -= factor * x;
            if (sgn(slot->second) == 0) {
                acc.erase(slot);
            }
        }
        it = acc.upper_bound(col);
    }
    return SparseVector(acc.begin(), acc.end());
}

std::vector<SparseVector> EchelonBasis::basis_vectors() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const Row& row : rows_) {
        SparseVector v;
        v.reserve(row.entries.size());
        for (const auto& [c, x] : row.entries) {
            v.emplace_back(c, Rational(x));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> EchelonBasis::non_pivots() const {
    std::vector<std::size_t> out;
    out.reserve(ncols_ - rows_.size());
    for (std::size_t c = 0; c < ncols_; ++c) {
        if (pivot_row_[c] < 0) {
            out.push_back(c);
        }
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    }
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (sgn(rhs(k, j)) != 0) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
    }
    return out;
}

std::size_t bareiss_rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer denom_lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = m(i, j).get_num() * (denom_lcm / m(i, j).get_den());
        }
    }

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(a[pivot][col]) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[rank]);
        const Integer& p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Integer f = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer t = p * a[i][j] - f * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace hodge
