#include "hodge/rootsys.hpp"

#include "hodge/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hodge {

namespace {

void link(IntMatrix& m, std::size_t i, std::size_t j, int ij = -1, int ji = -1) {
    m[i][j] = ij;
    m[j][i] = ji;
}

}  // namespace

IntMatrix standard_cartan_matrix(char letter, int rank) {
    const auto fail = [&] {
        return Error(ErrorKind::NonCartanMatrix,
                     std::string("unknown simple type ") + letter + std::to_string(rank));
    };
    if (rank < 1) {
        throw fail();
    }
    const auto n = static_cast<std::size_t>(rank);
    IntMatrix m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 2;
    }
    switch (letter) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
            break;
        case 'B':
            // beta_n short.
            if (n < 2) throw fail();
            for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
            link(m, n - 2, n - 1, -1, -2);
            break;
        case 'C':
            // beta_n long.
            if (n < 2) throw fail();
            for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
            link(m, n - 2, n - 1, -2, -1);
            break;
        case 'D':
            if (n < 4) throw fail();
            for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
            link(m, n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
            if (n < 6 || n > 8) throw fail();
            link(m, 0, 2);
            link(m, 1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) link(m, i, i + 1);
            break;
        case 'F':
            if (n != 4) throw fail();
            link(m, 0, 1);
            link(m, 1, 2, -2, -1);
            link(m, 2, 3);
            break;
        case 'G':
            // beta_1 short.
            if (n != 2) throw fail();
            link(m, 0, 1, -3, -1);
            break;
        default:
            throw fail();
    }
    return m;
}

void validate_cartan(const IntMatrix& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) {
        throw Error(ErrorKind::NonCartanMatrix, "empty matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            throw Error(ErrorKind::NonCartanMatrix, "matrix is not square");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i][i] != 2) {
            throw Error(ErrorKind::NonCartanMatrix, "diagonal entry " + std::to_string(i) + " is not 2");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0) {
                throw Error(ErrorKind::NonCartanMatrix, "positive off-diagonal entry");
            }
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0)) {
                throw Error(ErrorKind::NonCartanMatrix, "zero pattern is not symmetric");
            }
        }
    }
}

CartanSpec::CartanSpec(IntMatrix matrix, std::string name) : matrix_(std::move(matrix)), name_(std::move(name)) {
    validate_cartan(matrix_);
}

CartanSpec CartanSpec::named(char letter, int rank) {
    return CartanSpec(standard_cartan_matrix(letter, rank), letter + std::to_string(rank));
}

CartanSpec CartanSpec::named(const std::string& name) {
    if (name.size() < 2 || name.size() > 3) {
        throw Error(ErrorKind::NonCartanMatrix, "unknown simple type '" + name + "'");
    }
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
            throw Error(ErrorKind::NonCartanMatrix, "unknown simple type '" + name + "'");
        }
        rank = rank * 10 + (name[i] - '0');
    }
    return named(letter, rank);
}

CartanSpec CartanSpec::custom(IntMatrix matrix) {
    return CartanSpec(std::move(matrix), {});
}

int Root::height() const {
    return std::accumulate(coords.begin(), coords.end(), 0);
}

bool Root::is_positive() const {
    return std::ranges::all_of(coords, [](int c) { return c >= 0; }) &&
           std::ranges::any_of(coords, [](int c) { return c > 0; });
}

Root Root::operator-() const {
    Root r(coords);
    for (int& c : r.coords) c = -c;
    return r;
}

Root Root::operator+(const Root& other) const {
    if (other.rank() != rank()) {
        throw Error(ErrorKind::DimensionMismatch, "root ranks differ");
    }
    Root r(coords);
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += other.coords[i];
    return r;
}

std::strong_ordering Root::operator<=>(const Root& other) const {
    if (auto c = height() <=> other.height(); c != 0) {
        return c;
    }
    return coords <=> other.coords;
}

std::string to_string(const Root& r) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
        if (i) os << ',';
        os << r.coords[i];
    }
    os << ')';
    return os.str();
}

struct RootSystem::Impl {
    CartanSpec cartan;
    std::vector<Root> positive;
    std::map<std::vector<int>, std::size_t> index;  // signed index
    Root highest;
    std::vector<int> sum_table;  // num_roots^2 entries, -1 for "not a root"; empty when too large
};

namespace {

constexpr std::size_t kMaxTabulatedRoots = 2048;

std::optional<std::size_t> lookup_sum(const std::vector<Root>& positive,
                                      const std::map<std::vector<int>, std::size_t>& index,
                                      std::size_t i, std::size_t j) {
    const std::size_t n = positive.size();
    const auto& a = positive[i < n ? i : i - n];
    const auto& b = positive[j < n ? j : j - n];
    const int sa = i < n ? 1 : -1;
    const int sb = j < n ? 1 : -1;
    std::vector<int> s(a.coords.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = sa * a.coords[k] + sb * b.coords[k];
    }
    auto it = index.find(s);
    if (it == index.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool is_connected(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            if (!seen[j] && m[i][j] != 0) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    return std::ranges::all_of(seen, [](bool b) { return b; });
}

}  // namespace

const CartanSpec& RootSystem::cartan() const noexcept { return impl_->cartan; }
std::size_t RootSystem::rank() const noexcept { return impl_->cartan.rank(); }
const std::vector<Root>& RootSystem::positive_roots() const noexcept { return impl_->positive; }
const Root& RootSystem::highest() const noexcept { return impl_->highest; }

Root RootSystem::root(std::size_t index) const {
    const std::size_t n = num_positive();
    if (index >= 2 * n) {
        throw Error(ErrorKind::InvalidInput, "root index out of range");
    }
    return index < n ? impl_->positive[index] : -impl_->positive[index - n];
}

std::optional<std::size_t> RootSystem::index_of(const std::vector<int>& coords) const {
    auto it = impl_->index.find(coords);
    if (it == impl_->index.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t i, std::size_t j) const {
    if (!impl_->sum_table.empty()) {
        const int s = impl_->sum_table[i * num_roots() + j];
        if (s < 0) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(s);
    }
    return lookup_sum(impl_->positive, impl_->index, i, j);
}

RootSystem build_root_system(const CartanSpec& spec, std::size_t budget) {
    const std::size_t r = spec.rank();
    if (!is_connected(spec.matrix())) {
        throw Error(ErrorKind::NonCartanMatrix, "matrix is decomposable; pass each simple factor separately");
    }
    std::vector<Root> positive;
    std::map<std::vector<int>, std::size_t> positive_set;

    const auto add = [&](std::vector<int> c) {
        if (positive.size() >= budget) {
            throw Error(ErrorKind::ClosureBudgetExceeded,
                        "more than " + std::to_string(budget) + " positive roots; matrix is not of finite type");
        }
        positive_set.emplace(c, positive.size());
        positive.emplace_back(std::move(c));
    };

    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        add(std::move(e));
    }

    // Layer by height: every positive root of height h+1 is a + b_i for some
    // root a of height h.
    std::size_t layer_begin = 0;
    std::size_t layer_end = positive.size();
    while (layer_begin < layer_end) {
        for (std::size_t k = layer_begin; k < layer_end; ++k) {
            for (std::size_t i = 0; i < r; ++i) {
                const std::vector<int> a = positive[k].coords;
                if (positive[k].height() == 1 && a[i] == 1) {
                    continue;  // 2 b_i is never a root
                }
                // p: how far the b_i-string extends below a.
                int p = 0;
                std::vector<int> down = a;
                while (true) {
                    --down[i];
                    if (down[i] < 0 || !positive_set.contains(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (std::size_t j = 0; j < r; ++j) {
                    pairing += spec(i, j) * a[j];
                }
                if (p - pairing <= 0) {
                    continue;
                }
                std::vector<int> up = a;
                ++up[i];
                if (!positive_set.contains(up)) {
                    add(std::move(up));
                }
            }
        }
        layer_begin = layer_end;
        layer_end = positive.size();
    }

    std::sort(positive.begin(), positive.end());

    auto impl = std::make_shared<RootSystem::Impl>(RootSystem::Impl{spec, {}, {}, {}, {}});
    const std::size_t n = positive.size();
    for (std::size_t k = 0; k < n; ++k) {
        impl->index.emplace(positive[k].coords, k);
        impl->index.emplace((-positive[k]).coords, k + n);
    }
    // Highest root: the unique root with no simple root above it.
    for (const auto& a : positive) {
        bool top = true;
        for (std::size_t i = 0; i < r && top; ++i) {
            std::vector<int> up = a.coords;
            ++up[i];
            top = !impl->index.contains(up);
        }
        if (top) {
            impl->highest = a;
        }
    }
    if (2 * n <= kMaxTabulatedRoots) {
        impl->sum_table.assign(4 * n * n, -1);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (auto s = lookup_sum(positive, impl->index, i, j)) {
                    impl->sum_table[i * 2 * n + j] = static_cast<int>(*s);
                }
            }
        }
    }
    impl->positive = std::move(positive);
    return RootSystem(std::move(impl));
}

bool is_root(const RootSystem& rs, const std::vector<int>& v) {
    if (v.size() != rs.rank()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector has length " + std::to_string(v.size()) + ", rank is " + std::to_string(rs.rank()));
    }
    return rs.index_of(v).has_value();
}

RootSum root_sum(const RootSystem& rs, const Root& a, const Root& b) {
    if (!is_root(rs, a.coords) || !is_root(rs, b.coords)) {
        throw Error(ErrorKind::InvalidInput, "root_sum arguments must be roots");
    }
    Root s = a + b;
    if (std::ranges::all_of(s.coords, [](int c) { return c == 0; })) {
        return CartanMarker{};
    }
    if (rs.index_of(s.coords)) {
        return s;
    }
    return std::monostate{};
}

}  // namespace hodge
