#include "hodge/jacobian.hpp"

#include "hodge/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hodge {

namespace {

Error invalid(const std::string& what) {
    return Error(ErrorKind::InvalidInput, what);
}

void check_nd(int n, int d) {
    if (n < 1) throw invalid("n must be >= 1");
    if (d < 2) throw invalid("d must be >= 2");
    if (n + 2 > kMaxVariables) throw invalid("at most " + std::to_string(kMaxVariables - 2) + " is supported for n");
}

nlohmann::json exponent_json(const Exponent& e) {
    return nlohmann::json(e);
}

void accumulate(std::map<std::size_t, Rational>& acc, const SparseVector& v, const Rational& scale) {
    for (const auto& [c, x] : v) {
        auto [slot, inserted] = acc.try_emplace(c, 0);
        slot->second += scale * x;
        if (sgn(slot->second) == 0) {
            acc.erase(slot);
        }
    }
}

SparseVector unit(std::size_t i) {
    return SparseVector{{i, Rational(1)}};
}

}  // namespace

HypersurfaceSpec::HypersurfaceSpec(int n, int d, Polynomial f, bool fermat)
    : n_(n), d_(d), f_(std::move(f)), fermat_(fermat) {}

HypersurfaceSpec HypersurfaceSpec::fermat(int n, int d) {
    check_nd(n, d);
    Polynomial f(n + 2);
    for (int i = 0; i < n + 2; ++i) {
        Exponent e(static_cast<std::size_t>(n + 2), 0);
        e[static_cast<std::size_t>(i)] = d;
        f.add_term(e, 1);
    }
    return HypersurfaceSpec(n, d, std::move(f), true);
}

HypersurfaceSpec HypersurfaceSpec::explicit_form(int n, int d, std::vector<Term> terms) {
    check_nd(n, d);
    Polynomial f(n + 2);
    for (const auto& t : terms) {
        if (static_cast<int>(t.exponents.size()) != n + 2) {
            throw invalid("exponent vector must have n + 2 = " + std::to_string(n + 2) + " entries");
        }
        if (std::ranges::any_of(t.exponents, [](int x) { return x < 0; })) {
            throw invalid("negative exponent");
        }
        if (std::accumulate(t.exponents.begin(), t.exponents.end(), 0) != d) {
            throw invalid("every term must have total degree d = " + std::to_string(d));
        }
        f.add_term(t.exponents, t.coeff);
    }
    if (f.is_zero()) {
        throw invalid("F is zero");
    }
    return HypersurfaceSpec(n, d, std::move(f), false);
}

std::vector<Term> terms_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw invalid("polynomial must be a JSON array of terms");
    }
    std::vector<Term> out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff") || !t.at("exponents").is_array()) {
            throw invalid("each term needs 'exponents' and 'coeff'");
        }
        Term term;
        for (const auto& x : t.at("exponents")) {
            if (!x.is_number_integer()) throw invalid("exponents must be integers");
            term.exponents.push_back(x.get<int>());
        }
        const auto& c = t.at("coeff");
        if (c.is_string()) {
            term.coeff = parse_rational(c.get<std::string>());
        } else if (c.is_number_integer()) {
            term.coeff = Rational(c.get<long>());
        } else {
            throw invalid("coeff must be a \"p/q\" string");
        }
        out.push_back(std::move(term));
    }
    return out;
}

nlohmann::json to_json(const std::vector<Term>& terms) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : terms) {
        out.push_back({{"exponents", t.exponents}, {"coeff", to_string(t.coeff)}});
    }
    return out;
}

std::uint64_t hilbert_dim(int n, int d, int m) {
    if (n < 1 || d < 2 || m < 0) {
        throw invalid("hilbert_dim needs n >= 1, d >= 2, m >= 0");
    }
    // Expand (1 + t + ... + t^{d-2})^{n+2}, truncated at t^m.
    std::vector<Integer> coeffs(static_cast<std::size_t>(m) + 1, 0);
    coeffs[0] = 1;
    for (int f = 0; f < n + 2; ++f) {
        std::vector<Integer> next(coeffs.size(), 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (sgn(coeffs[i]) == 0) continue;
            for (int j = 0; j <= d - 2 && i + static_cast<std::size_t>(j) < next.size(); ++j) {
                next[i + static_cast<std::size_t>(j)] += coeffs[i];
            }
        }
        coeffs = std::move(next);
    }
    const Integer& c = coeffs.back();
    if (!c.fits_ulong_p()) {
        throw invalid("Hilbert function value does not fit in 64 bits");
    }
    return c.get_ui();
}

std::optional<int> residue_degree(int n, int d, int p) {
    const int e = (n - p + 1) * d - (n + 2);
    if (e < 0) {
        return std::nullopt;
    }
    return e;
}

int displayed_residue_degree(int n, int d, int p) {
    return (n - p) * d + n - 2;
}

std::vector<std::uint64_t> hodge_numbers_prim(int n, int d) {
    check_nd(n, d);
    std::vector<std::uint64_t> out;
    for (int p = n; p >= 0; --p) {
        const auto e = residue_degree(n, d, p);
        out.push_back(e ? hilbert_dim(n, d, *e) : 0);
    }
    return out;
}

std::vector<Exponent> fermat_monomial_basis(int n, int d, int m) {
    check_nd(n, d);
    std::vector<Exponent> out;
    for (auto& e : enumerate_monomials(n + 2, m)) {
        if (std::ranges::all_of(e, [&](int x) { return x <= d - 2; })) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

struct JacobianRing::Degree {
    int m = 0;
    std::vector<Exponent> monomials;
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::size_t jacobian_rank = 0;
    std::vector<Exponent> basis;
    /// Normal form of each monomial column, in basis coordinates.
    std::vector<SparseVector> normal_form;
};

JacobianRing::JacobianRing(HypersurfaceSpec spec) : spec_(std::move(spec)) {
    for (int i = 0; i < spec_.nvars(); ++i) {
        partials_.push_back(spec_.polynomial().derivative(i));
    }
}

JacobianRing::~JacobianRing() = default;

const JacobianRing::Degree& JacobianRing::degree(int m) const {
    static const Degree kEmpty{};
    if (m < 0) {
        return kEmpty;
    }
    if (m > socle() + 1) {
        // R^{socle+1} = 0 forces every higher piece to vanish.
        degree(socle() + 1);
        return kEmpty;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(m); it != cache_.end()) {
        return *it->second;
    }
    return build_degree(m);
}

const JacobianRing::Degree& JacobianRing::build_degree(int m) const {
    auto deg = std::make_unique<Degree>();
    deg->m = m;
    deg->monomials = enumerate_monomials(spec_.nvars(), m);
    for (std::size_t c = 0; c < deg->monomials.size(); ++c) {
        deg->index.emplace(pack(deg->monomials[c]), c);
    }

    EchelonBasis span(deg->monomials.size());
    const int shift = m - (spec_.d() - 1);
    if (shift >= 0) {
        const auto multipliers = enumerate_monomials(spec_.nvars(), shift);
        for (const auto& partial : partials_) {
            for (const auto& a : multipliers) {
                SparseVector row;
                row.reserve(partial.terms().size());
                for (const auto& [e, c] : partial.terms()) {
                    Exponent s = e;
                    for (std::size_t i = 0; i < s.size(); ++i) s[i] += a[i];
                    row.emplace_back(deg->index.at(pack(s)), c);
                }
                std::ranges::sort(row, {}, &SparseVector::value_type::first);
                span.insert(row);
                if (span.is_full()) break;
            }
            if (span.is_full()) break;
        }
    }
    deg->jacobian_rank = span.rank();

    const std::uint64_t expected = m <= socle() ? hilbert_dim(spec_.n(), spec_.d(), m) : 0;
    const std::size_t actual = deg->monomials.size() - span.rank();
    if (actual != expected) {
        throw Error(ErrorKind::SingularitySuspected,
                    "dim R^" + std::to_string(m) + " = " + std::to_string(actual) + " but a smooth hypersurface has " +
                        std::to_string(expected) + "; F is probably singular");
    }

    std::vector<long> col_to_basis(deg->monomials.size(), -1);
    for (std::size_t c : span.non_pivots()) {
        col_to_basis[c] = static_cast<long>(deg->basis.size());
        deg->basis.push_back(deg->monomials[c]);
    }
    deg->normal_form.resize(deg->monomials.size());
    for (std::size_t c = 0; c < deg->monomials.size(); ++c) {
        if (col_to_basis[c] >= 0) {
            deg->normal_form[c] = unit(static_cast<std::size_t>(col_to_basis[c]));
            continue;
        }
        SparseVector nf = span.reduce(unit(c));
        for (auto& [col, x] : nf) {
            col = static_cast<std::size_t>(col_to_basis[col]);
        }
        deg->normal_form[c] = std::move(nf);
    }

    auto [it, inserted] = cache_.emplace(m, std::move(deg));
    return *it->second;
}

GradedPiece JacobianRing::piece(int m) const {
    const Degree& deg = degree(m);
    return GradedPiece{m, deg.basis};
}

std::size_t JacobianRing::dim(int m) const {
    return degree(m).basis.size();
}

std::size_t JacobianRing::jacobian_dim(int m) const {
    return degree(m).jacobian_rank;
}

SparseVector JacobianRing::reduce(const Polynomial& f) const {
    if (f.nvars() != spec_.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "form has the wrong number of variables");
    }
    if (f.is_zero()) {
        return {};
    }
    const int m = f.homogeneous_degree();
    if (m < 0) {
        throw Error(ErrorKind::DimensionMismatch, "form is not homogeneous");
    }
    const Degree& deg = degree(m);
    if (deg.basis.empty()) {
        return {};
    }
    std::map<std::size_t, Rational> acc;
    for (const auto& [e, c] : f.terms()) {
        accumulate(acc, deg.normal_form[deg.index.at(pack(e))], c);
    }
    return SparseVector(acc.begin(), acc.end());
}

SparseVector JacobianRing::multiply(int a, const SparseVector& u, int b, const SparseVector& v) const {
    const Degree& target = degree(a + b);
    if (target.basis.empty() || u.empty() || v.empty()) {
        return {};
    }
    const Degree& left = degree(a);
    const Degree& right = degree(b);
    std::map<std::size_t, Rational> acc;
    Exponent s(static_cast<std::size_t>(spec_.nvars()));
    for (const auto& [i, ui] : u) {
        const Exponent& ei = left.basis.at(i);
        for (const auto& [j, vj] : v) {
            const Exponent& ej = right.basis.at(j);
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = ei[k] + ej[k];
            accumulate(acc, target.normal_form[target.index.at(pack(s))], ui * vj);
        }
    }
    return SparseVector(acc.begin(), acc.end());
}

SparseVector JacobianRing::multiply_basis(int a, std::size_t i, int b, std::size_t j) const {
    return multiply(a, unit(i), b, unit(j));
}

GradedPiece graded_piece(const JacobianRing& jr, int m) {
    if (m < 0) {
        throw invalid("graded piece degree must be >= 0");
    }
    return jr.piece(m);
}

MultiplicationMap mult_map(const JacobianRing& jr, int a) {
    if (a < 0) {
        throw invalid("multiplication degree must be >= 0");
    }
    MultiplicationMap out;
    out.left_degree = jr.d();
    out.right_degree = a;
    out.left_dim = jr.dim(jr.d());
    out.right_dim = jr.dim(a);
    out.target_dim = jr.dim(a + jr.d());
    EchelonBasis image(out.target_dim);
    for (std::size_t i = 0; i < out.left_dim; ++i) {
        for (std::size_t j = 0; j < out.right_dim; ++j) {
            SparseVector w = jr.multiply_basis(jr.d(), i, a, j);
            for (const auto& [t, x] : w) {
                out.entries.push_back({i, j, t, x});
            }
            if (!image.is_full()) {
                image.insert(w);
            }
        }
    }
    out.rank = image.rank();
    return out;
}

VerdictReport macaulay_check(const JacobianRing& jr) {
    const int n = jr.n();
    const int d = jr.d();
    // Touch every needed degree first so a singular F is reported before any check.
    jr.dim(d);
    for (int p = n; p >= 1; --p) {
        if (auto e = residue_degree(n, d, p)) {
            jr.dim(*e);
            jr.dim(*e + d);
        }
    }

    VerdictReport report;
    report.check = "macaulay_nonvanishing";
    report.hypotheses = {{"Hilbert function of R matches a smooth hypersurface", Status::Holds}};
    nlohmann::json maps = nlohmann::json::array();
    nlohmann::json skipped = nlohmann::json::array();
    std::vector<int> failing;
    const GradedPiece theta = jr.piece(d);
    for (int p = n; p >= 1; --p) {
        const auto e = residue_degree(n, d, p);
        if (!e || jr.dim(*e) == 0 || jr.dim(*e + d) == 0 || theta.dim() == 0) {
            skipped.push_back(p);
            continue;
        }
        const GradedPiece source = jr.piece(*e);
        const GradedPiece target = jr.piece(*e + d);
        bool found = false;
        for (std::size_t i = 0; i < theta.dim() && !found; ++i) {
            for (std::size_t j = 0; j < source.dim() && !found; ++j) {
                const SparseVector w = jr.multiply_basis(d, i, *e, j);
                if (w.empty()) continue;
                found = true;
                maps.push_back({{"p", p},
                                {"source_degree", *e},
                                {"target_degree", *e + d},
                                {"theta", exponent_json(theta.basis[i])},
                                {"source_monomial", exponent_json(source.basis[j])},
                                {"target_monomial", exponent_json(target.basis[w.front().first])},
                                {"value", to_string(w.front().second)}});
            }
        }
        if (!found) {
            failing.push_back(p);
        }
    }
    report.conclusion = holds_if(failing.empty());
    report.witness = {{"nonzero_maps", std::move(maps)}, {"skipped_p", std::move(skipped)}, {"failing_p", failing}};
    return report;
}

namespace {

/// Ranks of the images of R^e under 1, 2, ..., k successive multiplications by R^d.
std::vector<std::size_t> image_chain(const JacobianRing& jr, int e, int k) {
    std::vector<std::size_t> ranks;
    const int d = jr.d();
    std::vector<SparseVector> current;
    for (std::size_t j = 0; j < jr.dim(e); ++j) {
        current.push_back(unit(j));
    }
    const std::size_t thetas = jr.dim(d);
    int deg = e;
    for (int step = 1; step <= k; ++step) {
        const std::size_t target_dim = current.empty() ? 0 : jr.dim(deg + d);
        EchelonBasis image(target_dim);
        for (const auto& v : current) {
            for (std::size_t t = 0; t < thetas && !image.is_full(); ++t) {
                image.insert(jr.multiply(d, unit(t), deg, v));
            }
            if (image.is_full()) break;
        }
        current = image.basis_vectors();
        deg += d;
        ranks.push_back(current.size());
    }
    return ranks;
}

}  // namespace

std::size_t iterated_image_rank(const JacobianRing& jr, int e, int k) {
    if (e < 0) {
        return 0;
    }
    if (k <= 0) {
        return jr.dim(e);
    }
    return image_chain(jr, e, k).back();
}

CouplingLength coupling_length_report(const JacobianRing& jr) {
    CouplingLength out;
    out.top_degree = residue_degree(jr.n(), jr.d(), jr.n());
    if (!out.top_degree || jr.dim(*out.top_degree) == 0) {
        out.no_top_form = true;
        return out;
    }
    const auto ranks = image_chain(jr, *out.top_degree, jr.n());
    for (std::size_t m = 0; m < ranks.size() && ranks[m] > 0; ++m) {
        out.length = static_cast<int>(m) + 1;
    }
    return out;
}

int coupling_length(const JacobianRing& jr) {
    return coupling_length_report(jr).length;
}

CertificateReport certificate_report(const JacobianRing& jr, int k) {
    if (k < 1) {
        throw invalid("k must be >= 1");
    }
    CertificateReport out;
    out.k = k;
    const int n = jr.n();
    const int d = jr.d();
    for (int p = n; p >= 0; --p) {
        const auto e = residue_degree(n, d, p);
        if (!e || jr.dim(*e) == 0 || jr.dim(*e + k * d) == 0) {
            continue;
        }
        out.dimension_prediction = true;
        if (out.nonvanishing) {
            continue;
        }
        const std::size_t rank = iterated_image_rank(jr, *e, k);
        if (rank > 0) {
            out.nonvanishing = true;
            out.p = p;
            out.rank = rank;
        }
    }
    return out;
}

bool g_nonvanishing_certificate(const JacobianRing& jr, int k) {
    return certificate_report(jr, k).nonvanishing;
}

TangentImage build_tangent_image(const JacobianRing& jr) {
    TangentImage ti;
    const int n = jr.n();
    const int d = jr.d();
    ti.theta_count = jr.dim(d);
    for (int p = n; p >= 1; --p) {
        const auto e = residue_degree(n, d, p);
        if (!e || jr.dim(*e) == 0) {
            continue;
        }
        TangentImage::Block block;
        block.p = p;
        block.source_degree = *e;
        block.target_degree = *e + d;
        block.source_dim = jr.dim(*e);
        block.target_dim = jr.dim(*e + d);
        block.by_theta.resize(ti.theta_count);
        for (std::size_t t = 0; t < ti.theta_count; ++t) {
            block.by_theta[t].reserve(block.source_dim);
            for (std::size_t j = 0; j < block.source_dim; ++j) {
                block.by_theta[t].push_back(jr.multiply_basis(d, t, *e, j));
            }
        }
        ti.blocks.push_back(std::move(block));
    }
    return ti;
}

namespace {

SparseVector apply(const TangentImage::Block& block, std::size_t theta, const SparseVector& v) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [j, x] : v) {
        accumulate(acc, block.by_theta[theta].at(j), x);
    }
    return SparseVector(acc.begin(), acc.end());
}

}  // namespace

bool abelian_check(const TangentImage& ti) {
    for (std::size_t b = 0; b + 1 < ti.blocks.size(); ++b) {
        const auto& first = ti.blocks[b];
        const auto& second = ti.blocks[b + 1];
        if (second.source_degree != first.target_degree) {
            continue;
        }
        for (std::size_t t1 = 0; t1 < ti.theta_count; ++t1) {
            for (std::size_t t2 = t1 + 1; t2 < ti.theta_count; ++t2) {
                for (std::size_t j = 0; j < first.source_dim; ++j) {
                    if (apply(second, t1, first.by_theta[t2][j]) != apply(second, t2, first.by_theta[t1][j])) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::size_t sigma_lambda_rank(const JacobianRing& jr, const std::vector<Polynomial>& forms) {
    if (jr.n() != 4) {
        throw Error(ErrorKind::DimensionMismatch, "sigma(lambda) is defined here for fourfolds (n = 4)");
    }
    const int d = jr.d();
    for (const auto& f : forms) {
        if (f.nvars() != jr.spec().nvars() || (!f.is_zero() && f.homogeneous_degree() != d)) {
            throw Error(ErrorKind::DimensionMismatch, "annihilator forms must be homogeneous of degree d in 6 variables");
        }
    }
    const auto top = residue_degree(4, d, 4);
    if (!top || jr.dim(*top) == 0) {
        return 0;
    }
    EchelonBasis image(jr.dim(*top + d));
    for (const auto& f : forms) {
        const SparseVector theta = jr.reduce(f);
        for (std::size_t j = 0; j < jr.dim(*top) && !image.is_full(); ++j) {
            image.insert(jr.multiply(d, theta, *top, unit(j)));
        }
    }
    return image.rank();
}

nlohmann::json to_json(const MultiplicationMap& m, bool include_entries) {
    nlohmann::json out{{"left_degree", m.left_degree}, {"right_degree", m.right_degree},
                       {"left_dim", m.left_dim},       {"right_dim", m.right_dim},
                       {"target_dim", m.target_dim},   {"rank", m.rank},
                       {"is_nonzero", m.is_nonzero()}, {"is_surjective", m.is_surjective()}};
    if (include_entries) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : m.entries) {
            entries.push_back({e.left, e.right, e.target, to_string(e.value)});
        }
        out["entries"] = std::move(entries);
    }
    return out;
}

}  // namespace hodge
