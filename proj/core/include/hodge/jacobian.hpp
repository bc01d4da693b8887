#pragma once

#include "hodge/linalg.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/report.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace hodge {

struct Term {
    Exponent exponents;
    Rational coeff;
};

/// A degree-d hypersurface X in P^{n+1}, i.e. a form in n+2 variables.
class HypersurfaceSpec {
public:
    static HypersurfaceSpec fermat(int n, int d);
    /// Throws Error(InvalidInput) on malformed terms (wrong length, negative
    /// exponents, wrong total degree) or a zero polynomial.
    static HypersurfaceSpec explicit_form(int n, int d, std::vector<Term> terms);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    int nvars() const noexcept { return n_ + 2; }
    bool is_fermat() const noexcept { return fermat_; }
    const Polynomial& polynomial() const noexcept { return f_; }

private:
    HypersurfaceSpec(int n, int d, Polynomial f, bool fermat);

    int n_;
    int d_;
    Polynomial f_;
    bool fermat_;
};

/// Parses [{"exponents": [...], "coeff": "p/q"}, ...].
std::vector<Term> terms_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<Term>& terms);

/// Coefficient of t^m in ((1 - t^{d-1}) / (1 - t))^{n+2}.
std::uint64_t hilbert_dim(int n, int d, int m);

inline int socle_degree(int n, int d) { return (n + 2) * (d - 2); }

/// Degree of the graded piece of R modelling H^{p,n-p}_prim:
/// (n - p + 1) d - (n + 2), or nullopt when negative.
std::optional<int> residue_degree(int n, int d, int p);

/// The alternative exponent (n - p) d + n - 2, reported alongside
/// residue_degree for comparison only.
int displayed_residue_degree(int n, int d, int p);

/// h^{p,n-p}_prim for p = n, n-1, ..., 0 (h^{n,0} first).
std::vector<std::uint64_t> hodge_numbers_prim(int n, int d);

/// R^m with its basis of standard monomials.
struct GradedPiece {
    int degree = 0;
    std::vector<Exponent> basis;
    std::size_t dim() const noexcept { return basis.size(); }
};

/// Graded Jacobian ring R = S / J_F with per-degree caches.
///
/// Each degree is built once under a lock: the monomials of S^m in
/// descending lex order index the columns, J^m is spanned by x^a F_{x_i},
/// and fraction-free elimination leaves the non-pivot monomials as the basis
/// of R^m. Every degree up to the socle is checked against hilbert_dim;
/// a mismatch raises Error(SingularitySuspected). Degrees above the socle
/// are checked once, through degree socle + 1.
class JacobianRing {
public:
    explicit JacobianRing(HypersurfaceSpec spec);
    ~JacobianRing();
    JacobianRing(const JacobianRing&) = delete;
    JacobianRing& operator=(const JacobianRing&) = delete;

    const HypersurfaceSpec& spec() const noexcept { return spec_; }
    int n() const noexcept { return spec_.n(); }
    int d() const noexcept { return spec_.d(); }
    int socle() const noexcept { return socle_degree(spec_.n(), spec_.d()); }

    GradedPiece piece(int m) const;
    std::size_t dim(int m) const;
    /// dim J^m from the elimination.
    std::size_t jacobian_dim(int m) const;

    /// Coordinates in R^m of a degree-m form.
    SparseVector reduce(const Polynomial& f) const;
    /// Coordinates in R^{a+b} of the product of u in R^a and v in R^b.
    SparseVector multiply(int a, const SparseVector& u, int b, const SparseVector& v) const;
    /// Product of basis element i of R^a with basis element j of R^b.
    SparseVector multiply_basis(int a, std::size_t i, int b, std::size_t j) const;

private:
    struct Degree;
    const Degree& degree(int m) const;
    const Degree& build_degree(int m) const;

    HypersurfaceSpec spec_;
    std::vector<Polynomial> partials_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Degree>> cache_;
};

GradedPiece graded_piece(const JacobianRing& jr, int m);

/// Monomials of degree m with every exponent <= d - 2: the basis of R^m for
/// the Fermat form, computed without any elimination.
std::vector<Exponent> fermat_monomial_basis(int n, int d, int m);

/// Bilinear multiplication R^{left} x R^{right} -> R^{left+right}.
struct MultiplicationMap {
    int left_degree = 0;
    int right_degree = 0;
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    std::size_t target_dim = 0;
    struct Entry {
        std::size_t left;
        std::size_t right;
        std::size_t target;
        Rational value;
    };
    /// Nonzero entries; row (left, right), column target.
    std::vector<Entry> entries;
    std::size_t rank = 0;

    bool is_nonzero() const noexcept { return !entries.empty(); }
    bool is_surjective() const noexcept { return rank == target_dim; }
};

/// R^d x R^a -> R^{a+d}.
MultiplicationMap mult_map(const JacobianRing& jr, int a);

/// Every multiplication R^d x R^{e_p} -> R^{e_p + d} with both sides nonzero
/// is nonzero; each is exhibited by a nonzero matrix entry in the witness.
/// Throws Error(SingularitySuspected) before checking when F fails the
/// Hilbert-function test in a needed degree.
VerdictReport macaulay_check(const JacobianRing& jr);

/// Image of Sym^k R^d x R^e in R^{e + k d}, computed as k successive
/// multiplications; returns its dimension.
std::size_t iterated_image_rank(const JacobianRing& jr, int e, int k);

struct CouplingLength {
    int length = 0;
    std::optional<int> top_degree;  // e_0, residue degree of H^{n,0}
    bool no_top_form = false;
};

CouplingLength coupling_length_report(const JacobianRing& jr);
int coupling_length(const JacobianRing& jr);

struct CertificateReport {
    int k = 0;
    bool nonvanishing = false;
    std::optional<int> p;                // Hodge index that certifies it
    std::optional<std::size_t> rank;     // rank of the k-fold map at that p
    bool dimension_prediction = false;   // some p has both sides nonzero
};

/// Whether g^{-k,k} != 0 is certified by a nonzero k-fold multiplication.
CertificateReport certificate_report(const JacobianRing& jr, int k);
bool g_nonvanishing_certificate(const JacobianRing& jr, int k);

/// Multiplication action of R^d on the Hodge-graded pieces: for each p with
/// a nonzero source, one exact (sparse, column-major) matrix per basis
/// element theta of R^d, mapping R^{e_p} to R^{e_p + d}.
struct TangentImage {
    struct Block {
        int p = 0;
        int source_degree = 0;
        int target_degree = 0;
        std::size_t source_dim = 0;
        std::size_t target_dim = 0;
        /// by_theta[t][j]: image of source basis vector j under theta_t.
        std::vector<std::vector<SparseVector>> by_theta;
    };
    std::size_t theta_count = 0;
    std::vector<Block> blocks;  // ordered by decreasing p
};

TangentImage build_tangent_image(const JacobianRing& jr);

/// theta_1 theta_2 = theta_2 theta_1 on every pair of consecutive blocks, for
/// all pairs of basis elements of R^d.
bool abelian_check(const TangentImage& ti);

/// Rank of the image of span(forms) x R^{d-6} -> R^{2d-6} for a fourfold.
/// Throws Error(DimensionMismatch) unless n = 4 and every form is homogeneous
/// of degree d in 6 variables.
std::size_t sigma_lambda_rank(const JacobianRing& jr, const std::vector<Polynomial>& forms);

nlohmann::json to_json(const MultiplicationMap& m, bool include_entries);

}  // namespace hodge
