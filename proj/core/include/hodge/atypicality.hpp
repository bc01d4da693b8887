#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hodge {

using Dim = std::int64_t;

/// Tangent-level dimension data for D, D_H, P and P_H at one point.
/// Keys of the degree maps are p >= 1, standing for g^{-p} and h^{-p}.
struct CodimInput {
    std::map<int, Dim> dim_g_minus;
    std::map<int, Dim> dim_h_minus;
    Dim dim_T0P = 0;   // tangent space to the period image
    Dim dim_T0PH = 0;  // tangent space to its intersection with D_H
};

Dim total_g_minus(const CodimInput& in);
Dim total_h_minus(const CodimInput& in);

/// Throws Error(InconsistentDims) unless 0 <= h_p <= g_p for every p,
/// dim_T0P <= dim g^-, and 0 <= dim_T0PH <= min(dim_T0P, dim h^-).
/// Since T0P_H is the intersection of T0P with h^-, also
/// dim_T0PH >= dim_T0P + dim h^- - dim g^-; this is what keeps the
/// actual codimension at or below the expected one.
void validate(const CodimInput& in);

/// Additionally requires horizontality: T0P lies in g^{-1}, T0P_H lies in
/// h^{-1} and is the intersection of T0P with h^-, so
///   max(0, dim_T0P + h_1 - g_1) <= dim_T0PH <= min(dim_T0P, h_1).
void validate_horizontal(const CodimInput& in);

/// codim_D P + codim_D D_H.
Dim expected_codim(const CodimInput& in);

/// codim_D P_H.
Dim actual_codim(const CodimInput& in);

struct AtypicalityVerdict {
    bool atypical = false;
    Dim expected = 0;
    Dim actual = 0;
};

/// Atypical iff the actual codimension is strictly below the expected one.
AtypicalityVerdict is_atypical(const CodimInput& in);

/// What the typicality equality forces degree by degree. Under equality
///   sum_{p>=2} h_p + codim_{h^-1} T0P_H = sum_{p>=2} g_p + codim_{g^-1} T0P,
/// and both h_p <= g_p and codim_{h^-1} T0P_H <= codim_{g^-1} T0P, so every
/// h_p with p >= 2 must equal g_p.
struct ForcingReport {
    bool vacuous = false;            // g^- lives in degree one only
    std::vector<int> forced_degrees; // every p >= 2 in the support of g^-
    std::map<int, Dim> deficits;     // g_p - h_p > 0 for p >= 2
    Dim lhs = 0;                     // sum_{p>=2} h_p + codim_{h^-1} T0P_H
    Dim rhs = 0;                     // sum_{p>=2} g_p + codim_{g^-1} T0P
    bool equality_holds = false;     // lhs == rhs for this particular input
    /// A deficit in some degree >= 2 rules out equality for every admissible
    /// tangent data: the input is certifiably atypical.
    bool violates_forcing() const noexcept { return !deficits.empty(); }
};

/// Throws Error(InconsistentDims) when validate_horizontal fails.
ForcingReport forcing_check(const CodimInput& in);

/// Hodge numbers h^{w,0}, h^{w-1,1}, ..., h^{0,w} of the fibre.
struct NLInput {
    std::vector<Dim> hodge_numbers;
    Dim dim_sigma = 0;
    int weight = 0;
    std::optional<int> degree_d;
};

struct BoundsReport {
    int weight = 0;
    Dim naive_upper = 0;                // h^{2,0} (weight 2) or h^{3,1} (weight 4)
    std::optional<Dim> coarse_upper;    // h^{4,0} + h^{3,1}, weight 4 only
    Dim refined_upper = 0;              // naive minus dim sigma(lambda)
    std::optional<Dim> lower;           // d - 3 for surfaces of degree d >= 4
};

/// Upper and lower bounds on the codimension of a Noether-Lefschetz locus.
/// Throws Error(UnsupportedWeight), Error(MissingHodgeNumber) or
/// Error(InconsistentDims).
BoundsReport nl_bounds(const NLInput& in);

/// expected - actual. Throws Error(NegativeCorrection) if actual > expected.
Dim correction_term(Dim expected, Dim actual);

CodimInput codim_input_from_json(const nlohmann::json& j);
NLInput nl_input_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AtypicalityVerdict& v);
nlohmann::json to_json(const ForcingReport& r);
nlohmann::json to_json(const BoundsReport& r);

}  // namespace hodge
