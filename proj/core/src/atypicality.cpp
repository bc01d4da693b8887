#include "hodge/atypicality.hpp"

#include "hodge/error.hpp"

#include <algorithm>
#include <string>

namespace hodge {

namespace {

Dim at(const std::map<int, Dim>& m, int p) {
    auto it = m.find(p);
    return it == m.end() ? 0 : it->second;
}

Error inconsistent(const std::string& what) {
    return Error(ErrorKind::InconsistentDims, what);
}

std::map<int, Dim> degree_map_from_json(const nlohmann::json& j, const char* field) {
    if (!j.contains(field)) {
        throw Error(ErrorKind::InvalidInput, std::string("missing field '") + field + "'");
    }
    std::map<int, Dim> out;
    const auto& v = j.at(field);
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            std::size_t used = 0;
            int p = 0;
            try {
                p = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || !value.is_number_integer()) {
                throw Error(ErrorKind::InvalidInput, std::string("bad entry in '") + field + "'");
            }
            out[p] = value.get<Dim>();
        }
    } else if (v.is_array()) {
        // Array form: element i is the dimension in degree i + 1.
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number_integer()) {
                throw Error(ErrorKind::InvalidInput, std::string("bad entry in '") + field + "'");
            }
            out[static_cast<int>(i) + 1] = v[i].get<Dim>();
        }
    } else {
        throw Error(ErrorKind::InvalidInput, std::string("'") + field + "' must be an object or array");
    }
    return out;
}

Dim integer_field(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_number_integer()) {
        throw Error(ErrorKind::InvalidInput, std::string("field '") + field + "' must be an integer");
    }
    return j.at(field).get<Dim>();
}

}  // namespace

Dim total_g_minus(const CodimInput& in) {
    Dim t = 0;
    for (const auto& [p, d] : in.dim_g_minus) t += d;
    return t;
}

Dim total_h_minus(const CodimInput& in) {
    Dim t = 0;
    for (const auto& [p, d] : in.dim_h_minus) t += d;
    return t;
}

void validate(const CodimInput& in) {
    for (const auto& [p, g] : in.dim_g_minus) {
        if (p < 1) throw inconsistent("degree keys must be >= 1");
        if (g < 0) throw inconsistent("dim g^-" + std::to_string(p) + " is negative");
    }
    for (const auto& [p, h] : in.dim_h_minus) {
        if (p < 1) throw inconsistent("degree keys must be >= 1");
        if (h < 0) throw inconsistent("dim h^-" + std::to_string(p) + " is negative");
        if (h > at(in.dim_g_minus, p)) {
            throw inconsistent("dim h^-" + std::to_string(p) + " exceeds dim g^-" + std::to_string(p));
        }
    }
    if (in.dim_T0P < 0 || in.dim_T0P > total_g_minus(in)) {
        throw inconsistent("dim T0P must lie in [0, dim g^-]");
    }
    if (in.dim_T0PH < 0 || in.dim_T0PH > std::min(in.dim_T0P, total_h_minus(in))) {
        throw inconsistent("dim T0P_H must lie in [0, min(dim T0P, dim h^-)]");
    }
    // T0P_H is T0P intersected with h^- inside g^-.
    if (in.dim_T0PH < in.dim_T0P + total_h_minus(in) - total_g_minus(in)) {
        throw inconsistent("dim T0P_H is below dim T0P + dim h^- - dim g^-");
    }
}

void validate_horizontal(const CodimInput& in) {
    validate(in);
    const Dim g1 = at(in.dim_g_minus, 1);
    const Dim h1 = at(in.dim_h_minus, 1);
    if (in.dim_T0P > g1) {
        throw inconsistent("T0P must lie in g^-1");
    }
    if (in.dim_T0PH > h1) {
        throw inconsistent("T0P_H must lie in h^-1");
    }
    if (in.dim_T0PH < in.dim_T0P + h1 - g1) {
        throw inconsistent("dim T0P_H is below dim(T0P intersect h^-1) >= dim T0P + h_1 - g_1");
    }
}

Dim expected_codim(const CodimInput& in) {
    validate(in);
    const Dim g = total_g_minus(in);
    return (g - in.dim_T0P) + (g - total_h_minus(in));
}

Dim actual_codim(const CodimInput& in) {
    validate(in);
    return total_g_minus(in) - in.dim_T0PH;
}

AtypicalityVerdict is_atypical(const CodimInput& in) {
    AtypicalityVerdict v;
    v.expected = expected_codim(in);
    v.actual = actual_codim(in);
    v.atypical = v.actual < v.expected;
    return v;
}

ForcingReport forcing_check(const CodimInput& in) {
    validate_horizontal(in);
    ForcingReport r;
    Dim g_high = 0;
    Dim h_high = 0;
    for (const auto& [p, g] : in.dim_g_minus) {
        if (p < 2 || g == 0) continue;
        r.forced_degrees.push_back(p);
        const Dim h = at(in.dim_h_minus, p);
        g_high += g;
        h_high += h;
        if (h < g) {
            r.deficits[p] = g - h;
        }
    }
    r.vacuous = r.forced_degrees.empty();
    r.lhs = h_high + (at(in.dim_h_minus, 1) - in.dim_T0PH);
    r.rhs = g_high + (at(in.dim_g_minus, 1) - in.dim_T0P);
    r.equality_holds = r.lhs == r.rhs;
    return r;
}

BoundsReport nl_bounds(const NLInput& in) {
    if (in.weight != 2 && in.weight != 4) {
        throw Error(ErrorKind::UnsupportedWeight, "weight " + std::to_string(in.weight) + " (expected 2 or 4)");
    }
    for (Dim h : in.hodge_numbers) {
        if (h < 0) throw inconsistent("negative Hodge number");
    }
    if (in.dim_sigma < 0) {
        throw inconsistent("negative dim sigma");
    }
    BoundsReport r;
    r.weight = in.weight;
    if (in.weight == 2) {
        if (in.hodge_numbers.empty()) {
            throw Error(ErrorKind::MissingHodgeNumber, "weight 2 needs h^{2,0}");
        }
        if (in.dim_sigma != 0) {
            throw inconsistent("the sigma(lambda) correction is defined for weight 4 only");
        }
        r.naive_upper = in.hodge_numbers[0];
        r.refined_upper = r.naive_upper;
        if (in.degree_d && *in.degree_d >= 4) {
            r.lower = *in.degree_d - 3;
        }
    } else {
        if (in.hodge_numbers.size() < 2) {
            throw Error(ErrorKind::MissingHodgeNumber, "weight 4 needs h^{4,0} and h^{3,1}");
        }
        const Dim h40 = in.hodge_numbers[0];
        const Dim h31 = in.hodge_numbers[1];
        if (in.dim_sigma > h31) {
            throw inconsistent("dim sigma exceeds h^{3,1}");
        }
        r.naive_upper = h31;
        r.coarse_upper = h40 + h31;
        r.refined_upper = h31 - in.dim_sigma;
    }
    return r;
}

Dim correction_term(Dim expected, Dim actual) {
    if (actual > expected) {
        throw Error(ErrorKind::NegativeCorrection,
                    "actual " + std::to_string(actual) + " exceeds expected " + std::to_string(expected));
    }
    return expected - actual;
}

CodimInput codim_input_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw Error(ErrorKind::InvalidInput, "codimension input must be a JSON object");
    }
    CodimInput in;
    in.dim_g_minus = degree_map_from_json(j, "dim_g_minus");
    in.dim_h_minus = degree_map_from_json(j, "dim_h_minus");
    in.dim_T0P = integer_field(j, "dim_T0P");
    in.dim_T0PH = integer_field(j, "dim_T0PH");
    return in;
}

NLInput nl_input_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw Error(ErrorKind::InvalidInput, "Noether-Lefschetz input must be a JSON object");
    }
    NLInput in;
    if (!j.contains("hodge_numbers") || !j.at("hodge_numbers").is_array()) {
        throw Error(ErrorKind::InvalidInput, "field 'hodge_numbers' must be an array");
    }
    for (const auto& h : j.at("hodge_numbers")) {
        if (!h.is_number_integer()) {
            throw Error(ErrorKind::InvalidInput, "Hodge numbers must be integers");
        }
        in.hodge_numbers.push_back(h.get<Dim>());
    }
    in.weight = static_cast<int>(integer_field(j, "weight"));
    in.dim_sigma = j.contains("dim_sigma") ? integer_field(j, "dim_sigma") : 0;
    if (j.contains("degree_d") && !j.at("degree_d").is_null()) {
        in.degree_d = static_cast<int>(integer_field(j, "degree_d"));
    }
    return in;
}

nlohmann::json to_json(const AtypicalityVerdict& v) {
    return {{"atypical", v.atypical}, {"expected_codim", v.expected}, {"actual_codim", v.actual},
            {"correction", v.expected - v.actual}};
}

nlohmann::json to_json(const ForcingReport& r) {
    nlohmann::json deficits = nlohmann::json::object();
    for (const auto& [p, d] : r.deficits) {
        deficits[std::to_string(p)] = d;
    }
    return {{"vacuous", r.vacuous},
            {"forced_degrees", r.forced_degrees},
            {"deficits", std::move(deficits)},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"equality_holds", r.equality_holds},
            {"violates_forcing", r.violates_forcing()}};
}

nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json out{{"weight", r.weight}, {"naive_upper", r.naive_upper}, {"refined_upper", r.refined_upper}};
    out["coarse_upper"] = r.coarse_upper ? nlohmann::json(*r.coarse_upper) : nlohmann::json();
    out["lower"] = r.lower ? nlohmann::json(*r.lower) : nlohmann::json();
    return out;
}

}  // namespace hodge
