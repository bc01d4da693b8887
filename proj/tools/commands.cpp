#include "commands.hpp"

#include <hodge/atypicality.hpp>
#include <hodge/error.hpp>
#include <hodge/grading.hpp>
#include <hodge/jacobian.hpp>
#include <hodge/verification.hpp>

#include <sstream>

namespace hodge::cli {

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

template <typename T>
std::string tuple_text(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::string type_label(const CartanSpec& spec) {
    return spec.is_named() ? spec.name() : "custom";
}

const char* yes_no(bool b) {
    return b ? "yes" : "no";
}

std::string verdict_text(const VerdictReport& r) {
    std::ostringstream os;
    os << r.check << ":\n";
    for (const auto& h : r.hypotheses) {
        os << "  hypothesis " << h.name << ": " << to_string(h.status) << '\n';
    }
    os << "  conclusion: " << to_string(r.conclusion) << '\n';
    os << "  verdict: " << to_string(r.verdict());
    if (auto failed = r.failed_hypothesis()) {
        os << " (" << *failed << ')';
    }
    os << '\n';
    return os.str();
}

JacobianRing make_ring(const HypersurfaceOptions& opts) {
    if (opts.polynomial) {
        return JacobianRing(HypersurfaceSpec::explicit_form(opts.n, opts.d, terms_from_json(*opts.polynomial)));
    }
    return JacobianRing(HypersurfaceSpec::fermat(opts.n, opts.d));
}

}  // namespace

CartanSpec parse_cartan(const std::string& type, const std::optional<std::string>& matrix_json) {
    if (!matrix_json) {
        return CartanSpec::named(type);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(*matrix_json);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("matrix is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw Error(ErrorKind::InvalidInput, "matrix must be a 2-D integer array");
    }
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw Error(ErrorKind::InvalidInput, "matrix must be a 2-D integer array");
        }
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) {
                throw Error(ErrorKind::InvalidInput, "matrix entries must be integers");
            }
            r.push_back(x.get<int>());
        }
        m.push_back(std::move(r));
    }
    return CartanSpec::custom(std::move(m));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        try {
            return nlohmann::json::parse(s).get<std::vector<int>>();
        } catch (const nlohmann::json::exception&) {
            throw Error(ErrorKind::InvalidInput, "grading element must be an integer list: '" + text + "'");
        }
    }
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error(ErrorKind::InvalidInput, "grading element must be an integer list: '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw Error(ErrorKind::InvalidInput, "empty grading element");
    }
    return out;
}

Report cmd_roots(const CartanSpec& spec, const RunConfig& config) {
    const RootSystem rs = build_root_system(spec, config.budget);
    Report r;
    nlohmann::json positive = nlohmann::json::array();
    for (const auto& root : rs.positive_roots()) {
        positive.push_back(root.coords);
    }
    r.json = {{"command", "roots"},
              {"type", type_label(spec)},
              {"rank", rs.rank()},
              {"cartan", spec.matrix()},
              {"positive_root_count", rs.num_positive()},
              {"root_count", rs.num_roots()},
              {"dimension", rs.num_roots() + rs.rank()},
              {"highest_root", rs.highest().coords},
              {"positive_roots", std::move(positive)}};
    std::ostringstream os;
    os << "type: " << type_label(spec) << '\n'
       << "rank: " << rs.rank() << '\n'
       << "positive roots: " << rs.num_positive() << '\n'
       << "roots: " << rs.num_roots() << '\n'
       << "dim g: " << rs.num_roots() + rs.rank() << '\n'
       << "highest root: " << to_string(rs.highest()) << '\n';
    r.text = os.str();
    return r;
}

Report cmd_grade(const CartanSpec& spec, const std::vector<int>& e, const RunConfig& config) {
    const RootSystem rs = build_root_system(spec, config.budget);
    const GradedDecomposition dec = grade(rs, GradingElement{e});
    const int lvl = level(dec);
    Report r;
    nlohmann::json degrees = nlohmann::json::array();
    std::ostringstream os;
    os << "type: " << type_label(spec) << '\n'
       << "grading element: " << tuple_text(e) << '\n'
       << "level (highest root paired with E): " << lvl << '\n'
       << "max nonempty degree: " << dec.max_nonempty_degree() << '\n'
       << "classical (level <= 2): " << yes_no(is_classical(dec)) << '\n'
       << "g^1 generates g^+ (E-values in {0,1}): " << yes_no(generates_criterion(dec)) << '\n'
       << "g^1 generates g^+ (closure oracle): " << yes_no(generates_oracle(dec)) << '\n'
       << "degree dimensions:\n";
    for (int k = lvl; k >= -lvl; --k) {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& root : dec.roots_of_degree(k)) {
            roots.push_back(root.coords);
        }
        degrees.push_back({{"degree", k}, {"dim", dec.dim(k)}, {"roots", std::move(roots)}});
        os << "  dim g^" << k << " = " << dec.dim(k) << '\n';
    }
    r.json = {{"command", "grade"},
              {"type", type_label(spec)},
              {"grading_element", e},
              {"level", lvl},
              {"max_nonempty_degree", dec.max_nonempty_degree()},
              {"classical", is_classical(dec)},
              {"generates_criterion", generates_criterion(dec)},
              {"generates_oracle", generates_oracle(dec)},
              {"degrees", std::move(degrees)}};
    r.text = os.str();
    return r;
}

Report cmd_lemmas(const CartanSpec& spec, const std::vector<int>& e, const RunConfig& config) {
    const RootSystem rs = build_root_system(spec, config.budget);
    const GradingElement element{e};
    const GradedDecomposition dec = grade(rs, element);
    Report r;
    std::ostringstream os;
    os << "type: " << type_label(spec) << "  E = " << tuple_text(e) << "  level = " << level(dec) << "\n\n";

    const VerdictReport recovery = verify_degree_one_recovery(rs, element);
    os << verdict_text(recovery);

    nlohmann::json witness_json;
    if (generates_criterion(dec) && level(dec) >= 3) {
        if (auto w = find_degree_three_witness(rs, element)) {
            witness_json = {(*w)[0].coords, (*w)[1].coords, (*w)[2].coords};
            os << "degree_three_witness: " << to_string((*w)[0]) << " + " << to_string((*w)[1]) << " + "
               << to_string((*w)[2]) << " = " << to_string((*w)[0] + (*w)[1] + (*w)[2]) << '\n';
        } else {
            os << "degree_three_witness: none found\n";
        }
    } else {
        os << "degree_three_witness: hypotheses not met\n";
    }

    const auto seeds = roots_with_abs_degree_at_least(dec, 2);
    const SubalgebraRootSet h = subalgebra_closure_indices(rs, seeds);
    const VerdictReport positive = verify_positive_part_recovery(rs, element, h);
    os << verdict_text(positive);

    const bool failed = recovery.verdict() == Status::Fails || positive.verdict() == Status::Fails ||
                        (generates_criterion(dec) && level(dec) >= 3 && witness_json.is_null());
    r.json = {{"command", "lemmas"},
              {"type", type_label(spec)},
              {"grading_element", e},
              {"level", level(dec)},
              {"degree_one_recovery", to_json(recovery)},
              {"degree_three_witness", witness_json},
              {"positive_part_recovery", to_json(positive)}};
    r.text = os.str();
    r.exit_code = failed ? kVerdictFails : kSuccess;
    return r;
}

Report cmd_verify(const RunConfig& config) {
    GridConfig grid;
    grid.types = config.types;
    grid.max_rank = config.max_rank;
    grid.max_entry = config.max_entry;
    grid.budget = config.budget;
    const GridSummary s = run_grading_grid(grid);
    Report r;
    r.json = to_json(s);
    r.json["command"] = "verify";
    r.json["max_rank"] = config.max_rank;
    r.json["max_e"] = config.max_entry;
    r.json["types"] = config.types;
    std::ostringstream os;
    os << "grid: types " << config.types << ", rank <= " << config.max_rank << ", E entries <= "
       << config.max_entry << '\n'
       << "types checked: " << s.per_type.size() << '\n'
       << "grid points: " << s.points << '\n'
       << "generation criterion vs closure oracle disagreements: " << s.criterion_oracle_disagreements << '\n'
       << "level vs max nonempty degree disagreements: " << s.level_disagreements << '\n'
       << "classical test disagreements: " << s.classical_disagreements << '\n'
       << "bracket grading violations: " << s.bracket_violations << '\n'
       << "points with level >= 3 and criterion true: " << s.lemma_cases << '\n';
    if (s.lemma_cases == 0) {
        os << "no grid point reaches level 3; the level-3 checks are vacuous\n";
    } else {
        os << "degree-one recovery holds: " << s.degree_one_recovery_holds << '/' << s.lemma_cases << '\n'
           << "degree-three witness found: " << s.witness_found << '/' << s.lemma_cases << " ("
           << s.simple_witness_found << " from simple roots)\n"
           << "positive-part recovery holds: " << s.positive_part_recovery_holds << '/' << s.lemma_cases << '\n';
    }
    for (const auto& c : s.counterexamples) {
        os << "counterexample: " << c << '\n';
    }
    if (s.all_hold()) {
        os << "all verdicts hold; 0 counterexamples\n";
    } else {
        os << s.counterexample_count() << " counterexamples\n";
    }
    r.text = os.str();
    r.exit_code = s.all_hold() ? kSuccess : kVerdictFails;
    return r;
}

Report cmd_hypersurface(const HypersurfaceOptions& opts) {
    const JacobianRing jr = make_ring(opts);
    const int n = opts.n;
    const int d = opts.d;
    Report r;
    std::ostringstream os;
    os << "hypersurface: n = " << n << ", d = " << d << " (" << (jr.spec().is_fermat() ? "Fermat" : "explicit F")
       << ")\n"
       << "socle degree: " << jr.socle() << '\n';

    // Hodge numbers come from the elimination; the closed form is cross-checked.
    std::vector<std::uint64_t> hodge;
    nlohmann::json pieces = nlohmann::json::array();
    for (int p = n; p >= 0; --p) {
        const auto e = residue_degree(n, d, p);
        const std::uint64_t h = e ? jr.dim(*e) : 0;
        hodge.push_back(h);
        pieces.push_back({{"p", p},
                          {"q", n - p},
                          {"residue_degree", e ? nlohmann::json(*e) : nlohmann::json()},
                          {"alternative_degree", displayed_residue_degree(n, d, p)},
                          {"dim", h}});
    }
    const auto closed_form = hodge_numbers_prim(n, d);
    os << "primitive Hodge numbers h^{p,n-p}, p = n..0: " << tuple_text(hodge) << '\n';
    for (const auto& piece : pieces) {
        os << "  h^{" << piece["p"].get<int>() << ',' << piece["q"].get<int>() << "}_prim = dim R^"
           << (piece["residue_degree"].is_null() ? std::string("(negative)") : piece["residue_degree"].dump())
           << " = " << piece["dim"].get<std::uint64_t>() << "   [alternative exponent "
           << piece["alternative_degree"].get<int>() << "]\n";
    }

    const CouplingLength zeta = coupling_length_report(jr);
    os << "coupling length: " << zeta.length << (zeta.no_top_form ? " (no top form: h^{n,0} = 0)" : "") << '\n';

    const CertificateReport cert = certificate_report(jr, opts.k);
    os << "g^{-" << opts.k << ',' << opts.k << "} != 0 certified: " << yes_no(cert.nonvanishing);
    if (cert.p) {
        os << " (p = " << *cert.p << ", rank " << *cert.rank << ')';
    }
    os << '\n';

    const VerdictReport macaulay = macaulay_check(jr);
    os << "multiplication maps nonzero whenever both sides are nonzero: " << to_string(macaulay.verdict()) << '\n';

    r.json = {{"command", "hypersurface"},
              {"n", n},
              {"d", d},
              {"fermat", jr.spec().is_fermat()},
              {"socle_degree", jr.socle()},
              {"hodge_numbers_prim", hodge},
              {"hodge_numbers_closed_form", closed_form},
              {"pieces", std::move(pieces)},
              {"coupling_length", zeta.length},
              {"no_top_form", zeta.no_top_form},
              {"certificate",
               {{"k", cert.k},
                {"nonvanishing", cert.nonvanishing},
                {"p", cert.p ? nlohmann::json(*cert.p) : nlohmann::json()},
                {"rank", cert.rank ? nlohmann::json(*cert.rank) : nlohmann::json()},
                {"dimension_prediction", cert.dimension_prediction}}},
              {"macaulay", to_json(macaulay)}};
    r.text = os.str();
    r.exit_code = macaulay.verdict() == Status::Fails ? kVerdictFails : kSuccess;
    return r;
}

Report cmd_mult(const HypersurfaceOptions& opts, int a, bool include_entries) {
    const JacobianRing jr = make_ring(opts);
    const MultiplicationMap m = mult_map(jr, a);
    Report r;
    r.json = to_json(m, include_entries);
    r.json["command"] = "mult";
    r.json["n"] = opts.n;
    r.json["d"] = opts.d;
    std::ostringstream os;
    os << "R^" << m.left_degree << " x R^" << m.right_degree << " -> R^" << m.left_degree + m.right_degree << '\n'
       << "dimensions: " << m.left_dim << " x " << m.right_dim << " -> " << m.target_dim << '\n'
       << "rank: " << m.rank << '\n'
       << "nonzero: " << yes_no(m.is_nonzero()) << '\n'
       << "surjective: " << yes_no(m.is_surjective()) << '\n';
    r.text = os.str();
    return r;
}

Report cmd_piece(const HypersurfaceOptions& opts, int m) {
    const JacobianRing jr = make_ring(opts);
    const GradedPiece piece = graded_piece(jr, m);
    Report r;
    nlohmann::json basis = nlohmann::json::array();
    std::ostringstream os;
    os << "dim R^" << m << " = " << piece.dim() << "  (dim S^" << m << " - dim J^" << m << ")\n";
    if (m <= jr.socle()) {
        os << "closed form: " << hilbert_dim(opts.n, opts.d, m) << '\n';
    }
    for (const auto& e : piece.basis) {
        basis.push_back(e);
        os << "  x^" << tuple_text(e) << '\n';
    }
    r.json = {{"command", "piece"}, {"n", opts.n}, {"d", opts.d}, {"degree", m},
              {"dim", piece.dim()}, {"basis", std::move(basis)}};
    r.text = os.str();
    return r;
}

Report cmd_sigma(const HypersurfaceOptions& opts, const nlohmann::json& forms) {
    const JacobianRing jr = make_ring(opts);
    if (!forms.is_array()) {
        throw Error(ErrorKind::InvalidInput, "forms must be a JSON array of polynomials");
    }
    std::vector<Polynomial> polys;
    for (const auto& f : forms) {
        Polynomial p(jr.spec().nvars());
        for (const auto& t : terms_from_json(f)) {
            if (static_cast<int>(t.exponents.size()) != jr.spec().nvars()) {
                throw Error(ErrorKind::DimensionMismatch, "form has the wrong number of variables");
            }
            p.add_term(t.exponents, t.coeff);
        }
        polys.push_back(std::move(p));
    }
    const std::size_t rank = sigma_lambda_rank(jr, polys);
    Report r;
    r.json = {{"command", "sigma"}, {"n", opts.n}, {"d", opts.d}, {"forms", polys.size()}, {"dim_sigma", rank}};
    r.text = "dim sigma(lambda) = " + std::to_string(rank) + '\n';
    return r;
}

Report cmd_atypical(const nlohmann::json& input) {
    const CodimInput in = codim_input_from_json(input);
    const AtypicalityVerdict v = is_atypical(in);
    Report r;
    r.json = {{"command", "atypical"}, {"dim_g_minus_total", total_g_minus(in)},
              {"dim_h_minus_total", total_h_minus(in)}, {"verdict", to_json(v)}};
    std::ostringstream os;
    os << "dim g^- = " << total_g_minus(in) << ", dim h^- = " << total_h_minus(in) << '\n'
       << "expected codimension (codim P + codim D_H): " << v.expected << '\n'
       << "actual codimension (codim P_H): " << v.actual << '\n'
       << "correction term: " << v.expected - v.actual << '\n'
       << "verdict: " << (v.atypical ? "atypical" : "typical") << '\n';
    try {
        const ForcingReport f = forcing_check(in);
        r.json["forcing"] = to_json(f);
        if (f.vacuous) {
            os << "forcing: vacuous (g^- lives in degree one; classical case)\n";
        } else {
            os << "forcing: typicality forces h^-p = g^-p for p in " << tuple_text(f.forced_degrees) << '\n';
            for (const auto& [p, def] : f.deficits) {
                os << "  deficit in degree " << p << ": " << def << '\n';
            }
            os << "  balance " << f.lhs << (f.equality_holds ? " == " : " != ") << f.rhs << '\n';
            if (f.violates_forcing()) {
                os << "  typicality is impossible: certifiably atypical\n";
            }
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InconsistentDims) throw;
        r.json["forcing"] = nullptr;
        r.json["forcing_skipped"] = e.what();
        os << "forcing: skipped (" << e.what() << ")\n";
    }
    r.text = os.str();
    return r;
}

Report cmd_nl(const nlohmann::json& input) {
    const NLInput in = nl_input_from_json(input);
    const BoundsReport b = nl_bounds(in);
    Report r;
    r.json = to_json(b);
    r.json["command"] = "nl";
    r.json["dim_sigma"] = in.dim_sigma;
    std::ostringstream os;
    os << "weight: " << b.weight << '\n';
    if (b.weight == 2) {
        os << "upper bound codim NL <= h^{2,0}: " << b.naive_upper << '\n';
    } else {
        os << "coarse bound codim NL <= h^{4,0} + h^{3,1}: " << *b.coarse_upper << '\n'
           << "naive expected codimension h^{3,1}: " << b.naive_upper << '\n'
           << "refined bound h^{3,1} - dim sigma(lambda): " << b.refined_upper << '\n';
    }
    if (b.lower) {
        os << "lower bound d - 3: " << *b.lower << '\n';
    }
    r.text = os.str();
    return r;
}

Report cmd_correction(long expected, long actual) {
    const Dim c = correction_term(expected, actual);
    Report r;
    r.json = {{"command", "correction"}, {"expected", expected}, {"actual", actual}, {"correction", c}};
    r.text = "correction term: " + std::to_string(c) + '\n';
    return r;
}

int exit_code_for(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        if (err->kind() == ErrorKind::ClosureBudgetExceeded) {
            return kBudgetExceeded;
        }
    }
    return kInvalidInput;
}

}  // namespace hodge::cli
