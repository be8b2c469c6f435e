#include <jetmoduli/cli.hpp>

#include <jetmoduli/json_io.hpp>
#include <jetmoduli/normal_coords.hpp>
#include <jetmoduli/poincare.hpp>
#include <jetmoduli/stabilizer.hpp>
#include <jetmoduli/verify.hpp>

#include <ostream>
#include <stdexcept>

namespace jetmoduli {

namespace {

constexpr const char* kRefDims = "Eq. (5); §5 dimension formulas";
constexpr const char* kRefSeries = "Eq. (16)";
constexpr const char* kRefClosedForm = "Eq. (20)";
constexpr const char* kRefStabilizer = "§4 Proposition";
constexpr const char* kRefWitness0 = "Eq. (9); Eq. (12)";
constexpr const char* kRefWitness1 = "Eq. (11); Eq. (13)";

// JSON-safe integers stay numeric; anything larger is emitted as a string.
Json json_int(const Int& v) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v > lo && v < hi) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_common(const CliConfig& c) {
    require(c.format == "text" || c.format == "json" || c.format == "csv",
            "format must be one of text, json, csv");
    require(c.n >= 1, "n must be >= 1");
    require(c.k >= 0, "k must be >= 0");
}

int run_dims(const CliConfig& c, std::ostream& out) {
    const Int f = dim_F(c.n, c.k);
    const Int orbit = orbit_dim_formula(c.n, c.k);
    const int stab = expected_stabilizer_dim(c.n, c.k);
    const Int moduli = dim_M(c.n, c.k);

    if (c.format == "json") {
        Json rec = Json::object();
        rec["record"] = "dims";
        rec["n"] = c.n;
        rec["k"] = c.k;
        rec["dim_F"] = json_int(f);
        rec["orbit_dim"] = json_int(orbit);
        rec["stabilizer_dim"] = stab;
        rec["dim_M"] = json_int(moduli);
        rec["paper_ref"] = kRefDims;
        out << rec.dump() << "\n";
    } else if (c.format == "csv") {
        out << "n,k,dim_F,orbit_dim,stabilizer_dim,dim_M\n";
        out << c.n << "," << c.k << "," << f << "," << orbit << "," << stab << "," << moduli << "\n";
    } else {
        out << "n=" << c.n << " k=" << c.k << ": dim F_k = " << f << "  dim O_k = " << orbit
            << "  stabilizer = " << stab << "  dim M_k = " << moduli << "\n";
    }
    return 0;
}

int run_series(const CliConfig& c, std::ostream& out) {
    require(c.terms >= 1, "terms must be >= 1");
    if (c.format == "json") {
        Json rec = Json::object();
        rec["record"] = "series";
        rec["n"] = c.n;
        rec["terms"] = c.terms;
        Json coeffs = Json::array();
        for (int k = 0; k < c.terms; ++k) coeffs.push_back(json_int(a_coeff(c.n, k)));
        rec["coefficients"] = std::move(coeffs);
        rec["paper_ref"] = kRefSeries;
        out << rec.dump() << "\n";
    } else if (c.format == "csv") {
        out << "k,a_k\n";
        for (int k = 0; k < c.terms; ++k) out << k << "," << a_coeff(c.n, k) << "\n";
    } else {
        out << "[";
        for (int k = 0; k < c.terms; ++k) out << (k ? ", " : "") << a_coeff(c.n, k);
        out << "]\n";
    }
    return 0;
}

std::string pole_term(const Rational& coeff, size_t j) {
    std::string s = coeff < Rational(0) ? " - " : " + ";
    s += abs(coeff).str() + "/(1-t)";
    if (j > 1) s += "^" + std::to_string(j);
    return s;
}

int run_closed_form(const CliConfig& c, std::ostream& out) {
    const RationalFunctionT f = closed_form(c.n);
    const auto numerator = combined_numerator(f);

    if (c.format == "json") {
        Json rec = Json::object();
        rec["record"] = "closed_form";
        rec["n"] = c.n;
        Json poly = Json::array(), poles = Json::array(), num = Json::array();
        for (const auto& v : f.polynomial_part) poly.push_back(json_int(to_int(v)));
        for (const auto& v : f.pole_part) poles.push_back(json_int(to_int(v)));
        for (const auto& v : numerator) num.push_back(json_int(to_int(v)));
        rec["polynomial_part"] = std::move(poly);
        rec["pole_part"] = std::move(poles);
        rec["numerator"] = std::move(num);
        rec["denominator_power"] = f.pole_part.size();
        rec["paper_ref"] = kRefClosedForm;
        out << rec.dump() << "\n";
        return 0;
    }
    if (c.format == "csv") {
        out << "kind,index,value\n";
        for (size_t d = 0; d < f.polynomial_part.size(); ++d)
            out << "polynomial," << d << "," << f.polynomial_part[d] << "\n";
        for (size_t j = 1; j <= f.pole_part.size(); ++j)
            out << "pole," << j << "," << f.pole_part[j - 1] << "\n";
        for (size_t d = 0; d < numerator.size(); ++d)
            out << "numerator," << d << "," << numerator[d] << "\n";
        return 0;
    }

    out << "p(t) =";
    bool any = false;
    for (size_t d = 0; d < f.polynomial_part.size(); ++d) {
        const auto& v = f.polynomial_part[d];
        if (v.is_zero()) continue;
        any = true;
        out << " " << (d == 0 ? v.str() : (v < Rational(0) ? "- " : "+ ") + abs(v).str());
        if (d == 1) out << " t";
        if (d > 1) out << " t^" << d;
    }
    for (size_t j = f.pole_part.size(); j >= 1; --j)
        if (!f.pole_part[j - 1].is_zero()) {
            any = true;
            out << pole_term(f.pole_part[j - 1], j);
        }
    if (!any) out << " 0";
    out << "\n";

    out << "     = (";
    if (numerator.empty()) out << "0";
    for (size_t d = 0; d < numerator.size(); ++d) {
        if (d == 0)
            out << numerator[d];
        else
            out << (numerator[d] < Rational(0) ? " - " : " + ") << abs(numerator[d]) << " t"
                << (d > 1 ? "^" + std::to_string(d) : "");
    }
    out << ") / (1-t)^" << f.pole_part.size() << "\n";
    return 0;
}

int run_stabilizer(const CliConfig& c, std::ostream& out) {
    require(c.seeds >= 1, "seeds must be >= 1");
    require(c.coeff_range >= 1, "coeff-range must be >= 1");
    if (c.format == "csv")
        out << "n,k,seed,empirical_stab_dim,expected_stab_dim,empirical_orbit_dim,formula_orbit_dim,agree\n";
    for (int s = 0; s < c.seeds; ++s) {
        const StabilizerReport rep = report(c.n, c.k, c.seed + static_cast<std::uint64_t>(s), c.coeff_range);
        if (c.format == "json") {
            Json rec = Json::object();
            rec["record"] = "stabilizer_report";
            rec["n"] = rep.n;
            rec["k"] = rep.k;
            rec["seed"] = rep.seed;
            rec["empirical_stab_dim"] = static_cast<std::int64_t>(rep.empirical_stab_dim);
            rec["expected_stab_dim"] = rep.expected_stab_dim;
            rec["empirical_orbit_dim"] = static_cast<std::int64_t>(rep.empirical_orbit_dim);
            rec["formula_orbit_dim"] = json_int(rep.formula_orbit_dim);
            rec["agree"] = rep.agree;
            rec["paper_ref"] = kRefStabilizer;
            out << rec.dump() << "\n";
        } else if (c.format == "csv") {
            out << rep.n << "," << rep.k << "," << rep.seed << "," << rep.empirical_stab_dim << ","
                << rep.expected_stab_dim << "," << rep.empirical_orbit_dim << ","
                << rep.formula_orbit_dim << "," << (rep.agree ? "true" : "false") << "\n";
        } else {
            out << "n=" << rep.n << " k=" << rep.k << " seed=" << rep.seed
                << ": stab dim = " << rep.empirical_stab_dim << " (expected " << rep.expected_stab_dim
                << "), orbit dim = " << rep.empirical_orbit_dim << " (formula "
                << rep.formula_orbit_dim << "), " << (rep.agree ? "agree" : "DISAGREE") << "\n";
        }
    }
    return 0;
}

int run_witness(const CliConfig& c, std::ostream& out) {
    require(c.k == 0 || c.k == 1, "witness order k must be 0 or 1");
    ConnectionJet jet = ConnectionJet(1, 0);
    QMatrix system;
    const char* ref = kRefWitness0;
    if (c.k == 0) {
        require(c.n >= 2, "the constant witness needs n >= 2");
        jet = witness_gamma(c.n);
        system = stabilizer_system_0jet(jet).matrix;
    } else {
        require(c.n == 2, "the first-order witness is specific to n = 2");
        jet = witness_n2_first_order();
        system = stabilizer_system_1jet(jet).matrix;
        ref = kRefWitness1;
    }
    const auto kernel = kernel_basis(system);

    if (c.format == "json") {
        Json rec = Json::object();
        rec["record"] = "witness";
        rec["n"] = c.n;
        rec["order"] = c.k;
        rec["jet"] = jet_to_json(jet);
        rec["system"] = matrix_to_json(system);
        rec["kernel_dim"] = kernel.size();
        rec["paper_ref"] = ref;
        out << rec.dump() << "\n";
    } else if (c.format == "csv") {
        out << "n,order,system_rows,system_cols,kernel_dim\n";
        out << c.n << "," << c.k << "," << system.rows() << "," << system.cols() << ","
            << kernel.size() << "\n";
    } else {
        out << "witness jet (n=" << c.n << ", order " << c.k << "):\n"
            << jet_to_json(jet).dump(2) << "\n"
            << "stabilizer system: " << system.rows() << "x" << system.cols()
            << ", kernel dimension " << kernel.size() << "\n";
    }
    return 0;
}

int run_verify(const CliConfig& c, std::ostream& out) {
    VerifyOptions opts;
    opts.deep = c.deep;
    opts.threads = c.threads;
    const auto results = run_acceptance_suite(opts);

    bool all_pass = true;
    int passed = 0;
    if (c.format == "csv") out << "id,name,pass,detail\n";
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        passed += r.pass ? 1 : 0;
        if (c.format == "json") {
            Json rec = Json::object();
            rec["record"] = "check";
            rec["id"] = r.id;
            rec["name"] = r.name;
            rec["pass"] = r.pass;
            rec["detail"] = r.detail;
            rec["paper_ref"] = r.paper_ref;
            out << rec.dump() << "\n";
        } else if (c.format == "csv") {
            std::string detail = r.detail;
            for (auto& ch : detail)
                if (ch == ',') ch = ';';
            out << r.id << "," << r.name << "," << (r.pass ? "true" : "false") << "," << detail << "\n";
        } else {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail
                << "\n";
        }
    }
    if (c.format == "text")
        out << (all_pass ? "verification passed" : "verification FAILED") << " (" << passed << "/"
            << results.size() << " checks)\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int cli_run(const CliConfig& config, std::ostream& out) {
    check_common(config);
    if (config.subcommand == "dims") return run_dims(config, out);
    if (config.subcommand == "series") return run_series(config, out);
    if (config.subcommand == "closed-form") return run_closed_form(config, out);
    if (config.subcommand == "stabilizer") return run_stabilizer(config, out);
    if (config.subcommand == "witness") return run_witness(config, out);
    if (config.subcommand == "verify") return run_verify(config, out);
    throw std::invalid_argument("unknown subcommand '" + config.subcommand + "'");
}

}  // namespace jetmoduli
