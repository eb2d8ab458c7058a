#include "disc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace disc {

using nlohmann::json;

std::string to_json(const BoundaryPointSet& s) {
    json j;
    j["points"] = s.points;
    return j.dump(2);
}

std::string to_json(const ArcSet& s) {
    json arr = json::array();
    for (const auto& a : s.arcs)
        arr.push_back({reduce_angle(a.start), reduce_angle(a.start + a.length)});
    json j;
    j["arcs"] = arr;
    return j.dump(2);
}

std::string to_json(const DiscFunction& f) {
    json j;
    j["n"] = f.n();
    std::vector<double> bre, bim, cre, cim;
    for (const auto& v : f.boundary.values) {
        bre.push_back(v.real());
        bim.push_back(v.imag());
    }
    for (const auto& v : f.coeffs.coeffs) {
        cre.push_back(v.real());
        cim.push_back(v.imag());
    }
    j["boundary_re"] = bre;
    j["boundary_im"] = bim;
    j["coeffs_re"] = cre;
    j["coeffs_im"] = cim;
    j["has_potential"] = bool(f.potential);
    j["lambda"] = f.lambda;
    return j.dump(2);
}

std::string to_json(const NormReport& r) {
    json j;
    j["sup_norm"] = r.sup_norm;
    j["lip_seminorm"] = r.lip_seminorm;
    j["lip_norm"] = r.lip_norm;
    j["dirichlet"] = r.dirichlet;
    j["aalpha"] = r.aalpha;
    j["alpha"] = r.alpha;
    return j.dump(2);
}

std::string to_json(const InequalityReport& r) {
    json comp;
    for (const auto& [k, v] : r.rhs_components) comp[k] = v;
    json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs_components"] = comp;
    j["empirical_constant"] = r.empirical_constant;
    j["node_count"] = r.node_count;
    j["passed"] = r.passed;
    return j.dump(2);
}

std::string to_json(const Config& c) {
    json j;
    j["alpha"] = c.alpha;
    j["rho"] = c.rho;
    j["N"] = c.N;
    j["M"] = c.M;
    j["grid_n"] = c.grid_n;
    j["lambda"] = c.lambda;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["arc_counts"] = c.arc_counts;
    j["constant_cap"] = c.constant_cap;
    return j.dump(2);
}

std::string to_json(const ApproxRun& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        json js;
        js["m"] = s.m;
        js["err_power"] = s.err_power;
        js["err_convex"] = s.err_convex;
        js["err_pinch"] = s.err_pinch;
        js["err_total"] = s.err_total;
        js["C_m"] = s.c_m;
        js["delta"] = s.delta;
        js["decay_slope"] = s.decay_slope;
        js["convex_distance"] = s.convex_distance;
        steps.push_back(js);
    }
    json j;
    j["alpha"] = r.alpha;
    j["M"] = r.M;
    j["N"] = r.N;
    j["eps"] = r.eps;
    j["norm_f"] = r.norm_f;
    j["schedule"] = r.schedule;
    j["converged"] = r.converged;
    j["steps"] = steps;
    return j.dump(2);
}

std::string to_json(const SweepReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr;
        jr["arc_count"] = row.arc_count;
        jr["max"] = row.max;
        jr["mean"] = row.mean;
        jr["min"] = row.min;
        rows.push_back(jr);
    }
    json j;
    j["frho_norm"] = r.frho_norm;
    j["verdict"] = r.verdict;
    j["rows"] = rows;
    return j.dump(2);
}

BoundaryPointSet point_set_from_json(const std::string& text) {
    json j = json::parse(text);
    return BoundaryPointSet::from_angles(j.at("points").get<std::vector<double>>());
}

ArcSet arcset_from_json(const std::string& text) {
    json j = json::parse(text);
    ArcSet s;
    for (const auto& pair : j.at("arcs")) {
        double a = pair.at(0).get<double>();
        double b = pair.at(1).get<double>();
        double len = reduce_angle(b - a);
        if (len <= 0.0) throw std::invalid_argument("arcset_from_json: empty arc");
        s.arcs.push_back({reduce_angle(a), len});
    }
    validate_disjoint(s);
    return s;
}

DiscFunction function_from_json(const std::string& text) {
    json j = json::parse(text);
    const int n = j.at("n").get<int>();
    auto bre = j.at("boundary_re").get<std::vector<double>>();
    auto bim = j.at("boundary_im").get<std::vector<double>>();
    if (int(bre.size()) != n || int(bim.size()) != n)
        throw std::invalid_argument("function_from_json: boundary length mismatch");
    double lambda = j.value("lambda", 30.0);
    std::vector<cdouble> samples(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        samples[std::size_t(k)] = cdouble(bre[std::size_t(k)], bim[std::size_t(k)]);
    if (j.value("has_potential", false)) {
        // for an outer function the potential datum is recoverable from the
        // boundary modulus (exact for functions built by this library)
        LogModulus L = LogModulus::from_samples(samples, lambda);
        return outer_from_modulus(L);
    }
    DiscFunction f = DiscFunction::from_samples(std::move(samples), lambda);
    if (j.contains("coeffs_re")) {
        auto cre = j.at("coeffs_re").get<std::vector<double>>();
        auto cim = j.at("coeffs_im").get<std::vector<double>>();
        if (cre.size() == cim.size() && !cre.empty()) {
            f.coeffs.coeffs.resize(cre.size());
            for (std::size_t k = 0; k < cre.size(); ++k)
                f.coeffs.coeffs[k] = cdouble(cre[k], cim[k]);
        }
    }
    return f;
}

Config config_from_json(const std::string& text) {
    json j = json::parse(text);
    Config c;
    c.alpha = j.value("alpha", c.alpha);
    c.rho = j.value("rho", c.rho);
    c.N = j.value("N", c.N);
    c.M = j.value("M", c.M);
    c.grid_n = j.value("grid_n", c.grid_n);
    c.lambda = j.value("lambda", c.lambda);
    c.seed = j.value("seed", c.seed);
    c.trials = j.value("trials", c.trials);
    if (j.contains("arc_counts")) c.arc_counts = j.at("arc_counts").get<std::vector<int>>();
    c.constant_cap = j.value("constant_cap", c.constant_cap);
    c.validate();
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace disc
