// disctool: command-line surface over the disc library.
//
// Subcommands: gen, factor, norms, approximate, verify, sweep-theorem2,
// carleson. All numeric output is deterministic given the config and seed.
// Exit codes: 0 pass, 1 check failure, 2 usage/input error.

#include <iostream>

#include <CLI11.hpp>

#include "disc/families.hpp"
#include "disc/io.hpp"

using namespace disc;

namespace {

Config load_config(const std::string& path) {
    if (path.empty()) return Config{};
    return config_from_json(read_file(path));
}

DiscFunction load_function(const std::string& input, const std::string& builtin, int n,
                           double lambda) {
    if (!builtin.empty()) return make_test_function(builtin, n, lambda);
    return function_from_json(read_file(input));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic function toolkit on the unit disc"};
    app.require_subcommand(1);

    std::string config_path, input_path, out_path, csv_path, builtin, check_name, points_json;
    int n = 4096;
    double lambda = 30.0, alpha = 0.5, tol = 1e-3, fat = 0.0;
    int refinement = 1 << 14;

    auto* gen = app.add_subcommand("gen", "write a built-in test function as JSON");
    gen->add_option("--family", builtin, "one of: canonical, canonical_samples, two_zeros, "
                                         "two_zeros_samples, affine, z_times_affine")
        ->required();
    gen->add_option("--n", n, "grid size (power of two >= 16)");
    gen->add_option("--lambda", lambda, "log-modulus clamp");
    gen->add_option("--out", out_path, "output path")->required();

    auto* factor = app.add_subcommand("factor", "inner/outer factorization");
    factor->add_option("--input", input_path, "function JSON")->required();
    factor->add_option("--out", out_path, "output JSON path")->required();

    auto* norms = app.add_subcommand("norms", "norm report of a function");
    norms->add_option("--input", input_path, "function JSON")->required();
    norms->add_option("--alpha", alpha, "Lipschitz exponent in (0, 1/2]");

    auto* approx = app.add_subcommand("approximate", "boundary-zero approximation pipeline");
    approx->add_option("--input", input_path, "function JSON");
    approx->add_option("--builtin", builtin, "built-in family instead of --input");
    approx->add_option("--config", config_path, "config JSON");
    approx->add_option("--csv", csv_path, "write the per-step table as CSV");
    approx->add_option("--out", out_path, "write the run as JSON");

    auto* verify = app.add_subcommand("verify", "run one named inequality check");
    verify->add_option("--check", check_name, "LOCAL, LEM2, D1, D21, D23, LEM6, LEM7, D22, "
                                              "OBJET or UNIFMAJ")
        ->required();
    verify->add_option("--input", input_path, "function JSON");
    verify->add_option("--builtin", builtin, "built-in family instead of --input");
    verify->add_option("--config", config_path, "config JSON");

    auto* sweep = app.add_subcommand("sweep-theorem2", "random arc-union norm sweep");
    sweep->add_option("--input", input_path, "function JSON");
    sweep->add_option("--builtin", builtin, "built-in family instead of --input");
    sweep->add_option("--config", config_path, "config JSON");
    sweep->add_option("--csv", csv_path, "write the sweep table as CSV");

    auto* carleson = app.add_subcommand("carleson", "boundary-set Carleson integral");
    carleson->add_option("--points", points_json, "point set JSON ({\"points\":[...]})")
        ->required();
    carleson->add_option("--refinement", refinement, "node budget (>= 4096)");
    carleson->add_option("--fatten", fat, "total length of fattening arcs (0 = none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            auto f = make_test_function(builtin, n, lambda);
            write_file(out_path, to_json(f));
            std::cout << "wrote " << out_path << " (n=" << f.n() << ")\n";
            return 0;
        }
        if (*factor) {
            auto f = function_from_json(read_file(input_path));
            auto r = inner_outer_split(f);
            std::string js = std::string("{\n\"defect\": ") + std::to_string(r.defect) +
                             ",\n\"inner\": " + to_json(r.inner) +
                             ",\n\"outer\": " + to_json(r.outer) + "\n}\n";
            write_file(out_path, js);
            std::cout << "factorization defect " << r.defect << ", wrote " << out_path << "\n";
            return 0;
        }
        if (*norms) {
            auto f = function_from_json(read_file(input_path));
            std::cout << to_json(aalpha_norm(f, alpha)) << "\n";
            return 0;
        }
        if (*approx) {
            Config cfg = load_config(config_path);
            if (builtin.empty() && input_path.empty()) builtin = "canonical";
            auto f = load_function(input_path, builtin, cfg.grid_n, cfg.lambda);
            double norm = aalpha_norm(f, cfg.alpha).aalpha;
            auto run = theorem1_pipeline(f, cfg.alpha, cfg.M, 0.1 * norm, cfg.N);
            if (!csv_path.empty()) write_file(csv_path, run.csv());
            std::string js = to_json(run);
            if (!out_path.empty()) write_file(out_path, js);
            std::cout << js << "\n";
            return run.converged ? 0 : 1;
        }
        if (*verify) {
            Config cfg = load_config(config_path);
            if (builtin.empty() && input_path.empty()) builtin = "canonical";
            auto f = load_function(input_path, builtin, cfg.grid_n, cfg.lambda);
            auto rep = run_inequality(check_name, f, cfg);
            std::cout << to_json(rep) << "\n";
            return rep.passed ? 0 : 1;
        }
        if (*sweep) {
            Config cfg = load_config(config_path);
            if (builtin.empty() && input_path.empty()) builtin = "canonical";
            auto f = load_function(input_path, builtin, cfg.grid_n, cfg.lambda);
            auto rep = sweep_theorem2(f, cfg);
            if (!csv_path.empty()) write_file(csv_path, rep.csv());
            std::cout << to_json(rep) << "\n";
            return rep.verdict ? 0 : 1;
        }
        if (*carleson) {
            auto E = point_set_from_json(read_file(points_json));
            double v = (fat > 0.0) ? carleson_integral_fattened(E, fat, refinement)
                                   : carleson_integral(E, refinement);
            std::cout.precision(15);
            std::cout << v << "\n";
            return std::isfinite(v) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
