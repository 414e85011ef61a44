// spingeo command-line front end: parameter sweeps, figure-data presets,
// Gauss-Bonnet reports, the brachistochrone solution, and the validation
// battery. Exit codes: 0 ok, 1 validation-check failure, 2 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spingeo/sweep.hpp"
#include "spingeo/validate.hpp"
#include "spingeo/version.hpp"

namespace {

using spingeo::cli::GridSpec;
using spingeo::cli::OutputFormat;
using spingeo::cli::Quantity;
using spingeo::cli::SweepSpec;

// Grid syntax: "a:b:k" (inclusive k-point grid) or a single value "x".
GridSpec parse_grid(const std::string& text, const std::string& flag) {
    GridSpec g;
    const std::size_t first = text.find(':');
    if (first == std::string::npos) {
        try {
            g.start = g.stop = std::stod(text);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "expected a number or a:b:k");
        }
        g.count = 1;
        return g;
    }
    const std::size_t second = text.find(':', first + 1);
    if (second == std::string::npos)
        throw CLI::ValidationError(flag, "expected a:b:k");
    try {
        g.start = std::stod(text.substr(0, first));
        g.stop = std::stod(text.substr(first + 1, second - first - 1));
        const long count = std::stol(text.substr(second + 1));
        if (count < 1) throw std::invalid_argument("count");
        g.count = static_cast<std::size_t>(count);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected a:b:k with k >= 1");
    }
    return g;
}

struct CommonFlags {
    int n = 2;
    int twice_spin = 1;
    double coupling = 1.0;
    std::string theta, phi, xi, c;
    double epsilon = 1e-3;
    double xi_prime_max = 1e-3;
    bool unwrap = false;
    std::string out;
    std::string format = "csv";

    CLI::Option* theta_opt = nullptr;
    CLI::Option* xi_opt = nullptr;
    CLI::Option* coupling_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* spin_opt = nullptr;

    void attach(CLI::App* cmd, bool with_c_grid) {
        n_opt = cmd->add_option("--n", n, "number of spins N");
        spin_opt = cmd->add_option("--twice-spin", twice_spin, "2s (s = twice_spin/2)");
        coupling_opt = cmd->add_option("--coupling", coupling, "exchange constant J");
        theta_opt = cmd->add_option("--theta", theta, "Theta grid, a:b:k or value");
        cmd->add_option("--phi", phi, "Phi grid, a:b:k or value");
        xi_opt = cmd->add_option("--xi", xi, "xi grid, a:b:k or value");
        if (with_c_grid)
            cmd->add_option("--c", c, "C/C_max fraction grid for fig presets");
        cmd->add_option("--epsilon", epsilon, "Gauss-Bonnet cap-exclusion angle");
        cmd->add_option("--xi-prime-max", xi_prime_max, "horizon constant xi'_max");
        cmd->add_flag("--unwrap", unwrap,
                      "phase sweeps: report branches continuous in xi");
        cmd->add_option("--out", out, "output path (default: stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }

    SweepSpec to_spec(Quantity q) const {
        SweepSpec spec;
        spec.quantity = q;
        spec.config = spingeo::SystemConfig(n, spingeo::SpinValue(twice_spin), coupling);
        if (!theta.empty()) spec.theta = parse_grid(theta, "--theta");
        if (!phi.empty()) spec.phi = parse_grid(phi, "--phi");
        if (!xi.empty()) spec.xi = parse_grid(xi, "--xi");
        if (!c.empty()) spec.c = parse_grid(c, "--c");
        spec.epsilon = epsilon;
        spec.xi_prime_max = xi_prime_max;
        spec.unwrap = unwrap;
        return spec;
    }
};

int emit(const spingeo::cli::SweepResult& result, const CommonFlags& flags) {
    const OutputFormat fmt =
        flags.format == "json" ? OutputFormat::json : OutputFormat::csv;
    const std::string text = spingeo::cli::render(result, fmt);
    if (flags.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) {
        std::cerr << "usage error: --out: cannot open '" << flags.out << "'\n";
        return 2;
    }
    file << text;
    return 0;
}

void warn_preset_overrides(Quantity q, const CommonFlags& flags) {
    const bool dynamical_fig =
        q == Quantity::fig3 || q == Quantity::fig4 || q == Quantity::fig5;
    if (dynamical_fig && flags.coupling_opt && flags.coupling_opt->count() > 0 &&
        flags.coupling != 1.0)
        std::cerr << "warning: " << spingeo::cli::quantity_name(q)
                  << " preset overrides --coupling to 1\n";
    const bool fig = dynamical_fig || q == Quantity::fig1 || q == Quantity::fig2;
    if (!fig) return;
    if (flags.xi_opt && flags.xi_opt->count() > 0)
        std::cerr << "warning: " << spingeo::cli::quantity_name(q)
                  << " preset fixes tilde_xi = 1 (xi = xi'_max); --xi ignored\n";
    if ((flags.n_opt && flags.n_opt->count() > 0) ||
        (flags.spin_opt && flags.spin_opt->count() > 0))
        std::cerr << "warning: " << spingeo::cli::quantity_name(q)
                  << " preset sweeps two spins with s in {1/2, 1, 3/2, 2}; "
                     "--n/--twice-spin ignored\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spingeo: exact spin-coherent-state simulation and state-manifold "
                 "geometry (metric, curvature, topology, phases, brachistochrone, "
                 "concurrence)"};
    app.set_version_flag("--version", std::string("spingeo ") +
                                          spingeo::version_string());
    app.require_subcommand(1);

    CommonFlags sweep_flags, fig_flags[5], euler_flags, brach_flags;
    std::string sweep_quantity;

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "evaluate a quantity over parameter grids");
    sweep_cmd->add_option("--quantity", sweep_quantity,
                          "metric|curvature|euler|phase|aa_phase|speed|distance|"
                          "brachistochrone|concurrence|fig1..fig5")
        ->required();
    sweep_flags.attach(sweep_cmd, true);

    const char* fig_help[] = {
        "G-curvature vs concurrence preset (s in {1/2,1,3/2,2}, tilde_xi = 1)",
        "geometric phase vs concurrence preset",
        "evolution speed vs concurrence preset (J = 1)",
        "path length vs concurrence preset (J = 1, xi'_max default 1e-3)",
        "optimal time vs concurrence preset (J = 1, xi'_max default 1e-3)"};
    CLI::App* fig_cmds[5];
    for (int i = 0; i < 5; ++i) {
        fig_cmds[i] = app.add_subcommand("fig" + std::to_string(i + 1), fig_help[i]);
        fig_flags[i].attach(fig_cmds[i], true);
    }

    CLI::App* euler_cmd = app.add_subcommand(
        "euler", "Gauss-Bonnet Euler characteristic report (--xi sweeps xi_max)");
    euler_flags.attach(euler_cmd, false);

    CLI::App* brach_cmd = app.add_subcommand(
        "brachistochrone", "time-optimal evolution solution (--xi sweeps xi)");
    brach_flags.attach(brach_cmd, false);

    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "run the full oracle-equivalence battery (exit 1 on failure)");
    std::string mutate;
    validate_cmd->add_option(
        "--mutate", mutate,
        "sensitivity fixture: perturb a named check's reference (testing aid)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) {
            spingeo::cli::ValidationOptions options;
            options.mutate = mutate;
            const spingeo::cli::ValidationReport report =
                spingeo::cli::run_validation(options);
            std::cout << spingeo::cli::render_report(report);
            return report.all_pass() ? 0 : 1;
        }

        Quantity q = Quantity::metric;
        const CommonFlags* flags = nullptr;
        if (sweep_cmd->parsed()) {
            q = spingeo::cli::quantity_from_name(sweep_quantity);
            flags = &sweep_flags;
        } else if (euler_cmd->parsed()) {
            q = Quantity::euler;
            flags = &euler_flags;
        } else if (brach_cmd->parsed()) {
            q = Quantity::brachistochrone;
            flags = &brach_flags;
        } else {
            for (int i = 0; i < 5; ++i)
                if (fig_cmds[i]->parsed()) {
                    q = static_cast<Quantity>(static_cast<int>(Quantity::fig1) + i);
                    flags = &fig_flags[i];
                }
        }
        if (flags == nullptr) {
            std::cerr << "usage error: no subcommand\n";
            return 2;
        }
        warn_preset_overrides(q, *flags);
        SweepSpec spec = flags->to_spec(q);
        // defaults that make bare invocations useful
        if (q == Quantity::euler && flags->xi.empty())
            spec.xi = GridSpec{spingeo::pi, spingeo::pi, 1};
        if (q == Quantity::brachistochrone && flags->xi.empty())
            spec.xi = GridSpec{1.0, 1.0, 1};
        return emit(spingeo::cli::run_sweep(spec), *flags);
    } catch (const spingeo::cli::SpecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
