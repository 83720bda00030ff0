// Command-line front end: invariant suites, radius sweeps, field probes and
// the Wallis tables, with reproducible CSV/JSON output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringradiant/flow_extension.hpp"
#include "ringradiant/jefimenko.hpp"
#include "ringradiant/numerics.hpp"
#include "ringradiant/radiation.hpp"
#include "ringradiant/spectral_wave.hpp"
#include "ringradiant/sweep.hpp"
#include "ringradiant/verify.hpp"

namespace {

using namespace ringradiant;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string fields_csv(const FieldSample& fs, const FarFieldTerms& ff) {
    std::ostringstream os;
    os << "term,x,y,z\n";
    auto row = [&os](const char* name, const Vec3& v) {
        os << name << "," << format_g17(v.x) << "," << format_g17(v.y) << ","
           << format_g17(v.z) << "\n";
    };
    row("E1", fs.E1);
    row("E2", fs.E2);
    row("E3", fs.E3);
    row("B1", fs.B1);
    row("B2", fs.B2);
    row("E_total", fs.E_total);
    row("B_total", fs.B_total);
    row("farfield_E2", ff.E2);
    row("farfield_E3", ff.E3);
    row("farfield_B2", ff.B2);
    return os.str();
}

std::string fields_json(const FieldSample& fs, const FarFieldTerms& ff) {
    auto vec = [](const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); };
    nlohmann::json j = {{"E1", vec(fs.E1)},
                        {"E2", vec(fs.E2)},
                        {"E3", vec(fs.E3)},
                        {"B1", vec(fs.B1)},
                        {"B2", vec(fs.B2)},
                        {"E_total", vec(fs.E_total)},
                        {"B_total", vec(fs.B_total)},
                        {"farfield_E2", vec(ff.E2)},
                        {"farfield_E3", vec(ff.E3)},
                        {"farfield_B2", vec(ff.B2)}};
    return j.dump(2) + "\n";
}

std::string wallis_csv(int max_ab, int max_gamma) {
    std::ostringstream os;
    os << "kind,alpha,beta,gamma,closed_form,quadrature,delta\n";
    for (int a = 0; a <= max_ab; ++a)
        for (int b = 0; b <= max_ab; ++b) {
            const double quad = integrate_adaptive(
                [a, b](double th) {
                    return std::pow(std::cos(th), a) * std::pow(std::sin(th), b);
                },
                -kPi, kPi, 1e-13);
            const double cf = wallis_I(a, b);
            os << "I," << a << "," << b << ",," << format_g17(cf) << ","
               << format_g17(quad) << "," << format_g17(cf - quad) << "\n";
        }
    for (int g = 1; g <= max_gamma; g += 2) {
        const double quad = integrate_adaptive(
            [g](double ph) { return std::pow(std::sin(ph), g); }, 0.0, kPi, 1e-13);
        const double cf = wallis_J(g);
        os << "J,,," << g << "," << format_g17(cf) << "," << format_g17(quad)
           << "," << format_g17(cf - quad) << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ring-source causal field and radiated-power toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the shared flags after the subcommand too

    std::string config_path, out_path, format = "", weights_arg, radii_arg, at_arg;
    double c_arg = -1.0, t0_arg = 0.0;
    int m_arg = -1;
    std::string mode_arg;
    bool have_t0 = false;

    app.add_option("--config", config_path, "config file (key=value lines)");
    app.add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json", ""}));
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--c", c_arg, "wave speed parameter (> 1)");
    app.add_option("--m", m_arg, "mode number");
    app.add_option("--weights", weights_arg, "a1,a2,a3,a4");
    app.add_option("--radii", radii_arg, "r1,r2,...");
    app.add_option("--mode", mode_arg, "direct|far_field")
        ->check(CLI::IsMember({"direct", "far_field", ""}));
    app.add_option("--t0", t0_arg, "cycle start time")->each([&](const std::string&) {
        have_t0 = true;
    });

    auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
    std::string suite = "all";
    verify_cmd->add_option("suite", suite,
                           "wave|extension|wallis|cancellation|power|thermal|all");

    auto* sweep_cmd = app.add_subcommand("sweep", "radius sweep of cycle power");

    auto* fields_cmd = app.add_subcommand("fields", "field terms at a point");
    std::string at = "5,0,0,0";
    fields_cmd->add_option("--at", at, "x,y,z,t")->required();

    auto* wallis_cmd = app.add_subcommand("wallis", "I/J tables vs quadrature");
    int wallis_max = 12;
    wallis_cmd->add_option("--max", wallis_max, "max alpha/beta");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (c_arg > 0) cfg.c = c_arg;
        if (m_arg > 0) cfg.m = m_arg;
        if (!weights_arg.empty()) apply_key_value(cfg, "weights", weights_arg);
        if (!radii_arg.empty()) apply_key_value(cfg, "radii", radii_arg);
        if (!mode_arg.empty()) apply_key_value(cfg, "mode", mode_arg);
        if (!format.empty()) apply_key_value(cfg, "format", format);
        if (have_t0) cfg.t0 = t0_arg;

        if (*verify_cmd) {
            const VerifyReport rep = run_verify(suite);
            write_output(format_report(rep), out_path);
            return rep.all_pass() ? 0 : 1;
        }
        if (*sweep_cmd) {
            cfg.validate();
            const SweepResult res = run_sweep(cfg);
            write_output(cfg.format == OutputFormat::json ? sweep_json(res, cfg)
                                                          : sweep_csv(res),
                         out_path);
            return 0;
        }
        if (*fields_cmd) {
            const auto parts = [&] {
                std::vector<double> v;
                std::stringstream ss(at);
                std::string item;
                while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
                return v;
            }();
            if (parts.size() != 4)
                throw ConfigError("--at expects x,y,z,t");
            const EvalPoint pt{{parts[0], parts[1], parts[2]}, parts[3]};
            const RingSource src = combined_source(cfg.mode_weights());
            const FieldSample fs =
                causal_fields_direct(src, pt, cfg.c, cfg.theta_nodes);
            const FarFieldTerms ff = far_field_terms(cfg.mode_weights(), pt,
                                                     parts[3], cfg.c,
                                                     cfg.theta_nodes);
            write_output(cfg.format == OutputFormat::json ? fields_json(fs, ff)
                                                          : fields_csv(fs, ff),
                         out_path);
            return 0;
        }
        if (*wallis_cmd) {
            write_output(wallis_csv(wallis_max, 13), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
