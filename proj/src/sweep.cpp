#include "ringradiant/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ringradiant {

namespace {

bool power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        const double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size())
            throw std::invalid_argument("trailing characters in number: " + item);
        out.push_back(v);
    }
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (m < 1) throw ConfigError("m must be a positive integer");
    if (!(c > 1.0)) throw ConfigError("c must be > 1");
    if (radii.empty()) throw ConfigError("radii list is empty");
    double prev = 1.0;
    for (double r : radii) {
        if (!(r > prev))
            throw ConfigError("radii must be strictly increasing and > 1");
        prev = r;
    }
    for (int n : {phi_nodes, sphere_theta_nodes, time_nodes, theta_nodes})
        if (!power_of_two(n) || n < 16)
            throw ConfigError("node counts must be powers of two >= 16");
    if (theta_nodes < 64) throw ConfigError("theta_nodes must be >= 64");
    if (time_nodes < 32) throw ConfigError("time_nodes must be >= 32");
}

ModeWeights ExperimentConfig::mode_weights() const {
    return ModeWeights{m, weights[0], weights[1], weights[2], weights[3]};
}

PowerOptions ExperimentConfig::power_options() const {
    PowerOptions opt;
    opt.field_nodes = theta_nodes;
    opt.sphere.phi_nodes = phi_nodes;
    opt.sphere.theta_nodes = sphere_theta_nodes;
    return opt;
}

std::string ExperimentConfig::canonical_text() const {
    std::ostringstream os;
    os << "m=" << m << "\n";
    os << "c=" << format_g17(c) << "\n";
    os << "weights=" << format_g17(weights[0]) << "," << format_g17(weights[1])
       << "," << format_g17(weights[2]) << "," << format_g17(weights[3]) << "\n";
    os << "radii=";
    for (size_t i = 0; i < radii.size(); ++i)
        os << (i ? "," : "") << format_g17(radii[i]);
    os << "\n";
    os << "t0=" << format_g17(t0) << "\n";
    os << "theta_nodes=" << theta_nodes << "\n";
    os << "phi_nodes=" << phi_nodes << "\n";
    os << "sphere_theta_nodes=" << sphere_theta_nodes << "\n";
    os << "time_nodes=" << time_nodes << "\n";
    os << "mode=" << (mode == PowerMode::direct ? "direct" : "far_field") << "\n";
    os << "format=" << (format == OutputFormat::csv ? "csv" : "json") << "\n";
    return os.str();
}

void apply_key_value(ExperimentConfig& cfg, const std::string& key,
                     const std::string& value) {
    try {
        if (key == "m")
            cfg.m = std::stoi(value);
        else if (key == "c")
            cfg.c = std::stod(value);
        else if (key == "weights") {
            const auto w = parse_double_list(value);
            if (w.size() != 4) throw ConfigError("weights needs 4 values");
            for (int i = 0; i < 4; ++i) cfg.weights[i] = w[i];
        } else if (key == "radii")
            cfg.radii = parse_double_list(value);
        else if (key == "t0")
            cfg.t0 = std::stod(value);
        else if (key == "theta_nodes")
            cfg.theta_nodes = std::stoi(value);
        else if (key == "phi_nodes")
            cfg.phi_nodes = std::stoi(value);
        else if (key == "sphere_theta_nodes")
            cfg.sphere_theta_nodes = std::stoi(value);
        else if (key == "time_nodes")
            cfg.time_nodes = std::stoi(value);
        else if (key == "mode") {
            if (value == "direct")
                cfg.mode = PowerMode::direct;
            else if (value == "far_field")
                cfg.mode = PowerMode::far_field;
            else
                throw ConfigError("mode must be direct or far_field");
        } else if (key == "format") {
            if (value == "csv")
                cfg.format = OutputFormat::csv;
            else if (value == "json")
                cfg.format = OutputFormat::json;
            else
                throw ConfigError("format must be csv or json");
        } else
            throw ConfigError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad value for key " + key + ": " + value);
    } catch (const std::out_of_range&) {
        throw ConfigError("value out of range for key " + key + ": " + value);
    }
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r\n");
        line = line.substr(a, b - a + 1);
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const size_t i = s.find_first_not_of(" \t");
            const size_t j = s.find_last_not_of(" \t");
            s = (i == std::string::npos) ? "" : s.substr(i, j - i + 1);
        };
        trim(key);
        trim(value);
        apply_key_value(cfg, key, value);
    }
    return cfg;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    const ModeWeights w = cfg.mode_weights();
    const PowerOptions opt = cfg.power_options();

    SweepResult res;
    res.rows.resize(cfg.radii.size());
    for (size_t i = 0; i < cfg.radii.size(); ++i) {
        SweepRow& row = res.rows[i];
        row.radius = cfg.radii[i];
        row.t0 = cfg.t0;
        try {
            const SweepPoint pt = evaluate_sweep_point(
                w, cfg.radii[i], cfg.t0, cfg.c, cfg.time_nodes, cfg.mode, opt);
            row.period = pt.cycle.period;
            row.cycle_integral = pt.cycle.integral;
            auto part = [&](const char* name) {
                const auto it = pt.at_t0.parts.find(name);
                return it == pt.at_t0.parts.end() ? 0.0 : it->second;
            };
            row.p_e2xb2 = part("E2xB2");
            row.p_e3xb2 = part("E3xB2");
            row.p_other = pt.at_t0.P - row.p_e2xb2 - row.p_e3xb2;
        } catch (const std::exception& e) {
            row.error = e.what();
            row.period = row.p_e2xb2 = row.p_e3xb2 = row.p_other =
                row.cycle_integral = std::nan("");
        }
    }

    std::vector<CycleRecord> clean;
    for (const auto& row : res.rows)
        if (row.error.empty())
            clean.push_back({row.radius, row.t0, row.period, row.cycle_integral});
    if (clean.size() >= 3) res.fit = decay_fit(clean);
    return res;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string sweep_csv(const SweepResult& res) {
    std::ostringstream os;
    os << "radius,t0,period,P_E2xB2,P_E3xB2,P_other,cycle_integral\n";
    for (const auto& row : res.rows) {
        os << format_g17(row.radius) << "," << format_g17(row.t0) << ","
           << format_g17(row.period) << "," << format_g17(row.p_e2xb2) << ","
           << format_g17(row.p_e3xb2) << "," << format_g17(row.p_other) << ","
           << format_g17(row.cycle_integral) << "\n";
    }
    if (res.fit)
        os << "# decay_fit exponent=" << format_g17(res.fit->exponent)
           << " amplitude=" << format_g17(res.fit->amplitude) << "\n";
    return os.str();
}

std::string sweep_json(const SweepResult& res, const ExperimentConfig& cfg) {
    nlohmann::json j;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a(cfg.canonical_text())));
    j["metadata"] = {
        {"tool", "ringradiant"},
        {"version", "1.0.0"},
        {"config_hash", hash},
        {"config",
         {{"m", cfg.m},
          {"c", cfg.c},
          {"weights", cfg.weights},
          {"radii", cfg.radii},
          {"t0", cfg.t0},
          {"theta_nodes", cfg.theta_nodes},
          {"phi_nodes", cfg.phi_nodes},
          {"sphere_theta_nodes", cfg.sphere_theta_nodes},
          {"time_nodes", cfg.time_nodes},
          {"mode", cfg.mode == PowerMode::direct ? "direct" : "far_field"}}}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : res.rows) {
        nlohmann::json r = {{"radius", row.radius},
                            {"t0", row.t0},
                            {"period", row.period},
                            {"P_E2xB2", row.p_e2xb2},
                            {"P_E3xB2", row.p_e3xb2},
                            {"P_other", row.p_other},
                            {"cycle_integral", row.cycle_integral}};
        if (!row.error.empty()) {
            r["error"] = row.error;
            r["period"] = nullptr;
            r["P_E2xB2"] = nullptr;
            r["P_E3xB2"] = nullptr;
            r["P_other"] = nullptr;
            r["cycle_integral"] = nullptr;
        }
        j["rows"].push_back(r);
    }
    if (res.fit)
        j["decay_fit"] = {{"exponent", res.fit->exponent},
                          {"amplitude", res.fit->amplitude}};
    return j.dump(2) + "\n";
}

}  // namespace ringradiant
