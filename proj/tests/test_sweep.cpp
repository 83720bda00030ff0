#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ringradiant/sweep.hpp"
#include "ringradiant/verify.hpp"

using namespace ringradiant;

namespace {
ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.m = 2;
    cfg.c = 10.0;
    cfg.weights = {1, 0, 0, 0};
    cfg.radii = {3.0, 6.0, 12.0};
    cfg.theta_nodes = 128;
    cfg.phi_nodes = 16;
    cfg.sphere_theta_nodes = 16;
    cfg.time_nodes = 32;
    cfg.mode = PowerMode::far_field;
    return cfg;
}
}  // namespace

TEST_CASE("config validation") {
    ExperimentConfig cfg = small_config();
    CHECK_NOTHROW(cfg.validate());

    cfg.radii = {};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.radii = {5.0, 5.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.radii = {0.5, 5.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = small_config();
    cfg.phi_nodes = 48;  // not a power of two
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = small_config();
    cfg.time_nodes = 8;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = small_config();
    cfg.c = 0.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("key=value parsing and file loading") {
    ExperimentConfig cfg;
    apply_key_value(cfg, "m", "4");
    apply_key_value(cfg, "weights", "1,2,3,4");
    apply_key_value(cfg, "mode", "direct");
    CHECK(cfg.m == 4);
    CHECK(cfg.weights[3] == 4.0);
    CHECK(cfg.mode == PowerMode::direct);
    CHECK_THROWS_AS(apply_key_value(cfg, "mode", "sideways"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "nonsense", "1"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "weights", "1,2"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "c", "fast"), ConfigError);

    const char* path = "test_sweep_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "m = 3\n";
        out << "c = 5.0   # trailing comment\n";
        out << "radii = 2,4,8\n";
        out << "\n";
    }
    const ExperimentConfig loaded = load_config(path);
    CHECK(loaded.m == 3);
    CHECK(loaded.c == 5.0);
    CHECK(loaded.radii == std::vector<double>{2, 4, 8});
    std::remove(path);
    CHECK_THROWS_AS(load_config("no_such_file.cfg"), ConfigError);
}

TEST_CASE("17-digit float formatting") {
    CHECK(format_g17(0.1) == "0.10000000000000001");
    CHECK(format_g17(1.0) == "1");
    // 17 significant digits round-trip exactly
    for (double v : {-2.5e-5, 3.14159265358979, 3.9104e-05, -1.0 / 3.0})
        CHECK(std::stod(format_g17(v)) == v);
}

TEST_CASE("fnv1a hash is stable and input sensitive") {
    const ExperimentConfig a = small_config();
    ExperimentConfig b = small_config();
    CHECK(fnv1a(a.canonical_text()) == fnv1a(b.canonical_text()));
    b.c = 9.0;
    CHECK(fnv1a(a.canonical_text()) != fnv1a(b.canonical_text()));
}

TEST_CASE("sweep output: schema, determinism, fit row") {
    const ExperimentConfig cfg = small_config();
    const SweepResult r1 = run_sweep(cfg);
    const SweepResult r2 = run_sweep(cfg);
    const std::string csv1 = sweep_csv(r1), csv2 = sweep_csv(r2);
    CHECK(csv1 == csv2);  // identical config -> identical bytes
    CHECK(csv1.rfind("radius,t0,period,P_E2xB2,P_E3xB2,P_other,cycle_integral\n",
                     0) == 0);
    CHECK(csv1.find("\r") == std::string::npos);  // LF endings
    CHECK(csv1.find("# decay_fit exponent=") != std::string::npos);
    CHECK(r1.rows.size() == 3);
    for (const auto& row : r1.rows) CHECK(row.error.empty());
    REQUIRE(r1.fit.has_value());
    // the standing-mode control does not decay
    CHECK(r1.fit->exponent > -0.3);

    const std::string js = sweep_json(r1, cfg);
    const nlohmann::json parsed = nlohmann::json::parse(js);
    CHECK(parsed["metadata"]["tool"] == "ringradiant");
    CHECK(parsed["metadata"]["config"]["m"] == 2);
    CHECK(parsed["rows"].size() == 3);
    CHECK(parsed["rows"][0]["radius"] == 3.0);
    CHECK(parsed.contains("decay_fit"));
    CHECK(parsed["metadata"]["config_hash"].get<std::string>().size() == 16);
}

TEST_CASE("worker count honors RINGRADIANT_THREADS") {
    setenv("RINGRADIANT_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    unsetenv("RINGRADIANT_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("sweep bytes do not depend on the worker count") {
    const ExperimentConfig cfg = small_config();
    setenv("RINGRADIANT_THREADS", "1", 1);
    const std::string serial = sweep_csv(run_sweep(cfg));
    setenv("RINGRADIANT_THREADS", "4", 1);
    const std::string threaded = sweep_csv(run_sweep(cfg));
    unsetenv("RINGRADIANT_THREADS");
    CHECK(serial == threaded);
}

TEST_CASE("verify suites run and report") {
    const VerifyReport rep = run_verify("wallis");
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 3);
    const std::string text = format_report(rep);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("wallis") != std::string::npos);
    CHECK_THROWS_AS(run_verify("bogus"), std::invalid_argument);
}
