// mu-curves: run the pipeline or check one fixture.
// exit 0 = everything verified, 2 = mismatch, 3 = internal error

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mu/fixtures.hpp"
#include "mu/pipeline.hpp"

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

int write_out(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "mu-curves: cannot write " << path << "\n";
        return 3;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixed-point computations for twisted cubics on the mu-variety"};
    app.require_subcommand(1);

    mu::PipelineConfig cfg;
    cfg.cache_dir = env_or("MU_CURVES_CACHE", "");
    std::string out, format;
    bool serial = false, no_cache = false;
    int verbose = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--fixtures", cfg.fixture_dir, "fixture directory (default: the shipped fixtures)");
        sub->add_option("--cache", cfg.cache_dir, "cache directory (default: $MU_CURVES_CACHE, empty = off)");
        sub->add_flag("--no-cache", no_cache, "ignore the cache");
        sub->add_option("--chart", cfg.chart, "restrict chart details to one chart")
            ->check(CLI::IsMember({"p12", "p10", "p-10", "p-12"}));
        sub->add_flag("--serial", serial, "run the reference serial kernels");
        sub->add_flag("-v,--verbose", verbose, "progress on stderr");
    };

    auto* run = app.add_subcommand("run", "run pipeline stages and write a report");
    std::string stages = "all";
    run->add_option("--stages", stages, "comma list of rep,net,variety,curves,deform,poincare or all");
    run->add_option("--out", out, "report file (default stdout)");
    run->add_option("--format", format, "json or text (default: json for --out *.json, else text)")
        ->check(CLI::IsMember({"json", "text"}));
    common(run);

    auto* verify = app.add_subcommand("verify", "check one fixture against the computation");
    std::string fixture;
    verify->add_option("--fixture", fixture, "fixture section name, e.g. eta")->required();
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }
    cfg.verbosity = verbose;
    cfg.parallel = !serial;
    if (no_cache) cfg.cache_dir.clear();

    try {
        if (*run) {
            cfg.stages.clear();
            for (auto& s : mu::split_list(stages)) cfg.stages.push_back(s);
            if (format.empty()) format = out.size() > 5 && out.substr(out.size() - 5) == ".json" ? "json" : "text";
            mu::Report r = mu::run_pipeline(cfg);
            if (int rc = write_out(mu::emit_report(r, format), out)) return rc;
            for (auto& m : r.mismatches()) std::cerr << "mismatch: " << m << "\n";
            return r.exit_code();
        }
        mu::FixtureVerdict v = mu::verify_fixture(cfg, fixture);
        for (auto& c : v.checks) {
            std::cout << (c["status"] == "verified" ? "ok   " : "FAIL ") << v.stage << "/" << c["name"].get<std::string>() << ": "
                      << c["detail"].get<std::string>() << "\n";
            for (auto& d : c["diff"]) std::cout << "     " << d.get<std::string>() << "\n";
        }
        std::cout << (v.ok() ? "verified " : "mismatch ") << fixture << "\n";
        return v.ok() ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "mu-curves: " << e.what() << "\n";
        return 3;
    }
}
