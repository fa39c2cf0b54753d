#pragma once
// Stage orchestration, caching and report emission for the mu-curves tool.

#include <string>
#include <vector>

#include "json.hpp"

namespace mu {

using Json = nlohmann::ordered_json;

extern const std::vector<std::string> kStages;  // rep, net, variety, curves, deform, poincare

struct PipelineConfig {
    std::vector<std::string> stages{"all"};
    std::string chart;        // empty = all charts
    std::string fixture_dir;  // empty = the shipped fixtures
    std::string cache_dir;    // empty = no cache
    int verbosity = 0;
    bool parallel = true;
};

// requested stages plus everything they depend on, in pipeline order
std::vector<std::string> expand_stages(const std::vector<std::string>& requested);

struct Report {
    Json doc;
    bool all_verified() const;
    std::vector<std::string> mismatches() const;  // "stage/check: detail"
    int exit_code() const { return all_verified() ? 0 : 2; }
    std::string text() const;
    std::string json() const { return doc.dump(2) + "\n"; }
};

Report run_pipeline(const PipelineConfig& cfg);

// the checks that read one fixture section; exit code as for run
struct FixtureVerdict {
    std::string fixture, stage;
    Json checks = Json::array();
    bool ok() const;
};
FixtureVerdict verify_fixture(const PipelineConfig& cfg, const std::string& fixture);

std::string emit_report(const Report& r, const std::string& format);  // json | text

}  // namespace mu
