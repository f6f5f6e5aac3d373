#pragma once

#include "peo/report_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peo {

/// One resolved invocation: a problem (preset or inline JSON), a grid size,
/// a budget (single eta_bar or a sweep list), solver settings and an output
/// directory. PEO_OUTPUT_DIR overrides output_dir when set.
struct RunConfig {
    std::string subcommand; // solve | analyze | certify | sweep | reproduce-figure
    std::string preset_name;
    std::string problem_file;
    int grid_size = 2000;
    std::vector<double> refine_near;
    std::optional<double> eta_bar;
    std::vector<double> eta_list;
    SolverConfig solver;
    std::string profile_file; // certify input
    std::string figure;       // reproduce-figure target
    std::string output_dir = "peo-out";
    bool warm_start = true;

    void validate() const;
};

RunConfig config_from_json_file(const std::string& path);

/// Executes the run and writes its artifacts. Returns the process exit
/// status: 0 on success, 2 when a solve failed to converge. Configuration
/// errors throw; the CLI maps exceptions to exit 1.
int run(const RunConfig& cfg);

} // namespace peo
