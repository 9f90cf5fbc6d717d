#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "evo/harness/benchmark.hpp"

namespace evo {

/// "problem,algorithm,dim,runs,successes,avg_calls,base_seed" plus one row
/// per report; avg_calls is "N/A" when no run succeeded.
std::string summary_csv(const std::vector<BenchmarkReport>& reports);
/// "run_index,seed,success,calls,best_value" for one report.
std::string runs_csv(const BenchmarkReport& report);
/// JSON mirror of both tables. Wall time is included only on request, so
/// the default output is reproducible byte for byte.
std::string report_json(const std::vector<BenchmarkReport>& reports, bool include_wall_time = false);
/// Two whitespace-separated columns "dim avg_calls" for plotting.
std::string scaling_plot_data(const std::vector<ScalingRow>& rows);

std::string format_avg_calls(const BenchmarkReport& report);

/// Writes `text` to `path`, creating parent directories. Throws evo::Error
/// when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace evo
