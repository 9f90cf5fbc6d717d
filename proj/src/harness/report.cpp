#include "evo/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "evo/core/errors.hpp"

namespace evo {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string general(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string format_avg_calls(const BenchmarkReport& report) {
  return report.avg_calls ? fixed2(*report.avg_calls) : "N/A";
}

std::string summary_csv(const std::vector<BenchmarkReport>& reports) {
  std::ostringstream out;
  out << "problem,algorithm,dim,runs,successes,avg_calls,base_seed\n";
  for (const auto& r : reports) {
    out << r.problem << ',' << r.algorithm << ',' << r.dim << ',' << r.runs << ','
        << r.successes << ',' << format_avg_calls(r) << ',' << r.base_seed << '\n';
  }
  return out.str();
}

std::string runs_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "run_index,seed,success,calls,best_value\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const RunRecord& r = report.records[i];
    out << i << ',' << r.seed << ',' << (r.success ? 1 : 0) << ',' << r.reported_calls() << ','
        << general(r.best_value) << '\n';
  }
  return out.str();
}

std::string report_json(const std::vector<BenchmarkReport>& reports, bool include_wall_time) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["problem"] = r.problem;
    j["algorithm"] = r.algorithm;
    j["dim"] = r.dim;
    j["runs"] = r.runs;
    j["successes"] = r.successes;
    j["avg_calls"] = r.avg_calls ? nlohmann::ordered_json(*r.avg_calls) : nlohmann::ordered_json("N/A");
    j["base_seed"] = r.base_seed;
    if (include_wall_time) j["wall_seconds"] = r.wall_seconds;
    auto& runs = j["records"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const RunRecord& rec = r.records[i];
      runs.push_back({{"run_index", i},
                      {"seed", rec.seed},
                      {"success", rec.success},
                      {"calls", rec.reported_calls()},
                      {"best_value", std::isfinite(rec.best_value)
                                         ? nlohmann::ordered_json(rec.best_value)
                                         : nlohmann::ordered_json(nullptr)}});
    }
    if (!r.errors.empty()) j["errors"] = r.errors;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string scaling_plot_data(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "# dim avg_calls\n";
  for (const auto& row : rows) out << row.dim << ' ' << format_avg_calls(row.report) << '\n';
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace evo
