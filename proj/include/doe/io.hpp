#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doe/annealer.hpp"
#include "doe/domain.hpp"
#include "doe/models/truss.hpp"
#include "doe/sensitivity.hpp"

namespace doe {

/// Shortest round-trip decimal representation.
std::string format_double(double v);

/// Line-oriented CSV writer with deterministic number formatting.
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);
    void row(const std::vector<std::string>& cells);
    void raw_line(const std::string& line);

private:
    std::ofstream out_;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);

nlohmann::json domain_to_json(const DomainSpec& domain);
DomainSpec domain_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const Design& design, const DomainSpec& domain,
                              const std::vector<int>& iteration_tags = {});
Design design_from_json(const nlohmann::json& j);

/// One row per point, integer level indices.
void write_design_csv(const std::filesystem::path& path, const Design& design);

nlohmann::json optresult_to_json(const OptResult& result, const SAConfig& cfg);
void write_history_csv(const std::filesystem::path& path, const OptResult& result);

/// Landscape matrix: one CSV row per second-dimension level (y), one column
/// per first-dimension level (x); infinite cells serialize as "inf".
void write_scan_csv(const std::filesystem::path& path, const Eigen::MatrixXd& scan);

nlohmann::json report_to_json(const SensitivityReport& report);

nlohmann::json truss_to_json(const TrussModel& model);
TrussModel truss_from_json(const nlohmann::json& j);

}  // namespace doe
