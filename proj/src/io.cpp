#include "doe/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace doe {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    out_.open(path, std::ios::binary);
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path.string());
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

void CsvWriter::raw_line(const std::string& line) { out_ << line << '\n'; }

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path.string());
    out << content;
}

nlohmann::json domain_to_json(const DomainSpec& domain) {
    nlohmann::json j;
    j["levels"] = domain.levels;
    if (domain.has_values()) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : domain.values) {
            values.push_back(std::vector<double>(v.begin(), v.end()));
        }
        j["values"] = values;
    }
    return j;
}

DomainSpec domain_from_json(const nlohmann::json& j) {
    DomainSpec domain;
    domain.levels = j.at("levels").get<std::vector<int>>();
    if (j.contains("values")) {
        for (const auto& value_list : j.at("values")) {
            const auto v = value_list.get<std::vector<double>>();
            domain.values.push_back(
                Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
        }
    }
    domain.validate();
    return domain;
}

nlohmann::json design_to_json(const Design& design, const DomainSpec& domain,
                              const std::vector<int>& iteration_tags) {
    nlohmann::json j;
    j["domain"] = domain_to_json(domain);
    j["lh_constrained"] = design.lh_constrained;
    nlohmann::json points = nlohmann::json::array();
    for (int i = 0; i < design.point_count(); ++i) {
        points.push_back(std::vector<int>(design.points.row(i).begin(),
                                          design.points.row(i).end()));
    }
    j["points"] = points;
    if (!iteration_tags.empty()) j["iteration"] = iteration_tags;
    return j;
}

Design design_from_json(const nlohmann::json& j) {
    Design design;
    design.lh_constrained = j.value("lh_constrained", false);
    const auto& points = j.at("points");
    if (points.empty()) throw std::invalid_argument("design_from_json: empty design");
    const int n = static_cast<int>(points.size());
    const int k = static_cast<int>(points.front().size());
    design.points.resize(n, k);
    for (int i = 0; i < n; ++i) {
        const auto row = points[static_cast<std::size_t>(i)].get<std::vector<int>>();
        if (static_cast<int>(row.size()) != k) {
            throw std::invalid_argument("design_from_json: ragged point rows");
        }
        for (int d = 0; d < k; ++d) design.points(i, d) = row[static_cast<std::size_t>(d)];
    }
    return design;
}

void write_design_csv(const std::filesystem::path& path, const Design& design) {
    CsvWriter csv(path);
    std::vector<std::string> header;
    for (int d = 0; d < design.dimension(); ++d) header.push_back("x" + std::to_string(d));
    csv.row(header);
    for (int i = 0; i < design.point_count(); ++i) {
        std::vector<std::string> cells;
        for (int d = 0; d < design.dimension(); ++d) {
            cells.push_back(std::to_string(design.points(i, d)));
        }
        csv.row(cells);
    }
}

nlohmann::json optresult_to_json(const OptResult& result, const SAConfig& cfg) {
    nlohmann::json j;
    j["best_value"] = result.best_value;
    j["evaluations"] = result.evaluations;
    j["seed"] = result.seed.seed;
    j["stream"] = result.seed.stream;
    j["history"] = std::vector<double>(result.history.begin(), result.history.end());
    nlohmann::json points = nlohmann::json::array();
    for (int i = 0; i < result.best.point_count(); ++i) {
        points.push_back(std::vector<int>(result.best.points.row(i).begin(),
                                          result.best.points.row(i).end()));
    }
    j["best_design"] = points;
    j["lh_constrained"] = result.best.lh_constrained;
    j["config"] = {{"t_max", cfg.t_max},
                   {"t_final", cfg.t_final},
                   {"n_reductions", cfg.n_reductions},
                   {"n_max", cfg.n_max},
                   {"stage_length", cfg.effective_stage_length()},
                   {"accepted_quota", cfg.effective_quota()}};
    return j;
}

void write_history_csv(const std::filesystem::path& path, const OptResult& result) {
    CsvWriter csv(path);
    csv.row({"stage", "best_value"});
    for (std::size_t s = 0; s < result.history.size(); ++s) {
        csv.row({std::to_string(s), format_double(result.history[s])});
    }
}

void write_scan_csv(const std::filesystem::path& path, const Eigen::MatrixXd& scan) {
    CsvWriter csv(path);
    for (int j = 0; j < scan.cols(); ++j) {
        std::vector<std::string> cells;
        for (int i = 0; i < scan.rows(); ++i) {
            cells.push_back(format_double(scan(i, j)));
        }
        csv.row(cells);
    }
}

nlohmann::json report_to_json(const SensitivityReport& report) {
    auto matrix = [](const Eigen::MatrixXd& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
            rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
        }
        return rows;
    };
    nlohmann::json j;
    j["design"] = report.design_id;
    j["model"] = report.model_id;
    j["n"] = report.sample_count;
    j["estimated"] = matrix(report.estimated);
    j["reference"] = matrix(report.reference);
    j["epsilon"] = std::vector<double>(report.epsilon.begin(), report.epsilon.end());
    j["epsilon_mean"] = report.epsilon_mean;
    return j;
}

nlohmann::json truss_to_json(const TrussModel& model) {
    nlohmann::json j;
    j["name"] = model.name;
    nlohmann::json nodes = nlohmann::json::array();
    for (int i = 0; i < model.node_count(); ++i) {
        nodes.push_back(std::vector<double>(model.nodes.row(i).begin(), model.nodes.row(i).end()));
    }
    j["nodes"] = nodes;
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& [a, b] : model.elements) elements.push_back({a, b});
    j["elements"] = elements;
    j["element_group"] = model.element_group;
    j["group_count"] = model.group_count;
    nlohmann::json supports = nlohmann::json::array();
    for (const auto& [node, dof] : model.supports) supports.push_back({node, dof});
    j["supports"] = supports;
    j["loads"] = std::vector<double>(model.loads.begin(), model.loads.end());
    j["youngs_modulus"] = model.youngs_modulus;
    j["specific_weight"] = model.specific_weight;
    j["area_levels"] = std::vector<double>(model.area_levels.begin(), model.area_levels.end());
    return j;
}

TrussModel truss_from_json(const nlohmann::json& j) {
    TrussModel model;
    model.name = j.at("name").get<std::string>();
    const auto& nodes = j.at("nodes");
    const int n_nodes = static_cast<int>(nodes.size());
    const int dim = static_cast<int>(nodes.front().size());
    model.nodes.resize(n_nodes, dim);
    for (int i = 0; i < n_nodes; ++i) {
        const auto row = nodes[static_cast<std::size_t>(i)].get<std::vector<double>>();
        for (int d = 0; d < dim; ++d) model.nodes(i, d) = row[static_cast<std::size_t>(d)];
    }
    for (const auto& e : j.at("elements")) {
        model.elements.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    model.element_group = j.at("element_group").get<std::vector<int>>();
    model.group_count = j.at("group_count").get<int>();
    for (const auto& s : j.at("supports")) {
        model.supports.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
    }
    const auto loads = j.at("loads").get<std::vector<double>>();
    model.loads = Eigen::Map<const Eigen::VectorXd>(loads.data(),
                                                    static_cast<Eigen::Index>(loads.size()));
    model.youngs_modulus = j.at("youngs_modulus").get<double>();
    model.specific_weight = j.at("specific_weight").get<double>();
    const auto areas = j.at("area_levels").get<std::vector<double>>();
    model.area_levels = Eigen::Map<const Eigen::VectorXd>(areas.data(),
                                                          static_cast<Eigen::Index>(areas.size()));
    return model;
}

}  // namespace doe
