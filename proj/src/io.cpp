#include "gmux/io.hpp"

#include <charconv>
#include <fstream>

#include "gmux/errors.hpp"

namespace gmux {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

nlohmann::json design_to_json(const Design& design) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : design.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (std::uint8_t b : row) r.push_back(static_cast<int>(b));
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"n", design.n_params},
                          {"rows", std::move(rows)},
                          {"times", design.times}};
}

Design design_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw InvalidDesignError("design JSON must be an object with \"n\" and \"rows\"");
    Design d;
    d.n_params = j.at("n").get<int>();
    if (!j.at("rows").is_array())
        throw InvalidDesignError("\"rows\" must be an array of 0/1 arrays");
    for (const auto& row : j.at("rows")) {
        std::vector<std::uint8_t> r;
        for (const auto& cell : row) {
            const int v = cell.get<int>();
            if (v != 0 && v != 1)
                throw InvalidDesignError("row entries must be 0 or 1");
            r.push_back(static_cast<std::uint8_t>(v));
        }
        d.rows.push_back(std::move(r));
    }
    if (j.contains("times")) {
        d.times = j.at("times").get<std::vector<double>>();
    } else if (!d.rows.empty()) {
        d.times.assign(d.rows.size(),
                       static_cast<double>(d.n_params) / static_cast<double>(d.rows.size()));
    }
    return d;
}

Design read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot open design file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidDesignError("malformed design JSON in " + path + ": " + e.what());
    }
    return design_from_json(j);
}

void write_design_file(const Design& design, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgumentError("cannot write design file: " + path);
    out << design_to_json(design).dump() << '\n';
}

nlohmann::json report_to_json(const SimReport& report) {
    nlohmann::json cov = nlohmann::json::array();
    for (int i = 0; i < report.empirical_covariance.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < report.empirical_covariance.cols(); ++j)
            row.push_back(report.empirical_covariance(i, j));
        cov.push_back(std::move(row));
    }
    return nlohmann::json{{"empirical_mse", report.empirical_mse},
                          {"theoretical_mse", report.theoretical_mse},
                          {"mse_standard_error", report.mse_standard_error},
                          {"per_coordinate_bias", report.per_coordinate_bias},
                          {"empirical_covariance", std::move(cov)},
                          {"trials", report.trials},
                          {"seed", report.seed}};
}

}  // namespace gmux
