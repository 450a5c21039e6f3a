#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace srh {

using json = nlohmann::json;

// Deterministic CSV writer: fixed column order, %.17g numbers, no clocks.
// Byte-identical reruns are part of the contract.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns)
        : os_(path) {
        if (!os_) throw std::runtime_error("cannot open " + path.string());
        for (std::size_t i = 0; i < columns.size(); ++i)
            os_ << (i ? "," : "") << columns[i];
        os_ << "\n";
        width_ = columns.size();
    }

    void row(const std::vector<double>& values, const std::vector<std::string>& tail = {}) {
        if (values.size() + tail.size() != width_)
            throw std::runtime_error("CsvWriter: column count mismatch");
        char buf[32];
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", values[i]);
            os_ << (i ? "," : "") << buf;
        }
        for (std::size_t i = 0; i < tail.size(); ++i)
            os_ << ((values.size() + i) ? "," : "") << tail[i];
        os_ << "\n";
    }

  private:
    std::ofstream os_;
    std::size_t width_ = 0;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string comparison = "<=";  // value vs threshold
};

inline json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name},
                       {"pass", c.pass},
                       {"value", c.value},
                       {"comparison", c.comparison},
                       {"threshold", c.threshold}});
    return arr;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

inline void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << j.dump(2) << "\n";
}

}  // namespace srh
