#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace srh {

// Raised for anything wrong with a config file; carries line information
// where available. The CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Plain-text `key = value` configuration.
// Grammar: one entry per line; blank lines and lines starting with '#' are
// ignored; a trailing ' # comment' after the value is stripped; keys are
// dotted lowercase words; values are scalars or comma-separated lists.
// Unknown keys are errors so typos cannot silently change an experiment.
class Config {
  public:
    static Config parse_file(const std::string& path) {
        std::ifstream is(path);
        if (!is) throw ConfigError("cannot open config file: " + path);
        std::ostringstream ss;
        ss << is.rdbuf();
        return parse_string(ss.str(), path);
    }

    static Config parse_string(const std::string& text, const std::string& origin = "<string>") {
        Config c;
        c.origin_ = origin;
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            std::string s = strip(line);
            if (s.empty() || s[0] == '#') continue;
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": expected 'key = value', got '" + s + "'");
            std::string key = strip(s.substr(0, eq));
            std::string val = s.substr(eq + 1);
            const auto hash = val.find('#');
            if (hash != std::string::npos) val = val.substr(0, hash);
            val = strip(val);
            if (key.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
            if (val.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty value for '" +
                                  key + "'");
            if (c.values_.count(key))
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'");
            c.values_[key] = val;
            c.lines_[key] = lineno;
        }
        return c;
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_string(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    std::string get_string(const std::string& key, const std::string& fallback) const {
        if (!has(key)) return fallback;
        return get_string(key);
    }

    double get_double(const std::string& key) const { return to_double(key, get_string(key)); }
    double get_double(const std::string& key, double fallback) const {
        if (!has(key)) return fallback;
        return get_double(key);
    }

    long get_int(const std::string& key) const {
        const std::string v = get_string(key);
        try {
            std::size_t pos = 0;
            const long out = std::stol(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            throw ConfigError(where(key) + ": expected an integer for '" + key + "', got '" + v +
                              "'");
        }
    }
    long get_int(const std::string& key, long fallback) const {
        if (!has(key)) return fallback;
        return get_int(key);
    }

    bool get_bool(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        const std::string v = get_string(key);
        if (v == "true" || v == "on" || v == "1") return true;
        if (v == "false" || v == "off" || v == "0") return false;
        throw ConfigError(where(key) + ": expected true/false for '" + key + "', got '" + v + "'");
    }

    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const {
        if (!has(key)) return fallback;
        const std::string v = get_string(key);
        try {
            return std::stoull(v);
        } catch (const std::exception&) {
            throw ConfigError(where(key) + ": expected a seed integer for '" + key + "'");
        }
    }

    std::vector<double> get_list(const std::string& key) const {
        const std::string v = get_string(key);
        std::vector<double> out;
        std::istringstream is(v);
        std::string tok;
        while (std::getline(is, tok, ',')) out.push_back(to_double(key, strip(tok)));
        if (out.empty()) throw ConfigError(where(key) + ": empty list for '" + key + "'");
        return out;
    }
    std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const {
        if (!has(key)) return fallback;
        return get_list(key);
    }

    // strict-schema check: every present key must be in the allowed set
    void require_known(const std::set<std::string>& allowed) const {
        for (const auto& [key, val] : values_) {
            if (!allowed.count(key))
                throw ConfigError(where(key) + ": unknown key '" + key +
                                  "' (strict schema; check the spelling)");
        }
    }

    const std::map<std::string, std::string>& entries() const { return values_; }

  private:
    static std::string strip(const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return "";
        const auto b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
    }

    double to_double(const std::string& key, const std::string& v) const {
        try {
            std::size_t pos = 0;
            const double out = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            throw ConfigError(where(key) + ": expected a number for '" + key + "', got '" + v +
                              "'");
        }
    }

    std::string where(const std::string& key) const {
        auto it = lines_.find(key);
        if (it == lines_.end()) return origin_;
        return origin_ + ":" + std::to_string(it->second);
    }

    std::string origin_;
    std::map<std::string, std::string> values_;
    std::map<std::string, int> lines_;
    mutable std::set<std::string> used_;
};

}  // namespace srh
