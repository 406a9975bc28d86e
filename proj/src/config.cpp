#include "sqzsim/config.hpp"

#include <fstream>
#include <sstream>

namespace sqzsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no),
                              "expected `key = value`, got `" + stripped + "`");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no), "empty key");
        cfg.values_[key] = value;
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

void Config::set(const std::string& key, double value) {
    std::ostringstream ss;
    ss.precision(17);
    ss << value;
    values_[key] = ss.str();
}

double Config::get_double(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(key, "missing required parameter");
    touched_[key] = true;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key, "not a number: `" + it->second + "`");
    }
}

double Config::get_double(const std::string& key, double fallback) const {
    touched_[key] = true;
    return has(key) ? get_double(key) : fallback;
}

std::string Config::get_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(key, "missing required parameter");
    touched_[key] = true;
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    touched_[key] = true;
    return has(key) ? get_string(key) : fallback;
}

long Config::get_int(const std::string& key, long fallback) const {
    if (!has(key)) {
        touched_[key] = true;
        return fallback;
    }
    const double v = get_double(key);
    return static_cast<long>(v);
}

std::vector<std::string> Config::unknown_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) {
        if (!touched_.count(k)) out.push_back(k);
    }
    return out;
}

std::string Config::serialize() const {
    std::ostringstream ss;
    for (const auto& [k, v] : values_) ss << k << " = " << v << "\n";
    return ss.str();
}

}  // namespace sqzsim
