#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqzsim {

// Error in a config file or key set; carries the offending field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Flat dotted-key/value document, e.g. `squeezer.eta_pct_per_Wcm2 = 1000`.
// Units live in the key names. `#` starts a comment; blank lines ignored.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<text>");

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    long get_int(const std::string& key, long fallback) const;

    // Keys read so far; anything else is unknown (warning, not error).
    std::vector<std::string> unknown_keys() const;
    const std::map<std::string, std::string>& entries() const { return values_; }

    std::string serialize() const;

private:
    std::map<std::string, std::string> values_;
    mutable std::map<std::string, bool> touched_;
};

}  // namespace sqzsim
