#pragma once

#include <map>
#include <string>
#include <vector>

#include "ati/errors.hpp"

namespace ati {

// Minimal sectioned key/value config: `[section]` headers, `key = value`
// lines, '#' comments. Lookups report the section.key on error.
class IniFile {
public:
    static IniFile parse_file(const std::string& path);
    static IniFile parse_string(const std::string& text, const std::string& name = "<config>");

    bool has(const std::string& section, const std::string& key) const;
    void set(const std::string& section, const std::string& key, const std::string& value);

    // Apply "section.key=value" (CLI override syntax).
    void set_override(const std::string& spec);

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key,
                                    const std::vector<double>& fallback) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::string name_ = "<config>";
};

}  // namespace ati
