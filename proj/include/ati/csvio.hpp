#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ati/errors.hpp"

namespace ati::csv {

// Fixed 6-decimal formatting, '.' separator, no scientific notation. All
// floating-point CSV output goes through this so runs diff byte-for-byte.
inline std::string format6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// Value as it survives the log round trip; metrics accumulate these so a
// replay from the CSV reproduces them exactly.
inline double quant6(double v) {
    return std::strtod(format6(v).c_str(), nullptr);
}

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline double to_double(const std::string& s, const std::string& file, int line_no) {
    if (s.empty())
        throw DataError(file + ":" + std::to_string(line_no) + ": empty numeric field");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw DataError(file + ":" + std::to_string(line_no) + ": bad number '" + s + "'");
    return v;
}

inline int to_int(const std::string& s, const std::string& file, int line_no) {
    if (s.empty())
        throw DataError(file + ":" + std::to_string(line_no) + ": empty integer field");
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size())
        throw DataError(file + ":" + std::to_string(line_no) + ": bad integer '" + s + "'");
    return static_cast<int>(v);
}

}  // namespace ati::csv
