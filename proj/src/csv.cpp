#include "geobohm/csv.hpp"

#include <charconv>
#include <cmath>

namespace geobohm::csv {

std::string format(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

void Writer::header(const std::vector<std::string>& cols) { cells(cols); }

void Writer::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os_ << ',';
        os_ << format(values[i]);
    }
    os_ << '\n';
}

void Writer::cells(const std::vector<std::string>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os_ << ',';
        os_ << c[i];
    }
    os_ << '\n';
}

}  // namespace geobohm::csv
