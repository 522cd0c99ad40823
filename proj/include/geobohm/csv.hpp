#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace geobohm::csv {

// 17 significant digits, '.' decimal point regardless of locale.
std::string format(double v);

class Writer {
public:
    explicit Writer(std::ostream& os) : os_(os) {}
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<double>& values);
    // Mixed row: numbers formatted, strings copied verbatim.
    void cells(const std::vector<std::string>& cells);

private:
    std::ostream& os_;
};

}  // namespace geobohm::csv
