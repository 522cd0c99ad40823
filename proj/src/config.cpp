#include "geobohm/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "geobohm/error.hpp"

namespace geobohm {

void RunConfig::finalize() {
    if (!(grid.n_points >= 2)) throw ModelError(ErrorKind::invalid_parameter, "config: n_points < 2");
    if (!(grid.x_min < grid.x_max)) throw ModelError(ErrorKind::invalid_parameter, "config: x_min >= x_max");
    validate(barrier);
    bubble = derive_bubble(bubble.sigma, bubble.R, bubble.vs, bubble.xs0, alpha0, alpha1);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size() || v.empty())
        throw ModelError(ErrorKind::invalid_parameter, "config: " + key + " = '" + v + "' is not a number");
    return d;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    using Setter = std::function<void(const std::string&)>;
    auto num = [](double& dst, const char* k) -> Setter {
        return [&dst, k](const std::string& v) { dst = to_double(k, v); };
    };
    auto opt = [](std::optional<double>& dst, const char* k) -> Setter {
        return [&dst, k](const std::string& v) { dst = to_double(k, v); };
    };
    const std::map<std::string, Setter> setters = {
        {"a", num(c.barrier.a, "a")},
        {"V0", num(c.barrier.V0, "V0")},
        {"E1", num(c.barrier.E1, "E1")},
        {"E2", num(c.barrier.E2, "E2")},
        {"k1", num(c.barrier.k1, "k1")},
        {"k2", num(c.barrier.k2, "k2")},
        {"A", num(c.barrier.A, "A")},
        {"B", num(c.barrier.B, "B")},
        {"t0", num(c.barrier.t0, "t0")},
        {"t1", num(c.barrier.t1, "t1")},
        {"sigma", num(c.bubble.sigma, "sigma")},
        {"R", num(c.bubble.R, "R")},
        {"vs", num(c.bubble.vs, "vs")},
        {"xs0", num(c.bubble.xs0, "xs0")},
        {"alpha0", opt(c.alpha0, "alpha0")},
        {"alpha1", opt(c.alpha1, "alpha1")},
        {"x_min", num(c.grid.x_min, "x_min")},
        {"x_max", num(c.grid.x_max, "x_max")},
        {"n_points", [&c](const std::string& v) { c.grid.n_points = static_cast<int>(to_double("n_points", v)); }},
        {"seed", [&c](const std::string& v) { c.seed = std::stoull(v); }},
        {"output_dir", [&c](const std::string& v) { c.output_dir = v; }},
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ModelError(ErrorKind::invalid_parameter,
                             "config line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end())
            throw ModelError(ErrorKind::invalid_parameter, "config line " + std::to_string(lineno) + ": unknown key " + key);
        it->second(val);
    }
    c.finalize();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ModelError(ErrorKind::invalid_parameter, "cannot open config " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace geobohm
