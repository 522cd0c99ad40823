#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "geobohm/params.hpp"

namespace geobohm {

struct Grid {
    double x_min = -4.0;
    double x_max = 4.0;
    int n_points = 201;
};

struct RunConfig {
    BarrierSpec barrier;
    BubbleParams bubble;  // alpha0, alpha1 filled by finalize()
    std::optional<double> alpha0, alpha1;
    std::string output_dir = ".";
    Grid grid;
    std::uint64_t seed = 20240601;

    void finalize();
};

// Flat key=value lines, '#' starts a comment. Unknown keys are errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace geobohm
