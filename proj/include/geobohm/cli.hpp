#pragma once
#include <ostream>
#include <vector>

#include "geobohm/hartman.hpp"

namespace geobohm {

int run(int argc, char** argv);

// CSV emitters shared by the subcommands and the validation suite.
void write_fig2(std::ostream& os, const std::vector<double>& xs);
void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows);
void write_fig3(std::ostream& os, const std::vector<double>& a, const std::vector<double>& E);
void write_fig4(std::ostream& os, const std::vector<double>& a, const std::vector<double>& n0);
void write_fig5(std::ostream& os, const std::vector<double>& a, const std::vector<double>& n0);

}  // namespace geobohm
