#include "geobohm/cli.hpp"

int main(int argc, char** argv) { return geobohm::run(argc, argv); }
