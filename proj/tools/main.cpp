#include "cli.hpp"

int main(int argc, char** argv) { return dmm::cli::run(argc, argv); }
