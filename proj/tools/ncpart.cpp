#include "ncpart/cli.hpp"

int main(int argc, char** argv) { return ncpart::cli::run(argc, argv); }
