#include "cli.hpp"

int main(int argc, char** argv) { return arpt::cli::run_cli(argc, argv); }
