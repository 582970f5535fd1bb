#include "hfx/cli.hpp"

int main(int argc, char** argv) { return hfx::cli::run_command(argc, argv); }
