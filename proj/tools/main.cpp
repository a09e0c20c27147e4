#include "borsuk/cli.hpp"

int main(int argc, char** argv) { return borsuk::cli::run_cli(argc, argv); }
