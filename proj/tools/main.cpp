#include "dynatomic/cli.hpp"

int main(int argc, char** argv) { return dynatomic::run_cli_main(argc, argv); }
