#include "ugx/cli.hpp"

int main(int argc, char** argv) { return ugx::run_cli(argc, argv); }
