#include "latd/cli.hpp"

int main(int argc, char** argv) { return latd::run_cli(argc, argv); }
