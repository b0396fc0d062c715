#include "sgas/cli.hpp"

int main(int argc, char** argv) { return sgas::run_cli(argc, argv); }
