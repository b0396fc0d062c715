#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "sgas/acceptance.hpp"

int main(int argc, char** argv) {
  sgas::AcceptanceOptions opt;
  if (const char* env = std::getenv("SELBERG_GAS_THREADS")) opt.threads = std::max(1, std::atoi(env));
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      opt.only.push_back(std::atoi(argv[++i]));
    } else if (arg == "--threads" && i + 1 < argc) {
      opt.threads = std::max(1, std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only ID]... [--threads N]\n";
      return 2;
    }
  }
  bool ok = true;
  for (const auto& r : sgas::run_acceptance(opt)) {
    std::cout << sgas::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
