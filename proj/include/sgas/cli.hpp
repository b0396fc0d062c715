#pragma once

namespace sgas {

/// Entry point of the `sgas` command. Returns 0 on success, 1 on a
/// numerical failure (or a failed acceptance criterion) and 2 on usage errors.
int run_cli(int argc, char** argv);

}  // namespace sgas
