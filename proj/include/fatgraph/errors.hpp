#pragma once

#include <stdexcept>

namespace fatgraph {

// Operation needs an input the caller did not (or cannot) supply, e.g. a
// geometric representation on a graph-only path.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fatgraph
