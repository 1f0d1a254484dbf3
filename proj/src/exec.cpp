#include "ideallab/exec.hpp"

#include <cstdlib>
#include <string>

namespace ideallab {

int thread_count() {
  if (const char* env = std::getenv("IDEALLAB_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v < 1) return 1;
      if (v > 64) return 64;
      return v;
    } catch (...) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) return 1;
  return static_cast<int>(hw > 64 ? 64 : hw);
}

}  // namespace ideallab
