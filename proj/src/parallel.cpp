#include "casimir/parallel.hpp"

#include <atomic>

namespace casimir {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel(bool enabled) { g_parallel.store(enabled); }

}  // namespace casimir
