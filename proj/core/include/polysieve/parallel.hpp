#pragma once

#include <cstddef>
#include <functional>

namespace polysieve {

// Worker count for the bulk loops. Work is always cut into the same slabs
// and partial results are combined in slab order, so results do not depend
// on this setting.
void set_worker_threads(unsigned n);
unsigned worker_threads();

// Runs body(slab) for slab in [0, slabs). Each slab must write only its own
// output. The first exception thrown by any slab is rethrown.
void parallel_slabs(std::size_t slabs, const std::function<void(std::size_t)>& body);

}  // namespace polysieve
