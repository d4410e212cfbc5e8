#pragma once

#include <cstddef>
#include <functional>

namespace geostretch {

/// Worker cap used by parallel loops. Resolution order: value set here,
/// then the GEOSTRETCH_THREADS environment variable, then hardware
/// concurrency. 0 means "auto".
void set_thread_count(std::size_t count);
std::size_t thread_count();

/// Runs fn over [0, count) split into contiguous chunks, one worker per
/// chunk. Blocks until all chunks finish. Callers get determinism by
/// writing to disjoint, index-addressed slots and reducing sequentially
/// afterwards.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t begin, std::size_t end)>& fn);

} // namespace geostretch
