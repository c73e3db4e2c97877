#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace kicktop {

/// Number of workers actually used for `requested` (0 means hardware concurrency)
/// and `tasks` jobs. Always >= 1.
unsigned resolve_workers(unsigned requested, std::size_t tasks);

/// Runs body(i) for i in [0, count) on a bounded pool. Indices are claimed from
/// a shared counter; callers store results by index so output order never
/// depends on scheduling. The first exception (lowest index) is rethrown after
/// all workers finish.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

template<class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned workers, F&& fn)
{
	std::vector<T> out(count);
	parallel_for(count, workers, [&](std::size_t i) { out[i] = fn(i); });
	return out;
}

} // namespace kicktop
