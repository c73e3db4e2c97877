#include "kicktop/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace kicktop {

unsigned resolve_workers(unsigned requested, std::size_t tasks)
{
	unsigned w = requested;
	if(w == 0) {
		w = std::max(1u, std::thread::hardware_concurrency());
	}
	if(tasks < w) {
		w = static_cast<unsigned>(std::max<std::size_t>(tasks, 1));
	}
	return w;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body)
{
	if(count == 0) {
		return;
	}
	const unsigned w = resolve_workers(workers, count);
	std::atomic<std::size_t> next{0};
	std::mutex err_mutex;
	std::size_t err_index = count;
	std::exception_ptr err;

	auto run = [&] {
		for(;;) {
			const std::size_t i = next.fetch_add(1);
			if(i >= count) {
				return;
			}
			try {
				body(i);
			} catch(...) {
				std::lock_guard lock(err_mutex);
				if(i < err_index) {
					err_index = i;
					err = std::current_exception();
				}
			}
		}
	};

	if(w == 1) {
		run();
	} else {
		std::vector<std::thread> pool;
		pool.reserve(w);
		for(unsigned t = 0; t < w; ++t) {
			pool.emplace_back(run);
		}
		for(auto& t : pool) {
			t.join();
		}
	}
	if(err) {
		std::rethrow_exception(err);
	}
}

} // namespace kicktop
