#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace walshsum {

/// Worker count from WALSHSUM_THREADS, else the hardware concurrency.
inline unsigned thread_count() {
	if (const char* env = std::getenv("WALSHSUM_THREADS")) {
		try {
			const long v = std::stol(env);
			if (v >= 1)
				return static_cast<unsigned>(v);
		} catch (...) {
		}
	}
	const unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : hw;
}

/// Calls body(i) for i in [0, count). Iterations must only write state owned by i.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
	const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
	if (workers <= 1) {
		for (std::size_t i = 0; i < count; ++i)
			body(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	{
		std::vector<std::jthread> pool;
		pool.reserve(workers);
		for (unsigned w = 0; w < workers; ++w) {
			pool.emplace_back([&] {
				for (std::size_t i = next++; i < count; i = next++) {
					try {
						body(i);
					} catch (...) {
						std::lock_guard lock(failure_mutex);
						if (!failure)
							failure = std::current_exception();
					}
				}
			});
		}
	}
	if (failure)
		std::rethrow_exception(failure);
}

}  // namespace walshsum
