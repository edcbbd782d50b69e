#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dsim {

/// Run fn(0..n-1) across a bounded pool. Work items must write results only
/// into their own index's slot so the output is independent of scheduling;
/// the first exception thrown by any item is rethrown after all threads
/// join. workers <= 1 (or n <= 1) runs inline.
inline void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
	if (n == 0) return;
	if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
	if (workers <= 1 || n == 1) {
		for (std::size_t i = 0; i < n; ++i) fn(i);
		return;
	}
	const std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
	std::atomic<std::size_t> next{0};
	std::atomic<bool> failed{false};
	std::exception_ptr error;
	std::mutex error_mutex;
	std::vector<std::thread> threads;
	threads.reserve(pool);
	for (std::size_t t = 0; t < pool; ++t) {
		threads.emplace_back([&] {
			while (!failed.load(std::memory_order_relaxed)) {
				const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
				if (i >= n) break;
				try {
					fn(i);
				} catch (...) {
					std::lock_guard<std::mutex> lock(error_mutex);
					if (!error) error = std::current_exception();
					failed.store(true, std::memory_order_relaxed);
				}
			}
		});
	}
	for (auto& th : threads) th.join();
	if (error) std::rethrow_exception(error);
}

} // namespace dsim
