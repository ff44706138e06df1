//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace repchar {

  std::size_t thread_budget() {
    char const* env = std::getenv("REPCHAR_THREADS");
    if (env == nullptr) {
      return 1;
    }
    try {
      long n = std::stol(env);
      return n < 1 ? 1 : static_cast<std::size_t>(n);
    } catch (...) {
      return 1;
    }
  }

  void parallel_for(std::size_t first, std::size_t last, std::function<void(std::size_t)> const& body) {
    if (last <= first) {
      return;
    }
    std::size_t const workers = std::min(thread_budget(), last - first);
    if (workers <= 1) {
      for (std::size_t i = first; i < last; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{first};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < last; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace repchar
