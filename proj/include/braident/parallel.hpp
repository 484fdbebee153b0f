#ifndef BRAIDENT_PARALLEL_HPP
#define BRAIDENT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace braident {

/// 0 means "all hardware threads".
inline std::size_t resolve_jobs(std::size_t jobs)
{
  if (jobs != 0)
    return jobs;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Evaluates fn(shard) for every shard in [0, shards) on up to `jobs` threads
/// and returns the results indexed by shard, so any merge done by the caller
/// is independent of scheduling.
template <class Fn>
auto run_shards(std::size_t shards, std::size_t jobs, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}))>
{
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(shards);
  std::size_t const workers = std::min(resolve_jobs(jobs), std::max<std::size_t>(shards, 1));

  if (workers <= 1) {
    for (std::size_t s = 0; s < shards; ++s)
      results[s] = fn(s);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    for (std::size_t s; (s = next.fetch_add(1)) < shards;) {
      try {
        results[s] = fn(s);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back(work);
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return results;
}

} // namespace braident

#endif // BRAIDENT_PARALLEL_HPP
