#ifndef GRPD_PARALLEL_HPP
#define GRPD_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace grpd {

// Parallelism degree: explicit value if positive, else the GRPD_JOBS
// environment variable, else 1.
inline int resolve_jobs(int requested) {
  if (requested > 0)
    return requested;
  if (const char *env = std::getenv("GRPD_JOBS")) {
    int v = std::atoi(env);
    if (v > 0)
      return v;
  }
  return 1;
}

// Runs fn(i) for i in [0, count) on `jobs` threads.  Work items are pulled
// from a shared counter; callers keep results in pre-sized slots indexed by i
// and merge them in index order, so output never depends on the degree.
template <typename Fn> void parallel_for(long count, int jobs, Fn &&fn) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<long> next(0);
  std::exception_ptr error;
  std::atomic<bool> failed(false);
  auto worker = [&]() {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= count || failed.load())
        return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true))
          error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int n = jobs < count ? jobs : static_cast<int>(count);
  pool.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto &th : pool)
    th.join();
  if (failed.load() && error)
    std::rethrow_exception(error);
}

} // namespace grpd

#endif // GRPD_PARALLEL_HPP
