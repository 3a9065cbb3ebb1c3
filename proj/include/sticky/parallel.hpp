#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sticky {

inline unsigned default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Compensated (Kahan) accumulator.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct MeanSe {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

namespace detail {

// Fixed chunk layout: depends on n only, never on the worker count, so any
// chunk-ordered combination of partial results is reproducible.
inline std::size_t chunk_size_for(std::size_t n) {
  const std::size_t target_chunks = 4096;
  std::size_t c = n / target_chunks;
  return c == 0 ? 1 : c;
}

template <class Body>
void run_chunks(std::size_t n_chunks, unsigned workers, Body&& body) {
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t c = cursor.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        body(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        cursor.store(n_chunks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct Welford {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  // Chan et al. pairwise combination; applied in fixed chunk order.
  void merge(const Welford& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double d = o.mean - mean;
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
    const double nt = na + nb;
    mean += d * nb / nt;
    m2 += o.m2 + d * d * na * nb / nt;
    n += o.n;
  }
};

}  // namespace detail

// Runs fn(i) for i in [0, n); writes must go to per-index slots.  Work is
// handed out in chunks through an atomic cursor, so the set of side effects
// is independent of the worker count.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  if (workers == 0) workers = default_workers();
  const std::size_t chunk = detail::chunk_size_for(n);
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  detail::run_chunks(n_chunks, workers, [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = lo + chunk < n ? lo + chunk : n;
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

// Mean and standard error of fn(i) over i in [0, n) without storing the
// samples.  Per-chunk Welford accumulators are merged in chunk order, so the
// result is bit-identical for any worker count.
template <class Fn>
MeanSe chunked_mean_se(std::size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return {};
  if (workers == 0) workers = default_workers();
  const std::size_t chunk = detail::chunk_size_for(n);
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  std::vector<detail::Welford> partial(n_chunks);
  detail::run_chunks(n_chunks, workers, [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = lo + chunk < n ? lo + chunk : n;
    detail::Welford acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(fn(i));
    partial[c] = acc;
  });
  detail::Welford total;
  for (const auto& p : partial) total.merge(p);
  MeanSe out;
  out.n = total.n;
  out.mean = total.mean;
  if (total.n > 1) {
    const double var = total.m2 / static_cast<double>(total.n - 1);
    out.std_error = std::sqrt(var / static_cast<double>(total.n));
  }
  return out;
}

}  // namespace sticky
