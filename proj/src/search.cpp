#include "drgt/search.hpp"

#include "drgt/cosine.hpp"
#include "drgt/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace drgt {

namespace {

int worker_count(const SearchConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("DRGT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// fills vals[pos..] with a monotone tail and invokes sink on completion
void enumerate_monotone(std::vector<long>& vals, size_t pos, long lo, long hi, bool nonincreasing,
                        const std::function<void()>& sink) {
  if (pos == vals.size()) {
    sink();
    return;
  }
  for (long v = lo; v <= hi; ++v) {
    vals[pos] = v;
    long nlo = nonincreasing ? lo : v;
    long nhi = nonincreasing ? v : hi;
    enumerate_monotone(vals, pos + 1, nlo, nhi, nonincreasing, sink);
  }
}

void enumerate_box(std::vector<long>& vals, size_t pos, long lo, long hi,
                   const std::function<void()>& sink) {
  if (pos == vals.size()) {
    sink();
    return;
  }
  for (long v = lo; v <= hi; ++v) {
    vals[pos] = v;
    enumerate_box(vals, pos + 1, lo, hi, sink);
  }
}

std::optional<SearchHit> evaluate(const SearchConfig& cfg, const std::vector<long>& b,
                                  const std::vector<long>& c) {
  int d = cfg.d;
  long k = b[0];
  // cheap structural filters first
  long a1 = k - c[0] - b[1];
  if (a1 <= 0) return std::nullopt; // tight graphs are nonbipartite
  for (int i = 1; i <= d; ++i) {
    long bi = i < d ? b[i] : 0;
    long ai = k - c[i - 1] - bi;
    if (ai < 0) return std::nullopt;
    if (i == d && ai != 0) return std::nullopt;   // a_d = 0
    if (i < d && ai == 0) return std::nullopt;    // middle a_i nonvanishing
  }
  if (check_array(b, c)) return std::nullopt; // k_i integrality etc.

  IntersectionArray arr(b, c);
  try {
    Spectrum s = spectrum(arr); // multiplicity integrality gate
    auto cls = classify(arr, s);
    if (cls.classification != Classification::Tight) return std::nullopt;
    if (cls.numerically_tight && !cfg.numeric_tolerance) return std::nullopt;
    if (cfg.require_antipodal && !is_antipodal_array(arr)) return std::nullopt;
    if (cfg.require_feasible && !feasibility(cosine_sequence(arr, s.thetad()), s))
      return std::nullopt;
    auto eps = auxiliary_parameter(arr, s);
    SearchHit hit{arr, cls.fb.slack, eps.epsilon, s.theta1().value, s.thetad().value,
                  cls.numerically_tight};
    return hit;
  } catch (const Error&) {
    return std::nullopt; // non-realizable candidate
  }
}

} // namespace

std::vector<SearchHit> search_tight_arrays(const SearchConfig& cfg) {
  if (cfg.d < 3 || cfg.max_k < 3) fail(Errc::ParamOutOfRange, "search needs d >= 3, max_k >= 3");
  int d = cfg.d;

  std::atomic<std::uint64_t> candidates{0};
  std::atomic<bool> over_budget{false};
  std::mutex sink_mutex;
  std::vector<SearchHit> hits;

  // tasks partitioned by (k, b_1) prefix
  struct Task {
    long k, b1;
  };
  std::vector<Task> tasks;
  for (long k = 3; k <= cfg.max_k; ++k)
    for (long b1 = 1; b1 <= (cfg.prune ? k : cfg.max_k); ++b1) tasks.push_back({k, b1});

  auto run_task = [&](const Task& task) {
    long k = task.k;
    std::vector<long> b(d), c(d);
    b[0] = k;
    b[1] = task.b1;
    auto on_candidate = [&](const std::vector<long>& bb, const std::vector<long>& cc) {
      std::uint64_t n = ++candidates;
      if (cfg.progress && n % cfg.progress_every == 0) cfg.progress(n);
      if (n > cfg.candidate_cap) {
        over_budget = true;
        return;
      }
      auto hit = evaluate(cfg, bb, cc);
      if (hit) {
        std::lock_guard<std::mutex> lock(sink_mutex);
        hits.push_back(std::move(*hit));
      }
    };
    if (cfg.prune) {
      // b nonincreasing from b_1, c nondecreasing with c_d = k
      c[0] = 1;
      c[d - 1] = k;
      std::vector<long> btail(d >= 3 ? d - 2 : 0);
      enumerate_monotone(btail, 0, 1, b[1], true, [&] {
        for (int i = 0; i < d - 2; ++i) b[2 + i] = btail[i];
        // reversed tail keeps the c sequence nondecreasing
        std::vector<long> ctail(d - 2);
        enumerate_monotone(ctail, 0, 1, k, false, [&] {
          for (int i = 0; i < d - 2; ++i) c[1 + i] = ctail[i];
          bool mono = c[d - 2] <= c[d - 1];
          if (mono && !over_budget) on_candidate(b, c);
        });
      });
    } else {
      c[0] = 1;
      std::vector<long> rest(2 * d - 3); // b_2..b_{d-1}, c_2..c_d free in the box
      enumerate_box(rest, 0, 1, cfg.max_k, [&] {
        for (int i = 0; i < d - 2; ++i) b[2 + i] = rest[i];
        for (int i = 0; i < d - 1; ++i) c[1 + i] = rest[d - 2 + i];
        if (!over_budget) on_candidate(b, c);
      });
    }
  };

  int nthreads = std::min<int>(worker_count(cfg), static_cast<int>(tasks.size()));
  if (nthreads <= 1) {
    for (const auto& t : tasks) run_task(t);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i)
      pool.emplace_back([&] {
        for (;;) {
          size_t idx = next.fetch_add(1);
          if (idx >= tasks.size()) return;
          run_task(tasks[idx]);
        }
      });
    for (auto& th : pool) th.join();
  }

  if (over_budget)
    fail(Errc::BudgetExceeded, "candidate cap " + std::to_string(cfg.candidate_cap) + " exceeded");

  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.array < b.array; });
  return hits;
}

} // namespace drgt
