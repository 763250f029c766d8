#include "looplab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "looplab/error.hpp"
#include "looplab/identities.hpp"
#include "looplab/io.hpp"
#include "looplab/probability.hpp"
#include "looplab/theorems.hpp"

namespace looplab {

std::string to_string(Filter f) {
  switch (f) {
    case Filter::Moufang: return "moufang";
    case Filter::Cc: return "cc";
    case Filter::Nonassociative: return "nonassociative";
    case Filter::NuclearCommutators: return "nuclear_commutators";
  }
  return "?";
}

Filter parse_filter(const std::string& name) {
  for (Filter f : {Filter::Moufang, Filter::Cc, Filter::Nonassociative,
                   Filter::NuclearCommutators})
    if (to_string(f) == name) return f;
  throw Error(Error::Kind::UnknownFilter,
              "unknown filter '" + name +
                  "' (expected moufang, cc, nonassociative, "
                  "nuclear_commutators)");
}

namespace {

constexpr int kMaxUnfiltered = 8;
constexpr int kMaxMoufangFiltered = 11;
constexpr int kMoufangPruneFrom = 7;

/// Work units are subtrees under a fixed prefix of row 1. Four cells keep
/// the task count in the hundreds-to-thousands at every supported order.
int split_depth(int n) { return std::min(n - 1, 4); }

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Lexicographically least relabeling of t among bijections sending the
/// identity to 0. Row 0 and column 0 of any such relabeling are the identity
/// permutation, so the search walks only the (n-1) x (n-1) subtable, where
/// cell values actually depend on the bijection. Depth-first over partial
/// label assignments: a label is fixed the moment the scan first needs it,
/// products greedily take the smallest unused label, and a branch dies as
/// soon as a cell exceeds the best subtable found so far.
class CanonSearch {
 public:
  explicit CanonSearch(const LoopTable& t)
      : t_(t),
        n_(t.order()),
        m_(n_ - 1),
        to_new_(n_, -1),
        to_old_(n_, -1),
        best_(static_cast<std::size_t>(m_) * m_, n_) {}

  std::vector<Elem> run() {
    to_old_[0] = t_.identity();
    to_new_[t_.identity()] = 0;
    if (m_ > 0) walk(0);

    std::vector<Elem> cells(static_cast<std::size_t>(n_) * n_);
    for (int j = 0; j < n_; ++j) cells[j] = j;
    for (int i = 1; i < n_; ++i) {
      cells[static_cast<std::size_t>(i) * n_] = i;
      for (int j = 1; j < n_; ++j)
        cells[static_cast<std::size_t>(i) * n_ + j] = best_[(i - 1) * m_ + (j - 1)];
    }
    return cells;
  }

 private:
  // best_ is maintained so that it always agrees with the current path's
  // cells up to the walk position; positions beyond the last improvement
  // hold the sentinel n (greater than every real entry). A cell strictly
  // below best_ truncates the tail back to sentinels before descending.
  void walk(int pos) {
    if (pos == m_ * m_) return;
    const int i = 1 + pos / m_;
    const int j = 1 + pos % m_;
    if (to_old_[i] == -1) {
      branch(i, pos);
      return;
    }
    if (to_old_[j] == -1) {
      branch(j, pos);
      return;
    }
    const Elem p = t_.mul(to_old_[i], to_old_[j]);
    Elem v = to_new_[p];
    bool fresh = false;
    if (v == -1) {
      v = 0;
      while (to_old_[v] != -1) ++v;
      to_new_[p] = v;
      to_old_[v] = p;
      fresh = true;
    }
    if (v <= best_[pos]) {
      if (v < best_[pos]) {
        best_[pos] = v;
        std::fill(best_.begin() + pos + 1, best_.end(), n_);
      }
      walk(pos + 1);
    }
    if (fresh) {
      to_new_[p] = -1;
      to_old_[v] = -1;
    }
  }

  void branch(int label, int pos) {
    for (Elem u = 0; u < n_; ++u) {
      if (to_new_[u] != -1) continue;
      to_old_[label] = u;
      to_new_[u] = label;
      walk(pos);
      to_old_[label] = -1;
      to_new_[u] = -1;
    }
  }

  const LoopTable& t_;
  int n_;
  int m_;                     // subtable side: n - 1
  std::vector<Elem> to_new_;  // original element -> new label
  std::vector<Elem> to_old_;  // new label -> original element
  std::vector<Elem> best_;    // subtable cells, row-major
};

std::vector<Elem> canonical_cells(const LoopTable& t) {
  return CanonSearch(t).run();
}

/// Partially filled normalized table with row/column usage bitmasks.
struct PartialTable {
  int n;
  std::uint32_t full;
  std::vector<Elem> cells;
  std::vector<std::uint32_t> rowm, colm;

  explicit PartialTable(int order)
      : n(order),
        full((1u << order) - 1),
        cells(static_cast<std::size_t>(order) * order, -1),
        rowm(order), colm(order) {
    for (int j = 0; j < n; ++j) cells[j] = j;
    for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i) * n] = i;
    for (int i = 1; i < n; ++i) rowm[i] = 1u << i;
    for (int j = 1; j < n; ++j) colm[j] = 1u << j;
    rowm[0] = colm[0] = full;
  }

  Elem at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }

  void place(int i, int j, Elem v) {
    cells[static_cast<std::size_t>(i) * n + j] = v;
    rowm[i] |= 1u << v;
    colm[j] |= 1u << v;
  }

  void unplace(int i, int j, Elem v) {
    cells[static_cast<std::size_t>(i) * n + j] = -1;
    rowm[i] &= ~(1u << v);
    colm[j] &= ~(1u << v);
  }

  /// Moufang identity (1), z(x(zy)) = ((zx)z)y, over the instances that
  /// became fully determined when row r was completed: z, x and both
  /// intermediate products within rows 0..r, at least one of them equal
  /// to r.
  bool moufang_row_ok(int r) const {
    for (Elem z = 0; z <= r; ++z)
      for (Elem x = 0; x <= r; ++x) {
        const Elem zx = at(z, x);
        if (zx > r) continue;
        const Elem zxz = at(zx, z);
        if (zxz > r) continue;
        if (z != r && x != r && zx != r && zxz != r) continue;
        for (Elem y = 0; y < n; ++y)
          if (at(z, at(x, at(z, y))) != at(zxz, y)) return false;
      }
    return true;
  }
};

struct TaskResult {
  EnumerationStats stats;
  std::vector<std::vector<Elem>> tables;  // survivors, lexicographic
};

bool passes(const LoopTable& t, Filter f) {
  switch (f) {
    case Filter::Moufang: return is_moufang(t).holds;
    case Filter::Cc: return is_cc(t).holds;
    case Filter::Nonassociative: return !is_associative(t).holds;
    case Filter::NuclearCommutators: return has_nuclear_commutators(t);
  }
  return false;
}

EnumerationStats empty_stats(const EnumerationJob& job) {
  EnumerationStats st;
  for (Filter f : job.filters) st.stages.push_back({to_string(f), 0});
  if (job.up_to_iso) st.stages.push_back({"canonical", 0});
  return st;
}

/// Completes one subtree (a fixed first free row) of the search.
class TaskRunner {
 public:
  TaskRunner(const EnumerationJob& job, const std::atomic<bool>& cancelled)
      : job_(job),
        cancelled_(cancelled),
        n_(job.order),
        prune_moufang_(n_ >= kMoufangPruneFrom &&
                       std::find(job.filters.begin(), job.filters.end(),
                                 Filter::Moufang) != job.filters.end()) {}

  TaskResult run(const std::vector<Elem>& seed) {
    result_ = TaskResult{empty_stats(job_), {}};
    PartialTable pt(n_);
    for (std::size_t c = 0; c < seed.size(); ++c)
      pt.place(1, 1 + static_cast<int>(c), seed[c]);
    const bool row1_complete = static_cast<int>(seed.size()) == n_ - 1;
    if (!prune_moufang_ || !row1_complete || pt.moufang_row_ok(1))
      search(pt, static_cast<int>(seed.size()));
    return std::move(result_);
  }

 private:
  void search(PartialTable& pt, int depth) {
    if (cancelled_.load(std::memory_order_relaxed)) return;
    const int free_cells = (n_ - 1) * (n_ - 1);
    if (depth >= free_cells) {
      complete(pt);
      return;
    }
    const int i = 1 + depth / (n_ - 1);
    const int j = 1 + depth % (n_ - 1);
    std::uint32_t avail = ~(pt.rowm[i] | pt.colm[j]) & pt.full;
    while (avail) {
      const Elem v = std::countr_zero(avail);
      avail &= avail - 1;
      pt.place(i, j, v);
      if (!prune_moufang_ || j != n_ - 1 || pt.moufang_row_ok(i))
        search(pt, depth + 1);
      pt.unplace(i, j, v);
    }
  }

  void complete(const PartialTable& pt) {
    ++result_.stats.generated;
    const LoopTable t = LoopTable::require(MagmaTable(n_, pt.cells));
    std::size_t stage = 0;
    for (Filter f : job_.filters) {
      if (!passes(t, f)) return;
      ++result_.stats.stages[stage++].survivors;
    }
    if (job_.up_to_iso) {
      if (canonical_cells(t) != pt.cells) return;
      ++result_.stats.stages[stage].survivors;
    }
    result_.tables.push_back(pt.cells);
  }

  const EnumerationJob& job_;
  const std::atomic<bool>& cancelled_;
  int n_;
  bool prune_moufang_;
  TaskResult result_;
};

/// All valid prefixes of row 1 up to the split depth, lexicographic.
std::vector<std::vector<Elem>> row1_seeds(int n) {
  const int depth = split_depth(n);
  if (depth == 0) return {{}};
  std::vector<std::vector<Elem>> seeds;
  PartialTable pt(n);
  std::vector<Elem> prefix(depth, -1);
  const auto fill = [&](auto&& self, int j) -> void {
    if (j > depth) {
      seeds.push_back(prefix);
      return;
    }
    std::uint32_t avail = ~(pt.rowm[1] | pt.colm[j]) & pt.full;
    while (avail) {
      const Elem v = std::countr_zero(avail);
      avail &= avail - 1;
      pt.place(1, j, v);
      prefix[j - 1] = v;
      self(self, j + 1);
      pt.unplace(1, j, v);
    }
  };
  fill(fill, 1);
  return seeds;
}

void merge_stats(EnumerationStats& into, const EnumerationStats& from) {
  into.generated += from.generated;
  for (std::size_t i = 0; i < into.stages.size(); ++i)
    into.stages[i].survivors += from.stages[i].survivors;
}

}  // namespace

void enumerate(const EnumerationJob& job,
               const std::function<bool(const LoopTable&)>& sink,
               EnumerationStats* stats) {
  const int n = job.order;
  if (n < 1)
    throw Error(Error::Kind::InvalidOrder,
                "enumerate: order must be >= 1, got " + std::to_string(n));
  const bool has_moufang =
      std::find(job.filters.begin(), job.filters.end(), Filter::Moufang) !=
      job.filters.end();
  if (n > kMaxMoufangFiltered)
    throw Error(Error::Kind::OrderTooLarge,
                "enumerate: order " + std::to_string(n) + " exceeds the cap " +
                    std::to_string(kMaxMoufangFiltered));
  if (n > kMaxUnfiltered && !has_moufang)
    throw Error(Error::Kind::OrderTooLarge,
                "enumerate: orders above " + std::to_string(kMaxUnfiltered) +
                    " need the moufang filter to prune the search");

  const std::vector<std::vector<Elem>> seeds = row1_seeds(n);
  EnumerationStats total = empty_stats(job);
  std::atomic<bool> cancelled{false};
  bool stopped = false;

  const auto emit_task = [&](TaskResult& r) {
    merge_stats(total, r.stats);
    for (std::vector<Elem>& cells : r.tables) {
      if (job.limit && total.emitted >= *job.limit) {
        stopped = true;
        break;
      }
      const LoopTable t = LoopTable::require(MagmaTable(n, std::move(cells)));
      ++total.emitted;
      if (!sink(t)) {
        stopped = true;
        break;
      }
    }
    r.tables.clear();
    if (stopped) cancelled.store(true);
  };

  const int workers =
      std::min<int>(resolve_threads(job.threads), static_cast<int>(seeds.size()));
  if (workers <= 1) {
    TaskRunner runner(job, cancelled);
    for (std::size_t k = 0; k < seeds.size() && !stopped; ++k) {
      TaskResult r = runner.run(seeds[k]);
      emit_task(r);
    }
  } else {
    std::vector<TaskResult> results(seeds.size());
    std::vector<char> done(seeds.size(), 0);
    std::mutex m;
    std::condition_variable cv_done, cv_window;
    std::atomic<std::size_t> next{0};
    std::size_t merge_head = 0;
    const std::size_t window = static_cast<std::size_t>(workers) + 2;

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        TaskRunner runner(job, cancelled);
        for (;;) {
          const std::size_t k = next.fetch_add(1);
          if (k >= seeds.size()) return;
          {
            std::unique_lock lk(m);
            cv_window.wait(lk, [&] {
              return cancelled.load() || k < merge_head + window;
            });
          }
          if (cancelled.load()) return;
          TaskResult r = runner.run(seeds[k]);
          {
            std::lock_guard lk(m);
            results[k] = std::move(r);
            done[k] = 1;
          }
          cv_done.notify_all();
        }
      });
    }
    for (std::size_t k = 0; k < seeds.size() && !stopped; ++k) {
      {
        std::unique_lock lk(m);
        cv_done.wait(lk, [&] { return done[k] != 0; });
      }
      emit_task(results[k]);
      {
        std::lock_guard lk(m);
        merge_head = k + 1;
      }
      cv_window.notify_all();
    }
    cancelled.store(true);
    cv_window.notify_all();
    for (std::thread& th : pool) th.join();
  }

  if (stats) *stats = std::move(total);
}

std::vector<LoopTable> enumerate_all(const EnumerationJob& job) {
  std::vector<LoopTable> out;
  enumerate(job, [&](const LoopTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::string canonical_form(const LoopTable& t, int max_order) {
  if (t.order() > max_order)
    throw Error(Error::Kind::OrderTooLarge,
                "canonical_form supports order <= " + std::to_string(max_order) +
                    ", got " + std::to_string(t.order()));
  return format_table(MagmaTable(t.order(), canonical_cells(t)));
}

std::vector<CounterexampleHit> counterexample_search(int order,
                                                     const Fraction& bound,
                                                     int threads) {
  EnumerationJob job;
  job.order = order;
  job.filters = {Filter::Moufang, Filter::Nonassociative};
  job.up_to_iso = true;
  job.threads = threads;
  std::vector<CounterexampleHit> hits;
  enumerate(job, [&](const LoopTable& t) {
    const Fraction p = p_assoc(t);
    if (p > bound) hits.push_back({t, p});
    return true;
  });
  return hits;
}

}  // namespace looplab
