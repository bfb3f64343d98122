#include "gdecomp/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "gdecomp/error.hpp"
#include "gdecomp/isomorphism.hpp"
#include "gdecomp/permutation.hpp"

namespace gdecomp {
namespace {

using CopyIndex = std::uint32_t;

struct CopyTable {
  std::vector<Embedding> embeddings;
  std::vector<std::vector<std::uint32_t>> pairs_of;
  std::vector<PairSet> masks;
  std::vector<std::vector<CopyIndex>> covering;
  CopyIndex template_copy = 0;
};

CopyTable build_table(const SimpleGraph& g, std::size_t cap) {
  const int n = g.order();
  CopyTable t;
  t.embeddings = enumerate_embeddings(g, cap);
  t.covering.resize(pair_count(n));
  const auto self = image_pairs(g, identity_permutation(n));
  for (CopyIndex c = 0; c < t.embeddings.size(); ++c) {
    const auto& p = t.embeddings[c].image;
    std::vector<std::uint32_t> pairs;
    for (const auto& e : g.edges())
      pairs.push_back(static_cast<std::uint32_t>(pair_index(n, p[e.u], p[e.v])));
    std::sort(pairs.begin(), pairs.end());
    for (auto q : pairs) t.covering[q].push_back(c);
    t.masks.push_back(image_pairs(g, p));
    if (t.masks.back() == self) t.template_copy = c;
    t.pairs_of.push_back(std::move(pairs));
  }
  return t;
}

class SearchState {
 public:
  SearchState(const CopyTable& t, int m)
      : t_(t), residual_(t.covering.size(), static_cast<std::int16_t>(m)),
        saturated_(t.covering.size()) {}

  bool fits(CopyIndex c) const { return !t_.masks[c].intersects(saturated_); }
  int residual(int pair) const { return residual_[pair]; }

  void place(CopyIndex c) {
    for (auto q : t_.pairs_of[c])
      if (--residual_[q] == 0) saturated_.set(q);
    chosen_.push_back(c);
  }
  void unplace() {
    const auto c = chosen_.back();
    chosen_.pop_back();
    for (auto q : t_.pairs_of[c])
      if (residual_[q]++ == 0) saturated_.reset(q);
  }

  /// Pair with least positive residual, smallest index on ties; -1 if none.
  int next_pair() const {
    int best = -1;
    for (int q = 0; q < static_cast<int>(residual_.size()); ++q)
      if (residual_[q] > 0 && (best < 0 || residual_[q] < residual_[best])) best = q;
    return best;
  }

  const std::vector<CopyIndex>& chosen() const { return chosen_; }

 private:
  const CopyTable& t_;
  std::vector<std::int16_t> residual_;
  PairSet saturated_;
  std::vector<CopyIndex> chosen_;
};

struct SharedControl {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> best_job{std::numeric_limits<std::size_t>::max()};
};

enum class Step { Solved, Failed, Aborted };

// A subtree root: the copies placed after the template, and where to resume.
struct Job {
  std::vector<CopyIndex> prefix;
  int pair = -1;
  CopyIndex min_copy = 0;
};

class Explorer {
 public:
  Explorer(const CopyTable& t, SearchState& s, SharedControl& ctl, std::size_t job)
      : t_(t), s_(s), ctl_(ctl), job_(job) {}

  Step dfs(int pair, CopyIndex min_copy) {
    if (pair < 0) {
      pair = s_.next_pair();
      min_copy = 0;
      if (pair < 0) return Step::Solved;
    }
    const auto& cover = t_.covering[pair];
    for (auto it = std::lower_bound(cover.begin(), cover.end(), min_copy); it != cover.end();
         ++it) {
      const CopyIndex c = *it;
      if (!s_.fits(c)) continue;
      if (ctl_.nodes.fetch_add(1, std::memory_order_relaxed) >= ctl_.budget) {
        ctl_.budget_hit.store(true, std::memory_order_relaxed);
        return Step::Aborted;
      }
      if (ctl_.best_job.load(std::memory_order_relaxed) < job_) return Step::Aborted;
      s_.place(c);
      const bool open = s_.residual(pair) > 0;
      const auto r = dfs(open ? pair : -1, open ? c : 0);
      if (r == Step::Solved) return r;
      s_.unplace();
      if (r == Step::Aborted) return r;
    }
    return Step::Failed;
  }

  // Enumerates subtree roots `depth` placements below the current state, in
  // the order the serial search would visit them.
  void collect(int pair, CopyIndex min_copy, int depth, std::vector<Job>& jobs) {
    if (pair < 0) {
      pair = s_.next_pair();
      min_copy = 0;
      if (pair < 0) {
        jobs.push_back({s_.chosen(), -1, 0});
        return;
      }
    }
    if (depth == 0) {
      jobs.push_back({s_.chosen(), pair, min_copy});
      return;
    }
    const auto& cover = t_.covering[pair];
    for (auto it = std::lower_bound(cover.begin(), cover.end(), min_copy); it != cover.end();
         ++it) {
      const CopyIndex c = *it;
      if (!s_.fits(c)) continue;
      ctl_.nodes.fetch_add(1, std::memory_order_relaxed);
      s_.place(c);
      const bool open = s_.residual(pair) > 0;
      collect(open ? pair : -1, open ? c : 0, depth - 1, jobs);
      s_.unplace();
    }
  }

 private:
  const CopyTable& t_;
  SearchState& s_;
  SharedControl& ctl_;
  std::size_t job_;
};

Decomposition make_certificate(const SimpleGraph& g, int m, const CopyTable& t,
                               const std::vector<CopyIndex>& chosen) {
  Decomposition d{g, m, {}};
  d.copies.push_back({identity_permutation(g.order())});
  for (auto c : chosen) d.copies.push_back(t.embeddings[c]);
  return d;
}

}  // namespace

SearchOutcome exact_multicover_search(const SimpleGraph& g, int m, const SearchOptions& options) {
  require_template(g);
  if (m < 1 || m > kMaxMultiplicity)
    throw InvalidArgument("multiplicity must lie in [1, " + std::to_string(kMaxMultiplicity) + "]");
  if (!required_copy_count(g, m))
    throw InvalidArgument("e = " + std::to_string(g.size()) + " does not divide m*n(n-1)/2");

  const auto table = build_table(g, options.copy_cap);
  SharedControl ctl;
  ctl.budget = options.budget;

  auto seeded = [&] {
    SearchState s(table, m);
    s.place(table.template_copy);
    return s;
  };
  auto chosen_after_seed = [](const SearchState& s) {
    return std::vector<CopyIndex>(s.chosen().begin() + 1, s.chosen().end());
  };

  SearchOutcome out;
  std::vector<CopyIndex> solution;
  bool solved = false;

  if (options.jobs <= 1) {
    auto s = seeded();
    Explorer ex(table, s, ctl, 0);
    if (ex.dfs(-1, 0) == Step::Solved) {
      solved = true;
      solution = chosen_after_seed(s);
    }
  } else {
    std::vector<Job> jobs;
    {
      auto s = seeded();
      Explorer(table, s, ctl, 0).collect(-1, 0, 2, jobs);
    }
    std::vector<std::vector<CopyIndex>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t j = next.fetch_add(1);
        if (j >= jobs.size() || j > ctl.best_job.load()) return;
        auto s = seeded();
        for (std::size_t i = 1; i < jobs[j].prefix.size(); ++i) s.place(jobs[j].prefix[i]);
        Explorer ex(table, s, ctl, j);
        if (ex.dfs(jobs[j].pair, jobs[j].min_copy) == Step::Solved) {
          results[j] = chosen_after_seed(s);
          auto best = ctl.best_job.load();
          while (j < best && !ctl.best_job.compare_exchange_weak(best, j)) {
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    for (int i = 0; i < options.jobs; ++i) pool.emplace_back(worker);
    pool.clear();
    const auto best = ctl.best_job.load();
    if (best < jobs.size()) {
      solved = true;
      solution = std::move(results[best]);
    }
  }

  out.nodes = std::min(ctl.nodes.load(), ctl.budget);
  if (solved) {
    out.status = SearchStatus::Found;
    out.certificate = make_certificate(g, m, table, solution);
    if (auto v = verify(*out.certificate); !v)
      throw Error("internal error: search produced an invalid certificate: " + v.diagnostic);
  } else {
    out.status = ctl.budget_hit.load() ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
  }
  return out;
}

}  // namespace gdecomp
