#include "prmhull/analyze.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <thread>

namespace prmhull {

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::optional<std::size_t> WeightDistribution::min_distance() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return std::nullopt;
}

std::string WeightDistribution::polynomial() const {
  const std::size_t n = length();
  std::string out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] == 0) continue;
    std::string term;
    if (counts[w] != 1) term += std::to_string(counts[w]);
    if (n - w > 0) term += (n - w == 1) ? "x" : "x^" + std::to_string(n - w);
    if (w > 0) term += (w == 1) ? "y" : "y^" + std::to_string(w);
    if (term.empty()) term = "1";
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::optional<std::uint64_t> message_count(std::uint32_t q, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    total *= q;
  }
  return total;
}

namespace {

using Support = std::vector<std::uint64_t>;

// One independent slice of the message space: the symbols from `free_count`
// upward are fixed, and `base` is the matching codeword. The slice visits
// base + span of the first free_count rows.
struct Task {
  std::vector<elem_t> base;
  std::size_t free_count = 0;
};

struct Accumulator {
  std::vector<std::uint64_t> hist;
  std::size_t min_weight = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> collect;
  std::vector<Support> supports;

  void compact() {
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  }
  void add_support(Support s) {
    supports.push_back(std::move(s));
    if (supports.size() >= compact_at) {
      compact();
      compact_at = std::max<std::size_t>(compact_at, 2 * supports.size());
    }
  }
  std::size_t compact_at = 1 << 20;
};

enum class Mode { Histogram, MinOnly };

// Loopless reflected mixed-radix Gray order (all radices q). On each step,
// `step(j, from, to)` is called with the row whose symbol moved.
template <typename Step>
void gray_walk(std::size_t m, std::uint32_t q, Step&& step) {
  std::vector<std::uint32_t> a(m, 0);
  std::vector<int> dir(m, 1);
  std::vector<std::size_t> focus(m + 1);
  for (std::size_t j = 0; j <= m; ++j) focus[j] = j;
  while (true) {
    const std::size_t j = focus[0];
    focus[0] = 0;
    if (j == m) return;
    const std::uint32_t from = a[j];
    a[j] = static_cast<std::uint32_t>(static_cast<int>(a[j]) + dir[j]);
    if (!step(j, from, a[j])) return;
    if (a[j] == 0 || a[j] == q - 1) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
  }
}

Support support_of(std::span<const elem_t> c) {
  Support s((c.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) s[i / 64] |= std::uint64_t{1} << (i % 64);
  return s;
}

// Sparse delta rows over any field and length.
class GenericEngine {
 public:
  explicit GenericEngine(const LinearCode& code) : field_(code.field()), q_(field_.q()) {
    const Matrix& g = code.generator();
    const std::size_t K = g.rows();
    supp_.resize(K);
    up_.resize(K);
    down_.resize(K);
    for (std::size_t j = 0; j < K; ++j) {
      for (std::size_t i = 0; i < g.cols(); ++i)
        if (g(j, i)) supp_[j].push_back(static_cast<std::uint32_t>(i));
      up_[j].resize(q_ - 1);
      down_[j].resize(q_ - 1);
      for (std::uint32_t a = 0; a + 1 < q_; ++a) {
        // Moving symbol j from element a to a+1 adds (e_{a+1} - e_a) g_j.
        const elem_t d = field_.sub(static_cast<elem_t>(a + 1), static_cast<elem_t>(a));
        for (auto pos : supp_[j]) {
          up_[j][a].push_back(field_.mul(d, g(j, pos)));
          down_[j][a].push_back(field_.neg(up_[j][a].back()));
        }
      }
    }
  }

  template <Mode M>
  void run(const Task& task, Accumulator& acc) const {
    std::vector<elem_t> c = task.base;
    std::size_t weight = 0;
    for (auto x : c) weight += (x != 0);
    const elem_t* table = field_.add_table();
    const std::uint32_t q = q_;

    auto visit = [&]() -> bool {
      if constexpr (M == Mode::Histogram) {
        ++acc.hist[weight];
        if (acc.collect && weight == *acc.collect) acc.add_support(support_of(c));
        return true;
      } else {
        if (weight != 0 && weight < acc.min_weight) acc.min_weight = weight;
        return acc.min_weight > 1;
      }
    };
    if (!visit()) return;
    gray_walk(task.free_count, q, [&](std::size_t j, std::uint32_t from, std::uint32_t to) {
      const auto& pos = supp_[j];
      const elem_t* vals = (to > from) ? up_[j][from].data() : down_[j][to].data();
      const std::size_t len = pos.size();
      if (table) {
        for (std::size_t t = 0; t < len; ++t) {
          const elem_t old = c[pos[t]];
          const elem_t nw = table[old * q + vals[t]];
          weight += static_cast<std::size_t>(nw != 0) - static_cast<std::size_t>(old != 0);
          c[pos[t]] = nw;
        }
      } else {
        for (std::size_t t = 0; t < len; ++t) {
          const elem_t old = c[pos[t]];
          const elem_t nw = field_.add(old, vals[t]);
          weight += static_cast<std::size_t>(nw != 0) - static_cast<std::size_t>(old != 0);
          c[pos[t]] = nw;
        }
      }
      return visit();
    });
  }

 private:
  Field field_;
  std::uint32_t q_;
  std::vector<std::vector<std::uint32_t>> supp_;
  std::vector<std::vector<std::vector<elem_t>>> up_, down_;
};

// F_3 codewords of length <= 64W as two bitplanes: lo marks symbol 1, hi
// marks symbol 2.
template <std::size_t W>
class TernaryEngine {
 public:
  struct Planes {
    std::array<std::uint64_t, W> lo{}, hi{};
  };

  explicit TernaryEngine(const LinearCode& code) {
    const Matrix& g = code.generator();
    rows_.resize(g.rows());
    for (std::size_t j = 0; j < g.rows(); ++j) rows_[j] = pack(g.row(j));
  }

  static Planes pack(std::span<const elem_t> v) {
    Planes p;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (i % 64);
      if (v[i] == 1) p.lo[i / 64] |= bit;
      if (v[i] == 2) p.hi[i / 64] |= bit;
    }
    return p;
  }

  template <Mode M>
  void run(const Task& task, Accumulator& acc) const {
    Planes c = pack(task.base);
    auto weight_of = [&]() {
      std::size_t w = 0;
      for (std::size_t i = 0; i < W; ++i) w += static_cast<std::size_t>(std::popcount(c.lo[i] | c.hi[i]));
      return w;
    };
    auto visit = [&](std::size_t weight) -> bool {
      if constexpr (M == Mode::Histogram) {
        ++acc.hist[weight];
        if (acc.collect && weight == *acc.collect) {
          Support s(W);
          for (std::size_t i = 0; i < W; ++i) s[i] = c.lo[i] | c.hi[i];
          acc.add_support(std::move(s));
        }
        return true;
      } else {
        if (weight != 0 && weight < acc.min_weight) acc.min_weight = weight;
        return acc.min_weight > 1;
      }
    };
    if (!visit(weight_of())) return;
    gray_walk(task.free_count, 3, [&](std::size_t j, std::uint32_t from, std::uint32_t to) {
      // Both steps 0->1 and 1->2 add g_j; the reverse steps add -g_j, which
      // is g_j with its planes swapped.
      const Planes& g = rows_[j];
      const auto& b1 = (to > from) ? g.lo : g.hi;
      const auto& b2 = (to > from) ? g.hi : g.lo;
      for (std::size_t i = 0; i < W; ++i) {
        const std::uint64_t a1 = c.lo[i], a2 = c.hi[i];
        const std::uint64_t t = (a1 | b2[i]) ^ (a2 | b1[i]);
        c.lo[i] = (a2 | b2[i]) ^ t;
        c.hi[i] = (a1 | b1[i]) ^ t;
      }
      return visit(weight_of());
    });
  }

 private:
  std::vector<Planes> rows_;
};

std::vector<elem_t> combine(const Matrix& g, const std::vector<std::pair<std::size_t, elem_t>>& coeffs) {
  std::vector<elem_t> v(g.cols(), 0);
  for (const auto& [row, c] : coeffs) g.field().axpy(v, c, g.row(row));
  return v;
}

// Splits the full message space on its top d symbols.
std::vector<Task> full_space_tasks(const LinearCode& code, const EnumerationOptions& options) {
  const std::size_t K = code.dimension();
  const std::uint32_t q = code.field().q();
  const unsigned workers = std::max(1u, options.workers);
  std::size_t d = 0;
  while (d < K && *message_count(q, d) < 16ull * workers) {
    const auto rest = message_count(q, K - d - 1);
    if (rest && *rest < options.min_task_messages) break;
    ++d;
  }
  std::vector<Task> tasks;
  const std::uint64_t count = *message_count(q, d);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<std::pair<std::size_t, elem_t>> coeffs;
    std::uint64_t rest = t;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs.emplace_back(K - d + i, static_cast<elem_t>(rest % q));
      rest /= q;
    }
    tasks.push_back(Task{combine(code.generator(), coeffs), K - d});
  }
  return tasks;
}

// Messages whose last nonzero symbol is 1: for each j, symbol j = 1, the
// symbols above it zero, the ones below free.
std::vector<Task> normalized_tasks(const LinearCode& code) {
  std::vector<Task> tasks;
  for (std::size_t j = 0; j < code.dimension(); ++j) {
    tasks.push_back(Task{combine(code.generator(), {{j, elem_t{1}}}), j});
  }
  return tasks;
}

template <typename Engine, Mode M>
std::vector<Accumulator> run_tasks(const Engine& engine, const std::vector<Task>& tasks, std::size_t n,
                                   std::optional<std::size_t> collect, unsigned workers) {
  std::vector<Accumulator> results(tasks.size());
  for (auto& r : results) {
    r.hist.assign(n + 1, 0);
    r.collect = collect;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      engine.template run<M>(tasks[i], results[i]);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return results;
}

template <Mode M>
std::vector<Accumulator> dispatch(const LinearCode& code, const std::vector<Task>& tasks,
                                  std::optional<std::size_t> collect, const EnumerationOptions& options,
                                  bool& packed) {
  const std::size_t n = code.length();
  packed = options.allow_packed && code.field().q() == 3 && n <= 128 && n > 0;
  if (packed && n <= 64) {
    return run_tasks<TernaryEngine<1>, M>(TernaryEngine<1>(code), tasks, n, collect, options.workers);
  }
  if (packed) {
    return run_tasks<TernaryEngine<2>, M>(TernaryEngine<2>(code), tasks, n, collect, options.workers);
  }
  return run_tasks<GenericEngine, M>(GenericEngine(code), tasks, n, collect, options.workers);
}

void check_budget(const LinearCode& code, const EnumerationOptions& options) {
  const auto count = message_count(code.field().q(), code.dimension());
  if (!count || *count > options.budget) {
    throw BudgetExceeded(code.label() + ": " + std::to_string(code.field().q()) + "^" +
                         std::to_string(code.dimension()) + " messages exceed the budget of " +
                         std::to_string(options.budget));
  }
}

BlockFamily to_blocks(std::vector<Support> supports, std::size_t n) {
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  BlockFamily family;
  family.ground_size = n;
  for (const auto& s : supports) {
    std::vector<std::uint32_t> block;
    for (std::size_t i = 0; i < n; ++i)
      if ((s[i / 64] >> (i % 64)) & 1) block.push_back(static_cast<std::uint32_t>(i));
    family.blocks.push_back(std::move(block));
  }
  std::sort(family.blocks.begin(), family.blocks.end());
  return family;
}

}  // namespace

EnumerationResult enumerate_codewords(const LinearCode& code, std::optional<std::size_t> collect_weight,
                                      const EnumerationOptions& options) {
  check_budget(code, options);
  const auto tasks = full_space_tasks(code, options);
  EnumerationResult result;
  auto parts = dispatch<Mode::Histogram>(code, tasks, collect_weight, options, result.packed);
  result.distribution.counts.assign(code.length() + 1, 0);
  std::vector<Support> supports;
  for (auto& part : parts) {
    for (std::size_t w = 0; w < part.hist.size(); ++w) result.distribution.counts[w] += part.hist[w];
    supports.insert(supports.end(), std::make_move_iterator(part.supports.begin()),
                    std::make_move_iterator(part.supports.end()));
  }
  result.supports = to_blocks(std::move(supports), code.length());
  return result;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
  return enumerate_codewords(code, std::nullopt, options).distribution;
}

std::size_t min_distance(const LinearCode& code, const EnumerationOptions& options) {
  check_budget(code, options);
  if (code.dimension() == 0) return 0;
  bool packed = false;
  const auto parts = dispatch<Mode::MinOnly>(code, normalized_tasks(code), std::nullopt, options, packed);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& p : parts) best = std::min(best, p.min_weight);
  return best;
}

BlockFamily min_weight_supports(const LinearCode& code, std::size_t weight, const EnumerationOptions& options) {
  return enumerate_codewords(code, weight, options).supports;
}

std::optional<std::uint64_t> design_lambda(const BlockFamily& family, unsigned t) {
  if (t < 1) throw OutOfRange("design_lambda requires t >= 1");
  if (family.blocks.empty()) return std::nullopt;
  const std::size_t k = family.blocks.front().size();
  for (const auto& b : family.blocks)
    if (b.size() != k) return std::nullopt;
  if (t > k) return std::nullopt;
  const std::size_t v = family.ground_size;
  // Index t-subsets by the combinatorial number system (colex rank).
  std::vector<std::vector<std::uint64_t>> choose(v + 1, std::vector<std::uint64_t>(t + 1, 0));
  for (std::size_t a = 0; a <= v; ++a) {
    choose[a][0] = 1;
    for (std::size_t b = 1; b <= t && b <= a; ++b) choose[a][b] = choose[a - 1][b - 1] + (b <= a - 1 ? choose[a - 1][b] : 0);
  }
  const std::uint64_t subsets = choose[v][t];
  constexpr std::uint64_t kMaxSubsets = 100'000'000;
  if (subsets > kMaxSubsets) throw OutOfRange("too many t-subsets to check");
  std::vector<std::uint64_t> hits(subsets, 0);
  std::vector<std::size_t> idx(t);
  for (const auto& block : family.blocks) {
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      std::uint64_t rank = 0;
      for (std::size_t i = 0; i < t; ++i) rank += choose[block[idx[i]]][i + 1];
      ++hits[rank];
      std::size_t i = t;
      while (i > 0 && idx[i - 1] == k - t + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  const std::uint64_t lambda = hits.front();
  for (auto h : hits)
    if (h != lambda) return std::nullopt;
  return lambda;
}

}  // namespace prmhull
