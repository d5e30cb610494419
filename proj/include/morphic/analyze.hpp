#pragma once

// Property analyzers over finite prefixes: primitivity, frequencies, factor
// complexity, recurrence evidence, power and pattern searches, runs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morphic/core.hpp"
#include "morphic/generate.hpp"

namespace morphic {

// ---------------------------------------------------------------------------
// Primitivity

namespace detail {

using BoolMatrix = std::vector<std::vector<bool>>;

inline BoolMatrix support(const IncidenceMatrix& M) {
  BoolMatrix B(M.size(), std::vector<bool>(M.size()));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) B[i][j] = M.at(i, j) != 0;
  return B;
}

inline BoolMatrix bool_product(const BoolMatrix& x, const BoolMatrix& y) {
  const std::size_t n = x.size();
  BoolMatrix r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (y[k][j]) r[i][j] = true;
  return r;
}

inline bool all_positive(const BoolMatrix& B) {
  for (const auto& row : B)
    for (bool b : row)
      if (!b) return false;
  return true;
}

}  // namespace detail

// Smallest n >= 1 such that every h^n(a) contains every letter, searched up
// to the Wielandt bound (|Σ|-1)^2 + 1.
inline std::optional<std::size_t> primitivity(const Morphism& m) {
  const std::size_t k = m.size();
  const auto base = detail::support(incidence_matrix(m));
  auto current = base;
  const std::size_t bound = (k - 1) * (k - 1) + 1;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (detail::all_positive(current)) return n;
    current = detail::bool_product(current, base);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Suffix index: suffix array + LCP, the engine behind factor counting.

class SuffixIndex {
 public:
  explicit SuffixIndex(std::span<const Letter> w) : text_(w.begin(), w.end()) {
    build_suffix_array();
    build_lcp();
  }

  std::size_t size() const { return text_.size(); }
  const std::vector<std::size_t>& suffix_array() const { return sa_; }
  const std::vector<std::size_t>& lcp() const { return lcp_; }

  // Calls fn(span of suffix-array entries) once per distinct factor of
  // length n; every entry in the span is a start position of that factor.
  template <typename Fn>
  void for_each_factor(std::size_t n, Fn&& fn) const {
    if (n == 0) return;
    bool open = false;
    std::size_t run = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> group;
    for (std::size_t r = 0; r < sa_.size(); ++r) {
      if (r > 0) run = std::min(run, lcp_[r]);
      if (text_.size() - sa_[r] < n) continue;
      if (open && run >= n) {
        group.push_back(sa_[r]);
      } else {
        if (open) fn(std::span<const std::size_t>(group));
        group.assign(1, sa_[r]);
        open = true;
      }
      run = std::numeric_limits<std::size_t>::max();
    }
    if (open) fn(std::span<const std::size_t>(group));
  }

  std::size_t count_distinct(std::size_t n) const {
    if (n == 0) return 1;
    std::size_t count = 0;
    bool seen = false;
    std::size_t run = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < sa_.size(); ++r) {
      if (r > 0) run = std::min(run, lcp_[r]);
      if (text_.size() - sa_[r] < n) continue;
      if (!seen || run < n) ++count;
      seen = true;
      run = std::numeric_limits<std::size_t>::max();
    }
    return count;
  }

 private:
  // Prefix doubling with counting sorts, O(n log n).
  void build_suffix_array() {
    const std::size_t n = text_.size();
    sa_.resize(n);
    if (n == 0) return;
    const std::size_t classes = *std::max_element(text_.begin(), text_.end()) + 1;
    std::vector<std::size_t> rank(n), tmp(n), count(std::max(classes, n) + 1);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i] = text_[i]];
    for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    for (std::size_t i = n; i-- > 0;) sa_[--count[rank[i]]] = i;

    for (std::size_t k = 1;; k <<= 1) {
      std::size_t p = 0;
      for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = i;
      for (std::size_t i = 0; i < n; ++i)
        if (sa_[i] >= k) tmp[p++] = sa_[i] - k;
      std::fill(count.begin(), count.end(), 0);
      for (std::size_t i = 0; i < n; ++i) ++count[rank[tmp[i]]];
      for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
      for (std::size_t i = n; i-- > 0;) sa_[--count[rank[tmp[i]]]] = tmp[i];

      std::swap(rank, tmp);
      auto second = [&](std::size_t i) -> std::ptrdiff_t {
        return i + k < n ? static_cast<std::ptrdiff_t>(tmp[i + k]) : -1;
      };
      rank[sa_[0]] = 0;
      p = 1;
      for (std::size_t i = 1; i < n; ++i) {
        const bool same = tmp[sa_[i - 1]] == tmp[sa_[i]] && second(sa_[i - 1]) == second(sa_[i]);
        rank[sa_[i]] = same ? p - 1 : p++;
      }
      if (p >= n) break;
    }
  }

  // Kasai et al.; lcp_[r] = LCP(suffix sa_[r-1], suffix sa_[r]), lcp_[0] = 0.
  void build_lcp() {
    const std::size_t n = text_.size();
    lcp_.assign(n, 0);
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[sa_[r]] = r;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rank[i] == 0) {
        h = 0;
        continue;
      }
      const std::size_t j = sa_[rank[i] - 1];
      while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
      lcp_[rank[i]] = h;
      if (h > 0) --h;
    }
  }

  Word text_;
  std::vector<std::size_t> sa_;
  std::vector<std::size_t> lcp_;
};

// ---------------------------------------------------------------------------
// Factor complexity

// Distinct-factor counts of a finite prefix: a lower bound for the infinite
// word's complexity function.
struct ComplexityProfile {
  std::size_t prefix_length = 0;
  std::vector<std::size_t> values;  // values[n-1] = p(n)

  std::size_t operator()(std::size_t n) const { return values.at(n - 1); }
};

inline ComplexityProfile factor_complexity(std::span<const Letter> w, std::size_t n_max) {
  if (2 * n_max > w.size())
    throw InvalidArgument("factor_complexity: n_max " + std::to_string(n_max) + " exceeds half the prefix length " +
                          std::to_string(w.size()));
  ComplexityProfile profile;
  profile.prefix_length = w.size();
  if (n_max == 0) return profile;
  SuffixIndex index(w);
  for (std::size_t n = 1; n <= n_max; ++n) profile.values.push_back(index.count_distinct(n));
  return profile;
}

// ---------------------------------------------------------------------------
// Recurrence evidence

struct GapReport {
  Word factor;
  std::vector<std::size_t> positions;
  std::optional<std::size_t> max_gap;  // empty when fewer than two occurrences
  std::size_t scanned_length = 0;
};

inline std::optional<std::size_t> max_consecutive_gap(std::span<const std::size_t> sorted_positions) {
  if (sorted_positions.size() < 2) return std::nullopt;
  std::size_t g = 0;
  for (std::size_t i = 1; i < sorted_positions.size(); ++i)
    g = std::max(g, sorted_positions[i] - sorted_positions[i - 1]);
  return g;
}

inline GapReport gap_report(std::span<const Letter> w, std::span<const Letter> x) {
  GapReport r;
  r.factor.assign(x.begin(), x.end());
  r.positions = occurrences(w, x);
  r.max_gap = max_consecutive_gap(r.positions);
  r.scanned_length = w.size();
  return r;
}

// Worst return window over every factor of length <= max_len in w: the
// largest of the first occurrence, any gap between consecutive occurrences,
// and the distance from the last occurrence to the end of w.
struct ReturnWindow {
  std::size_t factors_checked = 0;
  std::size_t worst_window = 0;
  Word worst_factor;
};

inline ReturnWindow uniform_recurrence_evidence(std::span<const Letter> w, std::size_t max_len) {
  ReturnWindow result;
  SuffixIndex index(w);
  std::vector<std::size_t> pos;
  for (std::size_t n = 1; n <= max_len; ++n) {
    index.for_each_factor(n, [&](std::span<const std::size_t> starts) {
      pos.assign(starts.begin(), starts.end());
      std::sort(pos.begin(), pos.end());
      // Smallest L such that every length-L factor of w contains the factor.
      std::size_t window = std::max(pos.front() + n, w.size() - pos.back());
      if (auto g = max_consecutive_gap(pos)) window = std::max(window, *g + n - 1);
      ++result.factors_checked;
      if (window > result.worst_window) {
        result.worst_window = window;
        result.worst_factor.assign(w.begin() + static_cast<std::ptrdiff_t>(pos.front()),
                                   w.begin() + static_cast<std::ptrdiff_t>(pos.front() + n));
      }
    });
  }
  return result;
}

// Factors of w[0..window) of length <= max_len that never start at a
// position >= window in w. An empty result is evidence of recurrence.
inline std::vector<Word> non_recurring_factors(std::span<const Letter> w, std::size_t window, std::size_t max_len) {
  if (window > w.size()) throw InvalidArgument("non_recurring_factors: window exceeds word length");
  std::vector<Word> missing;
  SuffixIndex index(w);
  for (std::size_t n = 1; n <= max_len; ++n) {
    index.for_each_factor(n, [&](std::span<const std::size_t> starts) {
      bool inside = false;
      bool later = false;
      for (std::size_t p : starts) {
        if (p + n <= window) inside = true;
        if (p >= window) later = true;
      }
      if (inside && !later) {
        const std::size_t p = *std::min_element(starts.begin(), starts.end());
        missing.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(p),
                             w.begin() + static_cast<std::ptrdiff_t>(p + n));
      }
    });
  }
  return missing;
}

// ---------------------------------------------------------------------------
// Letter frequencies

struct FrequencyReport {
  std::size_t length = 0;
  std::vector<std::size_t> counts;  // empirical frequency = counts[a] / length
  std::optional<std::vector<double>> theoretical;
  double residual = 0.0;
  std::size_t iterations = 0;

  double empirical(Letter a) const {
    return length == 0 ? 0.0 : static_cast<double>(counts.at(a)) / static_cast<double>(length);
  }
};

inline constexpr double kPerronTolerance = 1e-10;
inline constexpr std::size_t kPerronMaxIterations = 100'000;

// Normalized left Perron eigenvector of M(m) by power iteration.
inline std::vector<double> perron_frequencies(const Morphism& m, double* residual_out = nullptr,
                                              std::size_t* iterations_out = nullptr) {
  if (!primitivity(m)) throw ConvergenceError("Perron frequencies need a primitive morphism");
  const auto M = incidence_matrix(m);
  const std::size_t n = M.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  for (std::size_t it = 1; it <= kPerronMaxIterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) next[b] += v[a] * static_cast<double>(M.at(a, b));
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double residual = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      next[b] /= total;
      residual += std::abs(next[b] - v[b]);
    }
    std::swap(v, next);
    if (residual < kPerronTolerance) {
      if (residual_out) *residual_out = residual;
      if (iterations_out) *iterations_out = it;
      return v;
    }
  }
  throw ConvergenceError("power iteration did not reach the residual bound");
}

inline FrequencyReport letter_frequency(std::size_t alphabet_size, std::span<const Letter> w_prefix,
                                        const std::optional<Morphism>& m = std::nullopt) {
  FrequencyReport r;
  r.length = w_prefix.size();
  r.counts = letter_counts(alphabet_size, w_prefix);
  if (m) r.theoretical = perron_frequencies(*m, &r.residual, &r.iterations);
  return r;
}

// ---------------------------------------------------------------------------
// Powers and patterns (bounded-period scans)

struct Occurrence {
  std::size_t position = 0;
  std::size_t period = 0;  // or block length / |x|, depending on the search

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

namespace detail {

// run[j] = number of consecutive indices j' >= j with w[j'] == w[j'+p].
inline void period_runs(std::span<const Letter> w, std::size_t p, std::vector<std::uint32_t>& run) {
  const std::size_t n = w.size();
  run.assign(n + 1, 0);
  if (p >= n) return;
  for (std::size_t j = n - p; j-- > 0;) run[j] = w[j] == w[j + p] ? run[j + 1] + 1 : 0;
}

}  // namespace detail

// Every u^k with |u| <= max_period, as (position, |u|).
inline std::vector<Occurrence> find_k_powers(std::span<const Letter> w, std::size_t k, std::size_t max_period) {
  if (k < 2) throw InvalidArgument("find_k_powers: k must be at least 2");
  std::vector<Occurrence> hits;
  std::vector<std::uint32_t> run;
  for (std::size_t p = 1; p <= max_period && k * p <= w.size(); ++p) {
    detail::period_runs(w, p, run);
    for (std::size_t i = 0; i + k * p <= w.size(); ++i)
      if (run[i] >= (k - 1) * p) hits.push_back({i, p});
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

// Factors of shape xyxyx: length 2p+1 with period p.
inline std::vector<Occurrence> find_overlaps(std::span<const Letter> w, std::size_t max_period) {
  std::vector<Occurrence> hits;
  std::vector<std::uint32_t> run;
  for (std::size_t p = 1; p <= max_period && 2 * p + 1 <= w.size(); ++p) {
    detail::period_runs(w, p, run);
    for (std::size_t i = 0; i + 2 * p + 1 <= w.size(); ++i)
      if (run[i] >= p + 1) hits.push_back({i, p});
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

// Three consecutive blocks of equal length and equal value sum.
inline std::vector<Occurrence> find_additive_cubes(std::span<const Letter> w, std::span<const std::int64_t> values,
                                                   std::size_t max_block) {
  std::vector<std::int64_t> sum(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= values.size()) throw InvalidArgument("find_additive_cubes: value map is not total");
    sum[i + 1] = sum[i] + values[w[i]];
  }
  std::vector<Occurrence> hits;
  for (std::size_t len = 1; len <= max_block && 3 * len <= w.size(); ++len)
    for (std::size_t i = 0; i + 3 * len <= w.size(); ++i) {
      const auto a = sum[i + len] - sum[i];
      const auto b = sum[i + 2 * len] - sum[i + len];
      const auto c = sum[i + 3 * len] - sum[i + 2 * len];
      if (a == b && b == c) hits.push_back({i, len});
    }
  std::sort(hits.begin(), hits.end());
  return hits;
}

// Occurrences of x·x·reverse(x), as (position, |x|).
inline std::vector<Occurrence> find_xxxR(std::span<const Letter> w, std::size_t max_x) {
  std::vector<Occurrence> hits;
  std::vector<std::uint32_t> run;
  for (std::size_t len = 1; len <= max_x && 3 * len <= w.size(); ++len) {
    detail::period_runs(w, len, run);
    for (std::size_t i = 0; i + 3 * len <= w.size(); ++i) {
      if (run[i] < len) continue;
      bool mirrored = true;
      for (std::size_t j = 0; j < len && mirrored; ++j) mirrored = w[i + 2 * len + j] == w[i + len - 1 - j];
      if (mirrored) hits.push_back({i, len});
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

// ---------------------------------------------------------------------------
// Subsequences, runs, occurrence growth

inline Word arithmetic_subsequence(std::span<const Letter> w, std::size_t start, std::size_t step, std::size_t count) {
  if (step < 1) throw InvalidArgument("arithmetic_subsequence: step must be positive");
  if (count > 0 && start + step * (count - 1) >= w.size())
    throw InvalidArgument("arithmetic_subsequence: progression runs past the prefix");
  Word out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(w[start + i * step]);
  return out;
}

struct Run {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

// Maximal runs of `letter`, in order.
inline std::vector<Run> run_statistics(std::span<const Letter> w, Letter letter) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] != letter) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j] == letter) ++j;
    runs.push_back({i, j - i});
    i = j;
  }
  return runs;
}

inline std::vector<std::size_t> occurrence_growth(std::span<const Letter> w, Letter letter,
                                                  std::span<const std::size_t> checkpoints) {
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw InvalidArgument("occurrence_growth: checkpoints must be ascending");
  if (!checkpoints.empty() && checkpoints.back() > w.size())
    throw InvalidArgument("occurrence_growth: checkpoint beyond the prefix");
  std::vector<std::size_t> counts;
  std::size_t seen = 0, i = 0;
  for (std::size_t c : checkpoints) {
    for (; i < c; ++i) seen += w[i] == letter;
    counts.push_back(seen);
  }
  return counts;
}

inline std::vector<std::size_t> occurrence_growth(WordStream& stream, Letter letter,
                                                  std::span<const std::size_t> checkpoints,
                                                  std::size_t budget = kDefaultPrefixBudget) {
  const std::size_t last = checkpoints.empty() ? 0 : *std::max_element(checkpoints.begin(), checkpoints.end());
  const Word w = stream.prefix(last, budget);
  return occurrence_growth(std::span<const Letter>(w), letter, checkpoints);
}

}  // namespace morphic
