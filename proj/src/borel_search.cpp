#include "crlab/borel_search.hpp"

#include "crlab/commrank.hpp"
#include "crlab/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

namespace crlab {

namespace {

constexpr std::size_t kDefaultMaxSearchN = 6;

/// Positions forced by a single position under R1-R3.
std::uint64_t implied_by(std::size_t n, std::size_t i, std::size_t j,
                         ClosureRules rules) {
  std::uint64_t m = 0;
  if (i < j) {
    for (std::size_t k = 0; k <= i; ++k)
      for (std::size_t l = j; l < n; ++l)
        m |= position_bit(n, k, l);
    return m;
  }
  m |= position_bit(n, j, i);
  if (rules == ClosureRules::Full) {
    for (std::size_t p = 0; p < i; ++p)
      if (p != j)
        m |= position_bit(n, p, j);
    for (std::size_t q = j + 1; q < n; ++q)
      if (q != i)
        m |= position_bit(n, i, q);
  } else {
    for (std::size_t p = j + 1; p < i; ++p) {
      m |= position_bit(n, p, j);
      m |= position_bit(n, i, p);
    }
  }
  return m;
}

/// Upper positions sharing index i: (p,i) for p < i and (i,q) for q > i.
std::uint64_t upper_touching(std::size_t n, std::size_t i) {
  std::uint64_t m = 0;
  for (std::size_t p = 0; p < i; ++p)
    m |= position_bit(n, p, i);
  for (std::size_t q = i + 1; q < n; ++q)
    m |= position_bit(n, i, q);
  return m;
}

void require_mask_size(std::size_t n) {
  if (n > kMaskLimitN)
    throw Error(ErrorKind::InvalidArgument, "position masks support n <= 8");
}

Mat diagonal_rows(std::size_t n, const std::vector<std::vector<std::size_t>> &blocks) {
  Mat d(blocks.size(), n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto i : blocks[b])
      d(b, i) = 1;
  return d;
}

/// Appends `row` to the echelon rows `d` if it is independent.
bool add_diagonal(Mat &d, const Mat &row) {
  Mat all(d.rows() + 1, row.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < row.cols(); ++c)
      all(r, c) = d(r, c);
  for (std::size_t c = 0; c < row.cols(); ++c)
    all(d.rows(), c) = row(0, c);
  auto ech = rref(all);
  if (ech.pivots.size() == d.rows())
    return false;
  d = std::move(ech.reduced);
  return true;
}

} // namespace

std::size_t max_search_n() {
  if (const char *env = std::getenv("CRLAB_MAX_N")) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return std::min<std::size_t>(v, kMaskLimitN);
  }
  return kDefaultMaxSearchN;
}

std::string to_string(ClosureRules r) {
  return r == ClosureRules::Full ? "full" : "three-case";
}

ClosureRules parse_rules(const std::string &name) {
  if (name == "full")
    return ClosureRules::Full;
  if (name == "three-case")
    return ClosureRules::ThreeCase;
  throw Error(ErrorKind::Parse, "unknown rule set: " + name);
}

std::size_t InvariantSpaceSpec::dim() const {
  return static_cast<std::size_t>(std::popcount(s)) + d.rows();
}

std::vector<std::pair<std::size_t, std::size_t>> InvariantSpaceSpec::positions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < n * n; ++b)
    if (s >> b & 1)
      out.emplace_back(b / n + 1, b % n + 1);
  return out;
}

std::optional<std::vector<std::vector<std::size_t>>> InvariantSpaceSpec::partition() const {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> block;
    for (std::size_t j = i; j < n; ++j) {
      bool same = true;
      for (std::size_t r = 0; r < d.rows() && same; ++r)
        same = d(r, i) == d(r, j);
      if (same && !seen[j]) {
        seen[j] = true;
        block.push_back(j + 1);
      }
    }
    blocks.push_back(std::move(block));
  }
  if (blocks.size() != d.rows())
    return std::nullopt;
  return blocks;
}

MatrixSubspace InvariantSpaceSpec::realize() const {
  std::vector<Mat> gens;
  for (const auto &[i, j] : positions())
    gens.push_back(Mat::unit(n, i - 1, j - 1));
  for (std::size_t r = 0; r < d.rows(); ++r) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = d(r, i);
    gens.push_back(std::move(m));
  }
  return MatrixSubspace::span(n, gens);
}

InvariantSpaceSpec scalar_spec(std::size_t n, std::uint64_t s) {
  require_mask_size(n);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return {n, s, n == 0 ? Mat(0, 0) : diagonal_rows(n, {all})};
}

std::vector<std::vector<std::size_t>> dmax_blocks(std::size_t n, std::uint64_t s) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (!(s & position_bit(n, p, q)))
        parent[std::max(find(p), find(q))] = std::min(find(p), find(q));
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i)
    by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto &[root, members] : by_root)
    blocks.push_back(std::move(members));
  return blocks;
}

InvariantSpaceSpec dmax_spec(std::size_t n, std::uint64_t s) {
  require_mask_size(n);
  return {n, s, diagonal_rows(n, dmax_blocks(n, s))};
}

InvariantSpaceSpec triangular_closure(const InvariantSpaceSpec &spec,
                                      ClosureRules rules) {
  const std::size_t n = spec.n;
  require_mask_size(n);
  InvariantSpaceSpec out = spec;
  out.d = out.d.cols() == n ? rref(out.d).reduced : Mat(0, n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !(out.s & position_bit(n, i, j)))
          continue;
        const std::uint64_t add = implied_by(n, i, j, rules) & ~out.s;
        if (add) {
          out.s |= add;
          changed = true;
        }
        if (i > j) {
          Mat diff(1, n);
          diff(0, i) = 1;
          diff(0, j) = -1;
          changed = add_diagonal(out.d, diff) || changed;
        }
      }
    for (std::size_t r = 0; r < out.d.rows(); ++r)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (out.d(r, p) != out.d(r, q) && !(out.s & position_bit(n, p, q))) {
            out.s |= position_bit(n, p, q);
            changed = true;
          }
  }
  return out;
}

bool is_triangular_invariant(const MatrixSubspace &v) {
  const std::size_t n = v.ambient();
  const auto basis = v.basis();
  for (const auto &a : basis) {
    Mat diag(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j)
          diag(i, i) = a(i, i);
        else if (!is_zero(a(i, j)) && !v.contains(Mat::unit(n, i, j)))
          return false;
      }
    if (!v.contains(diag))
      return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mat e = Mat::unit(n, i, j);
      for (const auto &a : basis)
        if (!v.contains(commutator(a, e)) || !v.contains(e * a * e))
          return false;
    }
  return true;
}

bool spec_less(const InvariantSpaceSpec &a, const InvariantSpaceSpec &b) {
  if (a.n != b.n)
    return a.n < b.n;
  if (a.s != b.s)
    return a.s < b.s;
  if (a.d.rows() != b.d.rows())
    return a.d.rows() < b.d.rows();
  const auto &x = a.d.entries(), &y = b.d.entries();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<InvariantSpaceSpec> enumerate_invariant_spaces(std::size_t n,
                                                           ClosureRules rules) {
  if (n == 0 || n > max_search_n())
    throw Error(ErrorKind::InvalidArgument,
                "enumeration requires 1 <= n <= " + std::to_string(max_search_n()) +
                    " (set CRLAB_MAX_N to override)");
  std::vector<std::uint64_t> implied(n * n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        implied[i * n + j] = implied_by(n, i, j, rules);
        if (i < j)
          upper.emplace_back(i, j);
      }
  std::vector<std::uint64_t> touching(n);
  for (std::size_t i = 0; i < n; ++i)
    touching[i] = upper_touching(n, i);

  // Closedness of S alone: R1-R3 positions, and for lower (i,j) the indices
  // i and j are singleton blocks of D_max(S) (else e_i - e_j cannot lie in
  // any admissible D). Returns the indices that must stay singletons.
  auto closed = [&](std::uint64_t s, std::uint64_t &pinned) {
    pinned = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(rest));
      if ((implied[b] & ~s) != 0)
        return false;
      const std::size_t i = b / n, j = b % n;
      if (i > j) {
        if ((touching[i] & ~s) != 0 || (touching[j] & ~s) != 0)
          return false;
        pinned |= std::uint64_t{1} << i | std::uint64_t{1} << j;
      }
    }
    return true;
  };

  std::vector<InvariantSpaceSpec> out;
  // Every D constant on a coarsening of the D_max(S) blocks satisfies R4;
  // blocks holding pinned indices may not be merged.
  auto emit = [&](std::uint64_t s, std::uint64_t pinned) {
    const auto blocks = dmax_blocks(n, s);
    std::vector<std::vector<std::size_t>> fixed, free;
    for (const auto &b : blocks)
      (b.size() == 1 && (pinned >> b[0] & 1) ? fixed : free).push_back(b);
    // Restricted growth strings over the free blocks.
    std::vector<std::size_t> label(free.size(), 0);
    for (;;) {
      std::size_t groups = 0;
      for (auto g : label)
        groups = std::max(groups, g + 1);
      std::vector<std::vector<std::size_t>> merged(groups);
      for (std::size_t b = 0; b < free.size(); ++b)
        merged[label[b]].insert(merged[label[b]].end(), free[b].begin(), free[b].end());
      merged.insert(merged.end(), fixed.begin(), fixed.end());
      for (auto &m : merged)
        std::sort(m.begin(), m.end());
      std::sort(merged.begin(), merged.end());
      out.push_back({n, s, diagonal_rows(n, merged)});
      // Next string: bump the last position that may still grow.
      bool advanced = false;
      for (std::size_t pos = free.size(); pos-- > 1;) {
        const std::size_t prefix_max =
            *std::max_element(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(pos));
        if (label[pos] <= prefix_max) {
          ++label[pos];
          std::fill(label.begin() + static_cast<std::ptrdiff_t>(pos) + 1, label.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced)
        break;
    }
  };

  const std::uint64_t upper_count = std::uint64_t{1} << upper.size();
  for (std::uint64_t sel = 0; sel < upper_count; ++sel) {
    std::uint64_t u = 0, lower_allowed = 0;
    for (std::size_t t = 0; t < upper.size(); ++t)
      if (sel >> t & 1) {
        u |= position_bit(n, upper[t].first, upper[t].second);
        lower_allowed |= position_bit(n, upper[t].second, upper[t].first);
      }
    // Upper part must be R1-closed on its own.
    bool up_closed = true;
    for (std::uint64_t rest = u; rest && up_closed; rest &= rest - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(rest));
      up_closed = (implied[b] & ~u) == 0;
    }
    if (!up_closed)
      continue;
    // Lower part: submasks of the transpose of u (R3).
    for (std::uint64_t l = lower_allowed;; l = (l - 1) & lower_allowed) {
      std::uint64_t pinned = 0;
      if (closed(u | l, pinned))
        emit(u | l, pinned);
      if (l == 0)
        break;
    }
  }
  std::sort(out.begin(), out.end(), spec_less);
  return out;
}

bool staircase_pruned(std::size_t n, std::size_t k, std::uint64_t s) {
  if (k == 0 || k + 1 > n)
    return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!(s & position_bit(n, i + 1, i)) || !(s & position_bit(n, i, i + 1)))
      return false;
  return true;
}

std::size_t t_bound(std::size_t n, std::size_t k, std::size_t t) {
  if (k >= n || t < 1 || t > n - k)
    throw Error(ErrorKind::InvalidArgument, "t_bound requires 1 <= t <= n - k");
  return 1 + (t + k) * (n - t);
}

SearchReport search_max_dimension(std::size_t n, std::size_t k, std::size_t trials,
                                  std::uint64_t seed, ClosureRules rules,
                                  std::size_t jobs) {
  if (k >= n)
    throw Error(ErrorKind::InvalidArgument, "search requires 0 <= k < n");
  SearchReport rep;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  rep.seed = seed;
  rep.rules = rules;
  rep.bound = dimension_bound(n, k);

  auto specs = enumerate_invariant_spaces(n, rules);
  rep.enumerated = specs.size();
  std::stable_sort(specs.begin(), specs.end(),
                   [](const auto &a, const auto &b) { return a.dim() > b.dim(); });

  jobs = std::max<std::size_t>(1, jobs);
  for (std::size_t lo = 0; lo < specs.size();) {
    std::size_t hi = lo;
    while (hi < specs.size() && specs[hi].dim() == specs[lo].dim())
      ++hi;
    // 0 = pruned, 1 = sampled CERTIFIED_NO, 2 = PROBABLE_YES
    std::vector<int> verdict(hi - lo, 0);
    std::atomic<std::size_t> next{lo};
    auto worker = [&] {
      for (std::size_t idx; (idx = next++) < hi;) {
        const auto &spec = specs[idx];
        if (staircase_pruned(n, k, spec.s))
          continue;
        const auto res = satisfies_rank_condition(spec.realize(), k, trials,
                                                  derive_seed(derive_seed(seed, spec.s), spec.d.rows()));
        verdict[idx - lo] = res.verdict == RankVerdict::ProbableYes ? 2 : 1;
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t)
      pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
      th.join();

    for (std::size_t idx = lo; idx < hi; ++idx) {
      const int v = verdict[idx - lo];
      rep.pruned += v == 0;
      rep.sampled += v != 0;
      if (v == 2)
        rep.argmax.push_back(specs[idx]);
    }
    if (!rep.argmax.empty()) {
      rep.max_dim = specs[lo].dim();
      std::sort(rep.argmax.begin(), rep.argmax.end(), spec_less);
      break;
    }
    lo = hi;
  }
  return rep;
}

} // namespace crlab
