#include "sgideals/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgideals {

std::vector<std::string> default_names(int order) {
  if (order < 1 || order > 26) {
    throw std::invalid_argument("default names cover orders 1 to 26");
  }
  std::vector<std::string> names;
  names.reserve(order);
  for (int i = 0; i < order; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return names;
}

Semigroup relabel(Semigroup const& s, std::span<const Elem> perm) {
  int const n = s.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation size does not match the order");
  }
  std::vector<bool> hit(n, false);
  for (Elem p : perm) {
    if (p >= n || hit[p]) {
      throw std::invalid_argument("not a permutation");
    }
    hit[p] = true;
  }
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (Elem i = 0; i < n; ++i) {
    names[perm[i]] = s.name_of(i);
    for (Elem j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[s.product(i, j)];
    }
  }
  return Semigroup::from_table(std::move(names), std::move(table));
}

namespace {

// Applies perm to the flat table of s without constructing a Semigroup.
std::vector<Elem> relabeled_table(Semigroup const& s,
                                  std::vector<Elem> const& perm) {
  int const n = s.order();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[s.product(static_cast<Elem>(i), static_cast<Elem>(j))];
    }
  }
  return out;
}

}  // namespace

Semigroup canonical_form(Semigroup const& s) {
  int const n = s.order();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best_table = s.table();
  std::vector<Elem> best_perm = perm;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Elem> const candidate = relabeled_table(s, perm);
    if (candidate < best_table) {
      best_table = candidate;
      best_perm = perm;
    }
  }
  return relabel(s, best_perm);
}

bool is_canonical(Semigroup const& s) {
  int const n = s.order();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (relabeled_table(s, perm) < s.table()) {
      return false;
    }
  }
  return true;
}

namespace {

// Depth-first fill of the table in row-major order. After each placement
// only triples whose four lookups just became available are re-checked, so
// a completed table is fully associative.
class Backtracker {
 public:
  Backtracker(EnumerationConfig const& config, SemigroupSink const& sink)
      : config_(config),
        sink_(sink),
        n_(config.order),
        table_(static_cast<std::size_t>(n_) * n_, kNoElem),
        names_(default_names(n_)) {}

  void run() { fill(0); }

 private:
  static constexpr Elem kNoElem = 0xFF;

  Elem at(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool consistent_after(int r, int c) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        Elem const ij = at(i, j);
        if (ij == kNoElem) {
          continue;
        }
        for (int k = 0; k < n_; ++k) {
          Elem const jk = at(j, k);
          if (jk == kNoElem || at(ij, k) == kNoElem || at(i, jk) == kNoElem) {
            continue;
          }
          bool const involves = (i == r && j == c) || (j == r && k == c) ||
                                (ij == r && k == c) || (i == r && jk == c);
          if (involves && at(ij, k) != at(i, jk)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool fill(int cell) {
    if (stopped_) {
      return false;
    }
    if (cell == n_ * n_) {
      return emit();
    }
    int const r = cell / n_;
    int const c = cell % n_;
    for (int v = 0; v < n_; ++v) {
      table_[cell] = static_cast<Elem>(v);
      if (consistent_after(r, c) && !fill(cell + 1)) {
        table_[cell] = kNoElem;
        return false;
      }
    }
    table_[cell] = kNoElem;
    return true;
  }

  // Returns false to unwind the whole search.
  bool emit() {
    Semigroup sg = Semigroup::from_table(names_, table_);
    if (config_.filter && !config_.filter(sg)) {
      return true;
    }
    if (config_.dedup == EnumerationConfig::Dedup::UpToIso &&
        !is_canonical(sg)) {
      return true;
    }
    ++emitted_;
    bool const proceed = sink_(std::move(sg));
    if (!proceed || (config_.limit && emitted_ >= *config_.limit)) {
      stopped_ = true;
      return false;
    }
    return true;
  }

  EnumerationConfig const& config_;
  SemigroupSink const& sink_;
  int n_;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
  std::uint64_t emitted_ = 0;
  bool stopped_ = false;
};

}  // namespace

void enumerate_semigroups(EnumerationConfig const& config,
                          SemigroupSink const& sink) {
  if (config.order < 1 || config.order > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration supports orders 1 to 6");
  }
  Backtracker(config, sink).run();
}

std::vector<Semigroup> all_semigroups(EnumerationConfig const& config) {
  std::vector<Semigroup> result;
  enumerate_semigroups(config, [&](Semigroup sg) {
    result.push_back(std::move(sg));
    return true;
  });
  return result;
}

std::vector<Semigroup> all_semigroups(int order) {
  EnumerationConfig config;
  config.order = order;
  return all_semigroups(config);
}

}  // namespace sgideals
