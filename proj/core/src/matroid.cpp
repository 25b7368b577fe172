#include "cycflat/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <variant>

#include "cycflat/error.hpp"

namespace cycflat {

namespace {

constexpr int kDenseCacheLimit = 20;

struct MatrixRep {
  BinaryMatrix m;
};
struct FlatsRep {
  std::vector<RankedSet> flats;
};
struct UniformRep {
  int k;
};
struct TableRep {
  std::vector<int> ranks;
};
struct DualRep {
  Matroid base;
  int base_rank;
};
struct MinorRep {
  Matroid parent;
  SubsetMask x;
  int rank_x;
};

}  // namespace

struct Matroid::Impl {
  int n = 0;
  Backend kind = Backend::Matrix;
  std::variant<MatrixRep, FlatsRep, UniformRep, TableRep, DualRep, MinorRep> rep{MatrixRep{}};
  std::vector<int> index_map;
  SubsetMask support;

  // Dense cache stores rank + 1; 0 means not yet computed.
  mutable std::vector<std::atomic<std::uint8_t>> dense;
  mutable std::mutex mu;
  mutable std::unordered_map<std::uint64_t, int> sparse;

  int compute(SubsetMask x) const {
    return std::visit(
        [&](const auto& r) -> int {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, MatrixRep>) {
            return rank_of_columns(r.m, x);
          } else if constexpr (std::is_same_v<T, FlatsRep>) {
            int best = x.size();
            for (const auto& z : r.flats) best = std::min(best, z.rank + (x - z.set).size());
            return best;
          } else if constexpr (std::is_same_v<T, UniformRep>) {
            return std::min(x.size(), r.k);
          } else if constexpr (std::is_same_v<T, TableRep>) {
            return r.ranks[x.bits()];
          } else if constexpr (std::is_same_v<T, DualRep>) {
            return x.size() + r.base.rank(SubsetMask::full(n) - x) - r.base_rank;
          } else {
            return r.parent.rank(expand(x, support) | r.x) - r.rank_x;
          }
        },
        rep);
  }

  int rank(SubsetMask x) const {
    if (kind == Backend::Uniform || kind == Backend::RankTable) return compute(x);
    if (n <= kDenseCacheLimit) {
      auto& slot = dense[x.bits()];
      const std::uint8_t v = slot.load(std::memory_order_relaxed);
      if (v != 0) return v - 1;
      const int r = compute(x);
      slot.store(static_cast<std::uint8_t>(r + 1), std::memory_order_relaxed);
      return r;
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = sparse.find(x.bits());
      if (it != sparse.end()) return it->second;
    }
    const int r = compute(x);
    std::lock_guard<std::mutex> lock(mu);
    sparse.emplace(x.bits(), r);
    return r;
  }
};

namespace {

std::shared_ptr<Matroid::Impl> make_impl(int n, Backend kind) {
  if (n < 0 || n > kMaxGround) throw PreconditionError("ground set must have 0..64 elements");
  auto impl = std::make_shared<Matroid::Impl>();
  impl->n = n;
  impl->kind = kind;
  impl->index_map.resize(n);
  std::iota(impl->index_map.begin(), impl->index_map.end(), 0);
  impl->support = SubsetMask::full(n);
  if (n <= kDenseCacheLimit && kind != Backend::Uniform && kind != Backend::RankTable) {
    impl->dense = std::vector<std::atomic<std::uint8_t>>(std::size_t{1} << n);
  }
  return impl;
}

}  // namespace

Matroid Matroid::from_matrix(BinaryMatrix m) {
  auto impl = make_impl(m.cols(), Backend::Matrix);
  impl->rep = MatrixRep{std::move(m)};
  return Matroid(std::move(impl));
}

Matroid Matroid::from_cyclic_flats(int n, std::vector<RankedSet> flats) {
  auto impl = make_impl(n, Backend::CyclicFlats);
  impl->rep = FlatsRep{std::move(flats)};
  return Matroid(std::move(impl));
}

Matroid Matroid::uniform(int n, int k) {
  if (k < 0 || k > n) {
    throw PreconditionError("uniform matroid needs 0 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
  auto impl = make_impl(n, Backend::Uniform);
  impl->rep = UniformRep{k};
  return Matroid(std::move(impl));
}

Matroid Matroid::from_rank_table(int n, std::vector<int> ranks) {
  if (n > 24) throw GuardExceeded("rank tables are limited to 24 elements");
  if (ranks.size() != (std::size_t{1} << n)) {
    throw PreconditionError("rank table must have 2^n entries");
  }
  auto impl = make_impl(n, Backend::RankTable);
  impl->rep = TableRep{std::move(ranks)};
  return Matroid(std::move(impl));
}

int Matroid::size() const { return impl_->n; }
Backend Matroid::backend() const { return impl_->kind; }
int Matroid::rank(SubsetMask x) const { return impl_->rank(x); }

SubsetMask Matroid::closure(SubsetMask x) const {
  const int r = rank(x);
  SubsetMask out = x;
  (ground() - x).for_each([&](int e) {
    if (rank(x.with(e)) == r) out = out.with(e);
  });
  return out;
}

SubsetMask Matroid::cyclic_operator(SubsetMask x) const {
  const int r = rank(x);
  SubsetMask out;
  x.for_each([&](int e) {
    if (rank(x.without(e)) == r) out = out.with(e);
  });
  return out;
}

const std::vector<int>& Matroid::index_map() const { return impl_->index_map; }
SubsetMask Matroid::parent_support() const { return impl_->support; }

const BinaryMatrix* Matroid::matrix() const {
  if (auto* r = std::get_if<MatrixRep>(&impl_->rep)) return &r->m;
  return nullptr;
}

const std::vector<RankedSet>* Matroid::cyclic_flats() const {
  if (auto* r = std::get_if<FlatsRep>(&impl_->rep)) return &r->flats;
  return nullptr;
}

Matroid dual(const Matroid& m) {
  auto impl = make_impl(m.size(), Backend::Dual);
  impl->rep = DualRep{m, m.rank()};
  return Matroid(std::move(impl));
}

namespace {

// Matrix for M/X | Y: eliminate each column of X with a pivot row, then drop
// the pivot row.
BinaryMatrix contract_matrix(const BinaryMatrix& a, SubsetMask x, SubsetMask keep) {
  std::vector<std::uint64_t> rows = a.row_masks();
  x.for_each([&](int c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    auto pivot = std::find_if(rows.begin(), rows.end(), [&](std::uint64_t r) { return r & bit; });
    if (pivot == rows.end()) return;
    const std::uint64_t p = *pivot;
    rows.erase(pivot);
    for (auto& r : rows) {
      if (r & bit) r ^= p;
    }
  });
  return BinaryMatrix(a.cols(), std::move(rows)).select_columns(keep);
}

}  // namespace

Matroid minor(const Matroid& m, SubsetMask x, SubsetMask y) {
  if (!y.subset_of(m.ground())) throw PreconditionError("Y is not a subset of the ground set");
  if (!x.subset_of(y)) {
    throw PreconditionError("X = " + x.to_string() + " is not a subset of Y = " + y.to_string());
  }
  const SubsetMask support = y - x;
  std::shared_ptr<Matroid::Impl> impl;
  if (const BinaryMatrix* a = m.matrix()) {
    impl = make_impl(support.size(), Backend::Matrix);
    impl->rep = MatrixRep{contract_matrix(*a, x, support)};
  } else {
    impl = make_impl(support.size(), Backend::Minor);
    impl->rep = MinorRep{m, x, m.rank(x)};
  }
  impl->support = support;
  impl->index_map = support.elements();
  return Matroid(std::move(impl));
}

Matroid restrict_to(const Matroid& m, SubsetMask y) { return minor(m, SubsetMask(), y); }
Matroid contract(const Matroid& m, SubsetMask x) { return minor(m, x, m.ground()); }

SubsetMask loops(const Matroid& m) {
  SubsetMask out;
  m.ground().for_each([&](int e) {
    if (m.rank(SubsetMask::single(e)) == 0) out = out.with(e);
  });
  return out;
}

SubsetMask isthmuses(const Matroid& m) {
  const int r = m.rank();
  SubsetMask out;
  m.ground().for_each([&](int e) {
    if (m.rank(m.ground().without(e)) < r) out = out.with(e);
  });
  return out;
}

bool is_nondegenerate(const Matroid& m) { return loops(m).empty() && isthmuses(m).empty(); }

bool is_simple(const Matroid& m) {
  if (!loops(m).empty()) return false;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.rank(SubsetMask::single(i).with(j)) < 2) return false;
    }
  }
  return true;
}

namespace {

int min_weight_codeword(const BinaryMatrix& a) {
  const auto basis = row_space_basis(a);
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  std::uint64_t word = 0;
  int best = a.cols() + 1;
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= basis[std::countr_zero(i)];
    best = std::min(best, std::popcount(word));
  }
  return best;
}

int distance_by_sweep(const Matroid& m) {
  const int k = m.rank();
  const SubsetMask e = m.ground();
  for (int s = 1; s <= m.size(); ++s) {
    bool found = false;
    for_each_subset_of_size(e, s, [&](SubsetMask x) {
      if (!found && m.rank(e - x) < k) found = true;
    });
    if (found) return s;
  }
  throw InvariantViolation("no cocircuit found in a matroid of positive rank");
}

}  // namespace

int minimum_distance(const Matroid& m) {
  if (m.rank() == 0) throw PreconditionError("minimum distance is undefined for rank 0");
  if (const BinaryMatrix* a = m.matrix()) {
    if (static_cast<int>(row_space_basis(*a).size()) <= kMaxCodewordDimension) {
      return min_weight_codeword(*a);
    }
  }
  if (const auto* flats = m.cyclic_flats(); flats != nullptr && is_nondegenerate(m)) {
    int best = -1;
    for (const auto& z : *flats) {
      if (z.set != m.ground()) best = std::max(best, z.set.size() - z.rank);
    }
    if (best >= 0) return m.nullity() + 1 - best;
  }
  return distance_by_sweep(m);
}

bool is_uniform_matroid(const Matroid& m) {
  if (m.size() > 24) throw GuardExceeded("uniformity check is limited to 24 elements");
  const int k = m.rank();
  bool ok = true;
  for_each_subset(m.ground(), [&](SubsetMask a) {
    if (ok && m.rank(a) != std::min(a.size(), k)) ok = false;
  });
  return ok;
}

namespace {

// For each element, counts of subsets containing it keyed by (size, rank).
std::vector<std::vector<int>> element_profiles(const Matroid& m) {
  const int n = m.size();
  std::vector<std::vector<int>> prof(n, std::vector<int>((n + 1) * (n + 1), 0));
  for_each_subset(m.ground(), [&](SubsetMask s) {
    const int key = s.size() * (n + 1) + m.rank(s);
    s.for_each([&](int e) { ++prof[e][key]; });
  });
  return prof;
}

class IsoSearch {
 public:
  IsoSearch(const Matroid& a, const Matroid& b, std::vector<std::vector<int>> candidates)
      : a_(a), b_(b), cand_(std::move(candidates)), psi_(a.size(), -1) {}

  bool run(int i) {
    const int n = a_.size();
    if (i == n) return true;
    for (int j : cand_[i]) {
      if (used_.contains(j)) continue;
      psi_[i] = j;
      if (consistent(i)) {
        used_ = used_.with(j);
        if (run(i + 1)) return true;
        used_ = used_.without(j);
      }
    }
    psi_[i] = -1;
    return false;
  }

  const std::vector<int>& witness() const { return psi_; }

 private:
  // Every subset of {0..i} containing i has matching rank under psi.
  bool consistent(int i) const {
    const SubsetMask before = SubsetMask::full(i);
    bool ok = true;
    for_each_subset(before, [&](SubsetMask s) {
      if (!ok) return;
      SubsetMask image = SubsetMask::single(psi_[i]);
      s.for_each([&](int e) { image = image.with(psi_[e]); });
      if (a_.rank(s.with(i)) != b_.rank(image)) ok = false;
    });
    return ok;
  }

  const Matroid& a_;
  const Matroid& b_;
  std::vector<std::vector<int>> cand_;
  std::vector<int> psi_;
  SubsetMask used_;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() > kMaxIsomorphismSize || b.size() > kMaxIsomorphismSize) {
    throw GuardExceeded("isomorphism test is limited to " + std::to_string(kMaxIsomorphismSize) +
                        " elements");
  }
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  const int n = a.size();
  const auto pa = element_profiles(a);
  const auto pb = element_profiles(b);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (pa[i] == pb[j]) cand[i].push_back(j);
    }
  }
  IsoSearch search(a, b, std::move(cand));
  if (search.run(0)) return search.witness();
  return std::nullopt;
}

}  // namespace cycflat
