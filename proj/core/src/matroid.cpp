#include "tropcrit/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "tropcrit/errors.hpp"

namespace tropcrit {

namespace {

constexpr int kMaxGround = 64;

// Enumerating all k-subsets (or spanning forests) is capped so a bad input
// document cannot exhaust memory.
constexpr long long kMaxEnumeratedBases = 1'000'000;

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 4 * kMaxEnumeratedBases) return r;  // no need to be exact past the cap
  }
  return r;
}

void sort_by_size_then_bits(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), [](Subset a, Subset b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a.bits() < b.bits();
  });
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

Matroid::Matroid(int n, std::vector<Subset> bases)
    : n_(n), bases_(std::move(bases)), cache_(std::make_shared<Cache>()) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

Matroid Matroid::from_bases(int n, const std::vector<Subset>& bases) {
  if (n < 0 || n + 1 > kMaxGround)
    throw Error(ErrorCode::GroundTooLarge, "ground set must have between 1 and 64 elements");
  if (bases.empty()) throw Error(ErrorCode::EmptyBases, "a matroid has at least one basis");
  Subset ground = Subset::full(n + 1);
  int r = bases.front().count();
  for (Subset b : bases) {
    if (!b.subset_of(ground))
      throw Error(ErrorCode::InvalidElement, "basis " + b.to_string() + " not within {0.." +
                                                 std::to_string(n) + "}");
    if (b.count() != r)
      throw Error(ErrorCode::UnequalCardinality,
                  "bases " + bases.front().to_string() + " and " + b.to_string() +
                      " have different sizes");
  }
  Matroid m(n, bases);
  // Exchange axiom, checked exhaustively: for all bases A, B and a in A-B
  // there is b in B-A with A-a+b a basis.
  for (Subset a : m.bases_) {
    for (Subset b : m.bases_) {
      for (int ea : (a - b).elements()) {
        bool found = false;
        for (int eb : (b - a).elements()) {
          if (m.is_basis(a.without(ea).with(eb))) {
            found = true;
            break;
          }
        }
        if (!found)
          throw Error(ErrorCode::ExchangeAxiomViolated,
                      "bases A=" + a.to_string() + ", B=" + b.to_string() + ", a=" +
                          std::to_string(ea) + " admit no exchange");
      }
    }
  }
  return m;
}

Matroid Matroid::uniform(int r, int n_plus_1) {
  if (n_plus_1 < 1 || n_plus_1 > kMaxGround)
    throw Error(ErrorCode::GroundTooLarge, "ground set must have between 1 and 64 elements");
  if (r < 0 || r > n_plus_1)
    throw Error(ErrorCode::InvalidRank,
                "rank " + std::to_string(r) + " outside [0," + std::to_string(n_plus_1) + "]");
  if (binomial(n_plus_1, r) > kMaxEnumeratedBases)
    throw Error(ErrorCode::GroundTooLarge, "too many bases to enumerate");
  std::vector<Subset> bases;
  // All r-subsets, by Gosper-style iteration over combinations.
  std::vector<int> idx(static_cast<size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bases.push_back(Subset::from_elements(idx));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n_plus_1 - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return Matroid(n_plus_1 - 1, std::move(bases));
}

Matroid Matroid::graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  if (m < 1 || m > kMaxGround) throw Error(ErrorCode::GroundTooLarge, "need 1..64 edges");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
      throw Error(ErrorCode::InvalidVertexIndex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  // Rank = num_vertices - number of connected components.
  UnionFind uf(num_vertices);
  int rank = 0;
  for (auto [u, v] : edges)
    if (uf.unite(u, v)) ++rank;
  if (binomial(m, rank) > kMaxEnumeratedBases)
    throw Error(ErrorCode::GroundTooLarge, "too many edge subsets to enumerate");
  // Bases = acyclic edge sets of full rank.
  std::vector<Subset> bases;
  std::vector<int> pick;
  auto acyclic = [&](const std::vector<int>& subset) {
    UnionFind u2(num_vertices);
    for (int e : subset)
      if (!u2.unite(edges[static_cast<size_t>(e)].first, edges[static_cast<size_t>(e)].second))
        return false;
    return true;
  };
  // Depth-first combination enumeration with incremental acyclicity pruning.
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == rank) {
      bases.push_back(Subset::from_elements(pick));
      return;
    }
    for (int e = next; e <= m - (rank - static_cast<int>(pick.size())); ++e) {
      pick.push_back(e);
      if (acyclic(pick)) self(self, e + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return Matroid(m - 1, std::move(bases));
}

int Matroid::rank() const { return bases_.front().count(); }

bool Matroid::is_basis(Subset b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank_of(Subset s) const {
  int best = 0;
  int cap = std::min(s.count(), rank());
  for (Subset b : bases_) {
    best = std::max(best, (s & b).count());
    if (best == cap) break;
  }
  return best;
}

Subset Matroid::closure(Subset s) const {
  int r = rank_of(s);
  Subset out = s;
  for (int e : (ground() - s).elements())
    if (rank_of(s.with(e)) == r) out = out.with(e);
  return out;
}

bool Matroid::has_loop() const {
  Subset in_some_basis;
  for (Subset b : bases_) in_some_basis = in_some_basis | b;
  return in_some_basis != ground();
}

const std::vector<Subset>& Matroid::flats() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->flats) {
    // Breadth-first search of the lattice of flats from cl(empty) upward,
    // extending each flat F by cl(F + e).
    std::vector<Subset> all;
    std::vector<Subset> frontier{closure(Subset())};
    all.push_back(frontier.front());
    while (!frontier.empty()) {
      std::vector<Subset> next;
      for (Subset f : frontier) {
        for (int e : (ground() - f).elements()) {
          Subset g = closure(f.with(e));
          if (std::find(all.begin(), all.end(), g) == all.end()) {
            all.push_back(g);
            next.push_back(g);
          }
        }
      }
      frontier = std::move(next);
    }
    sort_by_size_then_bits(all);
    cache_->flats = std::move(all);
  }
  return *cache_->flats;
}

const std::vector<Subset>& Matroid::circuits() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->circuits) {
    // A set C is a circuit iff C is dependent and every C-x is independent;
    // enumerate subsets of size <= rank+1 by increasing size.
    std::vector<Subset> out;
    int r = rank();
    std::vector<int> pick;
    auto independent = [&](Subset s) { return rank_of(s) == s.count(); };
    auto rec = [&](auto&& self, int next, int size) -> void {
      if (static_cast<int>(pick.size()) == size) {
        Subset c = Subset::from_elements(pick);
        if (independent(c)) return;
        for (int x : pick)
          if (!independent(c.without(x))) return;
        out.push_back(c);
        return;
      }
      for (int e = next; e <= n_ - (size - static_cast<int>(pick.size())) + 1; ++e) {
        pick.push_back(e);
        self(self, e + 1, size);
        pick.pop_back();
      }
    };
    for (int size = 1; size <= r + 1; ++size) rec(rec, 0, size);
    sort_by_size_then_bits(out);
    cache_->circuits = std::move(out);
  }
  return *cache_->circuits;
}

Matroid Matroid::dual() const {
  std::vector<Subset> co;
  co.reserve(bases_.size());
  for (Subset b : bases_) co.push_back(ground() - b);
  return Matroid(n_, std::move(co));
}

void Matroid::check_element(int e) const {
  if (e < 0 || e > n_)
    throw Error(ErrorCode::InvalidElement, "element " + std::to_string(e) + " not in ground set");
}

namespace {

// Remove label e and close the gap, preserving the order of the others.
Subset drop_and_shift(Subset s, int e) {
  std::uint64_t low = s.bits() & ((std::uint64_t{1} << e) - 1);
  std::uint64_t high = (s.bits() >> (e + 1)) << e;
  return Subset::from_bits(low | high);
}

void relabel_maps(int old_n, int e, std::vector<int>& new_to_old, std::vector<int>& old_to_new) {
  old_to_new.assign(static_cast<size_t>(old_n + 1), -1);
  for (int k = 0; k <= old_n; ++k) {
    if (k == e) continue;
    old_to_new[static_cast<size_t>(k)] = static_cast<int>(new_to_old.size());
    new_to_old.push_back(k);
  }
}

}  // namespace

Minor Matroid::contract(int e) const {
  check_element(e);
  if (is_loop(e)) return delete_element(e);
  std::vector<Subset> out;
  for (Subset b : bases_)
    if (b.contains(e)) out.push_back(drop_and_shift(b, e));
  Minor minor{Matroid(n_ - 1, std::move(out)), {}, {}};
  relabel_maps(n_, e, minor.new_to_old, minor.old_to_new);
  return minor;
}

Minor Matroid::delete_element(int e) const {
  check_element(e);
  std::vector<Subset> out;
  if (is_coloop(e)) {
    for (Subset b : bases_) out.push_back(drop_and_shift(b, e));
  } else {
    for (Subset b : bases_)
      if (!b.contains(e)) out.push_back(drop_and_shift(b, e));
  }
  Minor minor{Matroid(n_ - 1, std::move(out)), {}, {}};
  relabel_maps(n_, e, minor.new_to_old, minor.old_to_new);
  return minor;
}

bool Matroid::is_loop(int e) const {
  check_element(e);
  for (Subset b : bases_)
    if (b.contains(e)) return false;
  return true;
}

bool Matroid::is_coloop(int e) const {
  check_element(e);
  for (Subset b : bases_)
    if (!b.contains(e)) return false;
  return true;
}

Matroid Matroid::relabeled(const std::vector<int>& perm) const {
  internal_check(static_cast<int>(perm.size()) == n_ + 1, "permutation size mismatch");
  std::vector<Subset> out;
  out.reserve(bases_.size());
  for (Subset b : bases_) {
    Subset nb;
    for (int e : b.elements()) nb = nb.with(perm[static_cast<size_t>(e)]);
    out.push_back(nb);
  }
  return Matroid(n_, std::move(out));
}

}  // namespace tropcrit
