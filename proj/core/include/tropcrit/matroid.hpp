#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcrit/subset.hpp"

namespace tropcrit {

class Matroid;

// A minor together with the order-preserving relabeling of its ground set to
// {0,...,m-1}.
struct Minor;

// A matroid on the ground set {0,...,n}, given by its list of bases.
// Immutable after construction; derived data (flats, circuits) is computed on
// demand and cached behind a lock, so concurrent readers are safe.
class Matroid {
 public:
  // Validates the basis-exchange axiom exhaustively.
  static Matroid from_bases(int n, const std::vector<Subset>& bases);
  // U_{r, n_plus_1}: all r-subsets of {0..n_plus_1-1}.
  static Matroid uniform(int r, int n_plus_1);
  // Graphic matroid of a multigraph; element i is the i-th edge in the input
  // order. Loops and parallel edges are allowed.
  static Matroid graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges);

  int ground_size() const { return n_ + 1; }
  // Largest element label, ground = {0..n}.
  int n() const { return n_; }
  Subset ground() const { return Subset::full(n_ + 1); }
  int rank() const;
  // Sorted by bitmask; every basis has size rank().
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset b) const;

  int rank_of(Subset s) const;
  Subset closure(Subset s) const;
  bool has_loop() const;

  // All flats, ordered by (cardinality, bitmask). Cached.
  const std::vector<Subset>& flats() const;
  // All circuits (minimal dependent sets), ordered by (cardinality, bitmask).
  // Cached.
  const std::vector<Subset>& circuits() const;

  Matroid dual() const;
  Minor contract(int e) const;
  Minor delete_element(int e) const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;

  // Image of the matroid under a permutation of the ground set;
  // perm[old] = new.
  Matroid relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, std::vector<Subset> bases);

  void check_element(int e) const;

  int n_ = 0;
  std::vector<Subset> bases_;

  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Subset>> flats;
    std::optional<std::vector<Subset>> circuits;
  };
  std::shared_ptr<Cache> cache_;
};

struct Minor {
  Matroid matroid;
  // new_to_old[k] is the original label of the new element k;
  // old_to_new[e] is -1 for the removed element.
  std::vector<int> new_to_old;
  std::vector<int> old_to_new;
};

}  // namespace tropcrit
