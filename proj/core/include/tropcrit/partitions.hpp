#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropcrit/rational.hpp"
#include "tropcrit/subset.hpp"

namespace tropcrit {

// A set partition of a ground set; blocks are canonically ordered by their
// minimum element.
class SetPartition {
 public:
  SetPartition(Subset ground, std::vector<Subset> blocks);

  // Blocks read off a flag chain as consecutive differences.
  static SetPartition from_chain(const std::vector<Subset>& chain);

  Subset ground() const { return ground_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  int block_index_of(int element) const;
  Subset block_of(int element) const { return blocks_[static_cast<size_t>(block_index_of(element))]; }

  // "013478|2|59|6" with blocks in canonical order.
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  Subset ground_;
  std::vector<Subset> blocks_;
  std::vector<int> index_of_;  // element -> block index
};

// The bipartite multigraph on the blocks of lambda (on [0,n]) and mu (on
// [1,n]); edge e joins lambda(e) to mu(e) for e in [1,n]. The vertex
// lambda(0) is marked.
struct IntersectionGraph {
  SetPartition lambda;
  SetPartition mu;
  int n;                       // edges are labeled 1..n
  std::vector<int> left_end;   // size n+1, [e] = lambda block index, [0] unused
  std::vector<int> right_end;  // size n+1, [e] = mu block index
  int marked;                  // lambda block index of lambda(0)
  int num_vertices() const { return lambda.size() + mu.size(); }
};

IntersectionGraph intersection_graph(const SetPartition& lambda, const SetPartition& mu);

struct GraphClass {
  enum Kind { HasCycle, Disconnected, Tree };
  Kind primary;
  bool has_cycle;
  bool connected;
};

// A cycle beats a disconnection in the primary classification; both flags are
// exposed.
GraphClass classify(const IntersectionGraph& graph);

// Edge labels e_1,...,e_k of the unique tree path from a block to the marked
// vertex, with implicit alternating signs +,-,+,...
struct SignedPath {
  std::vector<int> edges;
  Rational alternating_sum(const RationalVector& w) const;
  std::string to_string() const;
  friend bool operator==(const SignedPath& a, const SignedPath& b) = default;
};

struct TreeSolution {
  RationalVector x;  // on [0,n], x_0 = 0
  RationalVector y;  // on [1,n]
  // Per block, in the partitions' canonical block order.
  std::vector<SignedPath> lambda_paths;
  std::vector<SignedPath> mu_paths;
};

// Unique x in L(lambda), y in L(mu) with x + y = w and x_0 = 0, by
// alternating path sums in the intersection tree.
TreeSolution solve_tree(const SetPartition& lambda, const SetPartition& mu,
                        const RationalVector& w);

struct CycleWitness {
  std::vector<int> edges;  // in cyclic order
  Rational alternating_sum;
};

// A cycle whose alternating w-sum is nonzero certifies that the intersection
// is empty for this w; nullopt means every cycle sum vanishes (w is
// degenerate for this pair).
std::optional<CycleWitness> generic_infeasibility_witness(const SetPartition& lambda,
                                                          const SetPartition& mu,
                                                          const RationalVector& w);

// w_{i+1} > 3 w_i > 0 throughout (and w_1 > 0).
bool is_rapidly_increasing(const RationalVector& w);

// The unique i with w_i - (w_1+...+w_{i-1}) <= v <= w_i + (w_1+...+w_{i-1}),
// if any.
std::optional<int> near_index(const RationalVector& w, const Rational& v);

}  // namespace tropcrit
