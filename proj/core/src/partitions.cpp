#include "tropcrit/partitions.hpp"

#include <algorithm>
#include <deque>

#include "tropcrit/errors.hpp"

namespace tropcrit {

SetPartition::SetPartition(Subset ground, std::vector<Subset> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  Subset seen;
  for (Subset b : blocks_) {
    if (b.empty()) throw Error(ErrorCode::GroundMismatch, "empty block");
    if (!(seen & b).empty()) throw Error(ErrorCode::GroundMismatch, "overlapping blocks");
    seen = seen | b;
  }
  if (seen != ground_)
    throw Error(ErrorCode::GroundMismatch, "blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Subset a, Subset b) { return a.min_element() < b.min_element(); });
  index_of_.assign(static_cast<size_t>(ground.max_element()) + 1, -1);
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int e : blocks_[i].elements()) index_of_[static_cast<size_t>(e)] = static_cast<int>(i);
}

SetPartition SetPartition::from_chain(const std::vector<Subset>& chain) {
  std::vector<Subset> blocks;
  for (size_t i = 1; i < chain.size(); ++i) blocks.push_back(chain[i] - chain[i - 1]);
  return SetPartition(chain.back() - chain.front(), std::move(blocks));
}

int SetPartition::block_index_of(int element) const {
  if (!ground_.contains(element))
    throw Error(ErrorCode::GroundMismatch,
                "element " + std::to_string(element) + " not in partition ground");
  return index_of_[static_cast<size_t>(element)];
}

std::string SetPartition::to_string() const {
  std::string s;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += "|";
    for (int e : blocks_[i].elements()) s += std::to_string(e);
  }
  return s;
}

IntersectionGraph intersection_graph(const SetPartition& lambda, const SetPartition& mu) {
  int n = mu.ground().count();
  if (lambda.ground() != Subset::full(n + 1) || mu.ground() != Subset::full(n + 1).without(0))
    throw Error(ErrorCode::GroundMismatch,
                "need lambda on {0..n} and mu on {1..n}; got lambda on " +
                    lambda.ground().to_string() + ", mu on " + mu.ground().to_string());
  IntersectionGraph g{lambda, mu, n, std::vector<int>(static_cast<size_t>(n) + 1, -1),
                      std::vector<int>(static_cast<size_t>(n) + 1, -1),
                      lambda.block_index_of(0)};
  for (int e = 1; e <= n; ++e) {
    g.left_end[static_cast<size_t>(e)] = lambda.block_index_of(e);
    g.right_end[static_cast<size_t>(e)] = mu.block_index_of(e);
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[static_cast<size_t>(x)] = y;
    return true;
  }
};

// mu-block vertices are numbered after the lambda blocks.
int right_vertex(const IntersectionGraph& g, int e) {
  return g.lambda.size() + g.right_end[static_cast<size_t>(e)];
}

struct Traversal {
  // Per vertex: parent vertex, label of the edge to the parent, depth, and
  // the value determined by value(child) = w_e - value(parent).
  std::vector<int> parent, parent_edge, depth, component;
  std::vector<Rational> value;
  std::vector<bool> visited;
};

// Breadth-first forest rooted at the marked vertex first, then at the least
// unvisited vertex of each remaining component.
Traversal traverse(const IntersectionGraph& g, const RationalVector* w) {
  int total = g.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(total));
  for (int e = 1; e <= g.n; ++e) {
    int a = g.left_end[static_cast<size_t>(e)];
    int b = right_vertex(g, e);
    adj[static_cast<size_t>(a)].push_back({b, e});
    adj[static_cast<size_t>(b)].push_back({a, e});
  }
  Traversal t;
  t.parent.assign(static_cast<size_t>(total), -1);
  t.parent_edge.assign(static_cast<size_t>(total), -1);
  t.depth.assign(static_cast<size_t>(total), 0);
  t.component.assign(static_cast<size_t>(total), -1);
  t.value.assign(static_cast<size_t>(total), Rational(0));
  t.visited.assign(static_cast<size_t>(total), false);
  int comp = 0;
  for (int start = -1; start < total; ++start) {
    int root = start == -1 ? g.marked : start;
    if (t.visited[static_cast<size_t>(root)]) continue;
    t.visited[static_cast<size_t>(root)] = true;
    t.component[static_cast<size_t>(root)] = comp;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, e] : adj[static_cast<size_t>(v)]) {
        if (t.visited[static_cast<size_t>(u)]) continue;
        t.visited[static_cast<size_t>(u)] = true;
        t.component[static_cast<size_t>(u)] = comp;
        t.parent[static_cast<size_t>(u)] = v;
        t.parent_edge[static_cast<size_t>(u)] = e;
        t.depth[static_cast<size_t>(u)] = t.depth[static_cast<size_t>(v)] + 1;
        if (w) t.value[static_cast<size_t>(u)] = w->at(e) - t.value[static_cast<size_t>(v)];
        queue.push_back(u);
      }
    }
    ++comp;
  }
  return t;
}

}  // namespace

GraphClass classify(const IntersectionGraph& g) {
  UnionFind uf(g.num_vertices());
  bool cycle = false;
  int merges = 0;
  for (int e = 1; e <= g.n; ++e) {
    if (uf.unite(g.left_end[static_cast<size_t>(e)], right_vertex(g, e)))
      ++merges;
    else
      cycle = true;
  }
  bool connected = merges == g.num_vertices() - 1;
  GraphClass out{GraphClass::Tree, cycle, connected};
  if (cycle)
    out.primary = GraphClass::HasCycle;
  else if (!connected)
    out.primary = GraphClass::Disconnected;
  return out;
}

Rational SignedPath::alternating_sum(const RationalVector& w) const {
  Rational acc = 0;
  int sign = 1;
  for (int e : edges) {
    acc += sign * w.at(e);
    sign = -sign;
  }
  return acc;
}

std::string SignedPath::to_string() const {
  std::string s;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += (i % 2 ? " - " : " + ");
    s += "w" + std::to_string(edges[static_cast<size_t>(i)]);
  }
  return s.empty() ? "0" : s;
}

TreeSolution solve_tree(const SetPartition& lambda, const SetPartition& mu,
                        const RationalVector& w) {
  IntersectionGraph g = intersection_graph(lambda, mu);
  if (w.first_index() != 1 || w.size() != g.n)
    throw Error(ErrorCode::GroundMismatch, "w must be indexed 1..n");
  if (classify(g).primary != GraphClass::Tree)
    throw Error(ErrorCode::NotATree, "intersection graph of " + lambda.to_string() + " and " +
                                         mu.to_string() + " is not a tree");
  Traversal t = traverse(g, &w);

  TreeSolution sol;
  sol.x = RationalVector::zeros(0, g.n + 1);
  sol.y = RationalVector::zeros(1, g.n);
  for (int i = 0; i <= g.n; ++i)
    sol.x.at(i) = t.value[static_cast<size_t>(lambda.block_index_of(i))];
  for (int e = 1; e <= g.n; ++e)
    sol.y.at(e) = t.value[static_cast<size_t>(right_vertex(g, e))];

  auto path_to_root = [&](int v) {
    SignedPath p;
    while (t.parent[static_cast<size_t>(v)] != -1) {
      p.edges.push_back(t.parent_edge[static_cast<size_t>(v)]);
      v = t.parent[static_cast<size_t>(v)];
    }
    return p;
  };
  for (int b = 0; b < lambda.size(); ++b) sol.lambda_paths.push_back(path_to_root(b));
  for (int b = 0; b < mu.size(); ++b)
    sol.mu_paths.push_back(path_to_root(lambda.size() + b));
  return sol;
}

std::optional<CycleWitness> generic_infeasibility_witness(const SetPartition& lambda,
                                                          const SetPartition& mu,
                                                          const RationalVector& w) {
  IntersectionGraph g = intersection_graph(lambda, mu);
  if (w.first_index() != 1 || w.size() != g.n)
    throw Error(ErrorCode::GroundMismatch, "w must be indexed 1..n");
  if (!classify(g).has_cycle)
    throw Error(ErrorCode::NotCyclic, "intersection graph has no cycle");
  Traversal t = traverse(g, &w);

  // Tree edges satisfy value(u) + value(v) = w_e; a fundamental cycle has a
  // nonzero alternating sum iff its non-tree edge violates this.
  std::vector<bool> is_tree_edge(static_cast<size_t>(g.n) + 1, false);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (t.parent_edge[static_cast<size_t>(v)] != -1)
      is_tree_edge[static_cast<size_t>(t.parent_edge[static_cast<size_t>(v)])] = true;

  for (int e = 1; e <= g.n; ++e) {
    if (is_tree_edge[static_cast<size_t>(e)]) continue;
    int a = g.left_end[static_cast<size_t>(e)];
    int b = right_vertex(g, e);
    Rational discrepancy = w.at(e) - t.value[static_cast<size_t>(a)] - t.value[static_cast<size_t>(b)];
    if (discrepancy == 0) continue;
    // Reconstruct the fundamental cycle: edge e plus the tree path a..b.
    std::vector<int> up_a, up_b;
    int pa = a, pb = b;
    while (pa != pb) {
      if (t.depth[static_cast<size_t>(pa)] >= t.depth[static_cast<size_t>(pb)]) {
        up_a.push_back(t.parent_edge[static_cast<size_t>(pa)]);
        pa = t.parent[static_cast<size_t>(pa)];
      } else {
        up_b.push_back(t.parent_edge[static_cast<size_t>(pb)]);
        pb = t.parent[static_cast<size_t>(pb)];
      }
    }
    CycleWitness witness;
    witness.edges.push_back(e);
    for (auto it = up_b.begin(); it != up_b.end(); ++it) witness.edges.push_back(*it);
    for (auto it = up_a.rbegin(); it != up_a.rend(); ++it) witness.edges.push_back(*it);
    SignedPath as_path{witness.edges};
    witness.alternating_sum = as_path.alternating_sum(w);
    internal_check(witness.alternating_sum != 0, "witness cycle sum vanished unexpectedly");
    return witness;
  }
  return std::nullopt;
}

bool is_rapidly_increasing(const RationalVector& w) {
  if (w.first_index() != 1) return false;
  if (w.size() == 0) return true;
  if (w.at(1) <= 0) return false;
  for (int i = 1; i < w.size(); ++i)
    if (w.at(i + 1) <= 3 * w.at(i)) return false;
  return true;
}

std::optional<int> near_index(const RationalVector& w, const Rational& v) {
  if (!is_rapidly_increasing(w))
    throw Error(ErrorCode::NotRapidlyIncreasing, "near_index requires a rapidly increasing w");
  Rational prefix = 0;  // w_1 + ... + w_{i-1}
  for (int i = 1; i <= w.size(); ++i) {
    if (w.at(i) - prefix <= v && v <= w.at(i) + prefix) return i;
    prefix += w.at(i);
  }
  return std::nullopt;
}

}  // namespace tropcrit
