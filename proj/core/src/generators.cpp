#include "bmwis/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bmwis/baselines.hpp"
#include "bmwis/rng.hpp"

namespace bmwis {

BudgetedInstance gen_star(const StarParams& params) {
  if (params.leaves < 2) throw std::invalid_argument("star needs at least 2 leaves");
  if (params.scale < 1) throw std::invalid_argument("star scale must be positive");
  const int n = params.leaves;
  const long long s = params.scale;
  std::vector<long long> weights(n + 1), costs(n + 1);
  std::vector<Side> sides(n + 1, Side::Right);
  weights[0] = checked_mul(static_cast<long long>(n), s);  // center
  costs[0] = s;
  sides[0] = Side::Left;
  for (int leaf = 1; leaf <= n; ++leaf) {
    weights[leaf] = checked_mul(2, s);
    costs[leaf] = checked_mul(2, s);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
  return BudgetedInstance(n + 1, std::move(weights), std::move(costs), checked_mul(2, s),
                          std::move(edges), std::move(sides));
}

namespace {

struct SplitSides {
  std::vector<int> left;   // original ids, ascending
  std::vector<int> right;
};

SplitSides split_sides(const BudgetedInstance& base) {
  auto labels = bipartite_sides(base);
  SplitSides out;
  for (int v = 0; v < base.vertex_count(); ++v)
    (labels[v] == Side::Left ? out.left : out.right).push_back(v);
  return out;
}

long long power_ll(long long base, int exponent) {
  long long out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

long long tuple_index(const std::vector<int>& coords, int base_size) {
  long long index = 0;
  for (int c : coords) {
    if (c < 0 || c >= base_size) throw std::out_of_range("tuple coordinate out of range");
    index = checked_add(checked_mul(index, base_size), c);
  }
  return index;
}

BudgetedInstance gen_reduced_graph(const BudgetedInstance& base, int t, long long tuple_limit) {
  if (t < 1) throw std::invalid_argument("tuple length must be at least 1");
  SplitSides sides = split_sides(base);
  const int n_left = static_cast<int>(sides.left.size());
  const int n_right = static_cast<int>(sides.right.size());
  if (n_right == 0) throw std::invalid_argument("base right side is empty");

  long long tuples = power_ll(n_right, t);
  if (tuples > tuple_limit)
    throw CapExceededError("tuple side of size " + std::to_string(tuples) + " exceeds limit " +
                           std::to_string(tuple_limit));

  // adjacency of left vertices over right-side positions
  std::vector<std::vector<char>> adj(n_left, std::vector<char>(n_right, 0));
  for (int li = 0; li < n_left; ++li)
    for (int r : base.neighbors(sides.left[li]))
      for (int ri = 0; ri < n_right; ++ri)
        if (sides.right[ri] == r) adj[li][ri] = 1;

  const int total = n_left + static_cast<int>(tuples);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> coords(t, 0);
  for (long long idx = 0; idx < tuples; ++idx) {
    for (int li = 0; li < n_left; ++li) {
      bool hit = false;
      for (int i = 0; i < t && !hit; ++i) hit = adj[li][coords[i]];
      if (hit) edges.emplace_back(li, n_left + static_cast<int>(idx));
    }
    // next tuple in lexicographic order
    for (int i = t - 1; i >= 0; --i) {
      if (++coords[i] < n_right) break;
      coords[i] = 0;
    }
  }

  std::vector<Side> labels(total, Side::Right);
  for (int li = 0; li < n_left; ++li) labels[li] = Side::Left;
  return BudgetedInstance(total, std::vector<long long>(total, 1),
                          std::vector<long long>(total, 1), 0, std::move(edges),
                          std::move(labels));
}

BicliqueTransfer biclique_transfer_check(const BudgetedInstance& base, int t,
                                         const std::vector<int>& sa, const std::vector<int>& sr,
                                         long long tuple_limit) {
  if (t < 1) throw std::invalid_argument("tuple length must be at least 1");
  SplitSides sides = split_sides(base);
  auto labels = bipartite_sides(base);
  for (int a : sa)
    if (a < 0 || a >= base.vertex_count() || labels[a] != Side::Left)
      throw std::invalid_argument("planted left set contains a non-left vertex");
  for (int r : sr)
    if (r < 0 || r >= base.vertex_count() || labels[r] != Side::Right)
      throw std::invalid_argument("planted right set contains a non-right vertex");
  for (int a : sa)
    for (int r : sr)
      if (!base.adjacent(a, r))
        throw std::invalid_argument("planted pair is not a biclique in the base graph");

  const BigInt n(static_cast<long long>(sides.right.size()));
  BigInt miss = n - static_cast<long long>(sr.size());
  BigInt fb = boost::multiprecision::pow(n, static_cast<unsigned>(t)) -
              boost::multiprecision::pow(miss, static_cast<unsigned>(t));
  BicliqueTransfer out{BigInt(static_cast<long long>(sa.size())), fb, false};

  long long tuples_ll = power_ll(static_cast<long long>(sides.right.size()), t);
  if (tuples_ll > tuple_limit) return out;

  // explicit check against the generated lift
  BudgetedInstance lifted = gen_reduced_graph(base, t, tuple_limit);
  const int n_left = static_cast<int>(sides.left.size());
  const int n_right = static_cast<int>(sides.right.size());
  std::vector<char> in_sr(n_right, 0);
  for (int r : sr)
    for (int ri = 0; ri < n_right; ++ri)
      if (sides.right[ri] == r) in_sr[ri] = 1;
  std::vector<int> fa_lifted;
  for (int a : sa)
    for (int li = 0; li < n_left; ++li)
      if (sides.left[li] == a) fa_lifted.push_back(li);

  // enumerate F_B: tuples with at least one coordinate in SR
  std::vector<int> fb_lifted;
  std::vector<int> coords(t, 0);
  for (long long idx = 0; idx < tuples_ll; ++idx) {
    bool hit = false;
    for (int i = 0; i < t && !hit; ++i) hit = in_sr[coords[i]];
    if (hit) fb_lifted.push_back(n_left + static_cast<int>(idx));
    for (int i = t - 1; i >= 0; --i) {
      if (++coords[i] < n_right) break;
      coords[i] = 0;
    }
  }
  if (BigInt(static_cast<long long>(fb_lifted.size())) != fb)
    throw std::logic_error("tuple enumeration disagrees with the closed-form size");
  for (int a : fa_lifted)
    for (int b : fb_lifted)
      if (!lifted.adjacent(a, b))
        throw std::logic_error("induced pair is not a biclique in the lifted graph");
  out.verified_explicitly = true;
  return out;
}

BudgetedInstance gen_umsb(const BudgetedInstance& base, const UmsbParams& params) {
  if (params.copies < 1 || params.heavy < 1)
    throw std::invalid_argument("copies and heavy weight must be at least 1");
  if (params.beta < 0) throw std::invalid_argument("budget must be non-negative");
  SplitSides sides = split_sides(base);
  const long long n_left = static_cast<long long>(sides.left.size());
  const long long n_right = static_cast<long long>(sides.right.size());
  long long copies_total = checked_mul(params.copies, n_left);
  long long total = checked_add(copies_total, n_right);
  if (total > params.size_limit)
    throw CapExceededError("instance of " + std::to_string(total) + " vertices exceeds limit " +
                           std::to_string(params.size_limit));

  const int n = static_cast<int>(total);
  std::vector<long long> weights(n, 1), costs(n, 1);
  std::vector<Side> labels(n, Side::Left);
  for (long long bi = 0; bi < n_right; ++bi) {
    weights[copies_total + bi] = params.heavy;
    labels[copies_total + bi] = Side::Right;
  }

  // copy a_i is adjacent to b exactly when (a, b) is NOT a base edge
  std::vector<std::pair<int, int>> edges;
  for (long long ai = 0; ai < n_left; ++ai) {
    for (long long bi = 0; bi < n_right; ++bi) {
      if (base.adjacent(sides.left[ai], sides.right[bi])) continue;
      for (long long copy = 0; copy < params.copies; ++copy)
        edges.emplace_back(static_cast<int>(ai * params.copies + copy),
                           static_cast<int>(copies_total + bi));
    }
  }
  return BudgetedInstance(n, std::move(weights), std::move(costs), params.beta,
                          std::move(edges), std::move(labels));
}

BudgetedInstance gen_cmwis_reduction(const BudgetedInstance& base, long long k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SplitSides sides = split_sides(base);
  const int n_left = static_cast<int>(sides.left.size());
  const int n_right = static_cast<int>(sides.right.size());
  const int n = n_left + n_right;

  long long k2 = checked_mul(k, k);
  long long left_weight = checked_add(checked_mul(4, k2), checked_mul(2, k));
  long long right_weight = checked_add(checked_mul(4, k2), 1);
  long long budget =
      checked_add(checked_add(checked_mul(8, checked_mul(k2, k)), checked_mul(2, k2)), k);

  std::vector<long long> weights(n);
  std::vector<Side> labels(n, Side::Left);
  for (int i = 0; i < n_left; ++i) weights[i] = left_weight;
  for (int i = 0; i < n_right; ++i) {
    weights[n_left + i] = right_weight;
    labels[n_left + i] = Side::Right;
  }

  std::vector<std::pair<int, int>> edges;
  for (int li = 0; li < n_left; ++li)
    for (int ri = 0; ri < n_right; ++ri)
      if (!base.adjacent(sides.left[li], sides.right[ri]))
        edges.emplace_back(li, n_left + ri);

  std::vector<long long> costs = weights;  // capacitated: c = w
  return BudgetedInstance(n, std::move(weights), std::move(costs), budget, std::move(edges),
                          std::move(labels));
}

bool decide_biclique(const BudgetedInstance& base, long long k,
                     const std::function<Solution(const BudgetedInstance&)>& exact_solver) {
  BudgetedInstance reduced = gen_cmwis_reduction(base, k);
  Solution opt =
      exact_solver ? exact_solver(reduced) : bmwis_bruteforce(reduced);
  return opt.total_weight == reduced.budget();
}

BudgetedInstance gen_random_bipartite(const RandomBipartiteParams& params) {
  if (params.left < 0 || params.right < 0)
    throw std::invalid_argument("side sizes must be non-negative");
  if (params.weight_lo > params.weight_hi || params.cost_lo > params.cost_hi ||
      params.weight_lo < 0 || params.cost_lo < 0)
    throw std::invalid_argument("value ranges must be non-empty and non-negative");
  if (params.edge_prob.sign() < 0 || params.edge_prob > Ratio(1))
    throw std::invalid_argument("edge probability must be within [0,1]");
  if (params.edge_prob.den() > BigInt(1) << 32)
    throw std::invalid_argument("edge probability denominator too large");
  if (params.planted_biclique) {
    auto [a, b] = *params.planted_biclique;
    if (a < 0 || b < 0 || a > params.left || b > params.right)
      throw std::invalid_argument("planted biclique exceeds side sizes");
  }

  const int nl = params.left, nr = params.right;
  const int n = nl + nr;
  SplitMix64 rng(params.seed);

  // stage 1: vertices (planted sample via partial Fisher-Yates per side)
  std::vector<char> plant_left(nl, 0), plant_right(nr, 0);
  if (params.planted_biclique) {
    auto [a, b] = *params.planted_biclique;
    std::vector<int> pool(nl);
    for (int i = 0; i < nl; ++i) pool[i] = i;
    for (int i = 0; i < a; ++i) {
      int j = i + static_cast<int>(rng.next_below(nl - i));
      std::swap(pool[i], pool[j]);
      plant_left[pool[i]] = 1;
    }
    pool.assign(nr, 0);
    for (int i = 0; i < nr; ++i) pool[i] = i;
    for (int i = 0; i < b; ++i) {
      int j = i + static_cast<int>(rng.next_below(nr - i));
      std::swap(pool[i], pool[j]);
      plant_right[pool[i]] = 1;
    }
  }

  // stage 2: edges, row-major over (left, right) pairs
  const std::uint64_t num = params.edge_prob.num().convert_to<std::uint64_t>();
  const std::uint64_t den = params.edge_prob.den().convert_to<std::uint64_t>();
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < nl; ++l) {
    for (int r = 0; r < nr; ++r) {
      bool present = rng.next_below(den) < num;
      if (plant_left[l] && plant_right[r]) present = true;
      if (present) edges.emplace_back(l, nl + r);
    }
  }

  // stage 3: values (all weights, then all costs), then the budget rule
  std::vector<long long> weights(n), costs(n);
  for (int v = 0; v < n; ++v)
    weights[v] = params.weight_lo +
                 static_cast<long long>(rng.next_below(
                     static_cast<std::uint64_t>(params.weight_hi - params.weight_lo + 1)));
  for (int v = 0; v < n; ++v)
    costs[v] = params.cost_lo +
               static_cast<long long>(rng.next_below(
                   static_cast<std::uint64_t>(params.cost_hi - params.cost_lo + 1)));

  long long budget = 0;
  if (params.budget.kind == BudgetRule::Kind::Fixed) {
    if (params.budget.fixed < 0) throw std::invalid_argument("budget must be non-negative");
    budget = params.budget.fixed;
  } else {
    if (params.budget.num < 0 || params.budget.den <= 0)
      throw std::invalid_argument("budget fraction must be non-negative");
    long long total = 0;
    for (long long c : costs) total = checked_add(total, c);
    budget = (BigInt(total) * params.budget.num / params.budget.den).convert_to<long long>();
  }

  std::vector<Side> labels(n, Side::Right);
  for (int l = 0; l < nl; ++l) labels[l] = Side::Left;
  return BudgetedInstance(n, std::move(weights), std::move(costs), budget, std::move(edges),
                          std::move(labels));
}

}  // namespace bmwis
