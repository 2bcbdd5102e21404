#ifndef BMWIS_INSTANCE_HPP
#define BMWIS_INSTANCE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmwis/errors.hpp"

namespace bmwis {

enum class Side : unsigned char { Left, Right };

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/**
 * Budgeted independent-set instance: graph, non-negative integer vertex
 * weights and costs, and a budget. Immutable once built; safe to share
 * across concurrent solver calls.
 *
 * The primary constructor only guarantees memory safety (ids in range,
 * array lengths match); semantic invariants are checked by validate().
 * checked() additionally runs validate() and rejects dirty data.
 */
class BudgetedInstance {
 public:
  BudgetedInstance(int n, std::vector<long long> weights, std::vector<long long> costs,
                   long long budget, std::vector<std::pair<int, int>> edges,
                   std::optional<std::vector<Side>> sides = std::nullopt);

  // Validating factory: throws ValidationError if validate() finds anything.
  static BudgetedInstance checked(int n, std::vector<long long> weights,
                                  std::vector<long long> costs, long long budget,
                                  std::vector<std::pair<int, int>> edges,
                                  std::optional<std::vector<Side>> sides = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  long long weight(int v) const { return weights_[v]; }
  long long cost(int v) const { return costs_[v]; }
  long long budget() const { return budget_; }
  const std::vector<long long>& weights() const { return weights_; }
  const std::vector<long long>& costs() const { return costs_; }

  // Edges as given (each pair normalized to u <= v); duplicates preserved.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Sorted, de-duplicated neighbor list.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  bool has_sides() const { return sides_.has_value(); }
  const std::optional<std::vector<Side>>& sides() const { return sides_; }

  long long total_weight() const { return total_weight_; }
  long long total_cost() const { return total_cost_; }

  bool operator==(const BudgetedInstance& other) const;

 private:
  int n_;
  std::vector<long long> weights_;
  std::vector<long long> costs_;
  long long budget_;
  std::vector<std::pair<int, int>> edges_;
  std::optional<std::vector<Side>> sides_;
  std::vector<std::vector<int>> adjacency_;
  long long total_weight_ = 0;
  long long total_cost_ = 0;
};

struct Violation {
  enum class Code { BadEdge, NegativeValue, NotBipartite, BudgetMissing };
  Code code;
  int vertex;  // first (lowest) vertex involved, -1 if none
  std::string message;
};

const char* violation_code_name(Violation::Code code);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Violation::Code code) const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Lists every invariant violation, ordered by (code, first vertex id).
ValidationReport validate(const BudgetedInstance& inst);

// Side labels if present (verified), otherwise a 2-coloring.
// Throws NotBipartiteError when neither works.
std::vector<Side> bipartite_sides(const BudgetedInstance& inst);

// Candidate vertex subset with cached totals. Vertices are sorted ascending.
struct Solution {
  std::vector<int> vertices;
  long long total_weight = 0;
  long long total_cost = 0;
  bool empty() const { return vertices.empty(); }
};

// Computes the caches; rejects non-independent sets and invalid ids.
Solution make_solution(const BudgetedInstance& inst, std::vector<int> vertices);
bool fits_budget(const BudgetedInstance& inst, const Solution& sol);

// W(I): maximum vertex weight; requires at least one vertex.
long long max_vertex_weight(const BudgetedInstance& inst);

// True iff no edge has both endpoints in vs. Throws std::out_of_range on bad ids.
bool is_independent(const BudgetedInstance& inst, const std::vector<int>& vs);

/*
 * Instance file format (line oriented, ASCII, 1-based vertex ids):
 *   comments:  lines starting with '#' or 'c'
 *   header:    p bmwis <n> <m> <B>
 *   vertices:  n <id> <weight> <cost> [L|R]     exactly n lines
 *   edges:     e <u> <v>                        exactly m lines, u != v
 */
BudgetedInstance parse_instance(std::istream& in);
BudgetedInstance parse_instance(const std::string& text);
std::string serialize_instance(const BudgetedInstance& inst);

}  // namespace bmwis

#endif
