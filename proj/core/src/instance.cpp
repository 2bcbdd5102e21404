#include "bmwis/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <sstream>

namespace bmwis {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer addition overflow");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer multiplication overflow");
  return out;
}

BudgetedInstance::BudgetedInstance(int n, std::vector<long long> weights,
                                   std::vector<long long> costs, long long budget,
                                   std::vector<std::pair<int, int>> edges,
                                   std::optional<std::vector<Side>> sides)
    : n_(n),
      weights_(std::move(weights)),
      costs_(std::move(costs)),
      budget_(budget),
      edges_(std::move(edges)),
      sides_(std::move(sides)),
      adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (static_cast<int>(weights_.size()) != n_ || static_cast<int>(costs_.size()) != n_)
    throw std::invalid_argument("weights/costs length must equal vertex count");
  if (sides_ && static_cast<int>(sides_->size()) != n_)
    throw std::invalid_argument("side labels length must equal vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    adjacency_[u].push_back(v);
    if (v != u) adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (int v = 0; v < n_; ++v) {
    total_weight_ = checked_add(total_weight_, weights_[v]);
    total_cost_ = checked_add(total_cost_, costs_[v]);
  }
}

BudgetedInstance BudgetedInstance::checked(int n, std::vector<long long> weights,
                                           std::vector<long long> costs, long long budget,
                                           std::vector<std::pair<int, int>> edges,
                                           std::optional<std::vector<Side>> sides) {
  BudgetedInstance inst(n, std::move(weights), std::move(costs), budget, std::move(edges),
                        std::move(sides));
  ValidationReport report = validate(inst);
  if (!report.ok()) throw ValidationError(std::move(report));
  return inst;
}

bool BudgetedInstance::adjacent(int u, int v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

namespace {

std::vector<std::pair<int, int>> sorted_edges(const BudgetedInstance& inst) {
  auto edges = inst.edges();
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

bool BudgetedInstance::operator==(const BudgetedInstance& other) const {
  return n_ == other.n_ && weights_ == other.weights_ && costs_ == other.costs_ &&
         budget_ == other.budget_ && sides_ == other.sides_ &&
         sorted_edges(*this) == sorted_edges(other);
}

const char* violation_code_name(Violation::Code code) {
  switch (code) {
    case Violation::Code::BadEdge: return "BadEdge";
    case Violation::Code::NegativeValue: return "NegativeValue";
    case Violation::Code::NotBipartite: return "NotBipartite";
    case Violation::Code::BudgetMissing: return "BudgetMissing";
  }
  return "?";
}

bool ValidationReport::has(Violation::Code code) const {
  for (const auto& v : violations)
    if (v.code == code) return true;
  return false;
}

namespace {

std::string report_summary(const ValidationReport& report) {
  std::string out = "instance validation failed:";
  for (const auto& v : report.violations) {
    out += " [";
    out += violation_code_name(v.code);
    out += "] ";
    out += v.message;
    out += ";";
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(report_summary(report)), report_(std::move(report)) {}

ValidationReport validate(const BudgetedInstance& inst) {
  ValidationReport report;
  auto add = [&](Violation::Code code, int vertex, std::string message) {
    report.violations.push_back({code, vertex, std::move(message)});
  };

  std::map<std::pair<int, int>, int> seen;
  for (const auto& e : inst.edges()) {
    if (e.first == e.second) {
      add(Violation::Code::BadEdge, e.first,
          "self-loop at vertex " + std::to_string(e.first + 1));
      continue;
    }
    if (++seen[e] == 2)
      add(Violation::Code::BadEdge, e.first,
          "duplicate edge (" + std::to_string(e.first + 1) + "," +
              std::to_string(e.second + 1) + ")");
  }

  for (int v = 0; v < inst.vertex_count(); ++v) {
    if (inst.weight(v) < 0)
      add(Violation::Code::NegativeValue, v,
          "negative weight at vertex " + std::to_string(v + 1));
    if (inst.cost(v) < 0)
      add(Violation::Code::NegativeValue, v,
          "negative cost at vertex " + std::to_string(v + 1));
  }

  if (inst.has_sides()) {
    const auto& sides = *inst.sides();
    for (const auto& e : inst.edges()) {
      if (e.first != e.second && sides[e.first] == sides[e.second]) {
        add(Violation::Code::NotBipartite, e.first,
            "edge (" + std::to_string(e.first + 1) + "," + std::to_string(e.second + 1) +
                ") joins two " + (sides[e.first] == Side::Left ? "Left" : "Right") +
                " vertices");
      }
    }
  }

  if (inst.budget() < 0) add(Violation::Code::BudgetMissing, -1, "budget is negative/unset");

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.code != b.code) return a.code < b.code;
                     return a.vertex < b.vertex;
                   });
  return report;
}

std::vector<Side> bipartite_sides(const BudgetedInstance& inst) {
  const int n = inst.vertex_count();
  if (inst.has_sides()) {
    const auto& sides = *inst.sides();
    for (const auto& e : inst.edges())
      if (sides[e.first] == sides[e.second])
        throw NotBipartiteError("side labels are inconsistent: edge inside one side");
    return sides;
  }
  // BFS 2-coloring, component roots colored Left, lowest id first.
  std::vector<Side> sides(n, Side::Left);
  std::vector<int> state(n, -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (state[root] != -1) continue;
    state[root] = 0;
    queue.assign(1, root);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v : inst.neighbors(u)) {
        if (v == u) throw NotBipartiteError("self-loop prevents 2-coloring");
        if (state[v] == -1) {
          state[v] = state[u] ^ 1;
          queue.push_back(v);
        } else if (state[v] == state[u]) {
          throw NotBipartiteError("graph contains an odd cycle");
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) sides[v] = state[v] == 0 ? Side::Left : Side::Right;
  return sides;
}

Solution make_solution(const BudgetedInstance& inst, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!is_independent(inst, vertices))
    throw std::logic_error("make_solution: vertex set is not independent");
  Solution sol;
  sol.vertices = std::move(vertices);
  for (int v : sol.vertices) {
    sol.total_weight = checked_add(sol.total_weight, inst.weight(v));
    sol.total_cost = checked_add(sol.total_cost, inst.cost(v));
  }
  return sol;
}

bool fits_budget(const BudgetedInstance& inst, const Solution& sol) {
  return sol.total_cost <= inst.budget();
}

long long max_vertex_weight(const BudgetedInstance& inst) {
  if (inst.vertex_count() == 0)
    throw std::invalid_argument("max_vertex_weight: empty instance");
  return *std::max_element(inst.weights().begin(), inst.weights().end());
}

bool is_independent(const BudgetedInstance& inst, const std::vector<int>& vs) {
  std::vector<char> in_set(inst.vertex_count(), 0);
  for (int v : vs) {
    if (v < 0 || v >= inst.vertex_count())
      throw std::out_of_range("is_independent: vertex id out of range");
    in_set[v] = 1;
  }
  for (const auto& e : inst.edges())
    if (in_set[e.first] && in_set[e.second]) return false;
  return true;
}

namespace {

constexpr long long kMaxValue = std::numeric_limits<long long>::max();

long long parse_value(const std::string& token, int line, const char* what) {
  if (token.empty()) throw ParseError(line, std::string("missing ") + what);
  for (char ch : token)
    if (ch < '0' || ch > '9')
      throw ParseError(line, std::string(what) + " must be a non-negative integer, got '" +
                                 token + "'");
  // reject values that do not fit a signed 64-bit integer
  if (token.size() > 19 || (token.size() == 19 && token > std::to_string(kMaxValue)))
    throw ParseError(line, std::string(what) + " out of range: " + token);
  return std::stoll(token);
}

int parse_id(const std::string& token, int line, int n, const char* what) {
  long long v = parse_value(token, line, what);
  if (v < 1 || v > n)
    throw ParseError(line, std::string(what) + " " + token + " outside 1.." + std::to_string(n));
  return static_cast<int>(v - 1);  // 1-based in files, 0-based internally
}

}  // namespace

BudgetedInstance parse_instance(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0, budget = 0;
  std::vector<long long> weights, costs;
  std::vector<char> defined;
  std::vector<std::pair<int, int>> edges;
  std::vector<Side> sides;
  int labeled = 0;
  long long vertex_lines = 0, edge_lines = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string type;
    if (!(ls >> type)) continue;  // blank line
    if (type[0] == '#' || type == "c") continue;

    if (type == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string kind, ns, ms, bs;
      if (!(ls >> kind >> ns >> ms >> bs) || kind != "bmwis")
        throw ParseError(line_no, "header must be 'p bmwis <n> <m> <B>'");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
      long long nv = parse_value(ns, line_no, "vertex count");
      if (nv > std::numeric_limits<int>::max())
        throw ParseError(line_no, "vertex count too large");
      n = static_cast<int>(nv);
      m = parse_value(ms, line_no, "edge count");
      budget = parse_value(bs, line_no, "budget");
      weights.assign(n, 0);
      costs.assign(n, 0);
      defined.assign(n, 0);
      sides.assign(n, Side::Left);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "expected header before '" + type + "' line");

    if (type == "n") {
      if (edge_lines > 0) throw ParseError(line_no, "vertex line after edge lines");
      if (vertex_lines == n) throw ParseError(line_no, "more vertex lines than declared");
      std::string ids, ws, cs, side, extra;
      if (!(ls >> ids >> ws >> cs))
        throw ParseError(line_no, "vertex line must be 'n <id> <weight> <cost> [L|R]'");
      bool has_side = static_cast<bool>(ls >> side);
      if (ls >> extra) throw ParseError(line_no, "trailing tokens after vertex line");
      int id = parse_id(ids, line_no, n, "vertex id");
      if (defined[id])
        throw ParseError(line_no, "duplicate definition of vertex " + ids);
      defined[id] = 1;
      weights[id] = parse_value(ws, line_no, "weight");
      costs[id] = parse_value(cs, line_no, "cost");
      if (has_side) {
        if (side != "L" && side != "R")
          throw ParseError(line_no, "side must be L or R, got '" + side + "'");
        sides[id] = side == "L" ? Side::Left : Side::Right;
        ++labeled;
      }
      ++vertex_lines;
      continue;
    }
    if (type == "e") {
      if (vertex_lines < n)
        throw ParseError(line_no, "edge line before all vertices are defined");
      if (edge_lines == m) throw ParseError(line_no, "more edge lines than declared");
      std::string us, vs, extra;
      if (!(ls >> us >> vs)) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
      if (ls >> extra) throw ParseError(line_no, "trailing tokens after edge line");
      int u = parse_id(us, line_no, n, "edge endpoint");
      int v = parse_id(vs, line_no, n, "edge endpoint");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + us);
      edges.emplace_back(u, v);
      ++edge_lines;
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + type + "'");
  }

  if (!have_header) throw ParseError(line_no, "missing header");
  if (vertex_lines != n)
    throw ParseError(line_no, "vertex count mismatch: header declares " + std::to_string(n) +
                                  ", found " + std::to_string(vertex_lines));
  if (edge_lines != m)
    throw ParseError(line_no, "edge count mismatch: header declares " + std::to_string(m) +
                                  ", found " + std::to_string(edge_lines));
  if (labeled != 0 && labeled != n)
    throw ParseError(line_no, "side labels must be given for all vertices or none");

  std::optional<std::vector<Side>> side_opt;
  if (labeled == n && n > 0) side_opt = std::move(sides);
  return BudgetedInstance(n, std::move(weights), std::move(costs), budget, std::move(edges),
                          std::move(side_opt));
}

BudgetedInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const BudgetedInstance& inst) {
  std::ostringstream out;
  out << "p bmwis " << inst.vertex_count() << ' ' << inst.edge_count() << ' '
      << inst.budget() << '\n';
  for (int v = 0; v < inst.vertex_count(); ++v) {
    out << "n " << v + 1 << ' ' << inst.weight(v) << ' ' << inst.cost(v);
    if (inst.has_sides()) out << ' ' << ((*inst.sides())[v] == Side::Left ? 'L' : 'R');
    out << '\n';
  }
  for (const auto& e : sorted_edges(inst)) out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
  return out.str();
}

}  // namespace bmwis
