#include "sspsat/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sspsat {

Permutation Permutation::identity(std::uint32_t num_vars) {
  std::vector<std::uint32_t> images(num_vars);
  for (std::uint32_t i = 0; i < num_vars; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img == 0 || img > images_.size() || hit[img - 1]) {
      throw ContractViolation("permutation is not a bijection on 1.." +
                              std::to_string(images_.size()));
    }
    hit[img - 1] = true;
  }
}

Permutation Permutation::transposition(std::uint32_t num_vars, std::uint32_t a, std::uint32_t b) {
  Permutation p = identity(num_vars);
  if (a == 0 || b == 0 || a > num_vars || b > num_vars) {
    throw ContractViolation("transposition outside 1.." + std::to_string(num_vars));
  }
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(std::uint32_t num_vars, const std::string& text) {
  std::vector<std::uint32_t> images(num_vars);
  for (std::uint32_t i = 0; i < num_vars; ++i) images[i] = i + 1;
  std::vector<bool> seen(num_vars, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ContractViolation("bad cycle notation '" + text + "': " + why);
  };
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') fail("expected '('");
    auto close = text.find(')', pos);
    if (close == std::string::npos) fail("missing ')'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<std::uint32_t> cycle;
    long long v;
    while (in >> v) {
      if (v < 1 || v > static_cast<long long>(num_vars)) fail("variable out of range");
      if (seen[v - 1]) fail("variable " + std::to_string(v) + " repeated");
      seen[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    if (!in.eof()) fail("non-numeric token");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.num_vars() != num_vars()) throw ContractViolation("permutation arity mismatch");
  std::vector<std::uint32_t> images(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) images[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::uint32_t start = 1; start <= images_.size(); ++start) {
    if (done[start - 1] || images_[start - 1] == start) continue;
    out << '(';
    std::uint32_t v = start;
    bool first = true;
    while (!done[v - 1]) {
      done[v - 1] = true;
      if (!first) out << ' ';
      out << v;
      first = false;
      v = images_[v - 1];
    }
    out << ')';
  }
  return out.str();
}

Point apply_perm_point(const Permutation& perm, const Point& point) {
  if (perm.num_vars() != point.num_vars()) throw ContractViolation("permutation/point arity mismatch");
  Point out(point.num_vars());
  for (std::uint32_t i = 1; i <= point.num_vars(); ++i) out.set(perm(Var{i}), point[Var{i}]);
  return out;
}

Clause apply_perm_clause(const Permutation& perm, const Clause& clause) {
  if (clause.max_var() > perm.num_vars()) throw ContractViolation("clause exceeds permutation arity");
  std::vector<Lit> lits;
  lits.reserve(clause.size());
  for (const Lit& l : clause.literals()) lits.push_back(Lit{perm(l.var), l.positive});
  return Clause(std::move(lits));
}

bool is_symmetric(const CnfFormula& formula, const Permutation& perm) {
  if (perm.num_vars() != formula.num_vars()) return false;
  std::multiset<std::string> original;
  std::multiset<std::string> image;
  for (const Clause& c : formula.clauses()) {
    original.insert(c.to_string());
    image.insert(apply_perm_clause(perm, c).to_string());
  }
  return original == image;
}

namespace {

enum class Bfs { Found, Exhausted, LimitHit };

// Walks the orbit of `start`, stopping early when `stop` accepts a point.
Bfs walk_orbit(const Point& start, const SymmetryGroup& group, std::size_t limit,
               const std::function<bool(const Point&)>& stop, std::vector<Point>* out = nullptr) {
  PointSet seen{start};
  std::deque<Point> queue{start};
  if (out) out->push_back(start);
  if (stop && stop(start)) return Bfs::Found;
  while (!queue.empty()) {
    Point p = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : group.generators) {
      Point q = apply_perm_point(g, p);
      if (seen.count(q)) continue;
      if (stop && stop(q)) return Bfs::Found;
      if (seen.size() >= limit) return Bfs::LimitHit;
      seen.insert(q);
      if (out) out->push_back(q);
      queue.push_back(std::move(q));
    }
  }
  return Bfs::Exhausted;
}

void check_group(const SymmetryGroup& group, std::size_t num_vars) {
  for (const auto& g : group.generators) {
    if (g.num_vars() != num_vars) throw ContractViolation("generator arity mismatch");
  }
}

}  // namespace

std::optional<std::vector<Point>> orbit(const Point& point, const SymmetryGroup& group,
                                        std::size_t limit) {
  check_group(group, point.num_vars());
  std::vector<Point> out;
  if (walk_orbit(point, group, limit, {}, &out) == Bfs::LimitHit) return std::nullopt;
  return out;
}

Tri in_same_orbit(const Point& p1, const Point& p2, const SymmetryGroup& group,
                  std::size_t limit) {
  if (p1.num_vars() != p2.num_vars()) throw ContractViolation("point arity mismatch");
  if (limit == 0) throw ContractViolation("orbit limit must be positive");
  check_group(group, p1.num_vars());
  switch (walk_orbit(p1, group, limit, [&](const Point& q) { return q == p2; })) {
    case Bfs::Found:
      return Tri::Yes;
    case Bfs::Exhausted:
      return Tri::No;
    case Bfs::LimitHit:
      break;
  }
  return Tri::Unknown;
}

std::optional<std::size_t> group_order(const SymmetryGroup& group, std::size_t limit) {
  check_group(group, group.num_vars);
  std::set<std::vector<std::uint32_t>> seen;
  Permutation id = Permutation::identity(group.num_vars);
  seen.insert(id.images());
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : group.generators) {
      Permutation q = g.compose(p);
      if (!seen.insert(q.images()).second) continue;
      if (seen.size() > limit) return std::nullopt;
      queue.push_back(std::move(q));
    }
  }
  return seen.size();
}

SymSspResult gen_ssp_mod_symmetry(const CnfFormula& formula, const SymmetryGroup& group,
                                  const Point& init, const SspConfig& config, std::size_t limit,
                                  TraceLog* trace) {
  check_group(group, formula.num_vars());
  for (const auto& g : group.generators) {
    if (!is_symmetric(formula, g)) {
      throw ContractViolation("formula is not symmetric under " + g.to_cycles());
    }
  }
  NeighborFilter skip;
  if (!group.generators.empty()) {
    skip = [&](const Point& q, const std::function<bool(const Point&)>& visited) {
      return walk_orbit(q, group, limit, visited) == Bfs::Found;
    };
  }
  SspResult r = gen_ssp(formula, init, config, trace, skip);
  return SymSspResult{r.satisfiable, std::move(r.witness), std::move(r.points),
                      std::move(r.transport), r.iterations};
}

VerifyReport verify_stable_mod_symmetry(const CnfFormula& formula,
                                        const std::vector<Point>& points,
                                        const PointTransport& transport,
                                        const SymmetryGroup& group, std::size_t limit) {
  if (points.empty()) return VerifyReport::fail("point set is empty");
  check_group(group, formula.num_vars());
  PointSet members(points.begin(), points.end());
  auto member = [&](const Point& q) { return members.count(q) > 0; };
  for (const Point& p : points) {
    if (p.num_vars() != formula.num_vars()) {
      return VerifyReport::fail("point " + p.to_string() + " has wrong arity");
    }
    auto it = transport.find(p);
    if (it == transport.end()) {
      return VerifyReport::fail("point " + p.to_string() + " has no transport clause");
    }
    if (!formula.has_clause(it->second)) {
      return VerifyReport::fail("point " + p.to_string() + " maps to unknown clause " +
                                std::to_string(it->second));
    }
    const Clause& c = formula.clause(it->second);
    if (evaluate_clause(c, p) != ClauseValue::Falsified) {
      return VerifyReport::fail("point " + p.to_string() + " satisfies its transport clause C" +
                                std::to_string(it->second));
    }
    for (const Point& q : point_nbhd(p, c)) {
      Bfs r = walk_orbit(q, group, limit, member);
      if (r == Bfs::Found) continue;
      return VerifyReport::fail("neighbor " + q.to_string() + " of " + p.to_string() +
                                (r == Bfs::LimitHit ? " exceeded the orbit limit"
                                                    : " has no symmetric point in the set"));
    }
  }
  return {};
}

SymExpansion expand_mod_sym_to_ssp(const CnfFormula& formula, const std::vector<Point>& points,
                                   const PointTransport& transport, const SymmetryGroup& group,
                                   std::size_t limit) {
  check_group(group, formula.num_vars());
  SymExpansion out;
  for (const Point& p : points) {
    auto it = transport.find(p);
    if (it == transport.end()) throw ContractViolation("point without transport clause");
    if (out.transport.count(p)) continue;
    std::deque<std::pair<Point, ClauseId>> queue{{p, it->second}};
    out.transport.emplace(p, it->second);
    out.points.push_back(p);
    while (!queue.empty()) {
      auto [q, id] = std::move(queue.front());
      queue.pop_front();
      for (const Permutation& g : group.generators) {
        Point r = apply_perm_point(g, q);
        if (out.transport.count(r)) continue;
        auto image = formula.find(apply_perm_clause(g, formula.clause(id)));
        if (!image) throw ContractViolation("formula is not symmetric under " + g.to_cycles());
        if (out.points.size() >= limit) {
          out.overflow = true;
          return out;
        }
        out.transport.emplace(r, *image);
        out.points.push_back(r);
        queue.emplace_back(std::move(r), *image);
      }
    }
  }
  return out;
}

PhFormula ph_formula(std::uint32_t pigeons, std::uint32_t holes) {
  if (pigeons < 1 || holes < 1) throw ContractViolation("pigeon-hole sizes must be positive");
  PhInstance inst{pigeons, holes};
  CnfFormula f(inst.num_vars());
  for (std::uint32_t i = 1; i <= pigeons; ++i) {
    std::vector<Lit> lits;
    for (std::uint32_t j = 1; j <= holes; ++j) lits.push_back(Lit{inst.var(i, j), true});
    f.add_clause(Clause(std::move(lits)));
  }
  for (std::uint32_t j = 1; j <= holes; ++j) {
    for (std::uint32_t i = 1; i <= pigeons; ++i) {
      for (std::uint32_t k = i + 1; k <= pigeons; ++k) {
        f.add_clause(Clause({Lit{inst.var(i, j), false}, Lit{inst.var(k, j), false}}));
      }
    }
  }
  return PhFormula{std::move(f), inst};
}

SymmetryGroup ph_symmetry_generators(const PhInstance& inst) {
  SymmetryGroup group{inst.num_vars(), {}};
  auto swap = [&](auto var_a, auto var_b, std::uint32_t count) {
    Permutation p = Permutation::identity(inst.num_vars());
    std::vector<std::uint32_t> images = p.images();
    for (std::uint32_t t = 1; t <= count; ++t) {
      Var a = var_a(t);
      Var b = var_b(t);
      images[a.slot()] = b.index;
      images[b.slot()] = a.index;
    }
    group.generators.emplace_back(std::move(images));
  };
  for (std::uint32_t i = 1; i < inst.pigeons; ++i) {
    swap([&](std::uint32_t j) { return inst.var(i, j); },
         [&](std::uint32_t j) { return inst.var(i + 1, j); }, inst.holes);
  }
  for (std::uint32_t j = 1; j < inst.holes; ++j) {
    swap([&](std::uint32_t i) { return inst.var(i, j); },
         [&](std::uint32_t i) { return inst.var(i, j + 1); }, inst.pigeons);
  }
  return group;
}

SymmetryGroup parse_symmetry_file(const std::string& text, std::uint32_t num_vars) {
  SymmetryGroup group{num_vars, {}};
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    group.generators.push_back(Permutation::from_cycles(num_vars, line));
  }
  return group;
}

std::string format_symmetry_file(const SymmetryGroup& group) {
  std::string out;
  for (const auto& g : group.generators) {
    std::string cycles = g.to_cycles();
    out += cycles.empty() ? "()" : cycles;
    out += '\n';
  }
  return out;
}

}  // namespace sspsat
