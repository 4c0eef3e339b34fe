#include "replika/tilting.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "replika/decompose.hpp"
#include "replika/errors.hpp"

namespace replika {

namespace {

std::string fnv1a(const std::vector<std::vector<int>>& items) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](std::uint32_t x) {
    for (int k = 0; k < 4; ++k) {
      h ^= (x >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const auto& item : items) {
    feed(static_cast<std::uint32_t>(item.size()));
    for (int x : item) feed(static_cast<std::uint32_t>(x));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int tilting_size(const SCAlgebra& a) { return a.quiver_vertices() * (a.level() + 1); }

bool self_exceptional(const Catalog& c, int i) {
  for (int s = 1; s <= c.max_degree(); ++s)
    if (c.ext(s, i, i)) return false;
  return true;
}

bool compatible(const Catalog& c, int i, int j) {
  for (int s = 1; s <= c.max_degree(); ++s)
    if (c.ext(s, i, j) || c.ext(s, j, i)) return false;
  return true;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

FDModule sum_of(const AlgebraPtr& alg, const std::vector<FDModule>& parts) { return direct_sum(alg, parts).module; }

bool faithful_set(const Catalog& c, const std::vector<int>& idx) {
  std::vector<FDModule> parts;
  for (int i : idx) parts.push_back(c[i].module);
  return is_faithful(sum_of(c.algebra(), parts));
}

void require_indecomposable(const FDModule& x, const char* what) {
  if (x.is_zero() || !is_indecomposable(x)) throw InternalError(std::string(what) + " is not indecomposable");
}

void require_almost_complete(const std::vector<FDModule>& t, const FDModule& x) {
  if (t.empty()) throw PreconditionViolation("empty almost complete module");
  const auto& alg = t.front().algebra();
  if (static_cast<int>(t.size()) != tilting_size(*alg) - 1)
    throw PreconditionViolation("almost complete tilting module needs " + std::to_string(tilting_size(*alg) - 1) +
                                " summands, got " + std::to_string(t.size()));
  if (!is_faithful(sum_of(alg, t))) throw PreconditionViolation("almost complete tilting module is not faithful");
  std::vector<FDModule> all = t;
  all.push_back(x);
  if (!is_exceptional(sum_of(alg, all))) throw PreconditionViolation("T + X is not exceptional");
}

}  // namespace

bool is_exceptional(const FDModule& m) {
  const int top = 2 * m.algebra()->level() + 1;
  auto chain = syzygies(m, top);
  for (int s = 1; s <= top; ++s)
    if (ext_dim(s, chain, m)) return false;
  return true;
}

bool is_partial_tilting(const FDModule& m) { return is_exceptional(m); }

bool is_tilting(const FDModule& m, std::uint64_t seed) {
  if (!is_partial_tilting(m)) return false;
  std::vector<FDModule> distinct;
  for (const auto& s : decompose(m, seed)) {
    bool seen = false;
    for (const auto& d : distinct)
      if (fingerprint(d) == fingerprint(s) && is_isomorphic(d, s, seed)) seen = true;
    if (!seen) distinct.push_back(s);
  }
  return static_cast<int>(distinct.size()) == tilting_size(*m.algebra());
}

std::string module_id(const std::vector<FDModule>& summands) {
  std::vector<std::vector<int>> fps;
  for (const auto& s : summands) fps.push_back(fingerprint(s));
  std::sort(fps.begin(), fps.end());
  return fnv1a(fps);
}

std::string module_id(const Catalog& c, const std::vector<int>& summands) {
  std::vector<std::vector<int>> fps;
  for (int i : summands) fps.push_back(c[i].fingerprint);
  std::sort(fps.begin(), fps.end());
  return fnv1a(fps);
}

bool is_exceptional(const Catalog& c, const std::vector<int>& summands) {
  for (std::size_t a = 0; a < summands.size(); ++a) {
    if (!self_exceptional(c, summands[a])) return false;
    for (std::size_t b = a + 1; b < summands.size(); ++b)
      if (!compatible(c, summands[a], summands[b])) return false;
  }
  return true;
}

TiltingRecord make_record(const Catalog& c, std::vector<int> summands) {
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
  TiltingRecord r;
  r.summands = summands;
  r.is_tilting = is_exceptional(c, summands) && static_cast<int>(summands.size()) == tilting_size(*c.algebra());
  for (int i : summands) r.pd = std::max(r.pd, c[i].pd);
  r.faithful = faithful_set(c, summands);
  r.id = module_id(c, summands);
  return r;
}

std::vector<TiltingRecord> enumerate_tilting(const Catalog& c, std::optional<int> pd_bound) {
  const auto pis = c.projective_injectives();
  std::vector<int> cand;
  for (int i = 0; i < c.size(); ++i)
    if (!c[i].projective_injective && self_exceptional(c, i) && (!pd_bound || c[i].pd <= *pd_bound)) cand.push_back(i);
  const int need = tilting_size(*c.algebra()) - static_cast<int>(pis.size());
  std::vector<TiltingRecord> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == need) {
      std::vector<int> all = pis;
      all.insert(all.end(), pick.begin(), pick.end());
      out.push_back(make_record(c, all));
      return;
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
      bool ok = true;
      for (int p : pick)
        if (!compatible(c, p, cand[k])) ok = false;
      if (!ok) continue;
      pick.push_back(cand[k]);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.summands < b.summands; });
  for (const auto& r : out)
    if (!r.faithful) throw InternalError("tilting module " + r.id + " is not faithful");
  return out;
}

std::vector<std::vector<int>> faithful_almost_complete(const Catalog& c) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for (const auto& r : enumerate_tilting(c)) {
    for (int x : r.summands) {
      if (c[x].projective_injective) continue;
      std::vector<int> t;
      for (int y : r.summands)
        if (y != x) t.push_back(y);
      if (!seen.insert(t).second) continue;
      if (faithful_set(c, t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> brute_force_complements(const Catalog& c, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != tilting_size(*c.algebra()) - 1)
    throw PreconditionViolation("not an almost complete summand count");
  std::vector<int> out;
  for (int x = 0; x < c.size(); ++x) {
    if (contains(t, x) || !self_exceptional(c, x)) continue;
    bool ok = true;
    for (int y : t)
      if (!compatible(c, x, y)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

Mutation mutate(const std::vector<FDModule>& t, const FDModule& x, Direction dir) {
  if (dir == Direction::kUp) {
    Approximation a = minimal_left_approx(x, t);
    if (!a.map.is_injective()) throw SinkEnd("left add T-approximation is not injective: sink complement reached");
    Quotient q = cokernel(a.map);
    require_indecomposable(q.module, "cokernel of the left approximation");
    return {q.module, {a.map, q.projection, a.summands}};
  }
  Approximation a = minimal_right_approx(x, t);
  if (!a.map.is_surjective()) throw BongartzEnd("right add T-approximation is not surjective: Bongartz complement reached");
  Subobject k = kernel(a.map);
  require_indecomposable(k.module, "kernel of the right approximation");
  return {k.module, {k.inclusion, a.map, a.summands}};
}

ComplementChain complement_chain(const std::vector<FDModule>& t, const FDModule& hint, bool enforce_bounds) {
  require_almost_complete(t, hint);
  const auto& alg = hint.algebra();
  const int m = alg->level();
  const int guard = 4 * m + 6;
  FDModule x = hint;
  for (int k = 0;; ++k) {
    if (k > guard) throw InternalError("downward mutation did not reach the Bongartz complement");
    try {
      x = mutate(t, x, Direction::kDown).complement;
    } catch (const BongartzEnd&) {
      break;
    }
  }
  ComplementChain chain;
  chain.base = t;
  chain.complements.push_back(x);
  for (int k = 0;; ++k) {
    if (k > guard) throw InternalError("upward mutation did not reach the sink complement");
    try {
      Mutation mu = mutate(t, chain.complements.back(), Direction::kUp);
      chain.complements.push_back(mu.complement);
      chain.sequences.push_back(std::move(mu.sequence));
    } catch (const SinkEnd&) {
      break;
    }
  }
  RepetitiveWindow w = RepetitiveWindow::around(alg);
  for (const auto& c : chain.complements) {
    chain.degrees.push_back(w.degree(c).l);
    chain.pds.push_back(proj_dim(c));
  }
  if (enforce_bounds && (chain.t() < 2 * m || chain.t() > 2 * m + 1))
    throw InternalError("complement chain has t = " + std::to_string(chain.t()) + ", outside [" +
                        std::to_string(2 * m) + ", " + std::to_string(2 * m + 1) + "]");
  return chain;
}

std::vector<int> chain_indices(const Catalog& c, const ComplementChain& chain) {
  std::vector<int> out;
  for (const auto& x : chain.complements) out.push_back(c.index_of(x));
  return out;
}

bool has_team_pattern(const Catalog& c, const std::vector<int>& team) {
  const int n = static_cast<int>(team.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s <= c.max_degree(); ++s)
        if (c.ext(s, team[j], team[i]) != (i + s == j ? 1 : 0)) return false;
  return true;
}

TeamReport mutation_team_check(const Catalog& c, const std::vector<int>& team) {
  TeamReport r;
  const int n = static_cast<int>(team.size());
  const int m = c.level();
  for (int i : team)
    if (c[i].projective_injective) {
      r.pattern = false;
      r.violations.push_back("member #" + std::to_string(i) + " is projective-injective");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s <= c.max_degree(); ++s) {
        const int want = i + s == j ? 1 : 0, got = c.ext(s, team[j], team[i]);
        if (got != want) {
          r.pattern = false;
          r.violations.push_back("dim Ext^" + std::to_string(s) + "(X_" + std::to_string(j) + ", X_" + std::to_string(i) +
                                 ") = " + std::to_string(got) + ", expected " + std::to_string(want));
        }
      }
  for (int y = 0; y < c.size(); ++y) {
    if (c[y].projective_injective || contains(team, y)) continue;
    for (int pos = 0; pos <= n; ++pos) {
      std::vector<int> ext = team;
      ext.insert(ext.begin() + pos, y);
      if (has_team_pattern(c, ext)) {
        r.maximal = false;
        r.violations.push_back("#" + std::to_string(y) + " extends the team at position " + std::to_string(pos));
      }
    }
  }
  std::vector<int> deg;
  for (int i : team) deg.push_back(c[i].degree);
  auto fail = [&](const std::string& why) {
    r.ladder = false;
    r.violations.push_back(why);
  };
  if (deg.empty()) fail("empty team");
  else if (deg.front() != 0) fail("deg X_0 = " + std::to_string(deg.front()));
  for (int i = 0; i + 1 < n; ++i)
    if (deg[i + 1] - deg[i] < 0 || deg[i + 1] - deg[i] > 1)
      fail("deg X_" + std::to_string(i + 1) + " - deg X_" + std::to_string(i) + " = " + std::to_string(deg[i + 1] - deg[i]));
  std::map<int, int> per;
  for (int d : deg) ++per[d];
  for (auto [d, k] : per)
    if (k > 2) fail(std::to_string(k) + " members of degree " + std::to_string(d));
  if (n - 1 < 2 * m || n - 1 > 2 * m + 1) {
    r.length = false;
    r.violations.push_back("t = " + std::to_string(n - 1));
  }
  return r;
}

std::optional<TiltingRecord> find_mutation_witness(const Catalog& c, const std::vector<int>& team) {
  const int m = c.level();
  if (static_cast<int>(team.size()) != m + 1)
    throw PreconditionViolation("a team in the left part needs " + std::to_string(m + 1) + " members");
  for (int x : team)
    if (c[x].projective_injective || !c.in_left_part(x))
      throw PreconditionViolation("team member #" + std::to_string(x) + " is not in the left part");
  if (!has_team_pattern(c, team)) throw PreconditionViolation("team does not satisfy the Ext pattern");
  std::set<std::vector<int>> tried;
  for (const auto& r : enumerate_tilting(c)) {
    if (!contains(r.summands, team[0])) continue;
    std::vector<int> w;
    for (int y : r.summands)
      if (y != team[0]) w.push_back(y);
    if (!tried.insert(w).second) continue;
    bool ok = true;
    for (std::size_t i = 1; i < team.size() && ok; ++i) {
      if (contains(w, team[i]) || !self_exceptional(c, team[i])) ok = false;
      for (int y : w)
        if (ok && !compatible(c, team[i], y)) ok = false;
    }
    if (ok && faithful_set(c, w)) return make_record(c, w);
  }
  return std::nullopt;
}

MutationGraph mutation_graph(const Catalog& c, std::optional<int> pd_bound) {
  MutationGraph g;
  g.nodes = enumerate_tilting(c, pd_bound);
  for (int a = 0; a < static_cast<int>(g.nodes.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(g.nodes.size()); ++b) {
      std::vector<int> only_a, only_b;
      const auto& x = g.nodes[a].summands;
      const auto& y = g.nodes[b].summands;
      std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_a));
      std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_b));
      if (only_a.size() == 1 && only_b.size() == 1) g.edges.push_back({a, b, only_a[0], only_b[0]});
    }
  return g;
}

std::string to_dot(const MutationGraph& g, const Catalog& c) {
  std::ostringstream out;
  out << "graph mutation {\n";
  for (const auto& n : g.nodes) {
    out << "  \"" << n.id << "\" [label=\"";
    bool first = true;
    for (int i : n.summands) {
      if (c[i].projective_injective) continue;
      out << (first ? "" : " ") << i;
      first = false;
    }
    out << "\"];\n";
  }
  for (const auto& e : g.edges)
    out << "  \"" << g.nodes[e[0]].id << "\" -- \"" << g.nodes[e[1]].id << "\" [label=\"" << e[2] << "/" << e[3] << "\"];\n";
  out << "}\n";
  return out.str();
}

bool is_connected(const MutationGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

nlohmann::json to_json(const ComplementChain& chain) {
  nlohmann::json j;
  j["complements"] = nlohmann::json::array();
  for (std::size_t i = 0; i < chain.complements.size(); ++i)
    j["complements"].push_back(
        {{"dims", chain.complements[i].dims()}, {"degree", chain.degrees.at(i)}, {"pd", chain.pds.at(i)}});
  j["sequences"] = nlohmann::json::array();
  for (const auto& s : chain.sequences)
    j["sequences"].push_back({{"f", to_json(s.f)}, {"g", to_json(s.g)}, {"middle", s.middle}});
  return j;
}

}  // namespace replika
