#include "replika/cluster.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "replika/approximation.hpp"
#include "replika/ar_translate.hpp"
#include "replika/decompose.hpp"
#include "replika/errors.hpp"
#include "replika/homology.hpp"
#include "replika/parallel.hpp"

namespace replika {

namespace {

void require_hereditary(const FDModule& m) {
  if (m.algebra()->level() != 0) throw InvalidArgument("stalks live over the path algebra (level 0)");
}

int single_vertex(const std::vector<int>& v) {
  int at = -1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) {
      if (v[i] != 1 || at >= 0) throw InvalidArgument("module is not indecomposable projective or injective");
      at = i;
    }
  if (at < 0) throw InvalidArgument("zero module");
  return at;
}

std::string dims_string(const FDModule& m) {
  std::string s;
  for (int d : m.dims()) s += std::to_string(d);
  return s;
}

}  // namespace

bool same_stalk(const DbStalk& x, const DbStalk& y) {
  if (x.shift != y.shift || x.module.algebra() != y.module.algebra()) return false;
  if (fingerprint(x.module) != fingerprint(y.module)) return false;
  return is_isomorphic(x.module, y.module);
}

DbStalk tau(const DbStalk& x) {
  require_hereditary(x.module);
  if (is_projective(x.module))
    return {standard_module(x.module.algebra(), StandardKind::kInjective, single_vertex(top_vector(x.module))),
            x.shift - 1};
  return {ar_tau(x.module), x.shift};
}

DbStalk tau_inverse(const DbStalk& x) {
  require_hereditary(x.module);
  if (is_injective(x.module))
    return {standard_module(x.module.algebra(), StandardKind::kProjective, single_vertex(socle_vector(x.module))),
            x.shift + 1};
  return {ar_tau_inverse(x.module), x.shift};
}

int hom_db(const DbStalk& x, const DbStalk& y) {
  require_hereditary(x.module);
  require_same_algebra(x.module, y.module);
  const int d = y.shift - x.shift;
  if (d == 0) return hom_dim(x.module, y.module);
  if (d == 1) return ext_dim(1, x.module, y.module);
  return 0;
}

DbStalk cluster_shift(const DbStalk& x, int m) {
  DbStalk y = tau_inverse(x);
  y.shift += m;
  return y;
}

DbStalk cluster_unshift(const DbStalk& x, int m) {
  DbStalk y = tau(x);
  y.shift -= m;
  return y;
}

bool in_fundamental_domain(const DbStalk& x, int m) {
  if (x.shift >= 0 && x.shift < m) return true;
  return x.shift == m && is_projective(x.module);
}

DbStalk cm_normalize(const DbStalk& x, int m) {
  if (m < 1) throw InvalidArgument("cluster categories need m >= 1");
  const int bound = std::abs(x.shift) / m + 2;
  DbStalk y = x;
  for (int z = 0; z <= bound; ++z) {
    if (in_fundamental_domain(y, m)) return y;
    y = y.shift < 0 ? cluster_shift(y, m) : cluster_unshift(y, m);
  }
  throw InternalError("normalization did not reach the fundamental domain");
}

int ext_cm(int i, const DbStalk& x, const DbStalk& y, int m) {
  DbStalk a = cm_normalize(x, m);
  DbStalk b = cm_normalize(y, m);
  b.shift += i;
  int total = 0;
  DbStalk up = a, down = a;
  total += hom_db(a, b);
  for (int z = 1; z <= 2; ++z) {
    up = cluster_shift(up, m);
    down = cluster_unshift(down, m);
    const int h = hom_db(up, b) + hom_db(down, b);
    if (z == 2 && h) throw InternalError("unexpected Hom beyond the F^{+-1} terms");
    total += h;
  }
  return total;
}

ClusterModel::ClusterModel(AlgebraPtr hereditary, int m) : alg_(hereditary), m_(m) {
  if (m < 1) throw InvalidArgument("cluster categories need m >= 1");
  if (alg_->level() != 0) throw InvalidArgument("expected a path algebra (level 0)");
  auto ind = hereditary_indecomposables(alg_);
  for (int q = 0; q < m; ++q)
    for (const auto& n : ind) objects_.push_back({n, q});
  for (int v = 0; v < alg_->vertex_count(); ++v)
    objects_.push_back({standard_module(alg_, StandardKind::kProjective, v), m});
  const int n = size();
  ext_.assign(static_cast<std::size_t>(m + 1) * n * n, 0);
  parallel_for(n, [&](int a) {
    for (int i = 0; i <= m; ++i)
      for (int b = 0; b < n; ++b) ext_[(static_cast<std::size_t>(i) * n + a) * n + b] = ext_cm(i, objects_[a], objects_[b], m);
  });
}

std::optional<int> ClusterModel::find(const DbStalk& x) const {
  DbStalk y = cm_normalize(x, m_);
  for (int i = 0; i < size(); ++i)
    if (same_stalk(objects_[i], y)) return i;
  return std::nullopt;
}

int ClusterModel::ext(int i, int a, int b) const {
  if (i < 0 || i > m_) throw InvalidArgument("cluster Ext degree out of range");
  const int n = size();
  return ext_.at((static_cast<std::size_t>(i) * n + a) * n + b);
}

bool ClusterModel::is_rigid(const std::vector<int>& s) const {
  for (int a : s)
    for (int b : s)
      for (int i = 1; i <= m_; ++i)
        if (ext(i, a, b)) return false;
  return true;
}

bool ClusterModel::is_cluster_tilting(const std::vector<int>& s) const {
  if (!is_rigid(s)) return false;
  for (int c = 0; c < size(); ++c) {
    if (std::find(s.begin(), s.end(), c) != s.end()) continue;
    auto t = s;
    t.push_back(c);
    if (is_rigid(t)) return false;
  }
  return true;
}

std::vector<int> ClusterModel::complements(const std::vector<int>& almost) const {
  if (!is_rigid(almost)) throw PreconditionViolation("almost complete object is not rigid");
  if (static_cast<int>(almost.size()) != alg_->vertex_count() - 1)
    throw PreconditionViolation("almost complete object needs n - 1 summands");
  std::vector<int> out;
  for (int c = 0; c < size(); ++c) {
    if (std::find(almost.begin(), almost.end(), c) != almost.end()) continue;
    auto t = almost;
    t.push_back(c);
    if (is_cluster_tilting(t)) out.push_back(c);
  }
  if (static_cast<int>(out.size()) != m_ + 1)
    throw InternalError("almost complete m-cluster tilting object with " + std::to_string(out.size()) + " complements");
  return out;
}

std::vector<std::vector<int>> ClusterModel::tilting_objects() const {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    for (int c = from; c < size(); ++c) {
      pick.push_back(c);
      if (is_rigid(pick)) self(self, c + 1);
      pick.pop_back();
    }
    if (is_cluster_tilting(pick)) out.push_back(pick);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> ClusterModel::pi(const Catalog& c, int entry) const {
  if (c[entry].projective_injective) return std::nullopt;
  auto d = c.window().degree(c[entry].module);
  if (d.module.algebra() != alg_) throw AlgebraMismatch("cluster model is not built over the catalog's path algebra");
  auto i = find({d.module, d.l});
  if (!i) throw InternalError("pi landed outside the fundamental domain");
  return i;
}

std::string exchange_graph_dot(const ClusterModel& cm, const std::vector<std::vector<int>>& objects) {
  std::ostringstream out;
  out << "graph exchange {\n";
  auto label = [&](const std::vector<int>& s) {
    std::string l;
    for (int i : s) l += (l.empty() ? "" : " ") + dims_string(cm[i].module) + "[" + std::to_string(cm[i].shift) + "]";
    return l;
  };
  for (std::size_t a = 0; a < objects.size(); ++a) out << "  n" << a << " [label=\"" << label(objects[a]) << "\"];\n";
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = a + 1; b < objects.size(); ++b) {
      std::vector<int> d;
      std::set_symmetric_difference(objects[a].begin(), objects[a].end(), objects[b].begin(), objects[b].end(),
                                    std::back_inserter(d));
      if (d.size() == 2) out << "  n" << a << " -- n" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

bool AngleReport::pass() const {
  for (const auto& c : checks)
    if (c.name.rfind("e_", 0) != 0 && !c.pass) return false;
  return !checks.empty();
}

nlohmann::json AngleReport::to_json() const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness_dims", c.witness_dims}, {"detail", c.detail}});
  return j;
}

AngleReport ar_angle(const Catalog& c, const ClusterModel& cm, const std::vector<int>& t, const std::vector<int>& xs) {
  const int m = c.level();
  if (cm.level() != m) throw PreconditionViolation("cluster model and catalog disagree on m");
  if (static_cast<int>(xs.size()) < m + 1) throw PreconditionViolation("need complements X_0 .. X_m");
  for (int k = 0; k <= m; ++k)
    if (c[xs[k]].pd > m) throw PreconditionViolation("X_" + std::to_string(k) + " has projective dimension above m");
  std::vector<FDModule> tm;
  for (int i : t) {
    if (c[i].pd > m) throw PreconditionViolation("T has projective dimension above m");
    tm.push_back(c[i].module);
  }

  std::vector<int> px;
  std::vector<std::vector<int>> xdims;
  for (int k = 0; k <= m; ++k) {
    px.push_back(*cm.pi(c, xs[k]));
    xdims.push_back(c[xs[k]].module.dims());
  }
  std::vector<int> pt;
  for (int i : t)
    if (auto p = cm.pi(c, i)) pt.push_back(*p);
  std::sort(pt.begin(), pt.end());

  AngleReport r;
  {
    AngleCheck a{"a_complements", false, xdims, ""};
    try {
      auto comp = cm.complements(pt);
      auto got = px;
      std::sort(got.begin(), got.end());
      a.pass = got == comp;
      if (!a.pass) a.detail = "pi X_i differ from the complements of pi T";
    } catch (const Error& e) {
      a.detail = e.what();
    }
    r.checks.push_back(a);
  }
  {
    AngleCheck b{"b_connecting_ext", true, {}, ""};
    for (int k = 0; k <= m; ++k) {
      const int next = (k + 1) % (m + 1);
      const int e = cm.ext(1, px[next], px[k]);
      if (e != 1) {
        b.pass = false;
        b.witness_dims.push_back(xdims[next]);
        b.witness_dims.push_back(xdims[k]);
        b.detail += "Ext^1(pi X_" + std::to_string(next) + ", pi X_" + std::to_string(k) + ") = " + std::to_string(e) + "; ";
      }
    }
    r.checks.push_back(b);
  }
  {
    AngleCheck cc{"c_middle_terms", true, {}, ""};
    AngleCheck zero{"c_zero_iff_no_maps", true, {}, ""};
    AngleCheck d{"d_minimality", true, {}, ""};
    for (int k = 0; k < m; ++k) {
      const FDModule& x = c[xs[k]].module;
      const FDModule& y = c[xs[k + 1]].module;
      auto left = minimal_left_approx(x, tm);
      int visible = 0;
      for (int s : left.summands)
        if (auto p = cm.pi(c, t[s])) visible += std::binary_search(pt.begin(), pt.end(), *p) ? 1 : 0;
      if (visible == 0) {
        cc.pass = false;
        cc.witness_dims.push_back(left.object.module.dims());
        cc.detail += "pi T_" + std::to_string(k) + " is zero; ";
      }
      int maps = 0;
      for (int p : pt) maps += cm.ext(0, px[k], p);
      if ((visible == 0) != (maps == 0)) {
        zero.pass = false;
        zero.witness_dims.push_back(x.dims());
        zero.detail += "pi T_" + std::to_string(k) + " against Hom(pi X_" + std::to_string(k) + ", pi T) = " +
                       std::to_string(maps) + "; ";
      }
      auto right = minimal_right_approx(y, tm);
      auto ls = left.summands, rs = right.summands;
      std::sort(ls.begin(), ls.end());
      std::sort(rs.begin(), rs.end());
      bool ok = left.map.is_injective() && right.map.is_surjective() && ls == rs;
      ok = ok && is_isomorphic(cokernel(left.map).module, y) && is_isomorphic(kernel(right.map).module, x);
      if (!ok) {
        d.pass = false;
        d.witness_dims.push_back(x.dims());
        d.witness_dims.push_back(y.dims());
        d.detail += "sequence " + std::to_string(k) + " is not the minimal approximation pair; ";
      }
    }
    r.checks.push_back(cc);
    r.checks.push_back(zero);
    r.checks.push_back(d);
  }
  {
    AngleCheck e{"e_wraparound_exploratory", false, {}, ""};
    if (static_cast<int>(xs.size()) > m + 1) {
      auto p = cm.pi(c, xs[m + 1]);
      e.witness_dims = {c[xs[m + 1]].module.dims(), xdims[0]};
      e.pass = p && *p == px[0];
      e.detail = e.pass ? "pi X_{m+1} = pi X_0" : "pi X_{m+1} differs from pi X_0";
    } else {
      e.detail = "chain ends at X_m";
    }
    r.checks.push_back(e);
  }
  return r;
}

nlohmann::json to_json(const DbStalk& x) { return {{"dims", x.module.dims()}, {"shift", x.shift}}; }

}  // namespace replika
