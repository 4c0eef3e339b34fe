#include "replika/algebra.hpp"

#include <algorithm>
#include <set>

#include "replika/errors.hpp"

namespace replika {

PathAlgebraBasis::PathAlgebraBasis(const Quiver& q) : quiver_(q), paths_(enumerate_paths(q)) {}

std::optional<int> PathAlgebraBasis::find(const Path& p) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p, [](const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  if (it != paths_.end() && *it == p) return static_cast<int>(it - paths_.begin());
  return std::nullopt;
}

std::optional<int> PathAlgebraBasis::multiply(int u, int v) const {
  const Path& a = paths_[u];
  const Path& b = paths_[v];
  if (a.target != b.source) return std::nullopt;
  Path c{a.source, b.target, a.arrows};
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  return find(c);
}

std::optional<int> PathAlgebraBasis::left_dual(int u, int p) const {
  const Path& a = paths_[u];
  const Path& w = paths_[p];
  if (a.target != w.target || a.length() > w.length()) return std::nullopt;
  if (!std::equal(a.arrows.begin(), a.arrows.end(), w.arrows.end() - a.length())) return std::nullopt;
  Path rest{w.source, a.source, std::vector<int>(w.arrows.begin(), w.arrows.end() - a.length())};
  return find(rest);
}

std::optional<int> PathAlgebraBasis::right_dual(int p, int v) const {
  const Path& w = paths_[p];
  const Path& b = paths_[v];
  if (b.source != w.source || b.length() > w.length()) return std::nullopt;
  if (!std::equal(b.arrows.begin(), b.arrows.end(), w.arrows.begin())) return std::nullopt;
  Path rest{b.target, w.target, std::vector<int>(w.arrows.begin() + b.length(), w.arrows.end())};
  return find(rest);
}

std::optional<int> dual_action(const PathAlgebraBasis& basis, int u, int p, int v) {
  auto left = basis.left_dual(u, p);
  if (!left) return std::nullopt;
  return basis.right_dual(*left, v);
}

SCAlgebra::SCAlgebra(const Quiver& q, int m, Prime p) : basis_(q), m_(m), prime_(p) {
  if (m < 0) throw InvalidArgument("replication level must be non-negative");
  const int da = basis_.size();
  const int n = q.vertex_count();
  index_.assign(static_cast<std::size_t>(2) * (m + 1) * da, -1);
  auto slot = [&](ElementKind k, int layer, int path) -> int& {
    return index_[(static_cast<std::size_t>(k == ElementKind::kDualPath) * (m + 1) + layer) * da + path];
  };
  for (int layer = 0; layer <= m; ++layer) {
    for (int i = 0; i < da; ++i) {
      const Path& path = basis_.path(i);
      slot(ElementKind::kPath, layer, i) = dim();
      elements_.push_back({ElementKind::kPath, i, layer, layer * n + path.source, layer * n + path.target});
    }
    if (layer == 0) continue;
    for (int i = 0; i < da; ++i) {
      const Path& path = basis_.path(i);
      slot(ElementKind::kDualPath, layer, i) = dim();
      elements_.push_back({ElementKind::kDualPath, i, layer, layer * n + path.target, (layer - 1) * n + path.source});
    }
  }

  idempotents_.resize(static_cast<std::size_t>(n) * (m + 1));
  for (int layer = 0; layer <= m; ++layer)
    for (int v = 0; v < n; ++v) idempotents_[layer * n + v] = slot(ElementKind::kPath, layer, *basis_.trivial(v));

  const int d = dim();
  table_.assign(static_cast<std::size_t>(d) * d, std::nullopt);
  for (int x = 0; x < d; ++x) {
    const auto& ex = elements_[x];
    for (int y = 0; y < d; ++y) {
      const auto& ey = elements_[y];
      if (ex.target != ey.source) continue;
      std::optional<int> r;
      ElementKind kind = ElementKind::kPath;
      int layer = ex.layer;
      if (ex.kind == ElementKind::kPath && ey.kind == ElementKind::kPath) {
        r = basis_.multiply(ex.path, ey.path);
      } else if (ex.kind == ElementKind::kPath && ey.kind == ElementKind::kDualPath) {
        r = basis_.left_dual(ex.path, ey.path);
        kind = ElementKind::kDualPath;
      } else if (ex.kind == ElementKind::kDualPath && ey.kind == ElementKind::kPath) {
        r = basis_.right_dual(ex.path, ey.path);
        kind = ElementKind::kDualPath;
      }
      if (r) table_[static_cast<std::size_t>(x) * d + y] = Term{slot(kind, layer, *r), 1};
    }
  }

  std::set<int> rad2;
  for (int x = 0; x < d; ++x) {
    if (!is_radical(x)) continue;
    radical_.push_back(x);
    for (int y = 0; y < d; ++y)
      if (is_radical(y))
        if (auto t = product(x, y)) rad2.insert(t->index);
  }
  for (int x : radical_)
    if (!rad2.count(x)) generators_.push_back(x);
}

AlgebraPtr SCAlgebra::replicated(const Quiver& q, int m, Prime p) {
  return AlgebraPtr(new SCAlgebra(q, m, p));
}

std::string SCAlgebra::id() const {
  return quiver().name() + "^(" + std::to_string(m_) + ")@" + std::to_string(prime_.value());
}

std::string SCAlgebra::vertex_name(int v) const {
  return "(" + std::to_string(vertex_in_quiver(v) + 1) + "," + std::to_string(vertex_layer(v)) + ")";
}

std::string SCAlgebra::element_name(int i) const {
  const auto& e = elements_[i];
  std::string s = quiver().path_name(basis_.path(e.path));
  if (e.kind == ElementKind::kDualPath) s += "*";
  return s + "@" + std::to_string(e.layer);
}

std::optional<int> SCAlgebra::find(ElementKind kind, int path, int layer) const {
  if (layer < 0 || layer > m_ || path < 0 || path >= basis_.size()) return std::nullopt;
  int r = index_[(static_cast<std::size_t>(kind == ElementKind::kDualPath) * (m_ + 1) + layer) * basis_.size() + path];
  if (r < 0) return std::nullopt;
  return r;
}

int SCAlgebra::radical_length() const {
  std::set<int> power(radical_.begin(), radical_.end());
  int length = 1;
  while (!power.empty()) {
    std::set<int> next;
    for (int x : power)
      for (int y : radical_)
        if (auto t = product(x, y)) next.insert(t->index);
    power = std::move(next);
    ++length;
  }
  return length;
}

int grothendieck_rank(const SCAlgebra& alg) { return alg.vertex_count(); }

TruncationEmbedding truncation_embedding(const SCAlgebra& alg, int m_prime) {
  if (m_prime < alg.level())
    throw InvalidArgument("truncation target level " + std::to_string(m_prime) + " is below " + std::to_string(alg.level()));
  TruncationEmbedding out{SCAlgebra::replicated(alg.quiver(), m_prime, alg.prime()), {}};
  for (int v = 0; v < out.algebra->vertex_count(); ++v)
    if (out.algebra->vertex_layer(v) > alg.level()) out.killed_idempotents.push_back(out.algebra->idempotent(v));
  return out;
}

std::optional<std::array<int, 3>> find_associativity_violation(const SCAlgebra& alg) {
  const int d = alg.dim();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto xy = alg.product(x, y);
      for (int z = 0; z < d; ++z) {
        std::optional<Term> left = xy ? alg.product(xy->index, z) : std::nullopt;
        auto yz = alg.product(y, z);
        std::optional<Term> right = yz ? alg.product(x, yz->index) : std::nullopt;
        bool ok = left.has_value() == right.has_value() &&
                  (!left || (left->index == right->index &&
                             alg.prime().mul(xy->coefficient, left->coefficient) ==
                                 alg.prime().mul(yz->coefficient, right->coefficient)));
        if (!ok) return std::array<int, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

}  // namespace replika
