#include "replika/homology.hpp"

#include <algorithm>

#include "replika/errors.hpp"

namespace replika {

namespace {

// Equations of the intertwiner system; rows = unknowns (per-vertex block
// entries), columns = equations from the generators.
FpMatrix intertwiner_system(const FDModule& m, const FDModule& n, std::vector<int>& unknown_offset) {
  require_same_algebra(m, n);
  const auto& alg = *m.algebra();
  const Prime p = m.prime();
  const int nv = alg.vertex_count();
  unknown_offset.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) unknown_offset[v + 1] = unknown_offset[v] + m.dim_at(v) * n.dim_at(v);
  int equations = 0;
  for (int b : alg.generators()) {
    const auto& e = alg.element(b);
    equations += m.dim_at(e.source) * n.dim_at(e.target);
  }
  FpMatrix sys(p, unknown_offset[nv], equations);
  int col = 0;
  for (int b : alg.generators()) {
    const auto& e = alg.element(b);
    const int s = e.source, t = e.target;
    const FpMatrix& rm = m.block(b);
    const FpMatrix& rn = n.block(b);
    // rho_M(b) H_t - H_s rho_N(b) = 0, entry (r, c)
    for (int r = 0; r < m.dim_at(s); ++r)
      for (int c = 0; c < n.dim_at(t); ++c, ++col) {
        for (int k = 0; k < m.dim_at(t); ++k)
          if (Entry x = rm(r, k)) {
            int u = unknown_offset[t] + k * n.dim_at(t) + c;
            sys(u, col) = p.add(sys(u, col), x);
          }
        for (int k = 0; k < n.dim_at(s); ++k)
          if (Entry x = rn(k, c)) {
            int u = unknown_offset[s] + r * n.dim_at(s) + k;
            sys(u, col) = p.sub(sys(u, col), x);
          }
      }
  }
  return sys;
}

ModMorphism unflatten(const FDModule& m, const FDModule& n, std::span<const Entry> x) {
  std::vector<FpMatrix> blocks;
  std::size_t pos = 0;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
    const std::size_t len = static_cast<std::size_t>(m.dim_at(v)) * n.dim_at(v);
    blocks.emplace_back(m.prime(), m.dim_at(v), n.dim_at(v), std::vector<Entry>(x.begin() + pos, x.begin() + pos + len));
    pos += len;
  }
  return ModMorphism(m, n, std::move(blocks));
}

// Per-vertex spans of M * rad.
std::vector<FpMatrix> radical_spans(const FDModule& m) {
  const auto& alg = *m.algebra();
  std::vector<FpMatrix> spans;
  for (int v = 0; v < alg.vertex_count(); ++v) spans.emplace_back(m.prime(), 0, m.dim_at(v));
  for (int b : alg.radical()) {
    const auto& e = alg.element(b);
    if (m.dim_at(e.source) && m.dim_at(e.target)) spans[e.target] = FpMatrix::vstack(spans[e.target], m.block(b));
  }
  return spans;
}

std::vector<FpMatrix> socle_spans(const FDModule& m) {
  const auto& alg = *m.algebra();
  std::vector<FpMatrix> annihilators;
  for (int v = 0; v < alg.vertex_count(); ++v) annihilators.emplace_back(m.prime(), m.dim_at(v), 0);
  for (int b : alg.generators()) {
    const auto& e = alg.element(b);
    if (m.dim_at(e.source) && m.dim_at(e.target))
      annihilators[e.source] = FpMatrix::hstack(annihilators[e.source], m.block(b));
  }
  std::vector<FpMatrix> spans;
  for (auto& a : annihilators) spans.push_back(kernel_basis(a));
  return spans;
}

}  // namespace

FpMatrix hom_coordinates(const FDModule& m, const FDModule& n) {
  std::vector<int> off;
  return kernel_basis(intertwiner_system(m, n, off));
}

std::vector<ModMorphism> hom_basis(const FDModule& m, const FDModule& n) {
  FpMatrix k = hom_coordinates(m, n);
  std::vector<ModMorphism> out;
  for (int r = 0; r < k.rows(); ++r) out.push_back(unflatten(m, n, k.row(r)));
  return out;
}

int hom_dim(const FDModule& m, const FDModule& n) {
  std::vector<int> off;
  FpMatrix sys = intertwiner_system(m, n, off);
  return sys.rows() - rank(sys);
}

Subobject radical(const FDModule& m) { return submodule(m, radical_spans(m)); }

Quotient top(const FDModule& m) { return quotient(m, radical_spans(m)); }

Subobject socle(const FDModule& m) { return submodule(m, socle_spans(m)); }

std::vector<int> top_vector(const FDModule& m) {
  auto spans = radical_spans(m);
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(spans.size()); ++v) out.push_back(m.dim_at(v) - rank(spans[v]));
  return out;
}

std::vector<int> socle_vector(const FDModule& m) {
  std::vector<int> out;
  for (const auto& s : socle_spans(m)) out.push_back(s.rows());
  return out;
}

Cover projective_cover(const FDModule& m) {
  const auto& alg = m.algebra();
  const auto spans = radical_spans(m);
  std::vector<FDModule> parts;
  std::vector<int> vertices;
  std::vector<ModMorphism> components;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    if (!m.dim_at(v)) continue;
    RowEchelon e = row_space(spans[v]);
    std::vector<char> pivot(m.dim_at(v), 0);
    for (int c : e.pivots) pivot[c] = 1;
    FDModule pv = standard_module(alg, StandardKind::kProjective, v);
    for (int c = 0; c < m.dim_at(v); ++c) {
      if (pivot[c]) continue;
      // basis element b of P_v maps to e_c * rho(b)
      std::vector<FpMatrix> blocks;
      for (int t = 0; t < alg->vertex_count(); ++t) blocks.emplace_back(m.prime(), pv.dim_at(t), m.dim_at(t));
      std::vector<int> local(alg->vertex_count(), 0);
      for (int b = 0; b < alg->dim(); ++b) {
        const auto& el = alg->element(b);
        if (el.source != v) continue;
        const int t = el.target;
        for (int k = 0; k < m.dim_at(t); ++k) blocks[t](local[t], k) = m.block(b)(c, k);
        ++local[t];
      }
      parts.push_back(pv);
      vertices.push_back(v);
      components.emplace_back(pv, m, std::move(blocks));
    }
  }
  DirectSum sum = direct_sum(alg, parts);
  ModMorphism map = components.empty() ? ModMorphism(sum.module, m) : copair(sum, components);
  return {std::move(sum), std::move(vertices), std::move(map)};
}

Cover injective_envelope(const FDModule& m) {
  const auto& alg = m.algebra();
  const auto spans = socle_spans(m);
  std::vector<FDModule> parts;
  std::vector<int> vertices;
  std::vector<ModMorphism> components;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    if (!spans[v].rows()) continue;
    RowEchelon e = row_space(spans[v]);
    FDModule iv = standard_module(alg, StandardKind::kInjective, v);
    for (int pc : e.pivots) {
      // x -> sum_b psi(x b) phi_b, psi = coordinate at the pivot column
      std::vector<FpMatrix> blocks;
      for (int u = 0; u < alg->vertex_count(); ++u) blocks.emplace_back(m.prime(), m.dim_at(u), iv.dim_at(u));
      std::vector<int> local(alg->vertex_count(), 0);
      for (int b = 0; b < alg->dim(); ++b) {
        const auto& el = alg->element(b);
        if (el.target != v) continue;
        const int u = el.source;
        for (int r = 0; r < m.dim_at(u); ++r) blocks[u](r, local[u]) = m.block(b)(r, pc);
        ++local[u];
      }
      parts.push_back(iv);
      vertices.push_back(v);
      components.emplace_back(m, iv, std::move(blocks));
    }
  }
  DirectSum sum = direct_sum(alg, parts);
  ModMorphism map = components.empty() ? ModMorphism(m, sum.module) : pair(components, sum);
  return {std::move(sum), std::move(vertices), std::move(map)};
}

FDModule syzygy(const FDModule& m) { return kernel(projective_cover(m).map).module; }

FDModule cosyzygy(const FDModule& m) { return cokernel(injective_envelope(m).map).module; }

std::vector<FDModule> syzygies(const FDModule& m, int steps) {
  std::vector<FDModule> out{m};
  for (int i = 0; i < steps && !out.back().is_zero(); ++i) out.push_back(syzygy(out.back()));
  return out;
}

int proj_dim(const FDModule& m) {
  int d = -1;
  FDModule x = m;
  // A^(m) has finite global dimension; the bound only guards against misuse.
  const int bound = 4 * (m.algebra()->level() + 2) + m.algebra()->quiver_vertices();
  while (!x.is_zero()) {
    if (++d > bound) throw BudgetExhausted("projective resolution did not terminate");
    x = syzygy(x);
  }
  return d;
}

int inj_dim(const FDModule& m) {
  int d = -1;
  FDModule x = m;
  const int bound = 4 * (m.algebra()->level() + 2) + m.algebra()->quiver_vertices();
  while (!x.is_zero()) {
    if (++d > bound) throw BudgetExhausted("injective resolution did not terminate");
    x = cosyzygy(x);
  }
  return d;
}

int global_dimension(const AlgebraPtr& alg) {
  int g = 0;
  for (int v = 0; v < alg->vertex_count(); ++v)
    g = std::max(g, proj_dim(standard_module(alg, StandardKind::kSimple, v)));
  return g;
}

int ext_dim(int s, const std::vector<FDModule>& omega_m, const FDModule& n) {
  if (s < 0) throw InvalidArgument("negative Ext degree");
  if (s == 0) return hom_dim(omega_m.at(0), n);
  if (static_cast<int>(omega_m.size()) < s) return 0;
  const FDModule& k = omega_m[s - 1];
  if (k.is_zero()) return 0;
  // 0 -> Hom(K,N) -> Hom(P_K,N) -> Hom(Omega K,N) -> Ext^1(K,N) -> 0
  auto tv = top_vector(k);
  int hp = 0;
  for (int v = 0; v < static_cast<int>(tv.size()); ++v) hp += tv[v] * n.dim_at(v);
  int ho = static_cast<int>(omega_m.size()) > s ? hom_dim(omega_m[s], n) : hom_dim(syzygy(k), n);
  return ho - hp + hom_dim(k, n);
}

int ext_dim(int s, const FDModule& m, const FDModule& n) {
  require_same_algebra(m, n);
  return ext_dim(s, syzygies(m, s), n);
}

int stable_hom_dim(const FDModule& m, const FDModule& n) {
  require_same_algebra(m, n);
  Cover c = projective_cover(n);
  FpMatrix hom_mn = hom_coordinates(m, n);
  if (!hom_mn.rows()) return 0;
  std::vector<Row> factored;
  for (const auto& h : hom_basis(m, c.object.module)) factored.push_back(compose(h, c.map).flatten());
  int r = factored.empty() ? 0 : rank(FpMatrix::from_rows(m.prime(), factored, static_cast<int>(hom_mn.cols())));
  return hom_mn.rows() - r;
}

bool is_projective(const FDModule& m) { return projective_cover(m).object.module.dim() == m.dim(); }

bool is_injective(const FDModule& m) { return injective_envelope(m).object.module.dim() == m.dim(); }

RepetitiveWindow::RepetitiveWindow(AlgebraPtr base, int below, int above)
    : base_(base),
      window_(SCAlgebra::replicated(base->quiver(), below + base->level() + above, base->prime())),
      layer_zero_(base->level() == 0 ? base : SCAlgebra::replicated(base->quiver(), 0, base->prime())),
      below_(below),
      above_(above) {
  if (below < 1 || above < 1) throw InvalidArgument("window needs at least one layer on each side");
}

RepetitiveWindow RepetitiveWindow::around(const AlgebraPtr& base) {
  const int depth = 2 * base->level() + 3;
  return RepetitiveWindow(base, depth, depth);
}

FDModule RepetitiveWindow::lift(const FDModule& m) const {
  if (m.algebra() == window_) return m;
  return relocate(m, window_, below_);
}

FDModule RepetitiveWindow::lower(const FDModule& m) const {
  if (m.algebra() == base_) return m;
  return relocate(m, base_, -below_);
}

bool RepetitiveWindow::fits_base(const FDModule& m) const {
  auto layers = m.layer_support();
  return layers.empty() || (layers.front() >= below_ && layers.back() <= below_ + base_->level());
}

FDModule RepetitiveWindow::step(const FDModule& m, bool down) const {
  const int top_layer = window_->level();
  if (down) {
    Cover c = projective_cover(m);
    for (int v : c.vertices)
      if (window_->vertex_layer(v) < 1) throw BudgetExhausted("syzygy reached the lower edge of the window");
    return kernel(c.map).module;
  }
  Cover c = injective_envelope(m);
  for (int v : c.vertices)
    if (window_->vertex_layer(v) > top_layer - 1) throw BudgetExhausted("cosyzygy reached the upper edge of the window");
  return cokernel(c.map).module;
}

FDModule RepetitiveWindow::omega(const FDModule& m, int s) const {
  FDModule x = lift(m);
  for (int i = 0; i < std::abs(s); ++i) x = step(x, s > 0);
  return x;
}

int RepetitiveWindow::ext_dim(int s, const FDModule& m, const FDModule& n) const {
  FDModule x = lift(m);
  std::vector<FDModule> chain{x};
  for (int i = 0; i < s && !chain.back().is_zero(); ++i) chain.push_back(step(chain.back(), true));
  return replika::ext_dim(s, chain, lift(n));
}

int RepetitiveWindow::stable_hom_dim(const FDModule& m, const FDModule& n) const {
  FDModule x = lift(m), y = lift(n);
  Cover c = projective_cover(y);
  for (int v : c.vertices)
    if (window_->vertex_layer(v) < 1) throw BudgetExhausted("projective cover reached the lower edge of the window");
  return replika::stable_hom_dim(x, y);
}

bool RepetitiveWindow::is_projective_injective(const FDModule& m) const {
  FDModule x = lift(m);
  if (x.is_zero()) return true;
  Cover c = projective_cover(x);
  if (c.object.module.dim() != x.dim()) return false;
  for (int v : c.vertices)
    if (window_->vertex_layer(v) < 1) return false;
  return true;
}

RepetitiveWindow::Degree RepetitiveWindow::degree(const FDModule& m) const {
  FDModule x = lift(m);
  if (x.is_zero()) throw InvalidArgument("degree of the zero module");
  if (is_projective_injective(x)) throw InvalidArgument("degree of a projective-injective module");
  for (int l = 0;; ++l) {
    auto layers = x.layer_support();
    if (layers.front() < below_) throw InternalError("syzygy left the layers of A before reaching them");
    if (layers.front() == below_ && layers.back() == below_) return {l, relocate(x, layer_zero_, -below_)};
    x = step(x, true);
  }
}

}  // namespace replika
