#include "replika/ar_translate.hpp"

#include "replika/errors.hpp"
#include "replika/homology.hpp"

namespace replika {

namespace {

// Local index of each basis element inside P_v (source v) or I_v (target v).
std::vector<int> local_indices(const SCAlgebra& alg, int v, bool by_source) {
  std::vector<int> counter(alg.vertex_count(), 0), local(alg.dim(), -1);
  for (int b = 0; b < alg.dim(); ++b) {
    const auto& e = alg.element(b);
    if ((by_source ? e.source : e.target) == v) local[b] = counter[by_source ? e.target : e.source]++;
  }
  return local;
}

// Entry of x in e_v Lambda e_u that a map P_u -> P_v sends e_u to.
Row projective_generator_image(const ModMorphism& h, int u, int v) {
  const auto& alg = *h.source().algebra();
  auto lv = local_indices(alg, v, true);
  Row x(alg.dim(), 0);
  // e_u sits in P_u at vertex u with local index 0
  for (int b = 0; b < alg.dim(); ++b)
    if (lv[b] >= 0 && alg.element(b).target == u) x[b] = h.block(u)(0, lv[b]);
  return x;
}

// x with h = nakayama(x) for a map h: I_u -> I_v.
Row injective_cogenerator_coefficients(const ModMorphism& h, int u, int v) {
  const auto& alg = *h.source().algebra();
  auto lu = local_indices(alg, u, false);
  auto lv = local_indices(alg, v, false);
  const int ev = alg.idempotent(v);
  Row x(alg.dim(), 0);
  for (int b = 0; b < alg.dim(); ++b) {
    const auto& e = alg.element(b);
    if (e.source != v || e.target != u) continue;
    // phi_b lives at vertex v, as does phi_{e_v}
    x[b] = h.block(v)(lu[b], lv[ev]);
  }
  return x;
}

std::vector<std::vector<std::optional<ModMorphism>>> grid(std::size_t r, std::size_t c) {
  return std::vector<std::vector<std::optional<ModMorphism>>>(r, std::vector<std::optional<ModMorphism>>(c));
}

}  // namespace

ModMorphism left_multiplication(const AlgebraPtr& alg, int u, int v, const Row& x) {
  FDModule pu = standard_module(alg, StandardKind::kProjective, u);
  FDModule pv = standard_module(alg, StandardKind::kProjective, v);
  auto lu = local_indices(*alg, u, true);
  auto lv = local_indices(*alg, v, true);
  const Prime p = alg->prime();
  std::vector<FpMatrix> blocks;
  for (int w = 0; w < alg->vertex_count(); ++w) blocks.emplace_back(p, pu.dim_at(w), pv.dim_at(w));
  for (int b = 0; b < alg->dim(); ++b) {
    if (!x[b]) continue;
    for (int c = 0; c < alg->dim(); ++c) {
      if (lu[c] < 0) continue;
      if (auto t = alg->product(b, c)) {
        const int w = alg->element(c).target;
        Entry& slot = blocks[w](lu[c], lv[t->index]);
        slot = p.add(slot, p.mul(x[b], t->coefficient));
      }
    }
  }
  return ModMorphism(pu, pv, std::move(blocks));
}

ModMorphism nakayama(const AlgebraPtr& alg, int u, int v, const Row& x) {
  FDModule iu = standard_module(alg, StandardKind::kInjective, u);
  FDModule iv = standard_module(alg, StandardKind::kInjective, v);
  auto lu = local_indices(*alg, u, false);
  auto lv = local_indices(*alg, v, false);
  const Prime p = alg->prime();
  std::vector<FpMatrix> blocks;
  for (int w = 0; w < alg->vertex_count(); ++w) blocks.emplace_back(p, iu.dim_at(w), iv.dim_at(w));
  // [phi_a][phi_c] = sum_b x_b * coeff_a(c b)
  for (int c = 0; c < alg->dim(); ++c) {
    if (lv[c] < 0) continue;
    for (int b = 0; b < alg->dim(); ++b) {
      if (!x[b]) continue;
      if (auto t = alg->product(c, b); t && lu[t->index] >= 0) {
        const int w = alg->element(c).source;
        Entry& slot = blocks[w](lu[t->index], lv[c]);
        slot = p.add(slot, p.mul(x[b], t->coefficient));
      }
    }
  }
  return ModMorphism(iu, iv, std::move(blocks));
}

FDModule ar_tau(const FDModule& m) {
  const auto& alg = m.algebra();
  if (m.is_zero()) return m;
  Cover c0 = projective_cover(m);
  Subobject k = kernel(c0.map);
  if (k.module.is_zero()) return FDModule(alg);
  Cover c1 = projective_cover(k.module);
  ModMorphism f = compose(c1.map, k.inclusion);
  // nu(f) componentwise
  std::vector<FDModule> src_parts, dst_parts;
  for (int u : c1.vertices) src_parts.push_back(standard_module(alg, StandardKind::kInjective, u));
  for (int v : c0.vertices) dst_parts.push_back(standard_module(alg, StandardKind::kInjective, v));
  DirectSum src = direct_sum(alg, src_parts), dst = direct_sum(alg, dst_parts);
  auto comps = grid(c1.vertices.size(), c0.vertices.size());
  for (std::size_t i = 0; i < c1.vertices.size(); ++i)
    for (std::size_t j = 0; j < c0.vertices.size(); ++j) {
      ModMorphism part = compose(compose(c1.object.injections[i], f), c0.object.projections[j]);
      if (part.is_zero()) continue;
      Row x = projective_generator_image(part, c1.vertices[i], c0.vertices[j]);
      comps[i][j] = nakayama(alg, c1.vertices[i], c0.vertices[j], x);
    }
  return kernel(assemble(src, dst, comps)).module;
}

FDModule ar_tau_inverse(const FDModule& m) {
  const auto& alg = m.algebra();
  if (m.is_zero()) return m;
  Cover c0 = injective_envelope(m);
  Quotient q = cokernel(c0.map);
  if (q.module.is_zero()) return FDModule(alg);
  Cover c1 = injective_envelope(q.module);
  ModMorphism g = compose(q.projection, c1.map);
  std::vector<FDModule> src_parts, dst_parts;
  for (int u : c0.vertices) src_parts.push_back(standard_module(alg, StandardKind::kProjective, u));
  for (int v : c1.vertices) dst_parts.push_back(standard_module(alg, StandardKind::kProjective, v));
  DirectSum src = direct_sum(alg, src_parts), dst = direct_sum(alg, dst_parts);
  auto comps = grid(c0.vertices.size(), c1.vertices.size());
  for (std::size_t i = 0; i < c0.vertices.size(); ++i)
    for (std::size_t j = 0; j < c1.vertices.size(); ++j) {
      ModMorphism part = compose(compose(c0.object.injections[i], g), c1.object.projections[j]);
      if (part.is_zero()) continue;
      Row x = injective_cogenerator_coefficients(part, c0.vertices[i], c1.vertices[j]);
      comps[i][j] = left_multiplication(alg, c0.vertices[i], c1.vertices[j], x);
    }
  return cokernel(assemble(src, dst, comps)).module;
}

}  // namespace replika
