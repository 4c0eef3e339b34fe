#include "replika/catalog.hpp"

#include <map>

#include "replika/ar_translate.hpp"
#include "replika/decompose.hpp"
#include "replika/errors.hpp"
#include "replika/parallel.hpp"

namespace replika {

std::vector<FDModule> hereditary_indecomposables(const AlgebraPtr& a) {
  if (a->level() != 0) throw InvalidArgument("expected a path algebra (level 0)");
  if (!a->quiver().is_dynkin()) throw NotDynkin("tau orbits of a non-Dynkin quiver do not end");
  std::vector<FDModule> out;
  const int bound = 4 * a->dim() + 8;
  for (int v = 0; v < a->vertex_count(); ++v) {
    FDModule x = standard_module(a, StandardKind::kProjective, v);
    for (int r = 0; !x.is_zero(); ++r) {
      if (r > bound) throw InternalError("tau^- orbit did not end");
      out.push_back(x);
      x = ar_tau_inverse(x);
    }
  }
  return out;
}

Catalog::Catalog(AlgebraPtr alg, std::uint64_t seed)
    : alg_(alg), window_(RepetitiveWindow::around(alg)), seed_(seed), max_ext_(2 * alg->level() + 1) {
  if (!alg_->quiver().is_dynkin()) throw NotDynkin("enumeration needs a Dynkin quiver");
  const int m = alg_->level();
  const int off = window_.offset();
  hereditary_ = hereditary_indecomposables(window_.hereditary());

  for (int b = 0; b < static_cast<int>(hereditary_.size()); ++b) {
    FDModule x = relocate(hereditary_[b], window_.algebra(), off);
    for (int l = 0;; ++l) {
      auto layers = x.layer_support();
      if (layers.front() > off + m) break;
      if (window_.fits_base(x)) {
        entries_.push_back(CatalogEntry{window_.lower(x), false, l, b, 0, {}});
      }
      x = window_.omega(x, -1);
    }
  }
  for (int q = 1; q <= m; ++q)
    for (int i = 0; i < alg_->quiver_vertices(); ++i) {
      entries_.push_back(CatalogEntry{standard_module(alg_, StandardKind::kProjective, alg_->vertex(i, q)), true, -1, -1, 0, {}});
    }

  const int n = size();
  const int layers = max_ext_ + 1;
  ext_.assign(static_cast<std::size_t>(layers) * n * n, 0);
  parallel_for(n, [&](int i) {
    auto& e = entries_[i];
    e.fingerprint = fingerprint(e.module);
    auto chain = syzygies(e.module, max_ext_);
    e.pd = proj_dim(e.module);
    for (int s = 0; s < layers; ++s)
      for (int j = 0; j < n; ++j)
        ext_[(static_cast<std::size_t>(s) * n + i) * n + j] = replika::ext_dim(s, chain, entries_[j].module);
  });
  for (int i = 0; i < n; ++i)
    if (hom(i, i) != 1)
      throw InternalError("indecomposable with endomorphism ring of dimension " + std::to_string(hom(i, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (entries_[i].fingerprint == entries_[j].fingerprint && is_isomorphic(entries_[i].module, entries_[j].module, seed_))
        throw InternalError("duplicate catalog entry");

  // predecessors: reverse reachability along nonzero maps between distinct entries
  left_part_.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      if (entries_[y].pd > m) {
        left_part_[i] = 0;
        break;
      }
      for (int x = 0; x < n; ++x)
        if (!seen[x] && x != y && hom(x, y)) {
          seen[x] = 1;
          stack.push_back(x);
        }
    }
  }
}

std::vector<int> Catalog::projective_injectives() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (entries_[i].projective_injective) out.push_back(i);
  return out;
}

std::optional<int> Catalog::find(const FDModule& m) const {
  if (m.algebra() != alg_) throw AlgebraMismatch("module is not over the catalog algebra");
  auto fp = fingerprint(m);
  std::vector<int> hits;
  for (int i = 0; i < size(); ++i)
    if (entries_[i].fingerprint == fp) hits.push_back(i);
  if (hits.size() == 1) return hits[0];
  for (int i : hits)
    if (is_isomorphic(m, entries_[i].module, seed_)) return i;
  return std::nullopt;
}

int Catalog::index_of(const FDModule& m) const {
  auto i = find(m);
  if (!i) throw InvalidArgument("module is not an indecomposable of the catalog");
  return *i;
}

int Catalog::ext(int s, int i, int j) const {
  if (s < 0) throw InvalidArgument("negative Ext degree");
  if (s > max_ext_) return 0;
  const int n = size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("catalog index out of range");
  return ext_[(static_cast<std::size_t>(s) * n + i) * n + j];
}

}  // namespace replika
