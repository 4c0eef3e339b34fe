#include "replika/decompose.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "replika/errors.hpp"
#include "replika/homology.hpp"

namespace replika {

namespace {

constexpr int kRetryBudget = 64;

ModMorphism shifted(const ModMorphism& f, Entry lambda) {
  return f + ModMorphism::identity(f.source()).scaled(f.source().prime().neg(lambda));
}

ModMorphism power(ModMorphism f, int e) {
  ModMorphism r = ModMorphism::identity(f.source());
  while (e > 0) {
    if (e & 1) r = compose(r, f);
    f = compose(f, f);
    e >>= 1;
  }
  return r;
}

// Endomorphism with a nontrivial Fitting decomposition (f - lambda)^d.
std::optional<ModMorphism> splitter(const ModMorphism& f) {
  const int d = f.source().dim();
  auto cp = characteristic_polynomial(f.matrix());
  for (Entry lambda : roots(f.source().prime(), cp)) {
    ModMorphism g = power(shifted(f, lambda), d);
    if (!g.is_zero()) return g;
  }
  return std::nullopt;
}

// Nilpotent complement of the scalars, or nullopt if End(M) is not split local.
std::optional<std::vector<ModMorphism>> nilpotent_part(const FDModule& m, const std::vector<ModMorphism>& end) {
  const int d = m.dim();
  std::vector<ModMorphism> nil;
  for (const auto& f : end) {
    auto r = roots(m.prime(), characteristic_polynomial(f.matrix()));
    if (r.size() != 1) return std::nullopt;
    ModMorphism n = shifted(f, r[0]);
    if (!power(n, d).is_zero()) return std::nullopt;
    if (!n.is_zero()) nil.push_back(std::move(n));
  }
  return nil;
}

bool span_is_nilpotent_ideal(const FDModule& m, const std::vector<ModMorphism>& nil) {
  if (nil.empty()) return true;
  const int width = static_cast<int>(nil.front().flatten().size());
  std::vector<Row> rows;
  for (const auto& n : nil) rows.push_back(n.flatten());
  RowEchelon base = row_space(FpMatrix::from_rows(m.prime(), rows, width));
  // Closed under products: N * N inside N.
  for (const auto& a : nil)
    for (const auto& b : nil) {
      Row ab = compose(a, b).flatten();
      FpMatrix both = FpMatrix::vstack(base.reduced, FpMatrix::from_rows(m.prime(), {ab}, width));
      if (rank(both) != base.rank()) return false;
    }
  // N^k shrinks to zero.
  std::vector<ModMorphism> layer = nil;
  for (int k = 0; k <= m.dim(); ++k) {
    std::vector<Row> next_rows;
    std::vector<ModMorphism> next;
    for (const auto& a : layer)
      for (const auto& b : nil) next.push_back(compose(a, b));
    for (const auto& f : next) next_rows.push_back(f.flatten());
    if (next_rows.empty()) return true;
    RowEchelon e = row_space(FpMatrix::from_rows(m.prime(), next_rows, width));
    if (e.rank() == 0) return true;
    // keep a basis of the product space
    std::vector<ModMorphism> basis;
    for (int r = 0; r < e.rank(); ++r) {
      std::vector<FpMatrix> blocks;
      std::size_t pos = 0;
      for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        const std::size_t len = static_cast<std::size_t>(m.dim_at(v)) * m.dim_at(v);
        auto row = e.reduced.row(r);
        blocks.emplace_back(m.prime(), m.dim_at(v), m.dim_at(v), std::vector<Entry>(row.begin() + pos, row.begin() + pos + len));
        pos += len;
      }
      basis.emplace_back(m, m, std::move(blocks));
    }
    layer = std::move(basis);
  }
  return false;
}

void split_into(const FDModule& m, std::mt19937_64& rng, std::vector<FDModule>& out) {
  if (m.is_zero()) return;
  auto end = hom_basis(m, m);
  if (end.size() == 1) {
    out.push_back(m);
    return;
  }
  std::optional<ModMorphism> g;
  for (const auto& f : end)
    if ((g = splitter(f))) break;
  if (!g) {
    auto nil = nilpotent_part(m, end);
    if (nil && span_is_nilpotent_ideal(m, *nil)) {
      out.push_back(m);
      return;
    }
    for (int attempt = 0; attempt < kRetryBudget && !g; ++attempt) {
      ModMorphism f(m, m);
      for (const auto& b : end) f = f + b.scaled(static_cast<Entry>(rng() % m.prime().value()));
      g = splitter(f);
    }
  }
  if (!g) throw DecompositionFailure("no splitting endomorphism found within the retry budget (dim " + std::to_string(m.dim()) + ")");
  split_into(kernel(*g).module, rng, out);
  split_into(image(*g).module, rng, out);
}

}  // namespace

std::vector<FDModule> decompose(const FDModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FDModule> out;
  split_into(m, rng, out);
  std::stable_sort(out.begin(), out.end(), [](const FDModule& a, const FDModule& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.dims() < b.dims();
  });
  return out;
}

bool has_split_local_endomorphisms(const FDModule& m) {
  if (m.is_zero()) return false;
  auto end = hom_basis(m, m);
  if (end.size() == 1) return true;
  auto nil = nilpotent_part(m, end);
  return nil && span_is_nilpotent_ideal(m, *nil);
}

bool is_indecomposable(const FDModule& m, std::uint64_t seed) { return decompose(m, seed).size() == 1; }

bool is_isomorphic(const FDModule& m, const FDModule& n, std::uint64_t seed) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto basis = hom_basis(m, n);
  if (static_cast<int>(basis.size()) != hom_dim(m, m)) return false;
  if (basis.empty()) return false;
  if (fingerprint(m) != fingerprint(n)) return false;
  // Local M: M is isomorphic to N iff some g o f : M -> N -> M leaves rad End(M).
  auto end = hom_basis(m, m);
  std::optional<std::vector<ModMorphism>> rad_end;
  if (end.size() == 1) {
    rad_end.emplace();
  } else if (auto nil = nilpotent_part(m, end); nil && span_is_nilpotent_ideal(m, *nil)) {
    rad_end = std::move(nil);
  }
  if (rad_end) {
    std::vector<Row> rad_rows;
    for (const auto& x : *rad_end) rad_rows.push_back(x.flatten());
    const int width = static_cast<int>(end.front().flatten().size());
    FpMatrix rad = FpMatrix::from_rows(m.prime(), rad_rows, width);
    const int base = rank(rad);
    bool escapes = false;
    auto back = hom_basis(n, m);
    for (const auto& f : basis) {
      for (const auto& g : back) {
        FpMatrix both = FpMatrix::vstack(rad, FpMatrix::from_rows(m.prime(), {compose(f, g).flatten()}, width));
        if (rank(both) != base) {
          escapes = true;
          break;
        }
      }
      if (escapes) break;
    }
    if (!escapes) return false;
  }
  std::mt19937_64 rng(seed);
  const Entry p = m.prime().value();
  for (int attempt = 0; attempt < 64; ++attempt) {
    ModMorphism f(m, n);
    for (const auto& b : basis) f = f + b.scaled(static_cast<Entry>(rng() % p));
    if (f.is_isomorphism()) return true;
  }
  // small coefficient grid
  const int k = static_cast<int>(basis.size());
  if (k <= 8) {
    std::vector<Entry> c(k, 0);
    for (;;) {
      ModMorphism f(m, n);
      for (int i = 0; i < k; ++i)
        if (c[i]) f = f + basis[i].scaled(c[i]);
      if (f.is_isomorphism()) return true;
      int i = 0;
      while (i < k && ++c[i] == 3) c[i++] = 0;
      if (i == k) break;
    }
  }
  throw Inconclusive("isomorphism search exhausted its budget");
}

std::vector<int> fingerprint(const FDModule& m) {
  std::vector<int> f = m.dims();
  auto t = top_vector(m);
  auto s = socle_vector(m);
  f.insert(f.end(), t.begin(), t.end());
  f.insert(f.end(), s.begin(), s.end());
  return f;
}

}  // namespace replika
