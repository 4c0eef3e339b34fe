#pragma once

#include <random>

#include "replika/homology.hpp"

namespace replika::testing {

inline ModMorphism random_combination(const std::vector<ModMorphism>& basis, const FDModule& s, const FDModule& t,
                                      std::mt19937_64& rng) {
  ModMorphism f(s, t);
  for (const auto& b : basis) f = f + b.scaled(static_cast<Entry>(rng() % s.prime().value()));
  return f;
}

// Cokernel of a random map between small sums of indecomposable projectives.
inline FDModule random_module(const AlgebraPtr& alg, std::mt19937_64& rng, int max_parts = 2) {
  auto pick = [&](int count) {
    std::vector<FDModule> parts;
    for (int i = 0; i < count; ++i)
      parts.push_back(standard_module(alg, StandardKind::kProjective, static_cast<int>(rng() % alg->vertex_count())));
    return direct_sum(alg, parts).module;
  };
  FDModule p0 = pick(1 + static_cast<int>(rng() % max_parts));
  FDModule p1 = pick(1 + static_cast<int>(rng() % max_parts));
  auto f = random_combination(hom_basis(p1, p0), p1, p0, rng);
  return cokernel(f).module;
}

}  // namespace replika::testing
