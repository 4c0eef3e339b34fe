#include "doctest.h"
#include "replika/approximation.hpp"
#include "replika/decompose.hpp"
#include "replika/homology.hpp"
#include "test_support.hpp"

using namespace replika;

namespace {

const Prime kP(kDefaultPrime);

FDModule P(const AlgebraPtr& a, int v) { return standard_module(a, StandardKind::kProjective, v); }
FDModule S(const AlgebraPtr& a, int v) { return standard_module(a, StandardKind::kSimple, v); }

// Rank of the span of {u o f} for u in Hom(T', U) (left) or {f o u} (right).
int induced_rank(const Approximation& ap, const FDModule& u, bool left) {
  std::vector<Row> rows;
  if (left) {
    for (const auto& h : hom_basis(ap.object.module, u)) rows.push_back(compose(ap.map, h).flatten());
  } else {
    for (const auto& h : hom_basis(u, ap.object.module)) rows.push_back(compose(h, ap.map).flatten());
  }
  if (rows.empty()) return 0;
  return rank(FpMatrix::from_rows(u.prime(), rows, static_cast<int>(rows[0].size())));
}

// Approximation after dropping part `skip`.
Approximation without(const Approximation& ap, int skip, bool left) {
  std::vector<FDModule> parts;
  std::vector<ModMorphism> maps;
  std::vector<int> idx;
  for (int k = 0; k < static_cast<int>(ap.object.parts.size()); ++k) {
    if (k == skip) continue;
    parts.push_back(ap.object.parts[k]);
    idx.push_back(ap.summands[k]);
    maps.push_back(left ? compose(ap.map, ap.object.projections[k]) : compose(ap.object.injections[k], ap.map));
  }
  const FDModule& x = left ? ap.map.source() : ap.map.target();
  DirectSum obj = direct_sum(x.algebra(), parts);
  if (maps.empty()) return {obj, idx, left ? ModMorphism(x, obj.module) : ModMorphism(obj.module, x)};
  return {obj, idx, left ? pair(maps, obj) : copair(obj, maps)};
}

void check_minimal_approximation(const FDModule& x, const std::vector<FDModule>& t, bool left) {
  auto ap = left ? minimal_left_approx(x, t) : minimal_right_approx(x, t);
  CHECK(ap.map.is_homomorphism());
  for (const auto& u : t) CHECK(induced_rank(ap, u, left) == (left ? hom_dim(x, u) : hom_dim(u, x)));
  for (int k = 0; k < static_cast<int>(ap.object.parts.size()); ++k) {
    auto smaller = without(ap, k, left);
    bool still = true;
    for (const auto& u : t) still = still && induced_rank(smaller, u, left) == (left ? hom_dim(x, u) : hom_dim(u, x));
    CHECK_FALSE(still);
  }
}

}  // namespace

TEST_CASE("approximation examples") {
  auto a = SCAlgebra::replicated(Quiver::linear_a(3), 0, kP);
  std::vector<FDModule> t{P(a, 0), P(a, 2)};
  auto ap = minimal_left_approx(P(a, 1), t);
  REQUIRE(ap.summands == std::vector<int>{0});
  CHECK(ap.map.is_injective());
  CHECK(cokernel(ap.map).module.dims() == S(a, 0).dims());

  auto self = minimal_left_approx(P(a, 0), t);
  CHECK(self.map.is_isomorphism());
  auto none = minimal_left_approx(S(a, 0), {P(a, 2)});
  CHECK(none.object.module.is_zero());
  CHECK(none.object.parts.empty());

  auto right = minimal_right_approx(S(a, 0), {P(a, 0), P(a, 1)});
  CHECK(right.summands == std::vector<int>{0});
  CHECK(right.map.is_surjective());
}

TEST_CASE("approximations are minimal and universal") {
  std::mt19937_64 rng(43);
  for (int m = 0; m <= 2; ++m) {
    auto alg = SCAlgebra::replicated(Quiver::linear_a(3), m, kP);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<FDModule> t;
      for (const auto& part : decompose(testing::random_module(alg, rng, 3))) {
        bool dup = false;
        for (const auto& u : t) dup = dup || is_isomorphic(u, part);
        if (!dup) t.push_back(part);
      }
      auto x = testing::random_module(alg, rng);
      check_minimal_approximation(x, t, true);
      check_minimal_approximation(x, t, false);
    }
  }
}

TEST_CASE("faithful, gen and cogen") {
  auto a = SCAlgebra::replicated(Quiver::linear_a(3), 0, kP);
  CHECK(is_faithful(regular_module(a)));
  CHECK_FALSE(is_faithful(S(a, 0)));
  CHECK(in_gen({P(a, 0)}, S(a, 0)));
  CHECK_FALSE(in_gen({P(a, 1)}, S(a, 0)));
  CHECK(in_cogen({standard_module(a, StandardKind::kInjective, 2)}, S(a, 2)));
  CHECK_FALSE(in_cogen({P(a, 0)}, S(a, 0)));
  auto a1 = SCAlgebra::replicated(Quiver::linear_a(3), 1, kP);
  CHECK(is_faithful(regular_module(a1)));
  // the projective-injectives cogenerate A^(1)
  auto pi = direct_sum(a1, {P(a1, 3), P(a1, 4), P(a1, 5)}).module;
  CHECK(is_faithful(pi));
  for (int v = 0; v < a1->vertex_count(); ++v) CHECK(in_cogen({P(a1, 3), P(a1, 4), P(a1, 5)}, P(a1, v)));
  CHECK_FALSE(is_faithful(direct_sum(a1, {P(a1, 0), P(a1, 1), P(a1, 2)}).module));
}
