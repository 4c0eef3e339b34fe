#include <algorithm>

#include "doctest.h"
#include "replika/decompose.hpp"
#include "replika/errors.hpp"
#include "test_support.hpp"

using namespace replika;

namespace {

const Prime kP(kDefaultPrime);

std::vector<int> sorted_dims(const std::vector<FDModule>& parts) {
  std::vector<int> d;
  for (const auto& p : parts) d.push_back(p.dim());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("decompose examples") {
  auto a = SCAlgebra::replicated(Quiver::linear_a(3), 0, kP);
  auto p1 = standard_module(a, StandardKind::kProjective, 0);
  CHECK(decompose(p1).size() == 1);
  auto twice = decompose(direct_sum(a, {p1, p1}).module);
  REQUIRE(twice.size() == 2);
  CHECK(is_isomorphic(twice[0], p1));
  CHECK(is_isomorphic(twice[1], p1));
  CHECK(decompose(FDModule(a)).empty());

  auto a1 = SCAlgebra::replicated(Quiver::linear_a(3), 1, kP);
  auto parts = decompose(regular_module(a1));
  CHECK(sorted_dims(parts) == std::vector<int>{1, 2, 3, 4, 4, 4});
  for (const auto& part : parts) CHECK(has_split_local_endomorphisms(part));
}

TEST_CASE("decompose properties") {
  std::mt19937_64 rng(41);
  for (int m = 0; m <= 2; ++m) {
    auto alg = SCAlgebra::replicated(Quiver::linear_a(3), m, kP);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = testing::random_module(alg, rng, 3);
      auto parts = decompose(x, 1);
      int total = 0;
      std::vector<int> dims(alg->vertex_count(), 0);
      for (const auto& part : parts) {
        total += part.dim();
        for (int v = 0; v < alg->vertex_count(); ++v) dims[v] += part.dim_at(v);
        CHECK(part.validate().empty());
        CHECK(has_split_local_endomorphisms(part));
        CHECK(decompose(part, 5).size() == 1);
      }
      CHECK(total == x.dim());
      CHECK(dims == x.dims());
      // the multiset does not depend on the seed
      auto again = decompose(x, 99);
      REQUIRE(again.size() == parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) CHECK(is_isomorphic(parts[i], again[i]));
      // and the sum is isomorphic to the input
      CHECK(is_isomorphic(direct_sum(alg, parts).module, x));
    }
  }
}

TEST_CASE("inflated projectives stay indecomposable") {
  auto a1 = SCAlgebra::replicated(Quiver::linear_a(3), 1, kP);
  auto emb = truncation_embedding(*a1, 2);
  for (int i = 0; i < 3; ++i) {
    auto p = standard_module(a1, StandardKind::kProjective, i);
    auto up = relocate(p, emb.algebra, 0);
    CHECK(is_indecomposable(up));
    CHECK(up.dim() == p.dim());
  }
}

TEST_CASE("is_isomorphic") {
  std::mt19937_64 rng(2);
  auto a = SCAlgebra::replicated(Quiver::linear_a(3), 1, kP);
  auto s1 = standard_module(a, StandardKind::kSimple, 0);
  auto s2 = standard_module(a, StandardKind::kSimple, 1);
  CHECK(is_isomorphic(s1, s1));
  CHECK_FALSE(is_isomorphic(s1, s2));
  for (int v = 0; v < a->vertex_count(); ++v) {
    auto p = standard_module(a, StandardKind::kProjective, v);
    std::vector<FpMatrix> change;
    for (int u = 0; u < a->vertex_count(); ++u) {
      FpMatrix b(kP, p.dim_at(u), p.dim_at(u));
      do {
        for (int r = 0; r < b.rows(); ++r)
          for (int c = 0; c < b.cols(); ++c) b(r, c) = static_cast<Entry>(rng() % kP.value());
      } while (!inverse(b));
      change.push_back(b);
    }
    CHECK(is_isomorphic(p, conjugate(p, change)));
  }
  // same dimension vector, different modules: P_(1,0) + S_(3,0) vs ... over A
  auto a0 = SCAlgebra::replicated(Quiver::linear_a(3), 0, kP);
  auto p2 = standard_module(a0, StandardKind::kProjective, 1);
  auto sum = direct_sum(a0, {standard_module(a0, StandardKind::kSimple, 1), standard_module(a0, StandardKind::kSimple, 2)});
  CHECK_FALSE(is_isomorphic(p2, sum.module));
  CHECK(fingerprint(p2) != fingerprint(sum.module));
}
