#include "doctest.h"
#include "replika/errors.hpp"
#include "replika/homology.hpp"
#include "test_support.hpp"

using namespace replika;

namespace {

const Prime kP(kDefaultPrime);

AlgebraPtr a3(int m, Prime p = kP) { return SCAlgebra::replicated(Quiver::linear_a(3), m, p); }
FDModule P(const AlgebraPtr& a, int v) { return standard_module(a, StandardKind::kProjective, v); }
FDModule I(const AlgebraPtr& a, int v) { return standard_module(a, StandardKind::kInjective, v); }
FDModule S(const AlgebraPtr& a, int v) { return standard_module(a, StandardKind::kSimple, v); }

}  // namespace

TEST_CASE("hom examples") {
  auto a = a3(0);
  CHECK(hom_dim(S(a, 0), S(a, 0)) == 1);
  CHECK(hom_dim(S(a, 0), S(a, 1)) == 0);
  CHECK(hom_dim(P(a, 1), P(a, 0)) == 1);
  CHECK(hom_dim(P(a, 0), P(a, 1)) == 0);
  CHECK_THROWS_AS(hom_dim(S(a, 0), S(a3(1), 0)), AlgebraMismatch);
}

TEST_CASE("hom from projectives is evaluation at the vertex") {
  std::mt19937_64 rng(3);
  for (int m = 0; m <= 2; ++m) {
    auto alg = a3(m);
    for (int trial = 0; trial < 8; ++trial) {
      auto n = testing::random_module(alg, rng);
      for (int v = 0; v < alg->vertex_count(); ++v) CHECK(hom_dim(P(alg, v), n) == n.dim_at(v));
      // and into injectives it is the dual evaluation
      for (int v = 0; v < alg->vertex_count(); ++v) CHECK(hom_dim(n, I(alg, v)) == n.dim_at(v));
      auto other = testing::random_module(alg, rng);
      auto basis = hom_basis(n, other);
      CHECK(static_cast<int>(basis.size()) == hom_dim(n, other));
      for (const auto& f : basis) CHECK(f.is_homomorphism());
    }
  }
}

TEST_CASE("radical, top, socle") {
  auto a = a3(0);
  auto s = S(a, 1);
  CHECK(radical(s).module.is_zero());
  CHECK(top(s).module.dims() == s.dims());
  CHECK(socle(s).module.dims() == s.dims());
  CHECK(radical(P(a, 0)).module.dims() == P(a, 1).dims());
  CHECK(top_vector(P(a, 0)) == std::vector<int>{1, 0, 0});
  auto a1 = a3(1);
  for (int i = 0; i < 3; ++i) CHECK(socle(P(a1, a1->vertex(i, 1))).module.dim() == 1);
}

TEST_CASE("covers and envelopes") {
  auto a = a3(0);
  auto c = projective_cover(S(a, 0));
  CHECK(c.object.module.dims() == P(a, 0).dims());
  CHECK(c.map.is_surjective());
  CHECK(syzygy(S(a, 0)).dims() == P(a, 1).dims());
  auto e = injective_envelope(S(a, 2));
  CHECK(e.object.module.dim() == 3);
  CHECK(e.map.is_injective());
  auto pc = projective_cover(P(a, 0));
  CHECK(pc.map.is_isomorphism());

  std::mt19937_64 rng(9);
  for (int m = 0; m <= 2; ++m) {
    auto alg = a3(m);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = testing::random_module(alg, rng, 3);
      auto cov = projective_cover(x);
      CHECK(cov.map.is_homomorphism());
      CHECK(cov.map.is_surjective());
      // minimality: the kernel sits in the radical
      auto k = kernel(cov.map);
      auto rad = radical(cov.object.module);
      auto into_top = compose(k.inclusion, top(cov.object.module).projection);
      CHECK(into_top.is_zero());
      (void)rad;
      auto env = injective_envelope(x);
      CHECK(env.map.is_homomorphism());
      CHECK(env.map.is_injective());
      // essential: socles agree
      CHECK(socle_vector(env.object.module) == socle_vector(x));
    }
  }
}

TEST_CASE("projective dimension and ext") {
  auto a = a3(0);
  CHECK(ext_dim(1, S(a, 0), S(a, 1)) == 1);
  CHECK(ext_dim(1, S(a, 0), S(a, 2)) == 0);
  CHECK(ext_dim(0, S(a, 0), S(a, 0)) == 1);
  CHECK(proj_dim(S(a, 0)) == 1);
  CHECK(proj_dim(S(a, 2)) == 0);
  CHECK(proj_dim(FDModule(a)) == -1);
  std::mt19937_64 rng(17);
  for (int m = 0; m <= 2; ++m) {
    auto alg = a3(m);
    for (int trial = 0; trial < 6; ++trial) {
      auto n = testing::random_module(alg, rng);
      for (int v = 0; v < alg->vertex_count(); ++v)
        for (int s = 1; s <= 2 * m + 1; ++s) CHECK(ext_dim(s, P(alg, v), n) == 0);
    }
  }
}

TEST_CASE("global dimension") {
  CHECK(global_dimension(a3(0)) == 1);
  CHECK(global_dimension(a3(1)) == 3);
  CHECK(global_dimension(SCAlgebra::replicated(Quiver::d4(), 1, kP)) == 3);
  // Bounded by 2m+1; the bound is attained only when A is long enough.
  for (int m = 1; m <= 3; ++m) {
    auto alg = a3(m);
    int pd = global_dimension(alg), id = 0, ext = 0;
    for (int v = 0; v < alg->vertex_count(); ++v) {
      id = std::max(id, inj_dim(S(alg, v)));
      for (int w = 0; w < alg->vertex_count(); ++w)
        for (int s = 1; s <= 2 * m + 2; ++s)
          if (ext_dim(s, S(alg, v), S(alg, w))) ext = std::max(ext, s);
    }
    CHECK(pd == id);
    CHECK(pd == ext);
    CHECK(pd <= 2 * m + 1);
  }
  // duplicated algebra of 1 -> 2 <- 3: worked out by hand, gl.dim 2
  CHECK(global_dimension(SCAlgebra::replicated(Quiver("A3s", 3, {{"a", 0, 1}, {"b", 2, 1}}), 1, kP)) == 2);
}

TEST_CASE("ext via cohomology of Hom(P., N)") {
  // Independent check: build the complex Hom(P_s, N) directly from covers.
  std::mt19937_64 rng(23);
  auto alg = a3(1);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = testing::random_module(alg, rng);
    auto n = testing::random_module(alg, rng);
    std::vector<Cover> covers;
    FDModule x = m;
    std::vector<ModMorphism> d;  // d_s : P_{s+1} -> P_s
    for (int s = 0; s < 4; ++s) {
      covers.push_back(projective_cover(x));
      auto k = kernel(covers.back().map);
      x = k.module;
      if (s > 0) d.push_back(compose(covers[s].map, kernel(covers[s - 1].map).inclusion));
      if (x.is_zero()) break;
    }
    // rank of Hom(P_s, N) -> Hom(P_{s+1}, N)
    auto rank_of = [&](int s) {
      if (s >= static_cast<int>(d.size())) return 0;
      auto basis = hom_basis(covers[s].object.module, n);
      std::vector<Row> rows;
      for (const auto& h : basis) rows.push_back(compose(d[s], h).flatten());
      if (rows.empty()) return 0;
      return rank(FpMatrix::from_rows(kP, rows, static_cast<int>(rows[0].size())));
    };
    for (int s = 1; s + 1 < static_cast<int>(covers.size()); ++s) {
      int dim_cochain = hom_dim(covers[s].object.module, n);
      int expect = dim_cochain - rank_of(s) - rank_of(s - 1);
      CHECK(ext_dim(s, m, n) == expect);
    }
  }
}

TEST_CASE("repetitive window") {
  auto a1 = a3(1);
  auto w = RepetitiveWindow::around(a1);
  auto s3 = S(a1, 2);
  auto up = w.omega(s3, -1);
  std::vector<int> rel;
  for (int l : up.layer_support()) rel.push_back(l - w.offset());
  CHECK(rel == std::vector<int>{0, 1});
  CHECK(cosyzygy(s3).dims() == w.lower(up).dims());
  CHECK(w.omega(up, 1).dims() == w.lift(s3).dims());
  CHECK(w.is_projective_injective(P(a1, a1->vertex(0, 1))));
  CHECK_FALSE(w.is_projective_injective(P(a1, a1->vertex(0, 0))));
  CHECK(w.omega(P(a1, a1->vertex(0, 1)), 1).is_zero());

  auto d = w.degree(w.lower(up));
  CHECK(d.l == 1);
  CHECK(d.module.dims() == std::vector<int>{0, 0, 1});
  CHECK(w.degree(S(a1, 0)).l == 0);
  CHECK_THROWS_AS(w.degree(P(a1, a1->vertex(1, 1))), InvalidArgument);

  auto a0 = a3(0);
  CHECK(stable_hom_dim(S(a0, 0), S(a0, 0)) == 1);
  CHECK(stable_hom_dim(S(a0, 0), P(a0, 0)) == 0);
}

TEST_CASE("omega adjunction and depth independence") {
  std::mt19937_64 rng(29);
  auto a1 = a3(1);
  auto w = RepetitiveWindow::around(a1);
  RepetitiveWindow deeper(a1, 8, 8);
  for (int trial = 0; trial < 10; ++trial) {
    auto n = testing::random_module(a1, rng);
    for (int s : {-2, -1, 1, 2}) {
      auto x = w.omega(n, s);
      auto y = deeper.omega(n, s);
      auto lx = x.layer_support(), ly = y.layer_support();
      for (auto& l : lx) l -= w.offset();
      for (auto& l : ly) l -= deeper.offset();
      CHECK(lx == ly);
      CHECK(x.dim() == y.dim());
    }
  }
}

TEST_CASE("ext over the repetitive algebra is stable hom into cosyzygies") {
  std::mt19937_64 rng(31);
  for (int m = 1; m <= 2; ++m) {
    auto alg = a3(m);
    auto w = RepetitiveWindow::around(alg);
    for (int trial = 0; trial < 8; ++trial) {
      auto x = testing::random_module(alg, rng);
      auto y = testing::random_module(alg, rng);
      for (int s = 1; s <= 3; ++s) CHECK(w.ext_dim(s, x, y) == w.stable_hom_dim(x, w.omega(y, -s)));
    }
  }
}
