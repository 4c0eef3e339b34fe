#pragma once

// Hom spaces, radical layers, covers and envelopes, (co)syzygies, Ext and
// stable Hom. Everything happens over the algebra the modules live on; the
// repetitive-algebra computations go through RepetitiveWindow.

#include <vector>

#include "replika/module.hpp"

namespace replika {

std::vector<ModMorphism> hom_basis(const FDModule& m, const FDModule& n);
int hom_dim(const FDModule& m, const FDModule& n);
// Same as hom_basis, restricted to a flattened coordinate form (one row per basis map).
FpMatrix hom_coordinates(const FDModule& m, const FDModule& n);

Subobject radical(const FDModule& m);
Quotient top(const FDModule& m);
Subobject socle(const FDModule& m);
// Multiplicity of each simple in top M / soc M.
std::vector<int> top_vector(const FDModule& m);
std::vector<int> socle_vector(const FDModule& m);

struct Cover {
  DirectSum object;       // sum of indecomposable projectives (or injectives)
  std::vector<int> vertices;  // vertex of each summand
  ModMorphism map;        // epi P -> M, or mono M -> I
};
Cover projective_cover(const FDModule& m);
Cover injective_envelope(const FDModule& m);

FDModule syzygy(const FDModule& m);
FDModule cosyzygy(const FDModule& m);

// Omega^0 M, Omega^1 M, ... up to `steps` (or until zero).
std::vector<FDModule> syzygies(const FDModule& m, int steps);

// -1 for the zero module.
int proj_dim(const FDModule& m);
int inj_dim(const FDModule& m);
int global_dimension(const AlgebraPtr& alg);

int ext_dim(int s, const FDModule& m, const FDModule& n);
// Ext^s(M, N) from precomputed syzygies of M (size >= s + 1).
int ext_dim(int s, const std::vector<FDModule>& omega_m, const FDModule& n);

// dim Hom(M, N) modulo maps factoring through a projective.
int stable_hom_dim(const FDModule& m, const FDModule& n);

bool is_projective(const FDModule& m);
bool is_injective(const FDModule& m);

// Finite piece of the repetitive algebra of A around a copy of A^(m): the
// replicated algebra of level below + m + above, with layer 0 of A^(m)
// sitting at layer `below`. Covers and envelopes that would need the
// non-self-injective edges of the window raise BudgetExhausted.
class RepetitiveWindow {
 public:
  RepetitiveWindow(AlgebraPtr base, int below, int above);
  // Default depth adequate for every computation on A^(m)-modules.
  static RepetitiveWindow around(const AlgebraPtr& base);

  const AlgebraPtr& base() const { return base_; }
  const AlgebraPtr& algebra() const { return window_; }
  // A itself (level 0), the home of degree() results.
  const AlgebraPtr& hereditary() const { return layer_zero_; }
  int offset() const { return below_; }

  FDModule lift(const FDModule& m) const;
  // Back to A^(m); BudgetExhausted if the support leaves layers 0..m.
  FDModule lower(const FDModule& m) const;
  bool fits_base(const FDModule& m) const;

  // Syzygy / cosyzygy over the repetitive algebra, for window modules.
  FDModule omega(const FDModule& m, int s) const;
  int ext_dim(int s, const FDModule& m, const FDModule& n) const;
  int stable_hom_dim(const FDModule& m, const FDModule& n) const;
  bool is_projective_injective(const FDModule& m) const;

  // Smallest l >= 0 with Omega^l M supported in the layer of A, together
  // with that A-module (returned over A^(0) of the same quiver).
  struct Degree {
    int l;
    FDModule module;
  };
  Degree degree(const FDModule& m) const;

 private:
  FDModule step(const FDModule& m, bool down) const;

  AlgebraPtr base_;
  AlgebraPtr window_;
  AlgebraPtr layer_zero_;
  int below_;
  int above_;
};

}  // namespace replika
