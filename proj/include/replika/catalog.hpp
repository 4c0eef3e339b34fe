#pragma once

// Complete list of indecomposable A^(m)-modules for a Dynkin quiver, with
// Ext tables. Every non-projective-injective indecomposable is a cosyzygy
// (over the repetitive algebra) of an indecomposable A-module.

#include <cstdint>
#include <optional>
#include <vector>

#include "replika/homology.hpp"

namespace replika {

// Indecomposable modules of a Dynkin path algebra (level 0) as tau^- orbits
// of the indecomposable projectives, orbit by orbit.
std::vector<FDModule> hereditary_indecomposables(const AlgebraPtr& alg);

struct CatalogEntry {
  FDModule module;
  bool projective_injective = false;
  int degree = -1;   // -1 for projective-injectives
  int base = -1;     // index into hereditary_modules(), -1 for projective-injectives
  int pd = 0;
  std::vector<int> fingerprint;
};

class Catalog {
 public:
  // NotDynkin unless the quiver is of type A, D or E.
  explicit Catalog(AlgebraPtr alg, std::uint64_t seed = 0);

  const AlgebraPtr& algebra() const { return alg_; }
  const RepetitiveWindow& window() const { return window_; }
  int level() const { return alg_->level(); }
  int size() const { return static_cast<int>(entries_.size()); }
  const CatalogEntry& operator[](int i) const { return entries_.at(i); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  // Indecomposable A-modules over window().hereditary(), tau^- orbits of projectives.
  const std::vector<FDModule>& hereditary_modules() const { return hereditary_; }
  std::vector<int> projective_injectives() const;

  // Index of an indecomposable module, if listed.
  std::optional<int> find(const FDModule& m) const;
  int index_of(const FDModule& m) const;

  // dim Ext^s(M_i, M_j) for 0 <= s <= 2m + 1.
  int ext(int s, int i, int j) const;
  int hom(int i, int j) const { return ext(0, i, j); }
  int max_degree() const { return max_ext_; }

  // Every predecessor (source of a chain of nonzero non-isomorphisms) has pd <= m.
  bool in_left_part(int i) const { return left_part_.at(i); }

 private:
  AlgebraPtr alg_;
  RepetitiveWindow window_;
  std::uint64_t seed_;
  std::vector<FDModule> hereditary_;
  std::vector<CatalogEntry> entries_;
  int max_ext_;
  std::vector<int> ext_;  // [s][i][j]
  std::vector<char> left_part_;
};

}  // namespace replika
