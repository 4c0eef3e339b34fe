#pragma once

// Finite-dimensional right modules over an SCAlgebra.
//
// Every module keeps a basis adapted to the vertex idempotents: the basis is
// the concatenation of bases of M e_v over all vertices v. The action of a
// basis element b with source s and target t is then a single block
// M e_s -> M e_t, stored as a dim(M e_s) x dim(M e_t) matrix. Morphisms are
// block-diagonal over vertices.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "replika/algebra.hpp"
#include "replika/linalg.hpp"

namespace replika {

class FDModule {
 public:
  // Zero module.
  explicit FDModule(AlgebraPtr alg);
  // `blocks[b]` is the action of basis element b; idempotent blocks are
  // overwritten with identities. Shapes are validated.
  FDModule(AlgebraPtr alg, std::vector<int> dims, std::vector<FpMatrix> blocks);

  const AlgebraPtr& algebra() const { return data_->alg; }
  Prime prime() const { return data_->alg->prime(); }
  int dim() const { return data_->total; }
  bool is_zero() const { return data_->total == 0; }
  const std::vector<int>& dims() const { return data_->dims; }
  int dim_at(int v) const { return data_->dims[v]; }
  int offset(int v) const { return data_->offsets[v]; }
  const FpMatrix& block(int b) const { return data_->blocks[b]; }
  // Full dim x dim action matrix of a basis element.
  FpMatrix action(int b) const;
  // Layers with nonzero support, ascending.
  std::vector<int> layer_support() const;

  // Multiplicativity and identity checks; returns a description of the first
  // failure or an empty string.
  std::string validate() const;

 private:
  struct Data {
    AlgebraPtr alg;
    std::vector<int> dims;
    std::vector<int> offsets;
    int total = 0;
    std::vector<FpMatrix> blocks;
  };
  std::shared_ptr<const Data> data_;
};

class ModMorphism {
 public:
  // Zero morphism.
  ModMorphism(FDModule source, FDModule target);
  ModMorphism(FDModule source, FDModule target, std::vector<FpMatrix> blocks);
  static ModMorphism identity(const FDModule& m);

  const FDModule& source() const { return source_; }
  const FDModule& target() const { return target_; }
  const FpMatrix& block(int v) const { return blocks_[v]; }
  const std::vector<FpMatrix>& blocks() const { return blocks_; }
  FpMatrix matrix() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  // Intertwining check against every basis element.
  bool is_homomorphism() const;

  // Coordinates of the blocks concatenated row-major, vertex by vertex.
  Row flatten() const;
  ModMorphism operator+(const ModMorphism& o) const;
  ModMorphism scaled(Entry s) const;

 private:
  FDModule source_;
  FDModule target_;
  std::vector<FpMatrix> blocks_;
};

// First f, then g.
ModMorphism compose(const ModMorphism& f, const ModMorphism& g);

void require_same_algebra(const FDModule& a, const FDModule& b);

struct Subobject {
  FDModule module;
  ModMorphism inclusion;
};
struct Quotient {
  FDModule module;
  ModMorphism projection;
};

// Submodule spanned per vertex by the rows of `spans[v]` (must be invariant).
Subobject submodule(const FDModule& m, const std::vector<FpMatrix>& spans);
Quotient quotient(const FDModule& m, const std::vector<FpMatrix>& spans);

Subobject kernel(const ModMorphism& f);
Quotient cokernel(const ModMorphism& f);
Subobject image(const ModMorphism& f);

struct DirectSum {
  FDModule module;
  std::vector<FDModule> parts;
  std::vector<ModMorphism> injections;
  std::vector<ModMorphism> projections;
};
DirectSum direct_sum(AlgebraPtr alg, const std::vector<FDModule>& parts);
// Offset of part k's block at vertex v inside a direct sum.
int direct_sum_offset(const std::vector<FDModule>& parts, int k, int v);
// Morphism between direct sums given its components (rows: source parts).
ModMorphism assemble(const DirectSum& source, const DirectSum& target,
                     const std::vector<std::vector<std::optional<ModMorphism>>>& components);
// (c_1 ... c_k): X_1 + ... + X_k -> Y.
ModMorphism copair(const DirectSum& source, const std::vector<ModMorphism>& components);
// (c_1, ..., c_k)^T: X -> Y_1 + ... + Y_k.
ModMorphism pair(const std::vector<ModMorphism>& components, const DirectSum& target);

enum class StandardKind { kSimple, kProjective, kInjective };
FDModule standard_module(const AlgebraPtr& alg, StandardKind kind, int vertex);
FDModule regular_module(const AlgebraPtr& alg);

// Same module seen over another replicated level of the same quiver, with
// layer q placed at layer q + layer_offset. Elements outside act by zero.
// Throws BudgetExhausted if the support does not fit.
FDModule relocate(const FDModule& m, const AlgebraPtr& target, int layer_offset);

// Conjugate by an invertible block-diagonal change of basis.
FDModule conjugate(const FDModule& m, const std::vector<FpMatrix>& basis_change);

nlohmann::json to_json(const FDModule& m);
FDModule module_from_json(const AlgebraPtr& alg, const nlohmann::json& j);
nlohmann::json to_json(const ModMorphism& f);
ModMorphism morphism_from_json(const FDModule& source, const FDModule& target, const nlohmann::json& j);

}  // namespace replika
