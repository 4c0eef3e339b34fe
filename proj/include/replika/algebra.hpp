#pragma once

// Hereditary path algebras A = kQ and their m-replicated algebras A^(m).
//
// A^(m) is the lower block-triangular matrix algebra with diagonal blocks
// A_0..A_m (copies of A) and the dual bimodule DA in the blocks (q, q-1).
// Elements of DA sitting in block (q, q-1) are called dual paths of layer q.
// Vertex (i, q) has global index q * n + i. Modules are right modules.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "replika/linalg.hpp"
#include "replika/quiver.hpp"

namespace replika {

enum class ElementKind { kPath, kDualPath };

struct PathBasisElement {
  ElementKind kind = ElementKind::kPath;
  int path = 0;   // index into the path basis of A
  int layer = 0;  // dual paths have layer >= 1
  int source = 0; // global vertex with e_source * b = b
  int target = 0; // global vertex with b * e_target = b
};

struct Term {
  int index;
  Entry coefficient;
};

// Path basis of A together with the bimodule structure of DA on dual paths.
class PathAlgebraBasis {
 public:
  explicit PathAlgebraBasis(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  int size() const { return static_cast<int>(paths_.size()); }
  const Path& path(int i) const { return paths_[i]; }
  const std::vector<Path>& paths() const { return paths_; }
  std::optional<int> find(const Path& p) const;
  std::optional<int> trivial(int vertex) const { return find(Path{vertex, vertex, {}}); }

  // u * v in A; nullopt when the paths do not compose.
  std::optional<int> multiply(int u, int v) const;
  // u . p*  = w* when p = w u, else zero.
  std::optional<int> left_dual(int u, int p) const;
  // p* . v  = w* when p = v w, else zero.
  std::optional<int> right_dual(int p, int v) const;

 private:
  Quiver quiver_;
  std::vector<Path> paths_;
};

// u . p* . v in the path basis; nullopt for zero.
std::optional<int> dual_action(const PathAlgebraBasis& basis, int u, int p, int v);

class SCAlgebra;
using AlgebraPtr = std::shared_ptr<const SCAlgebra>;

class SCAlgebra {
 public:
  // A^(m); m = 0 gives A itself.
  static AlgebraPtr replicated(const Quiver& q, int m, Prime p);

  const Quiver& quiver() const { return basis_.quiver(); }
  const PathAlgebraBasis& path_basis() const { return basis_; }
  int level() const { return m_; }
  Prime prime() const { return prime_; }
  std::string id() const;

  int dim() const { return static_cast<int>(elements_.size()); }
  const PathBasisElement& element(int i) const { return elements_[i]; }
  int quiver_vertices() const { return basis_.quiver().vertex_count(); }
  int vertex_count() const { return quiver_vertices() * (m_ + 1); }
  int vertex(int i, int layer) const { return layer * quiver_vertices() + i; }
  int vertex_layer(int v) const { return v / quiver_vertices(); }
  int vertex_in_quiver(int v) const { return v % quiver_vertices(); }
  std::string vertex_name(int v) const;
  std::string element_name(int i) const;

  int idempotent(int v) const { return idempotents_[v]; }
  const std::vector<int>& idempotents() const { return idempotents_; }
  const std::vector<int>& radical() const { return radical_; }
  // Radical elements outside rad^2; together with the idempotents they generate.
  const std::vector<int>& generators() const { return generators_; }
  bool is_radical(int i) const { return elements_[i].kind == ElementKind::kDualPath || basis_.path(elements_[i].path).length() > 0; }

  std::optional<Term> product(int x, int y) const { return table_[static_cast<std::size_t>(x) * dim() + y]; }
  std::optional<int> find(ElementKind kind, int path, int layer) const;

  // Smallest L with rad^L = 0.
  int radical_length() const;

 private:
  SCAlgebra(const Quiver& q, int m, Prime p);

  PathAlgebraBasis basis_;
  int m_;
  Prime prime_;
  std::vector<PathBasisElement> elements_;
  std::vector<int> index_;  // [kind][layer][path] -> element or -1
  std::vector<int> idempotents_;
  std::vector<int> radical_;
  std::vector<int> generators_;
  std::vector<std::optional<Term>> table_;
};

int grothendieck_rank(const SCAlgebra& alg);

struct TruncationEmbedding {
  AlgebraPtr algebra;                 // A^(m')
  std::vector<int> killed_idempotents;  // idempotents of layers > m inside A^(m')
};
TruncationEmbedding truncation_embedding(const SCAlgebra& alg, int m_prime);

// Checks associativity on every basis triple; returns the first offending triple.
std::optional<std::array<int, 3>> find_associativity_violation(const SCAlgebra& alg);

}  // namespace replika
