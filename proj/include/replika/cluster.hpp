#pragma once

// Stalk complexes in D^b(A) for hereditary A, the m-cluster category
// C_m(A) = D^b(A)/(tau^- [m]) on its fundamental domain, the functor
// pi: mod A^(m) -> C_m(A), and checks of AR (m+3)-angles at dimension level.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "replika/catalog.hpp"
#include "replika/module.hpp"

namespace replika {

// N[shift] with N an indecomposable module over the hereditary algebra A.
struct DbStalk {
  FDModule module;
  int shift = 0;
};

bool same_stalk(const DbStalk& x, const DbStalk& y);

// tau P_i[l] = I_i[l-1] on projectives, D Tr otherwise; dually for tau^-.
DbStalk tau(const DbStalk& x);
DbStalk tau_inverse(const DbStalk& x);
int hom_db(const DbStalk& x, const DbStalk& y);
// F = tau^- [m] and its inverse.
DbStalk cluster_shift(const DbStalk& x, int m);
DbStalk cluster_unshift(const DbStalk& x, int m);
bool in_fundamental_domain(const DbStalk& x, int m);
DbStalk cm_normalize(const DbStalk& x, int m);
// dim Hom_{C_m}(X, Y[i]) for fundamental-domain objects.
int ext_cm(int i, const DbStalk& x, const DbStalk& y, int m);

class ClusterModel {
 public:
  // `hereditary` is A (level 0); NotDynkin for other quivers.
  ClusterModel(AlgebraPtr hereditary, int m);

  int level() const { return m_; }
  const AlgebraPtr& hereditary() const { return alg_; }
  int size() const { return static_cast<int>(objects_.size()); }
  const DbStalk& operator[](int i) const { return objects_.at(i); }
  const std::vector<DbStalk>& objects() const { return objects_; }

  std::optional<int> find(const DbStalk& x) const;  // normalizes first
  int ext(int i, int a, int b) const;               // 0 <= i <= m

  bool is_rigid(const std::vector<int>& s) const;
  bool is_cluster_tilting(const std::vector<int>& s) const;
  // Raises InternalError unless exactly m+1 complements exist.
  std::vector<int> complements(const std::vector<int>& almost) const;
  // Every maximal rigid subset, by exhaustive search over all subsets.
  std::vector<std::vector<int>> tilting_objects() const;

  // pi M for an indecomposable A^(m)-module; nullopt for projective-injectives.
  std::optional<int> pi(const Catalog& c, int entry) const;

 private:
  AlgebraPtr alg_;
  int m_;
  std::vector<DbStalk> objects_;
  std::vector<int> ext_;
};

// Exchange graph of the m-cluster tilting objects as DOT.
std::string exchange_graph_dot(const ClusterModel& cm, const std::vector<std::vector<int>>& objects);

struct AngleCheck {
  std::string name;
  bool pass = false;
  std::vector<std::vector<int>> witness_dims;
  std::string detail;
};
struct AngleReport {
  std::vector<AngleCheck> checks;
  // (a)-(d); (e) is exploratory.
  bool pass() const;
  nlohmann::json to_json() const;
};

// `t`: faithful almost complete tilting module, `xs`: its complements in chain
// order, the first m+1 of pd <= m.
AngleReport ar_angle(const Catalog& c, const ClusterModel& cm, const std::vector<int>& t, const std::vector<int>& xs);

nlohmann::json to_json(const DbStalk& x);

}  // namespace replika
