#pragma once

// Tilting modules over A^(m): recognition, enumeration, complement chains
// joined by connecting sequences, mutation, mutation teams and witnesses.

#include <cstdint>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "replika/approximation.hpp"
#include "replika/catalog.hpp"

namespace replika {

// Module-level tests; summands are found by decomposition.
bool is_exceptional(const FDModule& m);
bool is_partial_tilting(const FDModule& m);
bool is_tilting(const FDModule& m, std::uint64_t seed = 0);

// Content hash of the sorted summand fingerprints.
std::string module_id(const std::vector<FDModule>& summands);
std::string module_id(const Catalog& c, const std::vector<int>& summands);

struct TiltingRecord {
  std::vector<int> summands;  // sorted catalog indices
  bool is_tilting = false;
  int pd = 0;
  bool faithful = false;
  std::string id;
};

// Catalog-level Ext vanishing in degrees 1..2m+1.
bool is_exceptional(const Catalog& c, const std::vector<int>& summands);
TiltingRecord make_record(const Catalog& c, std::vector<int> summands);

// All basic tilting modules, optionally restricted to summands of pd <= bound.
std::vector<TiltingRecord> enumerate_tilting(const Catalog& c, std::optional<int> pd_bound = std::nullopt);

// Almost complete tilting modules (sorted index sets) that are faithful.
std::vector<std::vector<int>> faithful_almost_complete(const Catalog& c);

// Every X with T + X tilting.
std::vector<int> brute_force_complements(const Catalog& c, const std::vector<int>& t);

struct ConnectingSequence {
  ModMorphism f;             // X_i -> T_i
  ModMorphism g;             // T_i -> X_{i+1}
  std::vector<int> middle;   // summands of T_i as indices into T
};

struct ComplementChain {
  std::vector<FDModule> base;
  std::vector<FDModule> complements;       // X_0 .. X_t
  std::vector<ConnectingSequence> sequences;
  std::vector<int> degrees;
  std::vector<int> pds;
  int t() const { return static_cast<int>(complements.size()) - 1; }
};

// Walks down from the hint to the Bongartz complement, then up to the sink
// complement. With enforce_bounds the length is checked against 2m..2m+1.
ComplementChain complement_chain(const std::vector<FDModule>& t, const FDModule& hint, bool enforce_bounds = true);

struct Mutation {
  FDModule complement;
  ConnectingSequence sequence;
};
enum class Direction { kUp, kDown };
// SinkEnd / BongartzEnd at the ends of the chain.
Mutation mutate(const std::vector<FDModule>& t, const FDModule& x, Direction dir);

// Chain members as catalog indices.
std::vector<int> chain_indices(const Catalog& c, const ComplementChain& chain);

struct TeamReport {
  bool pattern = true;
  bool maximal = true;
  bool ladder = true;   // degree rules
  bool length = true;   // 2m <= t <= 2m+1
  std::vector<std::string> violations;
  bool pass() const { return pattern && maximal && ladder && length; }
};
// Ext pattern, maximality and the degree ladder for an ordered list.
TeamReport mutation_team_check(const Catalog& c, const std::vector<int>& team);
// Pattern only, without maximality or ladder.
bool has_team_pattern(const Catalog& c, const std::vector<int>& team);

// A faithful almost complete W with W + X_i tilting for every team member.
std::optional<TiltingRecord> find_mutation_witness(const Catalog& c, const std::vector<int>& team);

struct MutationGraph {
  std::vector<TiltingRecord> nodes;
  // (node a, node b, exchanged summand of a, exchanged summand of b)
  std::vector<std::array<int, 4>> edges;
};
MutationGraph mutation_graph(const Catalog& c, std::optional<int> pd_bound);
std::string to_dot(const MutationGraph& g, const Catalog& c);
bool is_connected(const MutationGraph& g);

nlohmann::json to_json(const ComplementChain& chain);

}  // namespace replika
