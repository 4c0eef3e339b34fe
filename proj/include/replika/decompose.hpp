#pragma once

// Krull-Schmidt decomposition by Fitting splitting, and isomorphism tests.

#include <cstdint>
#include <vector>

#include "replika/module.hpp"

namespace replika {

// Indecomposable summands, sorted by dimension vector. Each summand has a
// certified local endomorphism ring whose residue field is F_p.
std::vector<FDModule> decompose(const FDModule& m, std::uint64_t seed = 0);

// End(M) is local with residue field F_p (certified, no randomness).
bool has_split_local_endomorphisms(const FDModule& m);

bool is_indecomposable(const FDModule& m, std::uint64_t seed = 0);

// Invertible intertwiner search; throws Inconclusive if neither found nor refuted.
bool is_isomorphic(const FDModule& m, const FDModule& n, std::uint64_t seed = 0);

// dim Hom against every standard module: dims (= Hom from projectives), top,
// socle. Equal for isomorphic modules.
std::vector<int> fingerprint(const FDModule& m);

}  // namespace replika
