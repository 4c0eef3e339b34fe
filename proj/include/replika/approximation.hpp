#pragma once

// Minimal add(T)-approximations. T is given by its indecomposable summands.

#include <vector>

#include "replika/module.hpp"

namespace replika {

struct Approximation {
  DirectSum object;          // T' in add T
  std::vector<int> summands; // index into T of each part of T'
  ModMorphism map;           // X -> T' (left) or T' -> X (right)
};

Approximation minimal_left_approx(const FDModule& x, const std::vector<FDModule>& t);
Approximation minimal_right_approx(const FDModule& x, const std::vector<FDModule>& t);

bool is_faithful(const FDModule& m);
// X is a quotient of some T^r.
bool in_gen(const std::vector<FDModule>& t, const FDModule& x);
// X embeds into some T^r.
bool in_cogen(const std::vector<FDModule>& t, const FDModule& x);

}  // namespace replika
