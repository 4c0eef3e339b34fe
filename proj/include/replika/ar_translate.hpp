#pragma once

// Auslander-Reiten translates D Tr and Tr D through minimal projective
// presentations and the Nakayama functor.

#include "replika/module.hpp"

namespace replika {

FDModule ar_tau(const FDModule& m);
FDModule ar_tau_inverse(const FDModule& m);

// Left multiplication by x in e_v Lambda e_u as a map P_u -> P_v;
// x is given by coefficients over the basis of the algebra.
ModMorphism left_multiplication(const AlgebraPtr& alg, int u, int v, const Row& x);
// Its image under the Nakayama functor, I_u -> I_v.
ModMorphism nakayama(const AlgebraPtr& alg, int u, int v, const Row& x);

}  // namespace replika
