#pragma once

#include <random>
#include <vector>

#include "sl2cox/exactmath.hpp"

namespace oracle {

using sl2cox::Integer;
using sl2cox::IntMatrix;

// d_k = g_k / g_{k-1}, g_k the gcd of all k x k minors
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& M);

// Leibniz expansion
Integer det_by_permutations(const IntMatrix& M);

// every x in [0,bound]^k with A x = b (row i mod moduli[i] when nonzero), lex order
std::vector<std::vector<Integer>> brute_force_nonneg(const IntMatrix& A, const std::vector<Integer>& b,
                                                     long bound, const std::vector<Integer>& moduli = {});

IntMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long lo, long hi);

// at most three entries above 1; with three, 1/a + 1/b + 1/c > 1
bool platonic_by_definition(const std::vector<long>& v);

}  // namespace oracle
