#pragma once

#include <cstdint>
#include <vector>

namespace fslab {

// images[x] = token assigned to position x. Always a permutation of {0..n-1}.
using Bijection = std::vector<int>;

uint64_t factorial(int n);

Bijection identity_perm(int n);

bool is_permutation(const Bijection& sigma);

// Factorial-number-system (Lehmer code) ranking. rank(identity) = 0.
uint64_t rank_perm(const Bijection& sigma);
Bijection unrank_perm(uint64_t rank, int n);

// Position holding token t.
int position_of(const Bijection& sigma, int token);

// (u v) o sigma: the two tokens u and v trade places.
Bijection swap_tokens(const Bijection& sigma, int u, int v);

}  // namespace fslab
