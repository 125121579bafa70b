#include "fslab/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace fslab {

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

Bijection identity_perm(int n) {
    Bijection sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    return sigma;
}

bool is_permutation(const Bijection& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

uint64_t rank_perm(const Bijection& sigma) {
    if (!is_permutation(sigma)) throw std::invalid_argument("rank_perm: not a permutation");
    int n = static_cast<int>(sigma.size());
    uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (sigma[j] < sigma[i]) ++smaller;
        rank = rank * static_cast<uint64_t>(n - i) + static_cast<uint64_t>(smaller);
    }
    return rank;
}

Bijection unrank_perm(uint64_t rank, int n) {
    if (rank >= factorial(n)) throw std::invalid_argument("unrank_perm: rank out of range");
    std::vector<int> digits(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rank % static_cast<uint64_t>(n - i));
        rank /= static_cast<uint64_t>(n - i);
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Bijection sigma(n);
    for (int i = 0; i < n; ++i) {
        sigma[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return sigma;
}

int position_of(const Bijection& sigma, int token) {
    for (int x = 0; x < static_cast<int>(sigma.size()); ++x)
        if (sigma[x] == token) return x;
    throw std::invalid_argument("position_of: token out of range");
}

Bijection swap_tokens(const Bijection& sigma, int u, int v) {
    Bijection result = sigma;
    std::swap(result[position_of(sigma, u)], result[position_of(sigma, v)]);
    return result;
}

}  // namespace fslab
