#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

Integer det_by_permutations(const IntMatrix& M) {
    size_t n = M.rows();
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Integer total = 0;
    do {
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Integer term = inv % 2 ? -1 : 1;
        for (size_t i = 0; i < n; ++i) term *= M(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

static void subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& M) {
    std::vector<Integer> out;
    Integer prev = 1;
    for (size_t k = 1; k <= std::min(M.rows(), M.cols()); ++k) {
        std::vector<std::vector<size_t>> rs, cs;
        subsets(M.rows(), k, rs);
        subsets(M.cols(), k, cs);
        Integer g = 0;
        for (auto& r : rs)
            for (auto& c : cs) {
                IntMatrix sub(k, k);
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) sub(i, j) = M(r[i], c[j]);
                g = gcd(g, det_by_permutations(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<std::vector<Integer>> brute_force_nonneg(const IntMatrix& A, const std::vector<Integer>& b,
                                                     long bound, const std::vector<Integer>& moduli) {
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> x(A.cols(), 0);
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == A.cols()) {
            auto y = A.apply(x);
            for (size_t i = 0; i < y.size(); ++i) {
                Integer d = y[i] - b[i];
                if (!moduli.empty() && moduli[i] != 0) {
                    if (d % moduli[i] != 0) return;
                } else if (d != 0) {
                    return;
                }
            }
            out.push_back(x);
            return;
        }
        for (long v = 0; v <= bound; ++v) {
            x[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool platonic_by_definition(const std::vector<long>& v) {
    std::vector<long> big;
    for (long x : v)
        if (x > 1) big.push_back(x);
    if (big.size() > 3) return false;
    if (big.size() < 3) return true;
    // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc
    long a = big[0], b = big[1], c = big[2];
    return b * c + a * c + a * b > a * b * c;
}

}  // namespace oracle
