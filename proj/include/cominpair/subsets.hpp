#ifndef COMINPAIR_SUBSETS_HPP
#define COMINPAIR_SUBSETS_HPP

// Subset and tuple enumeration used by the coordinate expansions. All
// enumerations are in lexicographic order so coordinate vectors come out in a
// deterministic key order.

#include <cstdint>
#include <vector>

namespace cominpair {

// All size-p subsets of {1..n}, lexicographic.
inline std::vector<std::vector<int>> subsets_of_size(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int k = p - 1;
        while (k >= 0 && cur[k] == n - (p - 1 - k)) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// All subsets of {1..n} of even size, ordered by (size, lexicographic).
inline std::vector<std::vector<int>> even_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int p = 0; p <= n; p += 2) {
        auto s = subsets_of_size(n, p);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

// All tuples in {1..p}^len, lexicographic (len = 0 gives the empty tuple).
inline std::vector<std::vector<int>> tuples_of_length(int p, int len) {
    std::vector<std::vector<int>> out;
    if (len < 0) return out;
    std::vector<int> cur(len, 1);
    while (true) {
        out.push_back(cur);
        int k = len - 1;
        while (k >= 0 && cur[k] == p) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < len; ++j) cur[j] = 1;
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

} // namespace cominpair

#endif
