#pragma once

#include <cstddef>
#include <vector>

namespace hadstar {

// Visits the k-subsets of {0..n-1} in lexicographic order.  `visit` may
// return true to stop early; returns whether a visit said stop.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// k-multisets of {0..n-1} as nondecreasing index vectors, lexicographic.
template <typename Visit>
bool for_each_multiset(std::size_t n, std::size_t k, Visit&& visit) {
    if (n == 0 || k == 0) return false;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[i - 1];
    }
}

}  // namespace hadstar
