#pragma once

// Counting how often a_t(n) vanishes modulo p^j on 1 <= n <= X.

#include <cstdint>
#include <string>
#include <vector>

#include "tcore/arith.hpp"

namespace tcore::density {

struct DensityTable {
    int t = 1;
    std::uint64_t modulus = 1;
    std::vector<std::int64_t> checkpoints;
    std::vector<std::int64_t> numerators;  // #{1 <= n <= X : a_t(n) ≡ 0}
    std::vector<Rational> densities;       // numerators[i] / checkpoints[i]
};

inline const std::vector<std::int64_t> kDefaultCheckpoints = {100, 1000, 10000, 20000};
inline constexpr std::int64_t kDefaultGuard = 200000;

/// One series pass to max(checkpoints). Throws std::invalid_argument on bad
/// input (t < 1, p < 2, j < 1, non-increasing or non-positive checkpoints,
/// p^j too wide) and std::length_error if the last checkpoint exceeds guard.
DensityTable measure_density(int t, std::int64_t p, int j, const std::vector<std::int64_t>& checkpoints = kDefaultCheckpoints,
                             std::int64_t guard = kDefaultGuard);

/// Header `t,modulus,X,numerator,denominator`, one row per checkpoint.
std::string to_csv(const DensityTable& table);

} // namespace tcore::density
