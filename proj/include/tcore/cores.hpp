#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tcore/qseries.hpp"

namespace tcore::cores {

/// A partition α_1 >= α_2 >= ... >= α_s > 0. The empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// α'_j: number of cells in column j (1-based).
    int column_length(int j) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Ragged table of hook numbers; rows()[i][j] is H_{i+1,j+1}.
class HookTable {
public:
    explicit HookTable(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int max_hook() const;

private:
    std::vector<std::vector<int>> rows_;
};

HookTable hook_table(const Partition& p);

bool is_tcore(const Partition& p, int t);

/// Visits every partition of n in lexicographically descending order,
/// starting from (n) and ending with (1,...,1).
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit);

inline constexpr int kOracleLimit = 60;

/// a_t(n) by enumerating partitions of n and testing hook numbers.
/// Throws std::out_of_range for n > kOracleLimit.
std::uint64_t tcore_count_oracle(int t, int n);

/// sum a_t(n) q^n = (q^t;q^t)^t_inf / (q;q)_inf to the given order.
template <qseries::CoefficientRing Ring>
qseries::Series<Ring> tcore_series(int t, std::size_t order, Ring ring) {
    if (t < 1) {
        throw std::invalid_argument("tcore_series: t must be >= 1");
    }
    using namespace qseries;
    const auto k = static_cast<std::size_t>(t);
    auto euler = euler_function(ring, order);
    auto numerator = pow(dilate(euler_function(ring, (order + k - 1) / k), k, order), k);
    return divide(numerator, euler);
}

qseries::IntSeries tcore_series(int t, std::size_t order);
qseries::ModSeries tcore_series(int t, std::size_t order, std::uint64_t modulus);

enum class Parity { even, odd };

/// Parity of a_3(n): odd exactly when n = 3m^2 + 2m for some integer m.
Parity a3_parity(std::int64_t n);

} // namespace tcore::cores
