#include "tcore/cores.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tcore::cores {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_length(int j) const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int a) { return a >= j; }));
}

int HookTable::max_hook() const {
    int best = 0;
    for (const auto& row : rows_) {
        for (int h : row) {
            best = std::max(best, h);
        }
    }
    return best;
}

HookTable hook_table(const Partition& p) {
    const auto parts = p.parts();
    const int width = parts.empty() ? 0 : parts.front();
    std::vector<int> cols(width + 1, 0);
    for (int j = 1; j <= width; ++j) {
        cols[j] = p.column_length(j);
    }
    std::vector<std::vector<int>> rows;
    rows.reserve(parts.size());
    for (int i = 1; i <= p.length(); ++i) {
        std::vector<int> row;
        row.reserve(parts[i - 1]);
        for (int j = 1; j <= parts[i - 1]; ++j) {
            row.push_back(parts[i - 1] + cols[j] - i - j + 1);
        }
        rows.push_back(std::move(row));
    }
    return HookTable(std::move(rows));
}

bool is_tcore(const Partition& p, int t) {
    if (t < 1) {
        throw std::invalid_argument("is_tcore: t must be >= 1");
    }
    const auto table = hook_table(p);
    for (const auto& row : table.rows()) {
        for (int h : row) {
            if (h % t == 0) {
                return false;
            }
        }
    }
    return true;
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit) {
    if (n < 0) {
        throw std::invalid_argument("for_each_partition: n must be non-negative");
    }
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<int> a{n};
    while (true) {
        visit(a);
        // Rightmost part larger than 1.
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) {
            return;
        }
        const int k = --a.back();
        int rest = ones + 1;
        while (rest > k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest > 0) {
            a.push_back(rest);
        }
    }
}

namespace {

bool parts_are_tcore(std::span<const int> parts, int t, std::vector<int>& cols) {
    if (parts.empty()) {
        return true;
    }
    const int width = parts.front();
    cols.assign(width + 1, 0);
    for (int a : parts) {
        for (int j = 1; j <= a; ++j) {
            ++cols[j];
        }
    }
    const int s = static_cast<int>(parts.size());
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= parts[i - 1]; ++j) {
            if ((parts[i - 1] + cols[j] - i - j + 1) % t == 0) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

std::uint64_t tcore_count_oracle(int t, int n) {
    if (t < 1) {
        throw std::invalid_argument("tcore_count_oracle: t must be >= 1");
    }
    if (n < 0 || n > kOracleLimit) {
        throw std::out_of_range("tcore_count_oracle: n must lie in [0, " + std::to_string(kOracleLimit) + "]");
    }
    std::uint64_t count = 0;
    std::vector<int> cols;
    for_each_partition(n, [&](std::span<const int> parts) {
        if (parts_are_tcore(parts, t, cols)) {
            ++count;
        }
    });
    return count;
}

qseries::IntSeries tcore_series(int t, std::size_t order) {
    return tcore_series(t, order, qseries::IntegerRing{});
}

qseries::ModSeries tcore_series(int t, std::size_t order, std::uint64_t modulus) {
    return tcore_series(t, order, qseries::ResidueRing(modulus));
}

Parity a3_parity(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("a3_parity: n must be non-negative");
    }
    // n = 3m^2 + 2m  <=>  3n + 1 = (3m + 1)^2, and every square prime to 3
    // has a root of the form 3m + 1 with m in Z.
    const std::int64_t target = 3 * n + 1;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(target)));
    while (root * root > target) {
        --root;
    }
    while ((root + 1) * (root + 1) <= target) {
        ++root;
    }
    return root * root == target ? Parity::odd : Parity::even;
}

} // namespace tcore::cores
