#include "tcore/density.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "tcore/cores.hpp"

namespace tcore::density {

DensityTable measure_density(int t, std::int64_t p, int j, const std::vector<std::int64_t>& checkpoints,
                             std::int64_t guard) {
    if (t < 1 || p < 2 || j < 1) {
        throw std::invalid_argument("measure_density: need t >= 1, p >= 2, j >= 1");
    }
    if (checkpoints.empty()) {
        throw std::invalid_argument("measure_density: no checkpoints");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
            throw std::invalid_argument("measure_density: checkpoints must be positive and increasing");
        }
    }
    std::int64_t modulus = 0;
    try {
        modulus = ipow(p, j);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("measure_density: p^j does not fit in 64 bits");
    }
    const std::int64_t last = checkpoints.back();
    if (last > guard) {
        throw std::length_error("measure_density: X = " + std::to_string(last) + " exceeds the series guard " +
                                std::to_string(guard));
    }

    const auto series = cores::tcore_series(t, static_cast<std::size_t>(last) + 1, static_cast<std::uint64_t>(modulus));
    DensityTable table;
    table.t = t;
    table.modulus = static_cast<std::uint64_t>(modulus);
    table.checkpoints = checkpoints;
    std::int64_t zeros = 0;
    std::size_t next = 0;
    for (std::int64_t n = 1; n <= last; ++n) {
        if (series.coeff(static_cast<std::size_t>(n)) == 0) {
            ++zeros;
        }
        if (n == checkpoints[next]) {
            table.numerators.push_back(zeros);
            table.densities.push_back(make_rational(zeros, n));
            ++next;
        }
    }
    return table;
}

std::string to_csv(const DensityTable& table) {
    std::ostringstream out;
    out << "t,modulus,X,numerator,denominator\n";
    for (std::size_t i = 0; i < table.checkpoints.size(); ++i) {
        // Reduced fraction, so the denominator may be smaller than X.
        const auto& d = table.densities[i];
        out << table.t << ',' << table.modulus << ',' << table.checkpoints[i] << ',' << d.get_num().get_str() << ','
            << d.get_den().get_str() << '\n';
    }
    return out.str();
}

} // namespace tcore::density
