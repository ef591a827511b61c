#include "tcore/qseries.hpp"

namespace tcore::qseries {

std::optional<ResidueRing::value_type> ResidueRing::unit_inverse(value_type v) const {
    if (modulus_ == 1) {
        return 0;
    }
    Integer inv;
    const Integer x(static_cast<unsigned long>(v));
    const Integer m(static_cast<unsigned long>(modulus_));
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return inv.get_ui();
}

ModSeries reduce_mod(const IntSeries& a, std::uint64_t u) {
    ResidueRing ring(u);
    std::vector<std::uint64_t> c;
    c.reserve(a.order());
    for (const auto& v : a.coefficients()) {
        c.push_back(ring.from_integer(v));
    }
    return ModSeries(ring, std::move(c));
}

ModSeries reduce_mod(const ModSeries& a, std::uint64_t u) {
    ResidueRing ring(u);
    if (a.ring().value() % u != 0) {
        throw std::invalid_argument("reduce_mod: " + std::to_string(u) + " does not divide existing modulus " +
                                    std::to_string(a.ring().value()));
    }
    std::vector<std::uint64_t> c;
    c.reserve(a.order());
    for (auto v : a.coefficients()) {
        c.push_back(v % u);
    }
    return ModSeries(ring, std::move(c));
}

std::string to_string(const Integer& v) {
    return v.get_str();
}

std::string to_string(std::uint64_t v) {
    return std::to_string(v);
}

} // namespace tcore::qseries
