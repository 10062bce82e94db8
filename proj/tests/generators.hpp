#pragma once

// Seeded random generators for property-style tests.

#include "hv/poly.hpp"
#include "hv/scalar.hpp"

#include <cstdint>
#include <random>

namespace hv::testing {

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Scalar rational()
    {
        return Scalar::ratio(integer(-9, 9), integer(1, 7));
    }

    /// Gaussian rational; real with probability 1/3.
    Scalar scalar()
    {
        if (integer(0, 2) == 0) return rational();
        return rational() + rational() * Scalar::imag_unit();
    }

    Scalar nonzero_scalar()
    {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    Poly poly(std::uint32_t max_degree, int terms)
    {
        Poly f;
        for (int k = 0; k < terms; ++k) {
            auto e1 = static_cast<std::uint32_t>(integer(0, max_degree));
            auto e2 = static_cast<std::uint32_t>(integer(0, max_degree - e1));
            f.add_term(scalar(), {e1, e2});
        }
        return f;
    }

private:
    std::mt19937 rng_;
};

} // namespace hv::testing
