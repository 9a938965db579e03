#pragma once

// Test-side oracles, kept independent of the library implementation paths
// they adjudicate. reference_cluster_number is the literal set-cardinality
// definition (count positions k whose whole span to i carries the same
// bit), not the run-decomposition the library uses.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coprime/cluster.hpp"
#include "coprime/code.hpp"

namespace testsupport {

inline std::size_t reference_cluster_number(const coprime::Code& c,
                                            std::size_t i) {
    const std::size_t n = c.size();
    std::size_t count = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t lo = k < i ? k : i;
        const std::size_t hi = k > i ? k : i;
        bool all_equal = true;
        for (std::size_t j = lo; j <= hi; ++j) {
            if (c.bit(j - 1) != c.bit(i - 1)) {
                all_equal = false;
                break;
            }
        }
        if (all_equal)
            ++count;
    }
    return count;
}

inline coprime::Rational reference_average(const coprime::Code& c) {
    mpz_class total = 0;
    for (std::size_t i = 1; i <= c.size(); ++i)
        total += static_cast<unsigned long>(reference_cluster_number(c, i));
    coprime::Rational r(total, mpz_class(static_cast<unsigned long>(c.size())));
    r.canonicalize();
    return r;
}

inline coprime::Rational reference_variance(const coprime::Code& c) {
    mpz_class total = 0;
    for (std::size_t i = 1; i <= c.size(); ++i) {
        const mpz_class clus(
            static_cast<unsigned long>(reference_cluster_number(c, i)));
        total += clus * clus;
    }
    coprime::Rational r(total, mpz_class(static_cast<unsigned long>(c.size())));
    r.canonicalize();
    return r;
}

// Sum of Euler's totient over 2..max_b via a plain sieve; counts the
// coprime pairs 1 <= a < b <= max_b.
inline std::uint64_t totient_sum(unsigned max_b) {
    std::vector<std::uint32_t> phi(max_b + 1);
    for (std::uint32_t i = 0; i <= max_b; ++i)
        phi[i] = i;
    for (std::uint32_t i = 2; i <= max_b; ++i) {
        if (phi[i] != i)
            continue;  // not prime
        for (std::uint32_t j = i; j <= max_b; j += i)
            phi[j] -= phi[j] / i;
    }
    std::uint64_t sum = 0;
    for (std::uint32_t i = 2; i <= max_b; ++i)
        sum += phi[i];
    return sum;
}

// All codes of one length in lexicographic order.
inline std::vector<coprime::Code> all_codes(unsigned len) {
    std::vector<coprime::Code> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << len); ++idx) {
        std::vector<std::uint8_t> bits(len);
        for (unsigned k = 0; k < len; ++k)
            bits[k] = static_cast<std::uint8_t>((idx >> (len - 1 - k)) & 1u);
        out.emplace_back(std::move(bits));
    }
    return out;
}

} // namespace testsupport
