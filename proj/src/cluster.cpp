#include "coprime/cluster.hpp"

namespace coprime {

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<std::size_t> run_lengths(const Code& c) {
    std::vector<std::size_t> runs;
    std::size_t i = 0;
    while (i < c.size()) {
        std::size_t j = i + 1;
        while (j < c.size() && c.bit(j) == c.bit(i))
            ++j;
        runs.push_back(j - i);
        i = j;
    }
    return runs;
}

std::size_t cluster_number(const Code& c, std::size_t i) {
    if (i < 1 || i > c.size())
        throw PositionOutOfRange(
            "cluster_number: position " + std::to_string(i) +
            " outside 1.." + std::to_string(c.size()));
    const std::size_t k = i - 1;
    std::size_t lo = k;
    while (lo > 0 && c.bit(lo - 1) == c.bit(k))
        --lo;
    std::size_t hi = k;
    while (hi + 1 < c.size() && c.bit(hi + 1) == c.bit(k))
        ++hi;
    return hi - lo + 1;
}

namespace {

// Positionwise sums collapse to run sums: every position of a run of
// length r contributes r (resp. r^2), so the run contributes r^2 (r^3).
Rational run_power_mean(const Code& c, int power) {
    if (c.empty())
        throw EmptyCode("cluster statistics are undefined for the empty code");
    mpz_class total = 0;
    for (std::size_t r : run_lengths(c)) {
        mpz_class len(static_cast<unsigned long>(r));
        mpz_class term = len * len;
        if (power == 3)
            term *= len;
        total += term;
    }
    Rational result(total, mpz_class(static_cast<unsigned long>(c.size())));
    result.canonicalize();
    return result;
}

} // namespace

Rational cluster_average(const Code& c) {
    return run_power_mean(c, 2);
}

Rational cluster_variance(const Code& c) {
    return run_power_mean(c, 3);
}

} // namespace coprime
