#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "coprime/code.hpp"

namespace coprime {

// Exact rational, canonical form (den > 0, lowest terms). Comparisons are
// exact; nothing here ever rounds through floating point, since conjecture
// scanning orders codes by these values.
using Rational = mpq_class;

// "p/q", or just "p" when q == 1.
std::string format_rational(const Rational& r);

// Maximal-run decomposition of the code, left to right.
std::vector<std::size_t> run_lengths(const Code& c);

// Length of the maximal constant run containing position i (1-based).
// Throws PositionOutOfRange unless 1 <= i <= |c|.
std::size_t cluster_number(const Code& c, std::size_t i);

// avg(c) = sum_i clus(x_i, c) / n  = (sum over runs of r^2) / n.
// var(c) = sum_i clus(x_i, c)^2 / n = (sum over runs of r^3) / n.
// Both throw EmptyCode for n = 0: the defining formulas divide by n.
Rational cluster_average(const Code& c);
Rational cluster_variance(const Code& c);

} // namespace coprime
