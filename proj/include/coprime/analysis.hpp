#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coprime/cluster.hpp"
#include "coprime/code.hpp"
#include "coprime/pair.hpp"

namespace coprime {

enum class SweepKind {
    Reflection,
    Conjecture,
    Completeness,
    BlockProposition,
    Homomorphism,
};

std::string sweep_kind_name(SweepKind kind);

// A concrete counterexample (or cross-check exhibit). Self-verifying:
// re-evaluating the codes reproduces the stored values.
struct Witness {
    std::vector<Code> codes;
    std::vector<Pair> pairs;
    std::vector<std::string> values;
};

// Extremal summary for one slice of a sweep. Conjecture scans emit one
// entry per (weight, variance) class; the reflection sweep emits a single
// whole-range entry. Ties on sums resolve to the lexicographically least
// code, which keeps merged shard output independent of shard count.
struct ExtremalEntry {
    std::optional<unsigned> weight;
    std::optional<Rational> var;
    std::uint64_t count = 0;
    mpz_class min_sum;
    Code min_code;
    mpz_class max_sum;
    Code max_code;
};

struct SweepReport {
    SweepKind kind;
    std::string range;
    std::uint64_t checked_count = 0;
    std::vector<Witness> violations;
    std::vector<ExtremalEntry> extremal;

    bool ok() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultViolationCap = 100;

// Checks norm1(T[c]) == norm1(T[refl(c)]) for every code with
// 1 <= |c| <= max_len, folding each unordered {c, refl(c)} class once.
// checked_count counts codes covered (2^1 + ... + 2^max_len).
SweepReport verify_reflection(unsigned max_len, unsigned shards = 1,
                              std::size_t cap = kDefaultViolationCap);

// The fixed exhibit that equal length and equal sum do not force
// reflection: T[10011] and T[01110] both sum to 25, yet
// refl(10011) = 11001 != 01110.
Witness verify_converse_failure();

// All 2^(depth+1)-1 vertices up to the given depth, depth-major and
// lexicographic within each level. Materializes the table; sweeps that
// only need to visit should fold instead.
std::vector<std::pair<Code, Pair>> enumerate_tree(unsigned depth);

// For every 1 <= a < b <= max_b with gcd(a,b) = 1 (gcd by a local Euclid
// loop, independent of the core path): decode succeeds, the round trip
// reproduces [a,b], and distinct pairs yield distinct codes.
SweepReport completeness_check(unsigned max_b,
                               std::size_t cap = kDefaultViolationCap);

// F1 = F2 = 1, indexed so that T[1] = [2,3] = [F3,F4].
mpz_class fibonacci(unsigned i);

// For each j in 2..max_j: (i) T[1^j 0^j] equals the closed form
// [F_{j+2}, F_{j+4} + (j-1) F_{j+2}]; (ii) sum(1^j 0^j) == sum(0^j 1^j);
// (iii) sum((01)^j) == sum((10)^j); (iv) sum(1^j 0^j) < sum((01)^j).
SweepReport verify_block_proposition(unsigned max_j,
                                     std::size_t cap = kDefaultViolationCap);

// Groups codes of the given length by weight (or the single filtered
// weight) and tests: var(c1) < var(c2) implies sum(c1) > sum(c2) within
// each group. Equal variances impose no constraint. Violations are
// reported in (weight asc, c1 lex, c2 lex) order up to cap; extremal
// holds per-(weight, variance) sum ranges. Output is byte-identical to
// scan_conjecture_naive for any shard count.
SweepReport scan_conjecture(unsigned len,
                            std::optional<unsigned> weight_filter = {},
                            std::size_t cap = kDefaultViolationCap,
                            unsigned shards = 1);

// Reference oracle: literal all-pairs scan in canonical order. Quadratic
// in the weight-class sizes; intended for len <= 12.
SweepReport scan_conjecture_naive(unsigned len,
                                  std::optional<unsigned> weight_filter = {},
                                  std::size_t cap = kDefaultViolationCap);

// Seeded random pairs u, v and scalar k (raw mt19937_64 outputs):
// tau_i(u+v) == tau_i(u)+tau_i(v) and tau_i(k*u) == k*tau_i(u) for
// i in {0,1}, plus the fixed non-homomorphism witness
// r[1,4] + r[2,3] = [2,5] != [3,4] = r[3,7].
SweepReport sample_homomorphism(std::uint64_t trials, std::uint64_t seed,
                                std::size_t cap = kDefaultViolationCap);

} // namespace coprime
