#pragma once

#include <gmpxx.h>

#include <string>

#include "coprime/errors.hpp"

namespace coprime {

// An element of (Z^2, +). Entries are unbounded: sums along all-ones codes
// grow like Fibonacci numbers, so fixed-width integers would overflow near
// code length 90.
struct Pair {
    mpz_class a;
    mpz_class b;

    bool operator==(const Pair&) const = default;
};

// The two generators. tau0[a,b] = [a,a+b], tau1[a,b] = [b,a+b].
Pair tau0(const Pair& p);
Pair tau1(const Pair& p);
Pair tau(unsigned bit, const Pair& p);

// Componentwise group operation and Z-module action.
Pair add(const Pair& p, const Pair& q);
Pair scale(const mpz_class& k, const Pair& p);

// a + b. Entries are nonnegative everywhere we use this.
mpz_class norm1(const Pair& p);

// True iff 0 < a < b and gcd(a,b) = 1, i.e. p is a vertex of the tree.
bool is_tree_pair(const Pair& p);

// Two-branch inverse of the generators: [a,b-a] when b > 2a (undoes tau0),
// [b-a,a] when b <= 2a (undoes tau1). Throws NotInTree for pairs outside
// the tree domain, RootReached at [1,2].
Pair reduce(const Pair& p);

// The tree root [1,2].
Pair tree_root();

// "[a,b]" — the rendering used by trajectory traces.
std::string format_pair(const Pair& p);

} // namespace coprime
