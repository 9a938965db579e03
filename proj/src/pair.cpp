#include "coprime/pair.hpp"

namespace coprime {

Pair tau0(const Pair& p) {
    return Pair{p.a, p.a + p.b};
}

Pair tau1(const Pair& p) {
    return Pair{p.b, p.a + p.b};
}

Pair tau(unsigned bit, const Pair& p) {
    return bit ? tau1(p) : tau0(p);
}

Pair add(const Pair& p, const Pair& q) {
    return Pair{p.a + q.a, p.b + q.b};
}

Pair scale(const mpz_class& k, const Pair& p) {
    return Pair{k * p.a, k * p.b};
}

mpz_class norm1(const Pair& p) {
    return p.a + p.b;
}

bool is_tree_pair(const Pair& p) {
    if (!(p.a > 0 && p.a < p.b))
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.a.get_mpz_t(), p.b.get_mpz_t());
    return g == 1;
}

Pair tree_root() {
    return Pair{1, 2};
}

Pair reduce(const Pair& p) {
    if (!is_tree_pair(p))
        throw NotInTree("reduce: " + format_pair(p) + " is not a tree pair");
    if (p == tree_root())
        throw RootReached("reduce: already at the root [1,2]");
    if (p.b > 2 * p.a)
        return Pair{p.a, p.b - p.a};   // undoes tau0
    return Pair{p.b - p.a, p.a};       // undoes tau1
}

std::string format_pair(const Pair& p) {
    return "[" + p.a.get_str() + "," + p.b.get_str() + "]";
}

} // namespace coprime
