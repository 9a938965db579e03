#include "coprime/tree.hpp"

#include <algorithm>

namespace coprime {

namespace {
const Pair kRoot{1, 2};
}

const Pair& Trajectory::final_pair() const {
    return steps.empty() ? kRoot : steps.back().pair;
}

Pair apply_code_from(const Pair& start, const Code& c) {
    Pair p = start;
    for (auto bit : c)
        p = tau(bit, p);
    return p;
}

Pair apply_code(const Code& c) {
    return apply_code_from(kRoot, c);
}

Code decode(const Pair& p) {
    if (!is_tree_pair(p))
        throw NotInTree("decode: " + format_pair(p) + " is not a tree pair");
    std::vector<std::uint8_t> bits;
    Pair cur = p;
    while (!(cur == kRoot)) {
        // b <= 2a means the last generator applied was tau1.
        bits.push_back(cur.b <= 2 * cur.a ? 1 : 0);
        cur = reduce(cur);
    }
    std::reverse(bits.begin(), bits.end());
    return Code(std::move(bits));
}

Trajectory trajectory(const Code& c) {
    Trajectory t;
    t.steps.reserve(c.size());
    Pair p = kRoot;
    for (auto bit : c) {
        p = tau(bit, p);
        t.steps.push_back(TrajectoryStep{bit, p});
    }
    return t;
}

std::string format_trajectory(const Trajectory& t) {
    std::string out = format_pair(kRoot);
    for (const auto& step : t.steps) {
        out += " ↦ ";
        out += format_pair(step.pair);
    }
    return out;
}

} // namespace coprime
