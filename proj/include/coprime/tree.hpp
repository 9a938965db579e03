#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coprime/code.hpp"
#include "coprime/pair.hpp"

namespace coprime {

// One edge of a root-to-vertex walk: the generator bit taken and the pair
// it produced. The root [1,2] itself is implicit.
struct TrajectoryStep {
    std::uint8_t bit;
    Pair pair;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;

    bool empty() const { return steps.empty(); }
    const Pair& final_pair() const;  // root when empty
};

// Left fold of the generators over the code, x1 applied first, starting
// from [1,2]. Every output is a tree pair.
Pair apply_code(const Code& c);

// Same fold from an arbitrary start; used by tests replaying walks on
// [0,1] and [1,1].
Pair apply_code_from(const Pair& start, const Code& c);

// The unique code with apply_code(code) = p. Bits are recovered last-first
// by repeated reduce (b <= 2a means the last generator was tau1), then
// reversed. decode([1,2]) = "". Throws NotInTree off the tree.
Code decode(const Pair& p);

// Full visit sequence of apply_code; final pair equals apply_code(c).
Trajectory trajectory(const Code& c);

// "[1,2] ↦ [2,3] ↦ ..." — the arrow-chain rendering.
std::string format_trajectory(const Trajectory& t);

} // namespace coprime
