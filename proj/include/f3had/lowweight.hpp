// Bounded-weight codeword search for self-dual codes.
//
// A self-dual code with systematic generator (I | M) is also generated by
// (2 M^T | I), so the first and second halves of the coordinates are both
// information sets.  A codeword of weight at most 2t+1 has at most t
// nonzero entries on one of the halves, so enumerating messages of weight
// at most t on each side finds every such codeword exactly.

#pragma once

#include <vector>

#include "f3had/code.hpp"
#include "f3had/gf3.hpp"

namespace f3had {

struct LowWeightScan {
    int min_found = -1;            // least nonzero weight <= wmax seen, -1 if none
    std::vector<Gf3Vec> words;     // all words of the collected weight, both signs
    bool aborted = false;          // stopped early by stop_below
};

// Complete scan of all codewords of weight <= wmax (wmax <= n/2 + 1 after
// pigeonholing; callers here use wmax <= 18).  collect selects one weight
// class to gather (-1: none).  stop_below > 0 aborts the scan as soon as a
// word of weight < stop_below appears.  Requires a self-dual code.
LowWeightScan scan_low_weight(const TernaryCode& c, int wmax, int collect = -1,
                              int stop_below = -1);

// all codewords of weight exactly w, in the code's own coordinates
std::vector<Gf3Vec> low_weight_class(const TernaryCode& c, int w);

}  // namespace f3had
