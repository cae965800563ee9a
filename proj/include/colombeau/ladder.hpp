#pragma once

#include "colombeau/genfun.hpp"

#include <iosfwd>
#include <vector>

namespace colombeau {

/// Geometric eps ladder eps_k = 2^-k, k = k_min..k_max (at least 6 rungs).
struct EpsLadder {
    int k_min = 4;
    int k_max = 14;

    void validate() const;
    std::size_t size() const { return static_cast<std::size_t>(k_max - k_min + 1); }
    std::vector<double> epsilons() const;  // coarse to fine
};

struct LadderPoint {
    double eps = 0.0;
    double value = 0.0;
    double error = 0.0;
    double magnitude = 0.0;
};

/// Samples v on every rung, rungs evaluated concurrently; output ordered by rung.
std::vector<LadderPoint> sample_ladder(const GenNumber& v, const EpsLadder& ladder);

/// CSV with header "eps,value,error", numbers at 17 significant digits.
void write_ladder_csv(std::ostream& os, const std::vector<LadderPoint>& points);

}  // namespace colombeau
