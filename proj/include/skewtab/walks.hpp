#pragma once

#include "skewtab/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace skewtab {

/// The 2l+1 step kinds of the (l+1)-dimensional walks, projected onto the
/// transverse coordinates (y_2,...,y_{l+1}): the pure e_1 step is the zero
/// vector, e_1 +- e_2 move the first coordinate, and e_1 +- (e_k - e_{k+1})
/// exchange a unit between adjacent coordinates.
struct StepSet {
    explicit StepSet(int ell);

    int ell;
    std::vector<std::vector<int>> deltas;  // each of length ell
    std::size_t e1_index;                  // which delta is the pure e_1 step
};

struct WalkOptions {
    /// Ceiling on simultaneously live DP states; 0 means unlimited.
    std::size_t max_states = 0;
};

/// Number of n-step walks in the nonnegative orthant from the origin back to
/// the e_1 axis using the 2l+1 step kinds. Sparse DP with return-distance
/// pruning: a state needing more transfer steps than remain is dropped.
BigInt count_odd_walks(int ell, int n, const WalkOptions& opts = {});

/// Same walks, except the pure e_1 step is allowed only while the last
/// coordinate y_{l+1} is zero.
BigInt count_even_walks(int ell, int n, const WalkOptions& opts = {});

struct ConjectureCell {
    int ell = 0;
    int n = 0;
    // lhs: walk counts; rhs: bounded-height tableau counts.
    BigInt odd_lhs, odd_rhs, even_lhs, even_rhs;
    enum class Status { Ok, OddMismatch, EvenMismatch, BothMismatch, ResourceLimit };
    Status status = Status::Ok;
    std::string note;
};

struct ConjectureReport {
    int ell_max = 0;
    int n_max = 0;
    std::vector<ConjectureCell> cells;  // ordered by (ell, n)
    long odd_mismatches = 0;
    long even_mismatches = 0;  // findings: potential counterexamples
    long resource_limited = 0;
    bool all_ok() const {
        return odd_mismatches == 0 && even_mismatches == 0 && resource_limited == 0;
    }
};

struct ConjectureOptions {
    WalkOptions walk;
    int parallel = 1;
};

/// For every l <= ell_max, n <= n_max, compares the walk counts against the
/// strip counts |T_{2l+1}(n)| and |T_{2l}(n)|. Equality failures are
/// recorded, never thrown: the odd case is a theorem (a mismatch means a
/// bug), the even case is the conjecture under test (a mismatch is a
/// finding). Memory-cap hits annotate the affected cells.
ConjectureReport check_conjecture(int ell_max, int n_max,
                                  const ConjectureOptions& opts = {});

}  // namespace skewtab
