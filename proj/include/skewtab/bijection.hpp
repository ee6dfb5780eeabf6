#pragma once

#include "skewtab/motzkin_path.hpp"
#include "skewtab/tableau.hpp"

#include <vector>

namespace skewtab {

/// Diagnostic record of the labeling passes behind phi: the per-step labels
/// plus, for each pass, the set of step indices (1-based) it consumed.
struct LabelTrace {
    std::vector<int> labels;              // aligned with the path's steps
    std::vector<std::vector<int>> stages; // each sorted ascending; a partition of 1..n

    YamanouchiWord word() const { return YamanouchiWord(labels, 3); }
};

/// Maps a Motzkin path to a Yamanouchi word on {1,2,3} by the iterated
/// labeling procedure: each pass labels either a leading level step (1), the
/// peak at the end of the initial up-run (1,2), or an up/level/first-down
/// triple (1,2,3), removes those steps, and repeats on the concatenation.
YamanouchiWord phi(const MotzkinPath& p);

/// Inverse of phi: recovers the unique path whose label word is w. Rejects
/// words that are not Yamanouchi on the alphabet {1,2,3}.
MotzkinPath phi_inv(const YamanouchiWord& w);

/// Full pass-by-pass record of the labeling of p; concatenating the labels
/// in step order gives phi(p).
LabelTrace label_trace(const MotzkinPath& p);

/// Streaming form of the phi labeling. Feeding the steps of a path left to
/// right produces the same labels as the multi-pass procedure, one step at a
/// time; the label of a prefix never depends on later steps. State: how many
/// up steps are still unconsumed and how many up/level pairs await the down
/// step that completes their triple.
class PhiScanner {
public:
    /// Consumes one step and returns its label (1, 2 or 3).
    int feed(Step s);

    int open_ups() const { return open_ups_; }
    int pending_triples() const { return pending_triples_; }

    /// End height of the steps fed so far.
    int height() const { return open_ups_ + pending_triples_; }

private:
    int open_ups_ = 0;
    int pending_triples_ = 0;
};

/// Labels a whole step sequence with PhiScanner. The sequence need not
/// return to the axis; for complete Motzkin paths this equals phi.
std::vector<int> scan_labels(const std::vector<Step>& steps);

}  // namespace skewtab
