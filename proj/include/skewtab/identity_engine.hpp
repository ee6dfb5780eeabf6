#pragma once

#include "skewtab/m_algebra.hpp"
#include "skewtab/partition.hpp"
#include "skewtab/tableau.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewtab {

/// Column-major standard filling of mu: column 1 top to bottom, then
/// column 2, and so on. Requires at most 3 parts.
StandardTableau canonical_filler(const Partition& mu);

/// chi of the canonical filler; the word every matching path must begin with.
YamanouchiWord forced_prefix(const Partition& mu);

/// End-point classification of the length-|mu| path prefixes alpha whose
/// labels equal forced_prefix(mu).
struct PrefixClassTable {
    Partition mu;
    YamanouchiWord prefix_word;
    std::map<int, long> classes;                     // end height -> #distinct alpha
    std::map<int, std::vector<std::string>> alphas;  // end height -> sorted step strings
    std::vector<int> calibration_sizes;
};

struct CalibrateOptions {
    /// Calibration path lengths are |mu| + offsets[k]. Two sizes are compared;
    /// a disagreement raises CalibrationError.
    std::vector<int> offsets{6, 7};
    /// Below this path length calibration enumerates every Motzkin path and
    /// filters by label prefix; above it the search tree is pruned to the
    /// prefixes whose streaming labels already match.
    int exhaustive_threshold = 12;
    /// Force full enumeration regardless of length (testing hook).
    bool force_exhaustive = false;
    int enumeration_cap = 64;
    /// In pruned mode, matching paths are walked one by one (and re-checked
    /// against the multi-pass labeling) only while their total stays within
    /// this budget; beyond it the completions of each prefix are counted
    /// through x_count and the verification sweep carries the checking.
    long completion_budget = 50000;
};

/// Enumerates, at each calibration size, the Motzkin paths whose label word
/// starts with forced_prefix(mu); groups their initial |mu| steps by end
/// height. The class tables must agree across the calibration sizes, and the
/// per-height multiplicities must reproduce the matching-path totals through
/// x_count; any disagreement raises CalibrationError.
PrefixClassTable calibrate_prefix_classes(const Partition& mu,
                                          const CalibrateOptions& opts = {});

struct SkewDerivation {
    Partition mu;
    PrefixClassTable classes;
    MotzkinCombo combo;
    int verified_from = 0;  // inclusive n-range of the brute-force sweep
    int verified_to = 0;
};

struct DeriveOptions {
    CalibrateOptions calibrate;
    int verify_points = 13;  // sweep n = |mu| .. |mu| + verify_points - 1
    /// Prefix end heights reach mu_1, and a calibration size can only witness
    /// classes whose height fits in its offset. When mu_1 exceeds the
    /// defaults, raise each offset to mu_1 plus its index; shapes within the
    /// default domain are calibrated at the standard sizes unchanged.
    bool auto_raise_offsets = true;
};

/// Derives |T3(mu; n-|mu|)| as a Motzkin combination: sums the per-class
/// x_formula(|mu|, j) weighted by class multiplicity, then verifies the
/// result against count_skew_bruteforce on the whole sweep before returning.
/// A mismatch raises VerificationError naming the first bad n.
SkewDerivation derive_skew(const Partition& mu, const DeriveOptions& opts = {});
MotzkinCombo derive_skew_combo(const Partition& mu, const DeriveOptions& opts = {});

/// Exact linear solve for coefficients a_s (s in shifts) with
/// sum_s a_s * m_{n+s} = count for every sample (n, count). Requires at
/// least |shifts| + 2 samples; surplus samples act as verification.
/// Raises FitUnderdeterminedError / FitInconsistentError accordingly.
MotzkinCombo fit_combo(const std::vector<std::pair<int, BigInt>>& values,
                       const std::vector<int>& shifts);

struct EntryDerivation {
    int row = 0, col = 0, value = 0;
    /// Contributing shapes mu (first `value` entries) with multiplicities
    /// hook_count(mu minus its (row,col) corner).
    std::vector<std::pair<Partition, BigInt>> terms;
    MotzkinCombo combo;
    int verified_from = 0;
    int verified_to = 0;
};

/// Formula for the number of three-rowed tableaux with entry `value` fixed at
/// cell (row, col): sum over shapes mu of `value` cells with a removable
/// corner there of hook_count(mu - corner) * derive_skew_combo(mu). Verified
/// against count_entry_restricted before returning. Infeasible cells give the
/// zero combo.
EntryDerivation derive_entry(int row, int col, int value, const DeriveOptions& opts = {});
MotzkinCombo derive_entry_combo(int row, int col, int value, const DeriveOptions& opts = {});

struct CatalogEntry {
    Partition mu;
    std::optional<SkewDerivation> derivation;  // empty on failure
    std::string error;                         // failure message, if any
};

struct CatalogReport {
    int mu_max = 0;
    std::vector<CatalogEntry> entries;  // lexicographic in mu
    int failures = 0;

    std::string to_markdown() const;
};

struct CatalogOptions {
    DeriveOptions derive;
    int parallel = 1;
};

/// Derives and verifies a combo for every mu with mu_1 <= mu_max and at most
/// 3 parts. Per-mu failures are collected, not propagated.
CatalogReport catalog(int mu_max, const CatalogOptions& opts = {});

}  // namespace skewtab
