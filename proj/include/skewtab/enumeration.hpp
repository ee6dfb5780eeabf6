#pragma once

#include "skewtab/motzkin_path.hpp"
#include "skewtab/numeric.hpp"
#include "skewtab/partition.hpp"
#include "skewtab/tableau.hpp"

#include <functional>
#include <vector>

namespace skewtab {

/// Exhaustive enumeration refuses lengths beyond this unless the caller
/// raises the cap explicitly.
inline constexpr int kDefaultEnumerationCap = 16;

/// n-th Motzkin number, via the convolution recurrence
/// m_n = m_{n-1} + sum_{a+b=n-2} m_a * m_b. Thread-safe; memoized.
BigInt motzkin(int n);

/// Number of U/D/L paths from height j to height 0 in n - i steps that stay
/// nonnegative (paths from (i,j) to (n,0) above the x-axis). Zero when
/// i > n or the height cannot be cleared. Thread-safe; memoized.
BigInt x_count(int i, int j, int n);

/// Number of standard Young tableaux with n entries and at most k rows,
/// counted as ballot words: a DP over weakly decreasing letter-multiplicity
/// tuples (c_1,...,c_k).
BigInt count_strip(int k, int n);

/// Number of standard fillings of the three-rowed skew strip over mu with m
/// entries: ballot-word DP started in state mu. Requires mu with <= 3 parts.
BigInt count_skew_bruteforce(const Partition& mu, int m);

/// Number of tableaux with n entries, at most three rows, whose (row, col)
/// cell holds exactly the value m. Infeasible combinations count 0.
BigInt count_entry_restricted(int row, int col, int m, int n);

/// Closed forms for the strip counts, k in {2,3,4,5}:
///   k=2: C(n, floor(n/2))
///   k=3: sum_i C(n,2i) * C(2i,i)/(i+1)
///   k=4: c_{floor((n+1)/2)} * c_{ceil((n+1)/2)}
///   k=5: 6 * sum_{i=0}^{floor(n/2)} C(n,2i) * c_i * (2i+2)!/((i+2)!(i+3)!)
/// Exact arithmetic; every division is checked to be exact.
BigInt closed_form(int k, int n);

/// Motzkin paths whose level steps all lie on the x-axis; equals the central
/// binomial number C(n, floor(n/2)).
BigInt count_grounded_level_paths(int n);

/// Visit every Motzkin path of length n once. Throws ResourceLimitError when
/// n exceeds the cap.
void for_each_motzkin_path(int n, const std::function<void(const MotzkinPath&)>& visit,
                           int cap = kDefaultEnumerationCap);

/// Visit every Yamanouchi word of length n on {1,2,3} once.
void for_each_word3(int n, const std::function<void(const YamanouchiWord&)>& visit,
                    int cap = kDefaultEnumerationCap);

std::vector<MotzkinPath> enumerate_paths(int n, int cap = kDefaultEnumerationCap);
std::vector<YamanouchiWord> enumerate_words3(int n, int cap = kDefaultEnumerationCap);

}  // namespace skewtab
