#pragma once

#include "skewtab/numeric.hpp"
#include "skewtab/partition.hpp"

#include <string>
#include <vector>

namespace skewtab {

/// Word on the alphabet {1,2,...} in which every prefix contains at least as
/// many letters i as letters i+1 (ballot property).
class YamanouchiWord {
public:
    YamanouchiWord() = default;

    /// Validates the ballot property; max_letter 0 means no alphabet bound.
    explicit YamanouchiWord(std::vector<int> letters, int max_letter = 0);

    static YamanouchiWord parse(const std::string& digits, int max_letter = 0);

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    /// Digit string; only valid while all letters are <= 9.
    std::string to_string() const;

    bool operator==(const YamanouchiWord&) const = default;

private:
    std::vector<int> letters_;
};

/// Standard Young tableau: entries 1..n, rows and columns strictly
/// increasing, row lengths weakly decreasing. Rows and columns are 1-based.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);
    StandardTableau(std::initializer_list<std::vector<int>> rows)
        : StandardTableau(std::vector<std::vector<int>>(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry_count() const;
    int row_count() const { return static_cast<int>(rows_.size()); }
    Partition shape() const;

    bool operator==(const StandardTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Row-index word of a tableau: letter j is the row containing entry j.
YamanouchiWord chi(const StandardTableau& t);

/// Inverse of chi: row i collects the positions of letter i, in order.
/// Rejects non-ballot input, reporting the first violating prefix position.
StandardTableau chi_inv(const YamanouchiWord& w);

/// Ballot check with an optional alphabet bound (0 = unbounded).
bool is_yamanouchi(const std::vector<int>& letters, int max_letter = 0);

/// Number of standard Young tableaux of the given shape, by the hook-length
/// product. The division is exact and asserted to be so.
BigInt hook_count(const Partition& mu);

}  // namespace skewtab
