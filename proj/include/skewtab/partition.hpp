#pragma once

#include <compare>
#include <string>
#include <vector>

namespace skewtab {

/// Integer partition: a weakly decreasing sequence of nonnegative parts.
/// Trailing zeros are stripped on construction, so (2,1,0) == (2,1).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(const std::string& comma_separated);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    long total() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based row length; 0 beyond the last part.
    int part(int row) const;

    /// Length of column c (1-based): number of rows with at least c cells.
    int column_height(int c) const;

    std::string to_string() const;  // "2,1" ; "" for the empty partition

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of total n with at most max_parts parts (optionally with
/// every part <= max_part; 0 means unbounded). Lexicographically sorted.
std::vector<Partition> partitions_of(int n, int max_parts, int max_part = 0);

/// All partitions with at most max_parts parts and first part <= max_first,
/// any total (including the empty one). Sorted by total, then lexicographic.
std::vector<Partition> partitions_in_box(int max_first, int max_parts);

}  // namespace skewtab
