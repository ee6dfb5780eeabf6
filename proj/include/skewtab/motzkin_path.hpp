#pragma once

#include <string>
#include <vector>

namespace skewtab {

enum class Step : char { Up = 'U', Down = 'D', Level = 'L' };

inline int height_delta(Step s) {
    return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0);
}

/// Lattice path with steps U=(1,1), D=(1,-1), L=(1,0) that starts and ends
/// on the x-axis and never goes below it.
class MotzkinPath {
public:
    MotzkinPath() = default;

    /// Validates nonnegative prefix heights and zero final height; reports
    /// the first offending prefix index (1-based) otherwise.
    explicit MotzkinPath(std::vector<Step> steps);

    static MotzkinPath parse(const std::string& udl);

    const std::vector<Step>& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }

    std::string to_string() const;

    bool operator==(const MotzkinPath&) const = default;

private:
    std::vector<Step> steps_;
};

std::string steps_to_string(const std::vector<Step>& steps);

}  // namespace skewtab
