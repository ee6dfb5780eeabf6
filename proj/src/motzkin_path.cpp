#include "skewtab/motzkin_path.hpp"

#include "skewtab/errors.hpp"

namespace skewtab {

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        h += height_delta(steps_[i]);
        if (h < 0)
            throw ValidationError("path dips below the axis after step " +
                                  std::to_string(i + 1));
    }
    if (h != 0)
        throw ValidationError("path ends at height " + std::to_string(h) + ", not 0");
}

MotzkinPath MotzkinPath::parse(const std::string& udl) {
    std::vector<Step> steps;
    steps.reserve(udl.size());
    for (char ch : udl) {
        switch (ch) {
            case 'U': case 'u': steps.push_back(Step::Up); break;
            case 'D': case 'd': steps.push_back(Step::Down); break;
            case 'L': case 'l': steps.push_back(Step::Level); break;
            default:
                throw ValidationError(std::string("invalid path character '") + ch + "'");
        }
    }
    return MotzkinPath(std::move(steps));
}

std::string steps_to_string(const std::vector<Step>& steps) {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out += static_cast<char>(s);
    return out;
}

std::string MotzkinPath::to_string() const { return steps_to_string(steps_); }

}  // namespace skewtab
