#include "skewtab/partition.hpp"

#include "skewtab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewtab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw ValidationError("partition part " + std::to_string(i + 1) + " is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw ValidationError("partition is not weakly decreasing at part " +
                                  std::to_string(i + 2));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("cannot parse partition part '" + tok + "'");
        }
    }
    return Partition(std::move(parts));
}

long Partition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::part(int row) const {
    if (row < 1 || row > size()) return 0;
    return parts_[row - 1];
}

int Partition::column_height(int c) const {
    int h = 0;
    for (int p : parts_)
        if (p >= c) ++h;
    return h;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    int bound = max_part > 0 ? max_part : n;
    if (n == 0) out.emplace_back(std::vector<int>{});
    else rec(rec, n, bound);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box(int max_first, int max_parts) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_first * max_parts; ++n) {
        auto ps = partitions_of(n, max_parts, max_first);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace skewtab
