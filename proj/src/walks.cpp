#include "skewtab/walks.hpp"

#include "skewtab/enumeration.hpp"
#include "skewtab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace skewtab {

StepSet::StepSet(int ell_) : ell(ell_) {
    if (ell < 1) throw ValidationError("ell must be positive");
    std::vector<int> zero(ell, 0);
    deltas.push_back(zero);  // e_1
    e1_index = 0;
    std::vector<int> d = zero;
    d[0] = 1;
    deltas.push_back(d);  // e_1 + e_2
    d[0] = -1;
    deltas.push_back(d);  // e_1 - e_2
    for (int k = 2; k <= ell; ++k) {
        std::vector<int> up = zero;
        up[k - 2] = 1;
        up[k - 1] = -1;
        deltas.push_back(up);  // e_1 + (e_k - e_{k+1})
        std::vector<int> down = zero;
        down[k - 2] = -1;
        down[k - 1] = 1;
        deltas.push_back(down);  // e_1 - (e_k - e_{k+1})
    }
}

namespace {

using State = std::vector<int>;

// A unit in the (k+1)-indexed transverse coordinate needs k+1 steps to reach
// the axis: one transfer per level and the final contraction. States needing
// more steps than remain cannot contribute to any origin read-off.
long steps_to_clear(const State& s) {
    long need = 0;
    for (std::size_t k = 0; k < s.size(); ++k) need += static_cast<long>(s[k]) * (k + 1);
    return need;
}

// Walk counts for every length 0..n_max in one forward sweep: entry t is the
// mass on the origin after t steps.
std::vector<BigInt> walk_counts_upto(int ell, int n_max, bool e1_needs_flat_tail,
                                     const WalkOptions& opts) {
    const StepSet steps(ell);
    const State origin(ell, 0);
    std::map<State, BigInt> layer{{origin, 1}};

    std::vector<BigInt> counts;
    counts.reserve(n_max + 1);
    counts.push_back(1);  // the empty walk

    for (int t = 0; t < n_max; ++t) {
        std::map<State, BigInt> next;
        const long remaining = n_max - t - 1;
        for (const auto& [state, ways] : layer) {
            for (std::size_t d = 0; d < steps.deltas.size(); ++d) {
                if (e1_needs_flat_tail && d == steps.e1_index && state[ell - 1] != 0) continue;
                State s = state;
                bool ok = true;
                for (int k = 0; k < ell; ++k) {
                    s[k] += steps.deltas[d][k];
                    if (s[k] < 0) { ok = false; break; }
                }
                if (!ok) continue;
                if (steps_to_clear(s) > remaining) continue;
                next[s] += ways;
            }
        }
        if (opts.max_states != 0 && next.size() > opts.max_states)
            throw ResourceLimitError("walk DP exceeded the cap of " +
                                     std::to_string(opts.max_states) + " live states (ell=" +
                                     std::to_string(ell) + ", n<=" + std::to_string(n_max) + ")");
        layer.swap(next);
        auto it = layer.find(origin);
        counts.push_back(it == layer.end() ? BigInt(0) : it->second);
    }
    return counts;
}

// Ballot-word counts |T_k(n)| for every n in 0..n_max in one sweep.
std::vector<BigInt> strip_counts_upto(int k, int n_max) {
    std::map<State, BigInt> layer{{State(k, 0), 1}};
    std::vector<BigInt> counts;
    counts.reserve(n_max + 1);
    counts.push_back(1);
    for (int t = 0; t < n_max; ++t) {
        std::map<State, BigInt> next;
        for (const auto& [state, ways] : layer) {
            for (int letter = 0; letter < k; ++letter) {
                if (letter > 0 && state[letter] + 1 > state[letter - 1]) continue;
                State s = state;
                ++s[letter];
                next[s] += ways;
            }
        }
        layer.swap(next);
        BigInt total = 0;
        for (const auto& [state, ways] : layer) total += ways;
        counts.push_back(total);
    }
    return counts;
}

}  // namespace

BigInt count_odd_walks(int ell, int n, const WalkOptions& opts) {
    if (n < 0) return 0;
    return walk_counts_upto(ell, n, false, opts).back();
}

BigInt count_even_walks(int ell, int n, const WalkOptions& opts) {
    if (n < 0) return 0;
    return walk_counts_upto(ell, n, true, opts).back();
}

ConjectureReport check_conjecture(int ell_max, int n_max, const ConjectureOptions& opts) {
    if (ell_max < 1) throw ValidationError("ell_max must be positive");
    if (n_max < 0) throw ValidationError("n_max must be nonnegative");

    ConjectureReport report;
    report.ell_max = ell_max;
    report.n_max = n_max;
    report.cells.resize(static_cast<std::size_t>(ell_max) * (n_max + 1));

    // One sweep of each DP per ell covers every n at once.
    auto fill_row = [&](int ell) {
        const std::size_t base = static_cast<std::size_t>(ell - 1) * (n_max + 1);
        std::vector<BigInt> odd_lhs, even_lhs;
        std::string failure;
        try {
            odd_lhs = walk_counts_upto(ell, n_max, false, opts.walk);
            even_lhs = walk_counts_upto(ell, n_max, true, opts.walk);
        } catch (const ResourceLimitError& e) {
            failure = e.what();
        }
        std::vector<BigInt> odd_rhs = strip_counts_upto(2 * ell + 1, n_max);
        std::vector<BigInt> even_rhs = strip_counts_upto(2 * ell, n_max);

        for (int n = 0; n <= n_max; ++n) {
            ConjectureCell& cell = report.cells[base + n];
            cell.ell = ell;
            cell.n = n;
            cell.odd_rhs = odd_rhs[n];
            cell.even_rhs = even_rhs[n];
            if (!failure.empty()) {
                cell.status = ConjectureCell::Status::ResourceLimit;
                cell.note = failure;
                continue;
            }
            cell.odd_lhs = odd_lhs[n];
            cell.even_lhs = even_lhs[n];
            bool odd_ok = cell.odd_lhs == cell.odd_rhs;
            bool even_ok = cell.even_lhs == cell.even_rhs;
            if (odd_ok && even_ok) cell.status = ConjectureCell::Status::Ok;
            else if (!odd_ok && !even_ok) cell.status = ConjectureCell::Status::BothMismatch;
            else if (!odd_ok) cell.status = ConjectureCell::Status::OddMismatch;
            else cell.status = ConjectureCell::Status::EvenMismatch;
        }
    };

    const int workers = std::max(1, std::min(opts.parallel, ell_max));
    if (workers == 1) {
        for (int ell = 1; ell <= ell_max; ++ell) fill_row(ell);
    } else {
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    int ell = next.fetch_add(1);
                    if (ell > ell_max) return;
                    fill_row(ell);
                }
            });
        for (auto& t : pool) t.join();
    }

    for (const auto& cell : report.cells) {
        switch (cell.status) {
            case ConjectureCell::Status::Ok: break;
            case ConjectureCell::Status::OddMismatch: ++report.odd_mismatches; break;
            case ConjectureCell::Status::EvenMismatch: ++report.even_mismatches; break;
            case ConjectureCell::Status::BothMismatch:
                ++report.odd_mismatches;
                ++report.even_mismatches;
                break;
            case ConjectureCell::Status::ResourceLimit: ++report.resource_limited; break;
        }
    }
    return report;
}

}  // namespace skewtab
