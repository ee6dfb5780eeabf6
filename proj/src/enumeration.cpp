#include "skewtab/enumeration.hpp"

#include "skewtab/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace skewtab {

namespace {

std::mutex g_motzkin_mutex;
std::vector<BigInt> g_motzkin{1};  // m_0

std::mutex g_xcount_mutex;
// (height, remaining steps) -> count of nonnegative U/D/L descents to 0.
std::map<std::pair<int, int>, BigInt> g_xcount;

BigInt descent_count(int height, int steps) {
    if (height < 0 || height > steps) return 0;
    if (steps == 0) return 1;  // height == 0 here
    auto key = std::make_pair(height, steps);
    if (auto it = g_xcount.find(key); it != g_xcount.end()) return it->second;
    BigInt v = descent_count(height, steps - 1) + descent_count(height + 1, steps - 1);
    if (height > 0) v += descent_count(height - 1, steps - 1);
    g_xcount.emplace(key, v);
    return v;
}

using State = std::vector<int>;

// One DP layer: weakly decreasing multiplicity tuples -> word counts.
using Layer = std::map<State, BigInt>;

Layer advance_ballot(const Layer& layer, int k) {
    Layer next;
    for (const auto& [state, ways] : layer) {
        for (int letter = 0; letter < k; ++letter) {
            if (letter > 0 && state[letter] + 1 > state[letter - 1]) continue;
            State s = state;
            ++s[letter];
            next[s] += ways;
        }
    }
    return next;
}

}  // namespace

BigInt motzkin(int n) {
    if (n < 0) return 0;
    std::lock_guard<std::mutex> lock(g_motzkin_mutex);
    while (static_cast<int>(g_motzkin.size()) <= n) {
        int t = static_cast<int>(g_motzkin.size());
        BigInt v = g_motzkin[t - 1];
        for (int a = 0; a + 2 <= t; ++a) v += g_motzkin[a] * g_motzkin[t - 2 - a];
        g_motzkin.push_back(v);
    }
    return g_motzkin[n];
}

BigInt x_count(int i, int j, int n) {
    if (i < 0 || j < 0 || n < 0) throw ValidationError("x_count arguments must be nonnegative");
    if (i > n) return 0;
    std::lock_guard<std::mutex> lock(g_xcount_mutex);
    return descent_count(j, n - i);
}

BigInt count_strip(int k, int n) {
    if (k < 1) throw ValidationError("strip width must be positive");
    if (n < 0) return 0;
    Layer layer{{State(k, 0), 1}};
    for (int t = 0; t < n; ++t) layer = advance_ballot(layer, k);
    BigInt total = 0;
    for (const auto& [state, ways] : layer) total += ways;
    return total;
}

BigInt count_skew_bruteforce(const Partition& mu, int m) {
    if (mu.size() > 3)
        throw ValidationError("skew strip counting needs a partition with at most 3 parts");
    if (m < 0) return 0;
    State start{mu.part(1), mu.part(2), mu.part(3)};
    Layer layer{{start, 1}};
    for (int t = 0; t < m; ++t) layer = advance_ballot(layer, 3);
    BigInt total = 0;
    for (const auto& [state, ways] : layer) total += ways;
    return total;
}

BigInt count_entry_restricted(int row, int col, int m, int n) {
    if (row < 1 || row > 3) throw ValidationError("row must be in 1..3");
    if (col < 1) throw ValidationError("column must be positive");
    if (m < 1 || n < m) return 0;

    // Words w_1..w_n on {1,2,3}: position m holds letter `row` and exactly
    // col-1 earlier positions do. Split the DP at position m.
    Layer layer{{State(3, 0), 1}};
    for (int t = 0; t < m - 1; ++t) layer = advance_ballot(layer, 3);

    BigInt total = 0;
    for (const auto& [state, ways] : layer) {
        if (state[row - 1] != col - 1) continue;
        if (row > 1 && state[row - 1] + 1 > state[row - 2]) continue;  // letter not appendable
        State s = state;
        ++s[row - 1];
        Layer tail{{s, 1}};
        for (int t = m; t < n; ++t) tail = advance_ballot(tail, 3);
        BigInt suffix = 0;
        for (const auto& [st, w] : tail) suffix += w;
        total += ways * suffix;
    }
    return total;
}

BigInt closed_form(int k, int n) {
    if (n < 0) return 0;
    const auto un = static_cast<unsigned long>(n);
    switch (k) {
        case 2:
            return central_binomial(un);
        case 3: {
            BigInt sum = 0;
            for (unsigned long i = 0; 2 * i <= un; ++i)
                sum += binomial(un, 2 * i) * catalan(i);
            return sum;
        }
        case 4:
            return catalan((un + 1) / 2) * catalan(un / 2 + 1);
        case 5: {
            Rational sum = 0;
            for (unsigned long i = 0; 2 * i <= un; ++i) {
                Rational term(binomial(un, 2 * i) * catalan(i) * factorial(2 * i + 2),
                              factorial(i + 2) * factorial(i + 3));
                term.canonicalize();
                sum += term;
            }
            sum *= 6;
            sum.canonicalize();
            if (!is_integer(sum))
                throw InternalError("five-row closed form did not evaluate to an integer");
            return sum.get_num();
        }
        default:
            throw ValidationError("closed forms exist for k in {2,3,4,5} only");
    }
}

BigInt count_grounded_level_paths(int n) {
    if (n < 0) return 0;
    // grounded(h, r): paths from height h to 0 in r steps, level only at h=0.
    std::map<std::pair<int, int>, BigInt> memo;
    auto rec = [&](auto&& self, int h, int r) -> BigInt {
        if (h < 0 || h > r) return 0;
        if (r == 0) return 1;
        auto key = std::make_pair(h, r);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt v = self(self, h + 1, r - 1);
        if (h == 0) v += self(self, 0, r - 1);
        else v += self(self, h - 1, r - 1);
        memo.emplace(key, v);
        return v;
    };
    return rec(rec, 0, n);
}

namespace {

void check_cap(int n, int cap) {
    if (n < 0) throw ValidationError("length must be nonnegative");
    if (n > cap)
        throw ResourceLimitError("exhaustive enumeration of length " + std::to_string(n) +
                                 " exceeds the cap of " + std::to_string(cap));
}

}  // namespace

void for_each_motzkin_path(int n, const std::function<void(const MotzkinPath&)>& visit,
                           int cap) {
    check_cap(n, cap);
    std::vector<Step> steps;
    steps.reserve(n);
    auto rec = [&](auto&& self, int h, int rem) -> void {
        if (rem == 0) {
            if (h == 0) visit(MotzkinPath(steps));
            return;
        }
        if (h > rem) return;
        steps.push_back(Step::Up);
        self(self, h + 1, rem - 1);
        steps.pop_back();
        if (h > 0) {
            steps.push_back(Step::Down);
            self(self, h - 1, rem - 1);
            steps.pop_back();
        }
        steps.push_back(Step::Level);
        self(self, h, rem - 1);
        steps.pop_back();
    };
    rec(rec, 0, n);
}

void for_each_word3(int n, const std::function<void(const YamanouchiWord&)>& visit, int cap) {
    check_cap(n, cap);
    std::vector<int> letters;
    letters.reserve(n);
    auto rec = [&](auto&& self, int c1, int c2, int c3, int rem) -> void {
        if (rem == 0) {
            visit(YamanouchiWord(letters, 3));
            return;
        }
        letters.push_back(1);
        self(self, c1 + 1, c2, c3, rem - 1);
        letters.pop_back();
        if (c2 < c1) {
            letters.push_back(2);
            self(self, c1, c2 + 1, c3, rem - 1);
            letters.pop_back();
        }
        if (c3 < c2) {
            letters.push_back(3);
            self(self, c1, c2, c3 + 1, rem - 1);
            letters.pop_back();
        }
    };
    rec(rec, 0, 0, 0, n);
}

std::vector<MotzkinPath> enumerate_paths(int n, int cap) {
    std::vector<MotzkinPath> out;
    for_each_motzkin_path(n, [&](const MotzkinPath& p) { out.push_back(p); }, cap);
    return out;
}

std::vector<YamanouchiWord> enumerate_words3(int n, int cap) {
    std::vector<YamanouchiWord> out;
    for_each_word3(n, [&](const YamanouchiWord& w) { out.push_back(w); }, cap);
    return out;
}

}  // namespace skewtab
