#include "skewtab/bijection.hpp"

#include "skewtab/errors.hpp"

#include <algorithm>
#include <vector>

namespace skewtab {

int PhiScanner::feed(Step s) {
    switch (s) {
        case Step::Up:
            ++open_ups_;
            return 1;
        case Step::Level:
            if (open_ups_ >= 1) {
                --open_ups_;
                ++pending_triples_;
                return 2;
            }
            return 1;
        case Step::Down:
            if (pending_triples_ >= 1) {
                --pending_triples_;
                return 3;
            }
            if (open_ups_ < 1)
                throw InternalError("down step fed to scanner at height 0");
            --open_ups_;
            return 2;
    }
    throw InternalError("unreachable step kind");
}

std::vector<int> scan_labels(const std::vector<Step>& steps) {
    PhiScanner scan;
    std::vector<int> labels;
    labels.reserve(steps.size());
    for (Step s : steps) labels.push_back(scan.feed(s));
    return labels;
}

LabelTrace label_trace(const MotzkinPath& p) {
    const auto& steps = p.steps();
    const int n = p.size();
    LabelTrace trace;
    trace.labels.assign(n, 0);

    // Surviving original indices, in order; each pass labels and removes the
    // leading level step, the peak closing the initial up-run, or an
    // up/level pair plus the first later down step.
    std::vector<int> surv(n);
    for (int i = 0; i < n; ++i) surv[i] = i;

    while (!surv.empty()) {
        if (steps[surv[0]] == Step::Level) {
            trace.labels[surv[0]] = 1;
            trace.stages.push_back({surv[0] + 1});
            surv.erase(surv.begin());
            continue;
        }
        if (steps[surv[0]] != Step::Up)
            throw InternalError("surviving path starts with a down step");

        std::size_t t = 1;
        while (t < surv.size() && steps[surv[t]] == Step::Up) ++t;
        if (t == surv.size())
            throw InternalError("surviving path has no step after its up-run");

        if (steps[surv[t]] == Step::Down) {
            trace.labels[surv[t - 1]] = 1;
            trace.labels[surv[t]] = 2;
            trace.stages.push_back({surv[t - 1] + 1, surv[t] + 1});
            surv.erase(surv.begin() + t);
            surv.erase(surv.begin() + (t - 1));
        } else {
            std::size_t k = t + 1;
            while (k < surv.size() && steps[surv[k]] != Step::Down) ++k;
            if (k == surv.size())
                throw InternalError("no down step after a level shoulder");
            trace.labels[surv[t - 1]] = 1;
            trace.labels[surv[t]] = 2;
            trace.labels[surv[k]] = 3;
            trace.stages.push_back({surv[t - 1] + 1, surv[t] + 1, surv[k] + 1});
            surv.erase(surv.begin() + k);
            surv.erase(surv.begin() + t);
            surv.erase(surv.begin() + (t - 1));
        }
    }
    return trace;
}

YamanouchiWord phi(const MotzkinPath& p) { return label_trace(p).word(); }

MotzkinPath phi_inv(const YamanouchiWord& w) {
    for (int c : w.letters())
        if (c > 3)
            throw ValidationError("word has letter " + std::to_string(c) +
                                  "; the path bijection needs alphabet {1,2,3}");

    const auto& word = w.letters();
    const int n = w.size();
    std::vector<Step> steps(n, Step::Level);
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;

    auto letter = [&](int pos) { return word[alive[pos]]; };

    while (!alive.empty()) {
        const int m = static_cast<int>(alive.size());

        bool all_ones = true;
        for (int t = 0; t < m; ++t)
            if (letter(t) != 1) { all_ones = false; break; }
        if (all_ones) {
            for (int idx : alive) steps[idx] = Step::Level;
            break;
        }

        bool has_three = false;
        for (int t = 0; t < m; ++t)
            if (letter(t) == 3) { has_three = true; break; }

        if (!has_three) {
            int j = 0;
            while (letter(j) != 2) ++j;
            if (j == 0 || letter(j - 1) != 1)
                throw InternalError("first 2 has no preceding 1");
            steps[alive[j - 1]] = Step::Up;
            steps[alive[j]] = Step::Down;
            alive.erase(alive.begin() + j);
            alive.erase(alive.begin() + (j - 1));
            continue;
        }

        // Letters 3 present: resolve every triple of this round in one pass.
        // Each 3 grabs the nearest free 2 to its left (rightmost 3 first);
        // the free 2s remaining left of a grabbed 2 are closed as up/down
        // pairs against their nearest free 1s; the triple itself then takes
        // the nearest free 1 as its up step.
        std::vector<char> marked(m, 0);
        std::vector<int> threes;
        for (int t = 0; t < m; ++t)
            if (letter(t) == 3) threes.push_back(t);
        const int d = static_cast<int>(threes.size());
        std::vector<int> shoulder(d, -1);

        for (int k = d - 1; k >= 0; --k) {
            int c = threes[k];
            marked[c] = 1;
            int b = -1;
            for (int t = c - 1; t >= 0; --t)
                if (letter(t) == 2 && !marked[t]) { b = t; break; }
            if (b < 0) throw InternalError("letter 3 with no free 2 to its left");
            marked[b] = 1;
            shoulder[k] = b;
        }

        for (int i = 0; i < d; ++i) {
            int b = shoulder[i];
            for (int e = 0; e < b; ++e) {
                if (letter(e) != 2 || marked[e]) continue;
                marked[e] = 1;
                int u = -1;
                for (int t = e - 1; t >= 0; --t)
                    if (letter(t) == 1 && !marked[t]) { u = t; break; }
                if (u < 0) throw InternalError("free 2 with no free 1 to its left");
                marked[u] = 1;
                steps[alive[u]] = Step::Up;
                steps[alive[e]] = Step::Down;
            }
            int a = -1;
            for (int t = b - 1; t >= 0; --t)
                if (letter(t) == 1 && !marked[t]) { a = t; break; }
            if (a < 0) throw InternalError("shoulder 2 with no free 1 to its left");
            marked[a] = 1;
            steps[alive[a]] = Step::Up;
            steps[alive[b]] = Step::Level;
            steps[alive[threes[i]]] = Step::Down;
        }

        std::vector<int> next;
        next.reserve(m);
        for (int t = 0; t < m; ++t)
            if (!marked[t]) next.push_back(alive[t]);
        alive.swap(next);
    }

    // Constructor re-checks that the result is a genuine Motzkin path.
    return MotzkinPath(std::move(steps));
}

}  // namespace skewtab
