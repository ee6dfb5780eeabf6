#include "skewtab/identity_engine.hpp"

#include "skewtab/bijection.hpp"
#include "skewtab/enumeration.hpp"
#include "skewtab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace skewtab {

StandardTableau canonical_filler(const Partition& mu) {
    if (mu.size() > 3)
        throw ValidationError("canonical filler needs a partition with at most 3 parts");
    std::vector<std::vector<int>> rows(mu.size());
    for (int r = 1; r <= mu.size(); ++r) rows[r - 1].resize(mu.part(r));
    int next = 1;
    for (int c = 1; c <= mu.part(1); ++c)
        for (int r = 1; r <= mu.column_height(c); ++r) rows[r - 1][c - 1] = next++;
    return StandardTableau(std::move(rows));
}

YamanouchiWord forced_prefix(const Partition& mu) {
    if (mu.empty()) return YamanouchiWord();
    return chi(canonical_filler(mu));
}

namespace {

struct ClassAccumulator {
    std::map<int, std::set<std::string>> alphas_by_height;
    BigInt matching_paths = 0;

    void record(const std::vector<Step>& steps, int prefix_len) {
        std::vector<Step> alpha(steps.begin(), steps.begin() + prefix_len);
        int h = 0;
        for (Step s : alpha) h += height_delta(s);
        alphas_by_height[h].insert(steps_to_string(alpha));
        ++matching_paths;
    }
};

bool word_has_prefix(const YamanouchiWord& w, const std::vector<int>& prefix) {
    if (w.letters().size() < prefix.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), w.letters().begin());
}

// Enumerate every Motzkin path of length n0 and keep those whose label word
// begins with `prefix`.
void collect_exhaustive(int n0, const std::vector<int>& prefix, int cap, ClassAccumulator& acc) {
    for_each_motzkin_path(
        n0,
        [&](const MotzkinPath& p) {
            if (word_has_prefix(phi(p), prefix)) acc.record(p.steps(), static_cast<int>(prefix.size()));
        },
        cap);
}

// Every step prefix whose streaming labels equal `prefix`, with its end
// height. The label of a prefix does not depend on the continuation, so this
// is exactly the set of openings of matching paths of any sufficient length.
std::vector<std::pair<std::string, int>> matching_prefixes(const std::vector<int>& prefix) {
    std::vector<std::pair<std::string, int>> out;
    const int p = static_cast<int>(prefix.size());
    std::vector<Step> steps;
    steps.reserve(p);
    auto rec = [&](auto&& self, PhiScanner scan, int h, int depth) -> void {
        if (depth == p) {
            out.emplace_back(steps_to_string(steps), h);
            return;
        }
        for (Step s : {Step::Up, Step::Down, Step::Level}) {
            if (s == Step::Down && h == 0) continue;
            PhiScanner next = scan;
            if (next.feed(s) != prefix[depth]) continue;
            steps.push_back(s);
            self(self, next, h + height_delta(s), depth + 1);
            steps.pop_back();
        }
    };
    rec(rec, PhiScanner(), 0, 0);
    return out;
}

// Prefix-pruned collection at one calibration size. While the number of
// matching paths fits the budget they are walked one by one and each is
// re-checked against the multi-pass labeling; beyond the budget the
// completions of every prefix are counted through x_count instead.
void collect_pruned(int n0, const std::vector<int>& prefix, long budget,
                    ClassAccumulator& acc) {
    const int p = static_cast<int>(prefix.size());
    auto alphas = matching_prefixes(prefix);

    BigInt total = 0;
    for (const auto& [alpha, h] : alphas) total += x_count(p, h, n0);

    if (total <= BigInt(budget)) {
        for (const auto& [alpha, h] : alphas) {
            std::vector<Step> steps;
            for (char c : alpha) steps.push_back(static_cast<Step>(c));
            auto rec = [&](auto&& self, int height, int depth) -> void {
                if (depth == n0) {
                    if (height != 0) return;
                    MotzkinPath path(steps);
                    if (!word_has_prefix(phi(path), prefix))
                        throw InternalError(
                            "pruned calibration kept a path whose labels diverge: " +
                            path.to_string());
                    acc.record(steps, p);
                    return;
                }
                if (height > n0 - depth) return;  // cannot come back down in time
                for (Step s : {Step::Up, Step::Down, Step::Level}) {
                    if (s == Step::Down && height == 0) continue;
                    steps.push_back(s);
                    self(self, height + height_delta(s), depth + 1);
                    steps.pop_back();
                }
            };
            rec(rec, h, p);
        }
        return;
    }

    for (const auto& [alpha, h] : alphas) {
        BigInt completions = x_count(p, h, n0);
        if (completions == 0) continue;  // this size cannot witness the class
        acc.alphas_by_height[h].insert(alpha);
        acc.matching_paths += completions;
    }
}

std::string classes_string(const std::map<int, long>& classes) {
    std::string out = "{";
    for (const auto& [h, m] : classes) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(h) + ": " + std::to_string(m);
    }
    return out + "}";
}

}  // namespace

PrefixClassTable calibrate_prefix_classes(const Partition& mu, const CalibrateOptions& opts) {
    if (mu.size() > 3)
        throw ValidationError("prefix calibration needs a partition with at most 3 parts");
    if (opts.offsets.size() < 2)
        throw ValidationError("calibration needs at least two sizes to compare");
    const int p = static_cast<int>(mu.total());
    if (p > opts.enumeration_cap - 2)
        throw ResourceLimitError("|mu| = " + std::to_string(p) +
                                 " exceeds the enumeration cap minus 2");

    const std::vector<int> prefix = forced_prefix(mu).letters();

    PrefixClassTable table;
    table.mu = mu;
    table.prefix_word = forced_prefix(mu);

    std::vector<ClassAccumulator> runs;
    for (int off : opts.offsets) {
        const int n0 = p + off;
        ClassAccumulator acc;
        if (opts.force_exhaustive || n0 <= opts.exhaustive_threshold)
            collect_exhaustive(n0, prefix, opts.enumeration_cap, acc);
        else
            collect_pruned(n0, prefix, opts.completion_budget, acc);

        // Every prefix class must account for exactly x_count extensions.
        BigInt predicted = 0;
        for (const auto& [h, alphas] : acc.alphas_by_height)
            predicted += BigInt(static_cast<long>(alphas.size())) * x_count(p, h, n0);
        if (predicted != acc.matching_paths)
            throw CalibrationError(
                "class multiplicities for mu = (" + mu.to_string() + ") predict " +
                to_decimal(predicted) + " matching paths of length " + std::to_string(n0) +
                " but enumeration found " + to_decimal(acc.matching_paths));

        table.calibration_sizes.push_back(n0);
        runs.push_back(std::move(acc));
    }

    for (std::size_t k = 1; k < runs.size(); ++k) {
        if (runs[k].alphas_by_height != runs[0].alphas_by_height) {
            std::map<int, long> a, b;
            for (const auto& [h, s] : runs[0].alphas_by_height) a[h] = static_cast<long>(s.size());
            for (const auto& [h, s] : runs[k].alphas_by_height) b[h] = static_cast<long>(s.size());
            throw CalibrationError("prefix classes for mu = (" + mu.to_string() +
                                   ") differ between calibration sizes " +
                                   std::to_string(table.calibration_sizes[0]) + " and " +
                                   std::to_string(table.calibration_sizes[k]) + ": " +
                                   classes_string(a) + " vs " + classes_string(b));
        }
    }

    for (const auto& [h, alphas] : runs[0].alphas_by_height) {
        table.classes[h] = static_cast<long>(alphas.size());
        table.alphas[h] = std::vector<std::string>(alphas.begin(), alphas.end());
    }
    return table;
}

SkewDerivation derive_skew(const Partition& mu, const DeriveOptions& opts) {
    SkewDerivation out;
    out.mu = mu;
    CalibrateOptions copts = opts.calibrate;
    if (opts.auto_raise_offsets && !mu.empty()) {
        const int first = mu.parts().front();
        for (std::size_t k = 0; k < copts.offsets.size(); ++k)
            copts.offsets[k] = std::max<int>(copts.offsets[k], first + static_cast<int>(k));
    }
    out.classes = calibrate_prefix_classes(mu, copts);

    const int p = static_cast<int>(mu.total());
    for (const auto& [h, mult] : out.classes.classes)
        out.combo.add_scaled(x_formula(p, h), Rational(mult));

    out.verified_from = p;
    out.verified_to = p + std::max(opts.verify_points, 1) - 1;
    for (int n = out.verified_from; n <= out.verified_to; ++n) {
        BigInt predicted = eval_combo(out.combo, n);
        BigInt actual = count_skew_bruteforce(mu, n - p);
        if (predicted != actual)
            throw VerificationError("derived formula for mu = (" + mu.to_string() +
                                    ") disagrees with brute force at n = " + std::to_string(n) +
                                    ": formula " + to_decimal(predicted) + ", brute force " +
                                    to_decimal(actual));
    }
    return out;
}

MotzkinCombo derive_skew_combo(const Partition& mu, const DeriveOptions& opts) {
    return derive_skew(mu, opts).combo;
}

MotzkinCombo fit_combo(const std::vector<std::pair<int, BigInt>>& values,
                       const std::vector<int>& shifts) {
    const std::size_t cols = shifts.size();
    if (cols == 0) throw ValidationError("fit needs at least one shift");
    if (values.size() < cols + 2)
        throw FitUnderdeterminedError("need at least " + std::to_string(cols + 2) +
                                      " samples for " + std::to_string(cols) + " shifts, got " +
                                      std::to_string(values.size()));

    std::vector<int> sorted_shifts = shifts;
    std::sort(sorted_shifts.begin(), sorted_shifts.end());
    sorted_shifts.erase(std::unique(sorted_shifts.begin(), sorted_shifts.end()),
                        sorted_shifts.end());
    if (sorted_shifts.size() != cols) throw ValidationError("duplicate shifts in fit");

    auto coefficient = [&](int n, int s) -> Rational {
        return n + s < 0 ? Rational(0) : Rational(motzkin(n + s));
    };

    // Augmented matrix, exact rational Gauss-Jordan.
    std::vector<std::vector<Rational>> m;
    for (const auto& [n, count] : values) {
        std::vector<Rational> row;
        row.reserve(cols + 1);
        for (int s : sorted_shifts) row.push_back(coefficient(n, s));
        row.push_back(Rational(count));
        m.push_back(std::move(row));
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][col];
        for (auto& v : m[rank]) {
            v /= inv;
            v.canonicalize();
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c2 = 0; c2 <= cols; ++c2) {
                m[r][c2] -= f * m[rank][c2];
                m[r][c2].canonicalize();
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    for (std::size_t r = rank; r < m.size(); ++r)
        if (m[r][cols] != 0)
            throw FitInconsistentError("samples admit no exact linear combination");
    if (rank < cols)
        throw FitUnderdeterminedError("samples pin only " + std::to_string(rank) + " of " +
                                      std::to_string(cols) + " coefficients");

    std::vector<Rational> solution(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) solution[pivot_cols[r]] = m[r][cols];

    MotzkinCombo combo;
    for (std::size_t c = 0; c < cols; ++c) {
        Rational v = solution[c];
        v.canonicalize();
        if (v != 0) combo.shifts[sorted_shifts[c]] = v;
    }
    combo.recompute_n_min();

    // Surplus equations re-checked against the assembled combo.
    for (const auto& [n, count] : values) {
        Rational lhs = 0;
        for (const auto& [s, a] : combo.shifts) lhs += a * coefficient(n, s);
        if (lhs != Rational(count))
            throw FitInconsistentError("fitted combo fails the sample at n = " +
                                       std::to_string(n));
    }
    return combo;
}

namespace {

bool has_removable_corner(const Partition& mu, int row, int col) {
    if (mu.part(row) != col) return false;
    return mu.part(row + 1) <= col - 1;
}

Partition remove_corner(const Partition& mu, int row) {
    std::vector<int> parts = mu.parts();
    parts[row - 1] -= 1;
    return Partition(std::move(parts));
}

}  // namespace

EntryDerivation derive_entry(int row, int col, int value, const DeriveOptions& opts) {
    if (row < 1 || row > 3) throw ValidationError("row must be in 1..3");
    if (col < 1) throw ValidationError("column must be positive");
    if (value < 1) throw ValidationError("entry value must be positive");

    EntryDerivation out;
    out.row = row;
    out.col = col;
    out.value = value;

    for (const Partition& mu : partitions_of(value, 3)) {
        if (!has_removable_corner(mu, row, col)) continue;
        BigInt fillings = hook_count(remove_corner(mu, row));
        out.terms.emplace_back(mu, fillings);
        out.combo.add_scaled(derive_skew_combo(mu, opts), Rational(fillings));
    }

    out.verified_from = value;
    out.verified_to = value + std::max(opts.verify_points, 1) - 1;
    for (int n = out.verified_from; n <= out.verified_to; ++n) {
        BigInt predicted = eval_combo(out.combo, n);
        BigInt actual = count_entry_restricted(row, col, value, n);
        if (predicted != actual)
            throw VerificationError("entry formula for cell (" + std::to_string(row) + "," +
                                    std::to_string(col) + "), value " + std::to_string(value) +
                                    " disagrees with brute force at n = " + std::to_string(n) +
                                    ": formula " + to_decimal(predicted) + ", brute force " +
                                    to_decimal(actual));
    }
    return out;
}

MotzkinCombo derive_entry_combo(int row, int col, int value, const DeriveOptions& opts) {
    return derive_entry(row, col, value, opts).combo;
}

CatalogReport catalog(int mu_max, const CatalogOptions& opts) {
    if (mu_max < 0) throw ValidationError("mu_max must be nonnegative");

    std::vector<Partition> mus = partitions_in_box(mu_max, 3);
    std::sort(mus.begin(), mus.end());

    CatalogReport report;
    report.mu_max = mu_max;
    report.entries.resize(mus.size());

    auto derive_one = [&](std::size_t idx) {
        const Partition& mu = mus[idx];
        CatalogEntry& entry = report.entries[idx];
        entry.mu = mu;
        try {
            entry.derivation = derive_skew(mu, opts.derive);
        } catch (const Error& e) {
            entry.error = e.what();
        }
    };

    const int workers = std::max(1, opts.parallel);
    if (workers == 1 || mus.size() <= 1) {
        for (std::size_t i = 0; i < mus.size(); ++i) derive_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= mus.size()) return;
                    derive_one(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    for (const auto& e : report.entries)
        if (!e.error.empty()) ++report.failures;
    return report;
}

std::string CatalogReport::to_markdown() const {
    std::ostringstream os;
    os << "| mu | formula | n_min | verified n | status |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& e : entries) {
        os << "| (" << e.mu.to_string() << ") | ";
        if (e.derivation) {
            os << e.derivation->combo.render() << " | " << e.derivation->combo.n_min << " | "
               << e.derivation->verified_from << ".." << e.derivation->verified_to << " | ok |\n";
        } else {
            os << "- | - | - | " << e.error << " |\n";
        }
    }
    return os.str();
}

}  // namespace skewtab
