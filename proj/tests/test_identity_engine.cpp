#include "skewtab/identity_engine.hpp"

#include "skewtab/bijection.hpp"
#include "skewtab/enumeration.hpp"
#include "skewtab/errors.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <set>

using namespace skewtab;

using ShiftMap = std::map<int, BigInt>;
using ClassMap = std::map<int, long>;

TEST_CASE("canonical filler fills columns first") {
    CHECK(canonical_filler(Partition({2, 1})) == StandardTableau({{1, 3}, {2}}));
    CHECK(canonical_filler(Partition({1})) == StandardTableau({{1}}));
    CHECK(canonical_filler(Partition({2, 2})) == StandardTableau({{1, 3}, {2, 4}}));
    CHECK(canonical_filler(Partition()) == StandardTableau());
    CHECK_THROWS_AS(canonical_filler(Partition({1, 1, 1, 1})), ValidationError);
}

TEST_CASE("forced prefixes") {
    CHECK(forced_prefix(Partition({2, 1})).to_string() == "121");
    CHECK(forced_prefix(Partition({3})).to_string() == "111");
    CHECK(forced_prefix(Partition({2, 2, 1})).to_string() == "12312");
    CHECK(forced_prefix(Partition()).size() == 0);
}

TEST_CASE("prefix classes of the worked example") {
    PrefixClassTable t = calibrate_prefix_classes(Partition({2, 1}));
    CHECK((t.classes == ClassMap{{0, 1}, {1, 2}, {2, 1}}));
    CHECK(t.alphas[0] == std::vector<std::string>{"UDL"});
    CHECK(t.alphas[1] == std::vector<std::string>{"UDU", "ULL"});
    CHECK(t.alphas[2] == std::vector<std::string>{"ULU"});
    CHECK(t.calibration_sizes == std::vector<int>{9, 10});
}

TEST_CASE("prefix classes of a single cell and of the empty shape") {
    PrefixClassTable one = calibrate_prefix_classes(Partition({1}));
    CHECK((one.classes == ClassMap{{0, 1}, {1, 1}}));
    CHECK(one.alphas[0] == std::vector<std::string>{"L"});
    CHECK(one.alphas[1] == std::vector<std::string>{"U"});

    PrefixClassTable empty = calibrate_prefix_classes(Partition());
    CHECK((empty.classes == ClassMap{{0, 1}}));
    CHECK(empty.alphas[0] == std::vector<std::string>{""});
}

TEST_CASE("pruned and exhaustive calibration agree") {
    CalibrateOptions pruned;
    pruned.exhaustive_threshold = 0;  // never enumerate fully
    CalibrateOptions exhaustive;
    exhaustive.force_exhaustive = true;
    exhaustive.enumeration_cap = 16;

    for (const Partition& mu : partitions_in_box(3, 3)) {
        PrefixClassTable a = calibrate_prefix_classes(mu, pruned);
        PrefixClassTable b = calibrate_prefix_classes(mu, exhaustive);
        CHECK_MESSAGE(a.classes == b.classes, "mu = (", mu.to_string(), ")");
        CHECK_MESSAGE(a.alphas == b.alphas, "mu = (", mu.to_string(), ")");
    }
}

TEST_CASE("default calibration sizes cannot witness first parts beyond seven") {
    CHECK_THROWS_AS(calibrate_prefix_classes(Partition({7})), CalibrationError);

    DeriveOptions no_raise;
    no_raise.auto_raise_offsets = false;
    CHECK_THROWS_AS(derive_skew(Partition({7}), no_raise), CalibrationError);

    CalibrateOptions raised;
    raised.offsets = {8, 9};
    PrefixClassTable t = calibrate_prefix_classes(Partition({7}), raised);
    CHECK(t.classes.size() == 8);  // heights 0..7, one ladder prefix each

    // the default derivation raises the sizes by itself
    SkewDerivation d = derive_skew(Partition({7}));
    CHECK(d.classes.calibration_sizes == std::vector<int>{14, 15});
}

TEST_CASE("the skew formula of the worked example") {
    SkewDerivation d = derive_skew(Partition({2, 1}));
    CHECK((d.combo.integer_shifts() == ShiftMap{{-1, 1}, {-3, -1}}));
    CHECK(d.combo.render() == "m(n-1) - m(n-3), n >= 3");
    CHECK(d.verified_from == 3);
    CHECK(d.verified_to == 15);
}

TEST_CASE("skew formulas for trivial shapes") {
    CHECK((derive_skew_combo(Partition()).integer_shifts() == ShiftMap{{0, 1}}));
    CHECK((derive_skew_combo(Partition({1})).integer_shifts() == ShiftMap{{0, 1}}));
    CHECK((derive_skew_combo(Partition({1, 1, 1})).integer_shifts() ==
          ShiftMap{{-3, 1}}));
}

TEST_CASE("every boxed shape derives and verifies") {
    for (const Partition& mu : partitions_in_box(6, 3)) CHECK_NOTHROW(derive_skew(mu));
}

TEST_CASE("derivations far beyond the enumeration scale") {
    // completions at the raised calibration sizes dwarf the walk budget, so
    // the classes come from counted completions; the sweep still verifies.
    SkewDerivation ladder = derive_skew(Partition({20}));
    CHECK(ladder.classes.classes.size() == 21);  // heights 0..20, one prefix each
    CHECK(eval_combo(ladder.combo, 26) == count_skew_bruteforce(Partition({20}), 6));

    SkewDerivation mixed = derive_skew(Partition({12, 7, 3}));
    CHECK(eval_combo(mixed.combo, 30) == count_skew_bruteforce(Partition({12, 7, 3}), 8));

    // forcing the tiniest budget changes nothing about the published table
    DeriveOptions tiny;
    tiny.calibrate.completion_budget = 0;
    SkewDerivation a = derive_skew(Partition({6, 3}), tiny);
    SkewDerivation b = derive_skew(Partition({6, 3}));
    CHECK(a.classes.classes == b.classes.classes);
    CHECK(a.classes.alphas == b.classes.alphas);
    CHECK(a.combo == b.combo);
}

TEST_CASE("exact fitting reproduces the known coefficients") {
    std::vector<std::pair<int, BigInt>> samples;
    for (int n = 4; n <= 10; ++n)
        samples.emplace_back(n, count_skew_bruteforce(Partition({2, 1}), n - 3));
    MotzkinCombo fitted = fit_combo(samples, {-1, -2, -3});
    CHECK((fitted.integer_shifts() == ShiftMap{{-1, 1}, {-3, -1}}));

    std::vector<std::pair<int, BigInt>> plain;
    for (int n = 0; n <= 4; ++n) plain.emplace_back(n, motzkin(n));
    CHECK((fit_combo(plain, {0}).integer_shifts() == ShiftMap{{0, 1}}));

    for (int i = 2; i <= 5; ++i) {
        std::vector<std::pair<int, BigInt>> xs;
        for (int n = i; n <= i + 5; ++n) xs.emplace_back(n, x_count(i, 1, n));
        CHECK((fit_combo(xs, {1 - i, -i}).integer_shifts() ==
              ShiftMap{{1 - i, 1}, {-i, -1}}));
    }
}

TEST_CASE("fitting failure modes") {
    std::vector<std::pair<int, BigInt>> bad;
    for (int n = 2; n <= 8; ++n) bad.emplace_back(n, motzkin(n) + 1);
    CHECK_THROWS_AS(fit_combo(bad, {0, -1}), FitInconsistentError);

    std::vector<std::pair<int, BigInt>> few{{3, motzkin(3)}, {4, motzkin(4)}};
    CHECK_THROWS_AS(fit_combo(few, {0}), FitUnderdeterminedError);

    // identical equations cannot pin two coefficients
    std::vector<std::pair<int, BigInt>> flat(6, {0, BigInt(1)});
    CHECK_THROWS_AS(fit_combo(flat, {0, -1}), FitUnderdeterminedError);
}

TEST_CASE("fitting independently confirms every derivation up to first part four") {
    for (const Partition& mu : partitions_in_box(4, 3)) {
        const int p = static_cast<int>(mu.total());
        SkewDerivation d = derive_skew(mu);
        std::vector<int> shifts;
        for (int s = 0; s >= -(p + 1); --s) shifts.push_back(s);
        std::vector<std::pair<int, BigInt>> samples;
        for (int n = p; n <= p + static_cast<int>(shifts.size()) + 3; ++n)
            samples.emplace_back(n, count_skew_bruteforce(mu, n - p));
        MotzkinCombo fitted = fit_combo(samples, shifts);
        CHECK_MESSAGE(fitted.integer_shifts() == d.combo.integer_shifts(),
                      "mu = (", mu.to_string(), ")");
    }
}

TEST_CASE("the count does not depend on which filler is fixed") {
    for (const Partition& mu : partitions_in_box(4, 3)) {
        const int p = static_cast<int>(mu.total());
        if (p > 4 || p == 0) continue;
        // every standard filling of mu, as a forced word prefix
        std::vector<std::vector<int>> prefixes;
        for (const auto& rows : oracle::all_syt(p, 3)) {
            StandardTableau t(rows);
            if (!(t.shape() == mu)) continue;
            prefixes.push_back(chi(t).letters());
        }
        REQUIRE(!prefixes.empty());
        for (int m = 0; m <= 6; ++m) {
            BigInt expected = count_skew_bruteforce(mu, m);
            for (const auto& prefix : prefixes) {
                long matches = 0;
                for_each_word3(p + m, [&](const YamanouchiWord& w) {
                    if (std::equal(prefix.begin(), prefix.end(), w.letters().begin()))
                        ++matches;
                });
                CHECK_MESSAGE(BigInt(matches) == expected,
                              "mu = (", mu.to_string(), "), m = ", m);
            }
        }
    }
}

TEST_CASE("entry formulas: fixed small cells") {
    EntryDerivation corner = derive_entry(1, 1, 1);
    CHECK((corner.combo.integer_shifts() == ShiftMap{{0, 1}}));
    CHECK(corner.terms.size() == 1);
    CHECK(corner.terms[0].first == Partition({1}));

    EntryDerivation below = derive_entry(2, 1, 2);
    CHECK(below.terms.size() == 1);
    CHECK(below.terms[0].first == Partition({1, 1}));
    CHECK(below.combo == derive_skew_combo(Partition({1, 1})));

    EntryDerivation right = derive_entry(1, 2, 3);
    CHECK(right.terms.size() == 1);
    CHECK(right.terms[0].first == Partition({2, 1}));
    CHECK(right.terms[0].second == 1);
    CHECK(right.combo == derive_skew_combo(Partition({2, 1})));

    EntryDerivation infeasible = derive_entry(3, 1, 2);
    CHECK(infeasible.terms.empty());
    CHECK(infeasible.combo.shifts.empty());

    CHECK_THROWS_AS(derive_entry(4, 1, 1), ValidationError);
}

TEST_CASE("entry formulas verify for all feasible cells with small values") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= m; ++j) CHECK_NOTHROW(derive_entry(i, j, m));
}

TEST_CASE("catalog sweeps, sequentially and in parallel") {
    CatalogReport zero = catalog(0);
    CHECK(zero.entries.size() == 1);
    CHECK((zero.entries[0].derivation->combo.integer_shifts() == ShiftMap{{0, 1}}));

    CatalogReport two = catalog(2);
    CHECK(two.failures == 0);
    CHECK(two.entries.size() == 10);  // partitions in a 2x3 box
    bool found = false;
    for (const auto& e : two.entries)
        if (e.mu == Partition({2, 1})) {
            found = true;
            CHECK((e.derivation->combo.integer_shifts() ==
                  ShiftMap{{-1, 1}, {-3, -1}}));
        }
    CHECK(found);
    CHECK(two.to_markdown().find("m(n-1) - m(n-3)") != std::string::npos);

    CatalogOptions parallel;
    parallel.parallel = 4;
    CatalogReport par = catalog(2, parallel);
    REQUIRE(par.entries.size() == two.entries.size());
    for (std::size_t k = 0; k < par.entries.size(); ++k) {
        CHECK(par.entries[k].mu == two.entries[k].mu);
        CHECK(par.entries[k].derivation->combo == two.entries[k].derivation->combo);
    }
}

TEST_CASE("catalog raises calibration sizes beyond the default domain") {
    CatalogReport report = catalog(7);
    CHECK(report.failures == 0);
    for (const auto& e : report.entries)
        if (e.mu == Partition({7}))
            CHECK(e.derivation->classes.calibration_sizes == std::vector<int>{14, 15});
}
