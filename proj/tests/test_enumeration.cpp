#include "skewtab/enumeration.hpp"

#include "skewtab/errors.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace skewtab;

TEST_CASE("motzkin numbers: pinned values and independent routes") {
    CHECK(motzkin(0) == 1);
    CHECK(motzkin(5) == 21);
    CHECK(motzkin(10) == 2188);

    for (int n = 0; n <= 12; ++n)
        CHECK_MESSAGE(motzkin(n) == BigInt(static_cast<long>(oracle::motzkin_paths(n).size())),
                      "n = ", n);

    // (n+2) m_n = (2n+1) m_{n-1} + 3(n-1) m_{n-2}, a different recurrence
    // than the convolution the implementation uses.
    for (int n = 2; n <= 200; ++n)
        CHECK(BigInt(n + 2) * motzkin(n) ==
              BigInt(2 * n + 1) * motzkin(n - 1) + BigInt(3 * (n - 1)) * motzkin(n - 2));
}

TEST_CASE("x_count: pinned values, boundary, recurrence") {
    CHECK(x_count(0, 0, 6) == 51);
    CHECK(x_count(3, 1, 7) == 12);
    CHECK(x_count(2, 2, 4) == 1);
    CHECK(x_count(5, 0, 3) == 0);  // start beyond the endpoint
    CHECK(x_count(2, 5, 4) == 0);  // cannot descend in time

    for (int n = 0; n <= 20; ++n)
        for (int i = 0; i <= n; ++i) {
            CHECK(x_count(i, 0, n) == motzkin(n - i));
            for (int j = 0; j <= i; ++j) {
                // first-step split, the defining recurrence
                if (n - i >= 1) {
                    BigInt expect = x_count(i + 1, j, n) + x_count(i + 1, j + 1, n);
                    if (j > 0) expect += x_count(i + 1, j - 1, n);
                    CHECK_MESSAGE(x_count(i, j, n) == expect, i, " ", j, " ", n);
                }
                if (j == 1)
                    CHECK(x_count(i, 1, n) == motzkin(n - i + 1) - motzkin(n - i));
                if (j == 2)
                    CHECK(x_count(i, 2, n) == motzkin(n - i + 2) - 2 * motzkin(n - i + 1));
            }
        }
}

TEST_CASE("strip counts") {
    CHECK(count_strip(3, 4) == 9);
    CHECK(count_strip(2, 4) == 6);
    CHECK(count_strip(4, 3) == 4);
    CHECK(count_strip(1, 7) == 1);
    for (int n = 0; n <= 14; ++n) CHECK(count_strip(3, n) == motzkin(n));
    CHECK_THROWS_AS(count_strip(0, 3), ValidationError);
}

TEST_CASE("skew strip brute force") {
    CHECK(count_skew_bruteforce(Partition({2, 1}), 2) == 7);
    CHECK(count_skew_bruteforce(Partition({1}), 2) == 4);
    for (int m = 0; m <= 10; ++m) CHECK(count_skew_bruteforce(Partition(), m) == motzkin(m));
    CHECK_THROWS_AS(count_skew_bruteforce(Partition({1, 1, 1, 1}), 2), ValidationError);

    // the headline identity, far past the verification sweep
    for (int n = 4; n <= 25; ++n)
        CHECK_MESSAGE(count_skew_bruteforce(Partition({2, 1}), n - 3) ==
                          motzkin(n - 1) - motzkin(n - 3),
                      "n = ", n);
}

TEST_CASE("entry-restricted counts") {
    CHECK(count_entry_restricted(1, 1, 1, 0) == 0);  // no tableau, no (1,1) cell
    for (int n = 1; n <= 12; ++n) CHECK(count_entry_restricted(1, 1, 1, n) == motzkin(n));
    CHECK(count_entry_restricted(2, 1, 2, 3) == 2);  // words 121, 123
    CHECK(count_entry_restricted(1, 2, 2, 3) == 2);  // words 112, 113
    CHECK(count_entry_restricted(3, 1, 2, 5) == 0);  // infeasible, not an error
    CHECK(count_entry_restricted(1, 4, 2, 9) == 0);
    CHECK_THROWS_AS(count_entry_restricted(4, 1, 1, 3), ValidationError);

    // every tableau places m somewhere feasible
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= n; ++m) {
            BigInt total = 0;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= m; ++j) total += count_entry_restricted(i, j, m, n);
            CHECK_MESSAGE(total == motzkin(n), "n = ", n, ", m = ", m);
        }
}

TEST_CASE("closed forms agree with the ballot DP") {
    CHECK(closed_form(4, 3) == 4);
    CHECK(closed_form(5, 2) == 2);
    CHECK(closed_form(3, 5) == 21);
    CHECK_THROWS_AS(closed_form(6, 3), ValidationError);
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 30; ++n)
            CHECK_MESSAGE(closed_form(k, n) == count_strip(k, n), "k = ", k, ", n = ", n);
}

TEST_CASE("grounded-level paths") {
    CHECK(count_grounded_level_paths(0) == 1);
    CHECK(count_grounded_level_paths(1) == 1);
    CHECK(count_grounded_level_paths(4) == 6);
    for (int n = 0; n <= 30; ++n)
        CHECK(count_grounded_level_paths(n) == central_binomial(n));

    // direct listing at n = 4
    std::set<std::string> grounded;
    for_each_motzkin_path(4, [&](const MotzkinPath& p) {
        int h = 0;
        bool ok = true;
        for (Step s : p.steps()) {
            if (s == Step::Level && h != 0) ok = false;
            h += height_delta(s);
        }
        if (ok) grounded.insert(p.to_string());
    });
    CHECK(grounded == std::set<std::string>{"LLLL", "LLUD", "LUDL", "UDLL", "UDUD", "UUDD"});
}

TEST_CASE("exhaustive enumeration streams and caps") {
    CHECK(enumerate_paths(0).size() == 1);
    CHECK(enumerate_paths(0)[0].size() == 0);

    std::set<std::string> three;
    for (const auto& p : enumerate_paths(3)) three.insert(p.to_string());
    CHECK(three == std::set<std::string>{"LLL", "LUD", "UDL", "ULD"});

    CHECK(enumerate_paths(5).size() == 21);
    CHECK(enumerate_words3(5).size() == 21);

    CHECK_THROWS_AS(enumerate_paths(17), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_words3(17), ResourceLimitError);
    CHECK_NOTHROW(enumerate_paths(17, 17));  // raised cap

    // no duplicates at moderate size
    std::set<std::string> seen;
    long total = 0;
    for_each_motzkin_path(10, [&](const MotzkinPath& p) {
        seen.insert(p.to_string());
        ++total;
    });
    CHECK(total == 2188);
    CHECK(seen.size() == 2188);
}
