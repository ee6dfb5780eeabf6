#include "skewtab/bijection.hpp"

#include "skewtab/enumeration.hpp"
#include "skewtab/errors.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace skewtab;

namespace {
const char* kWorkedPath = "UUDLLUUDDLD";
const char* kWorkedWord = "11221113223";
}  // namespace

TEST_CASE("path validation pinpoints the first offence") {
    CHECK_THROWS_WITH_AS(MotzkinPath::parse("UDD"), doctest::Contains("after step 3"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(MotzkinPath::parse("UU"), doctest::Contains("height 2"),
                         ValidationError);
    CHECK_THROWS_AS(MotzkinPath::parse("UXD"), ValidationError);
    CHECK(MotzkinPath::parse("").size() == 0);
}

TEST_CASE("phi labels the basic shapes") {
    CHECK(phi(MotzkinPath::parse("L")).to_string() == "1");
    CHECK(phi(MotzkinPath::parse("UD")).to_string() == "12");
    CHECK(phi(MotzkinPath::parse("ULD")).to_string() == "123");
    CHECK(phi(MotzkinPath::parse("UUDD")).to_string() == "1122");
    CHECK(phi(MotzkinPath::parse(kWorkedPath)).to_string() == kWorkedWord);
    CHECK(phi(MotzkinPath()).size() == 0);
}

TEST_CASE("phi_inv recovers the basic paths") {
    CHECK(phi_inv(YamanouchiWord::parse("1")).to_string() == "L");
    CHECK(phi_inv(YamanouchiWord::parse("12")).to_string() == "UD");
    CHECK(phi_inv(YamanouchiWord::parse(kWorkedWord)).to_string() == kWorkedPath);
    CHECK_THROWS_WITH_AS(phi_inv(YamanouchiWord({1, 2, 3, 4})), doctest::Contains("letter 4"),
                         ValidationError);
}

TEST_CASE("label_trace records the passes") {
    LabelTrace t = label_trace(MotzkinPath::parse("UUDD"));
    CHECK(t.word().to_string() == "1122");
    CHECK(t.stages == std::vector<std::vector<int>>{{2, 3}, {1, 4}});

    t = label_trace(MotzkinPath::parse("L"));
    CHECK(t.stages == std::vector<std::vector<int>>{{1}});

    t = label_trace(MotzkinPath::parse("LL"));
    CHECK(t.word().to_string() == "11");
    CHECK(t.stages == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("label_trace stages partition the steps and follow one pass shape each") {
    for (int n = 0; n <= 9; ++n) {
        long bad = 0;
        for_each_motzkin_path(n, [&](const MotzkinPath& p) {
            LabelTrace t = label_trace(p);
            std::set<int> covered;
            for (const auto& stage : t.stages) {
                if (stage.size() < 1 || stage.size() > 3) ++bad;
                for (std::size_t k = 0; k < stage.size(); ++k) {
                    covered.insert(stage[k]);
                    // within a pass the labels read 1, 12, or 123
                    if (t.labels[stage[k] - 1] != static_cast<int>(k + 1)) ++bad;
                }
            }
            if (static_cast<int>(covered.size()) != n) ++bad;
        });
        CHECK_MESSAGE(bad == 0, "n = ", n);
    }
}

TEST_CASE("phi is a bijection onto the three-letter ballot words, exhaustively") {
    for (int n = 0; n <= 14; ++n) {
        long bad_scan = 0, bad_roundtrip = 0, bad_word = 0;
        std::set<std::string> images;
        for_each_motzkin_path(n, [&](const MotzkinPath& p) {
            YamanouchiWord w = phi(p);
            if (!is_yamanouchi(w.letters(), 3)) ++bad_word;
            if (scan_labels(p.steps()) != w.letters()) ++bad_scan;
            images.insert(w.to_string());
            if (!(phi_inv(w) == p)) ++bad_roundtrip;
        });
        CHECK_MESSAGE(bad_word == 0, "n = ", n);
        CHECK_MESSAGE(bad_scan == 0, "streaming labels diverge at n = ", n);
        CHECK_MESSAGE(bad_roundtrip == 0, "n = ", n);
        CHECK_MESSAGE(BigInt(static_cast<long>(images.size())) == motzkin(n),
                      "image count at n = ", n);

        long bad_back = 0;
        long words = 0;
        for_each_word3(n, [&](const YamanouchiWord& w) {
            ++words;
            MotzkinPath p = phi_inv(w);  // constructor validates the path
            if (!(phi(p) == w)) ++bad_back;
        });
        CHECK_MESSAGE(bad_back == 0, "n = ", n);
        CHECK_MESSAGE(BigInt(words) == motzkin(n), "n = ", n);
    }
}

TEST_CASE("paths whose word starts 121 begin with one of four step prefixes") {
    const std::set<std::string> expected{"UDL", "UDU", "ULL", "ULU"};
    for (int n = 3; n <= 12; ++n) {
        long bad = 0;
        for_each_motzkin_path(n, [&](const MotzkinPath& p) {
            const YamanouchiWord w = phi(p);
            const auto& letters = w.letters();
            bool starts121 = letters[0] == 1 && letters[1] == 2 && letters[2] == 1;
            std::string head = p.to_string().substr(0, 3);
            if (starts121 != (expected.count(head) > 0)) ++bad;
        });
        CHECK_MESSAGE(bad == 0, "n = ", n);
    }
}

TEST_CASE("scanner state tracks the path height") {
    PhiScanner scan;
    const MotzkinPath worked = MotzkinPath::parse(kWorkedPath);
    for (Step s : worked.steps()) scan.feed(s);
    CHECK(scan.height() == 0);
    CHECK(scan.open_ups() == 0);
    CHECK(scan.pending_triples() == 0);
}
