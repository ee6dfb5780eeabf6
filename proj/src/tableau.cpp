#include "skewtab/tableau.hpp"

#include "skewtab/errors.hpp"

#include <algorithm>
#include <vector>

namespace skewtab {

bool is_yamanouchi(const std::vector<int>& letters, int max_letter) {
    std::vector<long> counts;
    for (int c : letters) {
        if (c < 1) return false;
        if (max_letter > 0 && c > max_letter) return false;
        if (static_cast<std::size_t>(c) > counts.size()) counts.resize(c, 0);
        ++counts[c - 1];
        if (c >= 2 && counts[c - 1] > counts[c - 2]) return false;
    }
    return true;
}

namespace {

// Index (1-based) of the first prefix violating the ballot property, or 0.
int first_violation(const std::vector<int>& letters, int max_letter) {
    std::vector<long> counts;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        int c = letters[i];
        if (c < 1) return static_cast<int>(i + 1);
        if (max_letter > 0 && c > max_letter) return static_cast<int>(i + 1);
        if (static_cast<std::size_t>(c) > counts.size()) counts.resize(c, 0);
        ++counts[c - 1];
        if (c >= 2 && counts[c - 1] > counts[c - 2]) return static_cast<int>(i + 1);
    }
    return 0;
}

}  // namespace

YamanouchiWord::YamanouchiWord(std::vector<int> letters, int max_letter)
    : letters_(std::move(letters)) {
    if (int pos = first_violation(letters_, max_letter); pos != 0)
        throw ValidationError("word is not Yamanouchi: prefix of length " +
                              std::to_string(pos) + " violates the ballot condition");
}

YamanouchiWord YamanouchiWord::parse(const std::string& digits, int max_letter) {
    std::vector<int> letters;
    letters.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '1' || ch > '9')
            throw ValidationError(std::string("invalid word character '") + ch + "'");
        letters.push_back(ch - '0');
    }
    return YamanouchiWord(std::move(letters), max_letter);
}

std::string YamanouchiWord::to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (int c : letters_) {
        if (c > 9)
            throw ValidationError("word has a letter > 9 and cannot be digit-serialized");
        out += static_cast<char>('0' + c);
    }
    return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    long n = 0;
    for (const auto& row : rows_) n += static_cast<long>(row.size());

    std::vector<char> seen(n + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty())
            throw ValidationError("row " + std::to_string(r + 1) + " is empty");
        if (r + 1 < rows_.size() && rows_[r + 1].size() > row.size())
            throw ValidationError("row lengths increase from row " + std::to_string(r + 1) +
                                  " to row " + std::to_string(r + 2));
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v < 1 || v > n)
                throw ValidationError("entry " + std::to_string(v) + " is outside 1.." +
                                      std::to_string(n));
            if (seen[v])
                throw ValidationError("entry " + std::to_string(v) + " is repeated");
            seen[v] = 1;
            if (c > 0 && row[c - 1] >= v)
                throw ValidationError("row " + std::to_string(r + 1) +
                                      " is not strictly increasing at column " +
                                      std::to_string(c + 1));
            if (r > 0 && rows_[r - 1][c] >= v)
                throw ValidationError("column " + std::to_string(c + 1) +
                                      " is not strictly increasing at row " +
                                      std::to_string(r + 1));
        }
    }
}

int StandardTableau::entry_count() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

YamanouchiWord chi(const StandardTableau& t) {
    int n = t.entry_count();
    std::vector<int> word(n, 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (int v : t.rows()[r]) word[v - 1] = static_cast<int>(r + 1);
    return YamanouchiWord(std::move(word));
}

StandardTableau chi_inv(const YamanouchiWord& w) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        int letter = w.letters()[i];
        if (static_cast<std::size_t>(letter) > rows.size()) rows.resize(letter);
        rows[letter - 1].push_back(static_cast<int>(i + 1));
    }
    return StandardTableau(std::move(rows));
}

BigInt hook_count(const Partition& mu) {
    long n = mu.total();
    BigInt numerator = factorial(static_cast<unsigned long>(n));
    BigInt hooks = 1;
    for (int r = 1; r <= mu.size(); ++r) {
        for (int c = 1; c <= mu.part(r); ++c) {
            long arm = mu.part(r) - c;
            long leg = mu.column_height(c) - r;
            hooks *= BigInt(arm + leg + 1);
        }
    }
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), hooks.get_mpz_t());
    if (rem != 0)
        throw InternalError("hook-length product does not divide n! for shape " +
                            mu.to_string());
    return q;
}

}  // namespace skewtab
