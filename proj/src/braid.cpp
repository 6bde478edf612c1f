#include "burau/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace burau {

namespace {

void check_strings(int strings) {
    if (strings < 2) throw std::invalid_argument("a braid needs at least 2 strings");
}

void check_letter(int letter, int strings, std::size_t position) {
    const int index = letter < 0 ? -letter : letter;
    if (index < 1 || index > strings - 1)
        throw std::out_of_range("generator index " + std::to_string(letter) + " out of range for " +
                                std::to_string(strings) + " strings (valid 1.." +
                                std::to_string(strings - 1) + ", at position " +
                                std::to_string(position + 1) + ")");
}

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    // INT := "-"? [1-9][0-9]*
    int read_int() {
        skip_ws();
        const std::size_t start = pos;
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '1' || text[pos] > '9')
            throw ParseError("expected integer", start);
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) throw ParseError("integer too large", start);
            ++pos;
        }
        return static_cast<int>(negative ? -value : value);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
};

}  // namespace

BraidWord parse_braid_word(const std::string& text, int strings) {
    check_strings(strings);
    BraidWord word{strings, {}};
    Lexer lex{text};
    while (!lex.done()) {
        const std::size_t term_start = lex.pos;
        if (lex.text[lex.pos] == 'b') {
            ++lex.pos;
            lex.expect('[');
            BlockBraidTerm term;
            term.start = lex.read_int();
            lex.expect(',');
            term.over_count = lex.read_int();
            lex.expect(',');
            term.under_count = lex.read_int();
            lex.expect(']');
            lex.skip_ws();
            if (lex.pos < lex.text.size() && lex.text[lex.pos] == '^') {
                ++lex.pos;
                term.power = lex.read_int();
            }
            if (term.start < 1 || term.over_count < 1 || term.under_count < 1)
                throw ParseError("block term fields must be positive", term_start);
            if (term.power == 0) throw ParseError("block power must be nonzero", term_start);
            if (term.start + term.over_count + term.under_count - 1 > strings)
                throw std::out_of_range("block term exceeds " + std::to_string(strings) +
                                        " strings (at position " + std::to_string(term_start + 1) + ")");
            word = concat(word, expand_block(term, strings));
        } else {
            const int letter = lex.read_int();
            check_letter(letter, strings, term_start);
            word.letters.push_back(letter);
        }
    }
    return word;
}

std::string to_string(const BraidWord& word) {
    std::ostringstream out;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        if (i) out << ' ';
        out << word.letters[i];
    }
    return out.str();
}

BraidWord expand_block(const BlockBraidTerm& term, int strings) {
    check_strings(strings);
    if (term.start < 1 || term.over_count < 1 || term.under_count < 1)
        throw std::invalid_argument("block term fields must be positive");
    if (term.power == 0) throw std::invalid_argument("block power must be nonzero");
    if (term.start + term.over_count + term.under_count - 1 > strings)
        throw std::out_of_range("block term exceeds " + std::to_string(strings) + " strings");

    // One pass of the crossing: ascending runs of under_count generators,
    // starting at start+over_count-1 and stepping the base down to start.
    BraidWord once{strings, {}};
    for (int f = 0; f < term.over_count; ++f) {
        const int base = term.start + term.over_count - 1 - f;
        for (int s = 0; s < term.under_count; ++s) once.letters.push_back(base + s);
    }
    if (term.power < 0) once = inverse(once);

    BraidWord out{strings, {}};
    const int reps = term.power < 0 ? -term.power : term.power;
    for (int r = 0; r < reps; ++r) out = concat(out, once);
    return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strings != b.strings)
        throw std::invalid_argument("cannot concatenate words on " + std::to_string(a.strings) +
                                    " and " + std::to_string(b.strings) + " strings");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord inverse(const BraidWord& word) {
    BraidWord out{word.strings, {}};
    out.letters.reserve(word.letters.size());
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

BraidWord free_reduce(const BraidWord& word) {
    BraidWord out{word.strings, {}};
    for (int letter : word.letters) {
        if (!out.letters.empty() && out.letters.back() == -letter)
            out.letters.pop_back();
        else
            out.letters.push_back(letter);
    }
    return out;
}

int exponent_sum(const BraidWord& word) {
    int sum = 0;
    for (int letter : word.letters) sum += letter > 0 ? 1 : -1;
    return sum;
}

std::vector<int> induced_permutation(const BraidWord& word) {
    std::vector<int> perm(static_cast<std::size_t>(word.strings));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : word.letters) {
        const int index = (letter < 0 ? -letter : letter) - 1;  // 0-based left strand
        for (int& image : perm) {
            if (image == index)
                image = index + 1;
            else if (image == index + 1)
                image = index;
        }
    }
    return perm;
}

}  // namespace burau
