#ifndef BURAU_BRAID_HPP
#define BURAU_BRAID_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

/// A braid group element on `strings` strands, as a sequence of signed
/// Artin generators.  Letter g means generator sigma_|g|, inverted when
/// g < 0; letters act left to right.  The empty word is the identity.
struct BraidWord {
    int strings = 2;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

/// One block-braid term: the group of `over_count` consecutive strings
/// starting at `start` crosses the next `under_count` strings, raised to
/// `power`.  Requires start + over_count + under_count - 1 <= strings.
struct BlockBraidTerm {
    int start = 1;
    int over_count = 1;
    int under_count = 1;
    int power = 1;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position + 1) + ")"),
          position(position) {}
    std::size_t position;
};

/// Parses a whitespace-separated word of signed generator indices and block
/// terms "b[i,n1,n2]" with optional "^p".  No free reduction is applied.
/// Throws ParseError on malformed text and std::out_of_range when an index
/// does not fit the given string count.
BraidWord parse_braid_word(const std::string& text, int strings);

/// Canonical printed form (signed letters, space separated); parses back to
/// the same word.
std::string to_string(const BraidWord& word);

/// Expands a block term into Artin generators.  A negative power expands to
/// the reversed, inverted positive word repeated |power| times.
BraidWord expand_block(const BlockBraidTerm& term, int strings);

/// Group product consistent with left-to-right reading order.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Reversed word with all letters negated.
BraidWord inverse(const BraidWord& word);

/// Cancels adjacent g, -g pairs until none remain.
BraidWord free_reduce(const BraidWord& word);

/// Sum of letter signs.
int exponent_sum(const BraidWord& word);

/// Image of each string under the word: perm[i] is the 0-based endpoint of
/// string i+1.  Satisfies perm(ab) = perm(b) o perm(a).
std::vector<int> induced_permutation(const BraidWord& word);

}  // namespace burau

#endif
