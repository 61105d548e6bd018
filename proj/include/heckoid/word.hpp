#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heckoid/slope.hpp"

namespace heckoid {

// Letters are the four characters a, b, A, B where the capitals are the
// inverses. Generator order for canonical rotations is a < b < A < B.
inline bool is_letter(char c) { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; }
inline int letter_sign(char c) { return (c == 'a' || c == 'b') ? 1 : -1; }
inline char letter_gen(char c) { return (c == 'a' || c == 'A') ? 'a' : 'b'; }
inline char letter_inverse(char c) { return static_cast<char>(c ^ 0x20); }
inline int letter_rank(char c) {
    switch (c) {
        case 'a': return 0;
        case 'b': return 1;
        case 'A': return 2;
        default: return 3;
    }
}

// A word in the free group F(a,b), stored as its letter string. Words used as
// loop representatives alternate generators; Dehn reduction also passes
// through general words, so alternation is a checked property, not a class
// invariant.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);

    static Word from_string(std::string_view text) { return Word(std::string(text)); }

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    bool is_alternating() const;            // generators strictly alternate
    bool is_cyclically_alternating() const; // alternating and even length

    Word subword(std::size_t pos, std::size_t len) const;
    Word rotated(std::size_t by) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::string letters_;
};

// The loop word of slope s = q/p: length 2p, generators alternate a,b starting
// with a, and letter i carries the sign (-1)^floor(i q / p).
Word u_word(const Slope& s);

Word invert(const Word& w);
Word concat(const Word& x, const Word& y);

// n-fold power of a cyclically alternating word.
Word power(const Word& w, int n);

// Free reduction (cancel xX pairs), and cyclic reduction on top of it.
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

// A word considered up to rotation. Keeps the representative it was built
// from; equality and hashing go through the least rotation (a < b < A < B).
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(Word rep);

    const Word& rep() const { return rep_; }
    std::size_t size() const { return rep_.size(); }
    char at(std::size_t i) const { return rep_[i % rep_.size()]; }

    Word canonical_rotation() const;
    std::string str() const;  // "(" + canonical + ")"

    bool operator==(const CyclicWord& o) const;

private:
    Word rep_;
};

struct Occurrence {
    int position = 0;     // start in [0, |host|)
    bool in_inverse = false;  // found in host or in invert(host)
    bool operator==(const Occurrence&) const = default;
};

// All cyclic occurrences of an alternating pattern in the host and in the
// inverted host, host positions first, ascending. Patterns longer than the
// host or not alternating never occur.
std::vector<Occurrence> occurrences(const Word& pattern, const CyclicWord& host);

}  // namespace heckoid
