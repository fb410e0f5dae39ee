#pragma once

// Framed braid words on n strands: the group F_n = Z^n x| B_n, its
// d-modular quotient, a text parser and word statistics.  Strand indices
// are 1-based throughout.  Crossing words are kept free: no braid-relation
// rewriting happens here, only the semidirect-product bookkeeping that
// pushes framings to the top.

#include <cstdint>
#include <string>
#include <vector>

#include "ydn/errors.hpp"

namespace ydn {

struct BraidLetter {
    enum class Kind { Sigma, Frame };

    Kind kind;
    int index;      // strand index: 1..n-1 for Sigma, 1..n for Frame
    long long exp;  // +-1 for Sigma, any integer for Frame

    static BraidLetter sigma(int i, int sign) { return {Kind::Sigma, i, sign}; }
    static BraidLetter frame(int j, long long m) { return {Kind::Frame, j, m}; }

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct FramedBraidWord {
    int n = 1;
    std::vector<BraidLetter> letters;

    FramedBraidWord() = default;
    FramedBraidWord(int strands, std::vector<BraidLetter> ls);

    FramedBraidWord& append(const BraidLetter& l);
    FramedBraidWord concat(const FramedBraidWord& other) const;
    std::string to_string() const;
};

// Normal split form t_1^{a_1} ... t_n^{a_n} * (crossing word).
struct SplitFramedBraid {
    int n = 1;
    std::vector<long long> framings;            // size n, framings[i-1] = a_i
    std::vector<std::pair<int, int>> crossings; // (i, sign)

    explicit SplitFramedBraid(int strands);
};

// Grammar (whitespace-separated tokens):
//   s<i>      positive crossing sigma_i
//   s<i>^-1   negative crossing
//   t<j>^<m>  framing t_j^m, m any integer
//   t<j>      framing t_j^1
FramedBraidWord parse_braid(const std::string& text, int n);

// Image of strand j under the permutation induced by the crossing word.
// perm[j-1] is the image of j.
std::vector<int> braid_permutation(const std::vector<std::pair<int, int>>& crossings, int n);

// Number of components of the closure (cycles of the permutation).
int closure_components(const SplitFramedBraid& b);

// Pushes every framing letter to the top through the permutation action;
// the crossing word is preserved letter for letter.
SplitFramedBraid split_form(const FramedBraidWord& w);

SplitFramedBraid braid_mul(const SplitFramedBraid& a, const SplitFramedBraid& b);

// Algebraic crossing-sign sum; framing letters contribute nothing.
long long exponent_sum(const FramedBraidWord& w);
long long exponent_sum(const SplitFramedBraid& b);

// Framings reduced into 0..d-1.
SplitFramedBraid mod_reduce(const SplitFramedBraid& b, int d);

} // namespace ydn
