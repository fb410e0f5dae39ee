#pragma once

// The Yokonuma-Hecke algebra Y_{d,n}(u) on its inductive basis.
//
// A basis word is a product of one factor per level k = 1..n, where the
// level-k factor is either t_k^m (Frame) or g_{k-1} g_{k-2} ... g_i t_i^m
// (Tail from i, 1 <= i < k).  Level 1 is always a Frame.  There are
// exactly d^n * n! such words.  Elements are finite linear combinations
// with u-Laurent polynomial coefficients.
//
// Multiplication keeps elements in normal form by folding single-generator
// right multiplications through the defining relations: a tail absorbs
// adjacent generators, the mixed relations push framings inward, braid
// commutations shift a crossing into the lower levels, and the quadratic
// relation resolves a crossing that meets the head of its own tail.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ydn/braid.hpp"
#include "ydn/poly.hpp"
#include "ydn/report.hpp"

namespace ydn {

// Level descriptor: tail_from == 0 encodes Frame(exp) = t_k^exp, otherwise
// Tail(tail_from, exp) = g_{k-1} ... g_{tail_from} t_{tail_from}^exp.
struct Level {
    int tail_from = 0;
    int exp = 0;

    friend bool operator==(const Level&, const Level&) = default;
    friend auto operator<=>(const Level&, const Level&) = default;
};

struct BasisWord {
    std::vector<Level> levels;

    int strands() const { return static_cast<int>(levels.size()); }
    static BasisWord identity(int n) { return BasisWord{std::vector<Level>(static_cast<std::size_t>(n))}; }

    friend bool operator==(const BasisWord&, const BasisWord&) = default;
    friend auto operator<=>(const BasisWord&, const BasisWord&) = default;

    std::string to_string() const;
};

class AlgebraElement {
public:
    AlgebraElement(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    const std::map<BasisWord, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static AlgebraElement unit(int d, int n);

    void add_term(const BasisWord& w, const Poly& c);
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement& scale(const Poly& c);
    AlgebraElement& scale(const Rational& c);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    std::string to_string() const;

private:
    int d_;
    int n_;
    std::map<BasisWord, Poly> terms_;
};

// Generators and framings as elements.
AlgebraElement t_power(int d, int n, int j, long long m);
AlgebraElement g_generator(int d, int n, int i);

// Right multiplication by a single generator, extended linearly.
AlgebraElement rmul_t(const AlgebraElement& a, int j, long long m);
AlgebraElement rmul_g(const AlgebraElement& a, int j);

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);

// Image of a split framed braid under C F_{d,n} -> Y_{d,n}(u), in normal
// form.  Framings are reduced mod d internally.
AlgebraElement embed_braid(const SplitFramedBraid& w, int d);

// e_{d,i} = (1/d) sum_m t_i^m t_{i+1}^{-m}
AlgebraElement e_idempotent(int d, int n, int i);
// e_{d,i,k} = (1/d) sum_s t_i^s t_k^{-s}, k != i
AlgebraElement e_pair(int d, int n, int i, int k);
// e_{d,i}^{(k)} = (1/d) sum_s t_i^{k+s} t_{i+1}^{d-s}
AlgebraElement e_shift(int d, int n, int i, int k);

// Closed-form g_i^m: unit for m = 0, the quadratic expansion family for
// even m, and g_i plus idempotent corrections for odd m.
AlgebraElement g_power(int d, int n, int i, long long m);

// All d^n * n! basis words in deterministic order; throws BoundExceeded
// when the count is larger than max_words.
std::vector<BasisWord> enumerate_basis(int d, int n, std::size_t max_words = 2'000'000);

BasisWord random_basis_word(int d, int n, std::mt19937_64& rng);
AlgebraElement random_element(int d, int n, int terms, std::mt19937_64& rng);

// Verifies the defining and derived relations as exact identities of
// normal-form elements.
SuiteReport relation_suite(int d, int n, std::size_t max_words = 2'000'000);

} // namespace ydn
