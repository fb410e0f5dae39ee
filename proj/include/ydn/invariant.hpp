#pragma once

// The normalized framed-link invariant
//   Gamma_d(closure(a)) = Delta^{n-1} (sqrt(omega))^{eps(a)} tr_d(a)
// evaluated at an E-system solution, with omega = (z + (u-1)E_d)/(uz) and
// Delta = 1/(z sqrt(omega)).  The square-root branch is an explicit
// parameter since the paper leaves it symbolic.

#include <cstdint>
#include <random>

#include "ydn/braid.hpp"
#include "ydn/esystem.hpp"
#include "ydn/poly.hpp"
#include "ydn/report.hpp"

namespace ydn {

enum class SqrtBranch { Principal, Negated };

struct InvariantParams {
    int d = 1;
    ESolution solution;
    ComplexVal u{2.0, 0.0};
    ComplexVal z{0.5, 0.0};
    SqrtBranch branch = SqrtBranch::Principal;

    // derived at construction
    ComplexVal Ed{1.0, 0.0};
    ComplexVal omega{0.0, 0.0};
    ComplexVal sqrt_omega{0.0, 0.0};
    ComplexVal delta{0.0, 0.0};

    // value of x_k at the solution, index mod d
    ComplexVal x(long long k) const { return solution.values.at(k); }
    // E_d^{(m)} = (1/d) sum_s x_{m+s} x_{d-s} at the solution
    ComplexVal E_shift(long long m) const;
};

// Validates u not in {0,1}, z != 0, omega != 0 and fills the derived fields.
InvariantParams make_params(int d, ESolution solution, ComplexVal u, ComplexVal z,
                            SqrtBranch branch = SqrtBranch::Principal);

ComplexVal gamma(const FramedBraidWord& w, const InvariantParams& params);

// Gamma from an already-computed symbolic trace (n strands, exponent eps).
ComplexVal gamma_of_trace(const Poly& tr, int n, long long eps, const InvariantParams& params);

struct Link {
    enum class Kind { Unknot, Hopf, TrefoilR, TrefoilL };
    Kind kind;
    long long k = 0;  // framing of the first component
    long long l = 0;  // second framing (Hopf only)
};

// Direct evaluation of the worked closed forms, independent of the trace
// engine.
ComplexVal closed_form(const Link& link, const InvariantParams& params);

// Braid word whose closure is the given link (unknot: 1 strand; others: 2).
FramedBraidWord link_braid(const Link& link);

// Conjugation and stabilization invariance on random conjugators.
SuiteReport markov_check(const FramedBraidWord& w, const InvariantParams& params,
                         int trials, std::uint64_t seed = 2024);

// |LHS - RHS| of the skein relation at crossing site i of beta.
double skein_residual(const FramedBraidWord& beta, int i, const InvariantParams& params);

struct CrossCheck {
    ComplexVal engine{0.0, 0.0};
    ComplexVal oracle{0.0, 0.0};
    bool pass = false;
};

// Independent small-instance HOMFLYPT value of the closure of w (d = 1,
// all framings zero) by recursive skein evaluation; supports braid words
// on a single generator index with at most 3 crossings.
ComplexVal homflypt_oracle(const FramedBraidWord& w, const InvariantParams& params);

CrossCheck homflypt_crosscheck(const FramedBraidWord& w, const InvariantParams& params,
                               double tol = 1e-8);

// gamma against the worked closed forms over every subset solution at the
// given parameters, plus Markov invariance on a few random braids.
SuiteReport invariant_suite(int d, ComplexVal u, ComplexVal z, std::uint64_t seed = 11,
                            double tol = 1e-8);

// skein residual on random (beta, site) instances over every subset
// solution.
SuiteReport skein_suite(int d, ComplexVal u, ComplexVal z, int trials,
                        std::uint64_t seed = 13, double tol = 1e-8);

// Random framed braid word (letters mix crossings and framings).
FramedBraidWord random_braid_word(int n, int len, long long max_framing,
                                  std::mt19937_64& rng);

} // namespace ydn
