#pragma once

// The Markov trace tr_d on Y_{d,n}(u), computed by stripping the top level
// of each basis word: a frame t_n^k contributes x_k, a tail g_{n-1}...g_i
// t_i^k contributes z times the trace of (g_{n-2}...g_i t_i^k) * w_{n-1}
// computed in Y_{d,n-1}.  Values live in Q[u^{+-1}, z, x_1..x_{d-1}] with
// x_0 = 1 never stored.

#include <cstdint>

#include "ydn/algebra.hpp"
#include "ydn/poly.hpp"
#include "ydn/report.hpp"

namespace ydn {

Poly trace(const AlgebraElement& a);
Poly trace_word(int d, const BasisWord& w);

// E_d^{(m)} = (1/d) sum_s x_{m+s} x_{d-s}, indices mod d, x_0 = x_d = 1.
// E_poly(d, 0) is E_d = tr_d(e_{d,i}).
Poly E_poly(int d, int m);

// a viewed inside Y_{d,m} for m >= a.n() (new top strands carry no framing).
AlgebraElement embed_in(const AlgebraElement& a, int m);

// Exact randomized verification of the trace rules: conjugation invariance,
// Markov property, the framing rule, tr(y e_{d,n} g_n) = z tr(y), the
// cross-multiplied general form of tr(a e^{(m)}), the index-shift identity
// for e^{(k+l)}, and the cyclic-values specialization.
SuiteReport trace_properties_suite(int d, int n, int sample, std::uint64_t seed = 12345);

} // namespace ydn
