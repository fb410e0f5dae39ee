#pragma once

// Convolution and Fourier analysis on C[Z/dZ], the E-system residual, and
// the complete solution family x_S = (1/|S|) sum_{s in S} e_s indexed by
// nonempty subsets S, together with the delta and cyclic special solutions
// and periodic lifting between levels d | d'.

#include <cstdint>
#include <vector>

#include "ydn/poly.hpp"
#include "ydn/report.hpp"

namespace ydn {

struct CyclicFn {
    int d = 1;
    std::vector<ComplexVal> values;  // index 0..d-1

    CyclicFn() : values(1, ComplexVal{0.0, 0.0}) {}
    CyclicFn(int order, std::vector<ComplexVal> v);

    ComplexVal at(long long k) const;  // index taken mod d
};

// delta_a: characteristic function of a; e_a: character k -> exp(2 pi i a k / d).
CyclicFn delta_fn(int d, int a);
CyclicFn character_fn(int d, int a);

// (f * g)(w) = sum_{u+v=w} f(u) g(v), indices mod d.
CyclicFn convolve(const CyclicFn& f, const CyclicFn& g);

// fhat(v) = sum_u f(u) e_v(-u); satisfies dft(dft(f))(u) = d f(-u).
CyclicFn dft(const CyclicFn& f);

// max_m |(x*x)(m) - (x*x)(0) x(m)|; zero exactly on E-system solutions.
double e_residual(const CyclicFn& x);

struct ESolution {
    int d = 1;
    std::vector<int> support;  // S as sorted residues
    CyclicFn values;
    double residual = 0.0;

    bool is_trivial() const { return static_cast<int>(support.size()) == d; }
};

// x_S for the subset with the given sorted residues / bitmask.
ESolution subset_solution(int d, std::uint32_t mask);

// All 2^d - 1 solutions in increasing bitmask order.  Guarded to d <= 20.
std::vector<ESolution> solve_all(int d);

// The real solution delta_i = -(-1)^{i(d-1)}/(d-1); support D \ {0} for odd
// d and D \ {d/2} for even d.  Requires d >= 2.
ESolution delta_solution(int d);

// The character solution S = {a}.
ESolution cyclic_solution(int d, int a);

// Periodic extension x'_j = x_{j mod d} from level d to level dp (d | dp);
// the lifted support is { s * (dp/d) : s in S }.
ESolution lift_solution(const ESolution& x, int dp);

// Completeness and Fourier checks for the solution family at order d.
SuiteReport esystem_suite(int d, std::uint64_t seed = 7);

} // namespace ydn
