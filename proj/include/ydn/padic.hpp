#pragma once

// Finite-depth models of the inverse-limit structures: coherent residue
// towers for p-adic integers, the connecting epimorphisms phi_s^r between
// Y_{p^r,n}(u) and Y_{p^s,n}(u) and delta_s^r between their trace rings,
// formal truncation/expansion between levels, the trace prefix of
// tau_{p^infty}, and depth stabilization of Gamma_{p^r}.

#include <cstdint>
#include <vector>

#include "ydn/algebra.hpp"
#include "ydn/esystem.hpp"
#include "ydn/invariant.hpp"
#include "ydn/poly.hpp"
#include "ydn/report.hpp"
#include "ydn/trace.hpp"

namespace ydn {

long long pow_ll(long long base, int exp);

// Coherent residues a_r in Z/p^r Z, r = 1..depth, a_r = a_s (mod p^s).
struct PAdicIntApprox {
    long long p = 2;
    int depth = 1;
    std::vector<long long> residues;

    PAdicIntApprox(long long prime, int depth_, std::vector<long long> rs);
    static PAdicIntApprox from_integer(long long prime, int depth, long long x);

    // digits k_0..k_{depth-1} of the reduced p-adic expansion
    std::vector<long long> digits() const;

    friend PAdicIntApprox operator+(const PAdicIntApprox& a, const PAdicIntApprox& b);
    friend bool operator==(const PAdicIntApprox&, const PAdicIntApprox&) = default;
};

// Connecting epimorphism: framing exponents reduced mod p^s, coefficients
// untouched, result re-merged in Y_{p^s,n}(u).
AlgebraElement phi(int p, int r, int s, const AlgebraElement& y);

// Formal reindexings of Definition-level truncation/expansion.  truncate
// rewrites the expression of y over p^r with generators t_{s,i} (exponents
// collapse mod p^s); expand rewrites an expression over p^s verbatim over
// p^r.  truncate(expand(y)) == y.
AlgebraElement truncate(int p, int r, int s, const AlgebraElement& y);
AlgebraElement expand(int p, int s, int r, const AlgebraElement& y);

// Coherent sequence (entry r lives in Y_{p^r,n}(u)); coherency is checked
// at construction.
struct PAdicAlgebraApprox {
    int p = 2;
    int depth = 1;
    int n = 1;
    std::vector<AlgebraElement> entries;

    PAdicAlgebraApprox(int prime, int depth_, int strands, std::vector<AlgebraElement> es);
};

// The element e_{p^infty,i} up to the given depth.
PAdicAlgebraApprox e_padic(int p, int depth, int n, int i);

// Constant-sequence approximant built from entry r: position k carries the
// formal expression of entry r reindexed to level k.
PAdicAlgebraApprox constant_approximant(const PAdicAlgebraApprox& y, int r);

// delta_s^r on trace values: x_a -> x_{a mod p^s} (x_0 = 1).
Poly delta_map(int p, int r, int s, const Poly& value);

// Coherent sequence of trace values; delta-coherency checked at
// construction.
struct PolySeqApprox {
    int p = 2;
    int depth = 1;
    std::vector<Poly> entries;

    PolySeqApprox(int prime, int depth_, std::vector<Poly> es);
};

// Entrywise Markov trace; the output passes the delta-coherency check by
// Lemma-commute, which the constructor re-verifies.
PolySeqApprox tau_prefix(const PAdicAlgebraApprox& y);

// delta_s^r(tr_{p^r}(y)) == tr_{p^s}(phi_s^r(y)) on full bases (when small
// enough) and random elements.
SuiteReport commute_check(int p, int depth, int n, int sample, std::uint64_t seed = 99,
                          std::size_t full_basis_bound = 256);

struct StabilizationReport {
    int r0 = 1;                      // least r with p^r > all |framings|
    std::vector<ComplexVal> values;  // Gamma_{p^r}, r = 1..depth
    bool constant_beyond_r0 = false;
    double worst_deviation = 0.0;
};

// Gamma_{p^r}(closure(w)) for r = 1..depth with the base solution lifted
// level by level.
StabilizationReport gamma_stabilization(const FramedBraidWord& w, int p, int depth,
                                        const ESolution& base_solution, ComplexVal u,
                                        ComplexVal z,
                                        SqrtBranch branch = SqrtBranch::Principal,
                                        double tol = 1e-8);

} // namespace ydn
