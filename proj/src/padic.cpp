#include "ydn/padic.hpp"

#include <cmath>

namespace ydn {

long long pow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > (1ll << 61) / base) throw BoundExceeded("p^r overflows the residue range");
        out *= base;
    }
    return out;
}

PAdicIntApprox::PAdicIntApprox(long long prime, int depth_, std::vector<long long> rs)
    : p(prime), depth(depth_), residues(std::move(rs)) {
    if (p < 2) throw DegenerateOrder("p must be at least 2");
    if (depth < 1) throw LevelError("depth must be >= 1");
    if (static_cast<int>(residues.size()) != depth)
        throw LevelError("residue vector does not match the depth");
    for (int r = 1; r <= depth; ++r) {
        long long mod = pow_ll(p, r);
        long long& a = residues[static_cast<std::size_t>(r - 1)];
        a %= mod;
        if (a < 0) a += mod;
    }
    for (int r = 2; r <= depth; ++r) {
        long long mod = pow_ll(p, r - 1);
        if (residues[static_cast<std::size_t>(r - 1)] % mod !=
            residues[static_cast<std::size_t>(r - 2)])
            throw LevelError("residues are not coherent");
    }
}

PAdicIntApprox PAdicIntApprox::from_integer(long long prime, int depth, long long x) {
    std::vector<long long> rs(static_cast<std::size_t>(depth));
    for (int r = 1; r <= depth; ++r) {
        long long mod = pow_ll(prime, r);
        long long a = x % mod;
        if (a < 0) a += mod;
        rs[static_cast<std::size_t>(r - 1)] = a;
    }
    return PAdicIntApprox(prime, depth, std::move(rs));
}

std::vector<long long> PAdicIntApprox::digits() const {
    std::vector<long long> ds(static_cast<std::size_t>(depth));
    long long prev = 0, scale = 1;
    for (int r = 1; r <= depth; ++r) {
        ds[static_cast<std::size_t>(r - 1)] =
            (residues[static_cast<std::size_t>(r - 1)] - prev) / scale;
        prev = residues[static_cast<std::size_t>(r - 1)];
        scale *= p;
    }
    return ds;
}

PAdicIntApprox operator+(const PAdicIntApprox& a, const PAdicIntApprox& b) {
    if (a.p != b.p || a.depth != b.depth)
        throw IncompatibleOrders("p-adic approximations of different shape");
    std::vector<long long> rs(static_cast<std::size_t>(a.depth));
    for (int r = 1; r <= a.depth; ++r)
        rs[static_cast<std::size_t>(r - 1)] = a.residues[static_cast<std::size_t>(r - 1)] +
                                              b.residues[static_cast<std::size_t>(r - 1)];
    return PAdicIntApprox(a.p, a.depth, std::move(rs));
}

namespace {

// Reindexes a normal-form element between levels: framing exponents taken
// mod the target modulus, coinciding words merged.
AlgebraElement reindex(const AlgebraElement& y, int target_d) {
    AlgebraElement out(target_d, y.n());
    for (const auto& [w, c] : y.terms()) {
        BasisWord nw = w;
        for (auto& lvl : nw.levels) lvl.exp %= target_d;
        out.add_term(nw, c);
    }
    return out;
}

} // namespace

AlgebraElement phi(int p, int r, int s, const AlgebraElement& y) {
    if (r < s || s < 1) throw LevelError("phi_s^r needs r >= s >= 1");
    if (y.d() != pow_ll(p, r)) throw LevelError("element does not live at level p^r");
    return reindex(y, static_cast<int>(pow_ll(p, s)));
}

AlgebraElement truncate(int p, int r, int s, const AlgebraElement& y) {
    if (r < s || s < 1) throw LevelError("truncation needs r >= s >= 1");
    if (y.d() != pow_ll(p, r)) throw LevelError("element does not live at level p^r");
    return reindex(y, static_cast<int>(pow_ll(p, s)));
}

AlgebraElement expand(int p, int s, int r, const AlgebraElement& y) {
    if (r < s || s < 1) throw LevelError("expansion needs r >= s >= 1");
    if (y.d() != pow_ll(p, s)) throw LevelError("element does not live at level p^s");
    return reindex(y, static_cast<int>(pow_ll(p, r)));
}

PAdicAlgebraApprox::PAdicAlgebraApprox(int prime, int depth_, int strands,
                                       std::vector<AlgebraElement> es)
    : p(prime), depth(depth_), n(strands), entries(std::move(es)) {
    if (p < 2) throw DegenerateOrder("p must be at least 2");
    if (depth < 1) throw LevelError("depth must be >= 1");
    if (static_cast<int>(entries.size()) != depth)
        throw LevelError("entry count does not match the depth");
    for (int r = 1; r <= depth; ++r) {
        const AlgebraElement& e = entries[static_cast<std::size_t>(r - 1)];
        if (e.n() != n) throw LevelError("entries on different strand counts");
        if (e.d() != pow_ll(p, r)) throw LevelError("entry r must live in Y_{p^r,n}");
    }
    for (int r = 2; r <= depth; ++r)
        if (phi(p, r, r - 1, entries[static_cast<std::size_t>(r - 1)]) !=
            entries[static_cast<std::size_t>(r - 2)])
            throw LevelError("entries are not phi-coherent");
}

PAdicAlgebraApprox e_padic(int p, int depth, int n, int i) {
    std::vector<AlgebraElement> es;
    es.reserve(static_cast<std::size_t>(depth));
    for (int r = 1; r <= depth; ++r) {
        long long d = pow_ll(p, r);
        if (d > 4096) throw BoundExceeded("p^depth too large for e_padic");
        es.push_back(e_idempotent(static_cast<int>(d), n, i));
    }
    return PAdicAlgebraApprox(p, depth, n, std::move(es));
}

PAdicAlgebraApprox constant_approximant(const PAdicAlgebraApprox& y, int r) {
    if (r < 1 || r > y.depth) throw LevelError("approximant level out of range");
    const AlgebraElement& source = y.entries[static_cast<std::size_t>(r - 1)];
    std::vector<AlgebraElement> es;
    es.reserve(static_cast<std::size_t>(y.depth));
    for (int k = 1; k <= y.depth; ++k)
        es.push_back(reindex(source, static_cast<int>(pow_ll(y.p, k))));
    // positions below r collapse to the original entries by coherency, so
    // the result is again a valid sequence
    return PAdicAlgebraApprox(y.p, y.depth, y.n, std::move(es));
}

Poly delta_map(int p, int r, int s, const Poly& value) {
    if (r < s || s < 1) throw LevelError("delta_s^r needs r >= s >= 1");
    const long long mod = pow_ll(p, s);
    return value.remap_x([mod](int k) { return static_cast<int>(k % mod); });
}

PolySeqApprox::PolySeqApprox(int prime, int depth_, std::vector<Poly> es)
    : p(prime), depth(depth_), entries(std::move(es)) {
    if (static_cast<int>(entries.size()) != depth)
        throw LevelError("entry count does not match the depth");
    for (int r = 2; r <= depth; ++r)
        if (delta_map(p, r, r - 1, entries[static_cast<std::size_t>(r - 1)]) !=
            entries[static_cast<std::size_t>(r - 2)])
            throw LevelError("trace sequence is not delta-coherent");
}

PolySeqApprox tau_prefix(const PAdicAlgebraApprox& y) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(y.depth));
    for (const auto& entry : y.entries) out.push_back(trace(entry));
    return PolySeqApprox(y.p, y.depth, std::move(out));
}

SuiteReport commute_check(int p, int depth, int n, int sample, std::uint64_t seed,
                          std::size_t full_basis_bound) {
    SuiteReport rep;
    std::mt19937_64 rng(seed);
    for (int r = 2; r <= depth; ++r) {
        const int dr = static_cast<int>(pow_ll(p, r));
        double basis_size = 1.0;
        for (int k = 1; k <= n; ++k) basis_size *= static_cast<double>(dr) * k;

        for (int s = 1; s < r; ++s) {
            bool ok = true;
            std::string detail;
            auto check_word = [&](const BasisWord& w) {
                AlgebraElement y(dr, n);
                y.add_term(w, Poly(1));
                Poly via_delta = delta_map(p, r, s, trace(y));
                Poly via_phi = trace(phi(p, r, s, y));
                if (via_delta != via_phi) {
                    ok = false;
                    detail = "word " + w.to_string();
                }
            };
            if (basis_size <= static_cast<double>(full_basis_bound)) {
                for (const auto& w : enumerate_basis(dr, n)) check_word(w);
                rep.add("delta tr = tr phi on the full basis, (r,s)=(" + std::to_string(r) +
                            "," + std::to_string(s) + ")",
                        ok, detail);
            } else {
                for (int t = 0; t < sample && ok; ++t) check_word(random_basis_word(dr, n, rng));
                // random linear combinations exercise merging after phi
                for (int t = 0; t < sample / 4 && ok; ++t) {
                    AlgebraElement y = random_element(dr, n, 3, rng);
                    if (delta_map(p, r, s, trace(y)) != trace(phi(p, r, s, y))) ok = false;
                }
                rep.add("delta tr = tr phi on random elements, (r,s)=(" + std::to_string(r) +
                            "," + std::to_string(s) + ")",
                        ok, detail);
            }
        }
    }
    return rep;
}

StabilizationReport gamma_stabilization(const FramedBraidWord& w, int p, int depth,
                                        const ESolution& base_solution, ComplexVal u,
                                        ComplexVal z, SqrtBranch branch, double tol) {
    if (base_solution.d != p)
        throw ParamDomainError("the base solution must solve the E-system at d = p");

    const SplitFramedBraid split = split_form(w);
    long long max_framing = 0;
    for (long long f : split.framings) max_framing = std::max(max_framing, std::llabs(f));

    StabilizationReport rep;
    rep.r0 = 1;
    while (pow_ll(p, rep.r0) <= max_framing) ++rep.r0;
    if (rep.r0 > depth)
        throw BoundExceeded("depth too small: framings exceed p^depth");

    ESolution level = base_solution;
    for (int r = 1; r <= depth; ++r) {
        if (r > 1) level = lift_solution(level, static_cast<int>(pow_ll(p, r)));
        InvariantParams params =
            make_params(static_cast<int>(pow_ll(p, r)), level, u, z, branch);
        rep.values.push_back(gamma(w, params));
    }

    const ComplexVal anchor = rep.values[static_cast<std::size_t>(rep.r0 - 1)];
    rep.worst_deviation = 0.0;
    for (int r = rep.r0; r <= depth; ++r)
        rep.worst_deviation =
            std::max(rep.worst_deviation,
                     std::abs(rep.values[static_cast<std::size_t>(r - 1)] - anchor));
    rep.constant_beyond_r0 = rep.worst_deviation <= tol * (1.0 + std::abs(anchor));
    return rep;
}

} // namespace ydn
