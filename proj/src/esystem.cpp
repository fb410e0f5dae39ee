#include "ydn/esystem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ydn/errors.hpp"

namespace ydn {

namespace {

constexpr double kConstructionTol = 1e-12;

int mod_d(long long k, int d) {
    long long r = k % d;
    if (r < 0) r += d;
    return static_cast<int>(r);
}

void check_same(const CyclicFn& f, const CyclicFn& g) {
    if (f.d != g.d) throw MismatchedOrder("cyclic functions of different order");
}

} // namespace

CyclicFn::CyclicFn(int order, std::vector<ComplexVal> v) : d(order), values(std::move(v)) {
    if (d < 1) throw MismatchedOrder("cyclic group order must be >= 1");
    if (static_cast<int>(values.size()) != d)
        throw MismatchedOrder("value vector does not match the order");
}

ComplexVal CyclicFn::at(long long k) const {
    return values[static_cast<std::size_t>(mod_d(k, d))];
}

CyclicFn delta_fn(int d, int a) {
    CyclicFn f(d, std::vector<ComplexVal>(static_cast<std::size_t>(d), {0.0, 0.0}));
    f.values[static_cast<std::size_t>(mod_d(a, d))] = {1.0, 0.0};
    return f;
}

CyclicFn character_fn(int d, int a) {
    CyclicFn f(d, std::vector<ComplexVal>(static_cast<std::size_t>(d), {0.0, 0.0}));
    const double step = 2.0 * std::numbers::pi * static_cast<double>(mod_d(a, d)) / d;
    for (int k = 0; k < d; ++k)
        f.values[static_cast<std::size_t>(k)] = std::polar(1.0, step * k);
    return f;
}

CyclicFn convolve(const CyclicFn& f, const CyclicFn& g) {
    check_same(f, g);
    const int d = f.d;
    CyclicFn out(d, std::vector<ComplexVal>(static_cast<std::size_t>(d), {0.0, 0.0}));
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v)
            out.values[static_cast<std::size_t>(mod_d(u + v, d))] +=
                f.values[static_cast<std::size_t>(u)] * g.values[static_cast<std::size_t>(v)];
    return out;
}

CyclicFn dft(const CyclicFn& f) {
    const int d = f.d;
    CyclicFn out(d, std::vector<ComplexVal>(static_cast<std::size_t>(d), {0.0, 0.0}));
    const double step = -2.0 * std::numbers::pi / d;
    for (int v = 0; v < d; ++v) {
        ComplexVal acc{0.0, 0.0};
        for (int u = 0; u < d; ++u)
            acc += f.values[static_cast<std::size_t>(u)] *
                   std::polar(1.0, step * static_cast<double>(v) * u);
        out.values[static_cast<std::size_t>(v)] = acc;
    }
    return out;
}

double e_residual(const CyclicFn& x) {
    const CyclicFn xx = convolve(x, x);
    const ComplexVal head = xx.values[0];
    double worst = 0.0;
    for (int m = 0; m < x.d; ++m)
        worst = std::max(worst, std::abs(xx.values[static_cast<std::size_t>(m)] -
                                         head * x.values[static_cast<std::size_t>(m)]));
    return worst;
}

ESolution subset_solution(int d, std::uint32_t mask) {
    if (d < 1 || d > 20) throw BoundExceeded("subset solutions supported for 1 <= d <= 20");
    if (mask == 0 || mask >= (1u << d))
        throw IndexError("subset mask must be a nonempty subset of 0..d-1");

    ESolution sol;
    sol.d = d;
    for (int s = 0; s < d; ++s)
        if (mask & (1u << s)) sol.support.push_back(s);

    std::vector<ComplexVal> vals(static_cast<std::size_t>(d), {0.0, 0.0});
    for (int s : sol.support) {
        const CyclicFn ch = character_fn(d, s);
        for (int k = 0; k < d; ++k) vals[static_cast<std::size_t>(k)] += ch.values[static_cast<std::size_t>(k)];
    }
    const double inv = 1.0 / static_cast<double>(sol.support.size());
    for (auto& v : vals) v *= inv;
    sol.values = CyclicFn(d, std::move(vals));
    sol.residual = e_residual(sol.values);
    return sol;
}

std::vector<ESolution> solve_all(int d) {
    if (d < 1 || d > 20) throw BoundExceeded("solve_all enumerates 2^d subsets; need d <= 20");
    std::vector<ESolution> out;
    out.reserve((1u << d) - 1);
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask)
        out.push_back(subset_solution(d, mask));
    return out;
}

ESolution delta_solution(int d) {
    if (d < 2) throw DegenerateOrder("the delta solution needs d >= 2");
    std::uint32_t mask = (1u << d) - 1;                    // D ...
    if (d % 2 == 1)
        mask &= ~1u;                                       // ... minus {0} for odd d
    else
        mask &= ~(1u << (d / 2));                          // ... minus {d/2} for even d
    ESolution sol = subset_solution(d, mask);

    // cross-check against the closed form -(-1)^{i(d-1)}/(d-1)
    for (int i = 1; i < d; ++i) {
        const double expect =
            -(((static_cast<long long>(i) * (d - 1)) % 2 == 0) ? 1.0 : -1.0) / (d - 1);
        if (std::abs(sol.values.values[static_cast<std::size_t>(i)] - ComplexVal{expect, 0.0}) >
            kConstructionTol)
            throw DegenerateOrder("delta solution does not match its closed form");
    }
    return sol;
}

ESolution cyclic_solution(int d, int a) {
    if (a < 0 || a >= d) throw IndexError("character index must lie in 0..d-1");
    return subset_solution(d, 1u << a);
}

SuiteReport esystem_suite(int d, std::uint64_t seed) {
    SuiteReport rep;
    const auto sols = solve_all(d);
    rep.add("count = 2^d - 1", static_cast<std::uint32_t>(sols.size()) == (1u << d) - 1);

    bool residuals = true, heads = true, ed_value = true, dft_support = true;
    for (const auto& s : sols) {
        if (s.residual > kConstructionTol * 10) residuals = false;
        if (std::abs(s.values.values[0] - ComplexVal{1.0, 0.0}) > kConstructionTol) heads = false;
        // normalized E_d at x_S is 1/|S|, i.e. (x*x)(0) |S| / d = 1
        const ComplexVal head = convolve(s.values, s.values).values[0];
        if (std::abs(head * static_cast<double>(s.support.size()) / static_cast<double>(d) -
                     ComplexVal{1.0, 0.0}) > 1e-10)
            ed_value = false;
        const CyclicFn hat = dft(s.values);
        for (int v = 0; v < d; ++v) {
            const bool in_support =
                std::find(s.support.begin(), s.support.end(), v) != s.support.end();
            const ComplexVal expect =
                in_support ? ComplexVal{static_cast<double>(d) / s.support.size(), 0.0}
                           : ComplexVal{0.0, 0.0};
            if (std::abs(hat.values[static_cast<std::size_t>(v)] - expect) > 1e-10)
                dft_support = false;
        }
    }
    rep.add("residual < 1e-10 for every subset", residuals);
    rep.add("x_S(0) = 1", heads);
    rep.add("(x*x)(0) |S| / d = 1", ed_value);
    rep.add("dft(x_S) = (d/|S|) 1_S", dft_support);

    bool complements = true;
    const std::uint32_t full = (1u << d) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask)
        if (subset_solution(d, full & ~mask).residual > 1e-10) complements = false;
    rep.add("complement of a nontrivial support solves the system", complements);

    // unit of convolution and the double-transform rule on random inputs
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    bool unit_ok = true, double_ok = true, conv_ok = true;
    for (int t = 0; t < 20; ++t) {
        std::vector<ComplexVal> fv(static_cast<std::size_t>(d)), gv(static_cast<std::size_t>(d));
        for (auto& v : fv) v = {coord(rng), coord(rng)};
        for (auto& v : gv) v = {coord(rng), coord(rng)};
        CyclicFn f(d, fv), g(d, gv);
        const CyclicFn fd0 = convolve(f, delta_fn(d, 0));
        const CyclicFn ff = dft(dft(f));
        const CyclicFn prod_hat = dft(convolve(f, g));
        const CyclicFn fhat = dft(f), ghat = dft(g);
        for (int k = 0; k < d; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            if (std::abs(fd0.values[uk] - f.values[uk]) > 1e-12) unit_ok = false;
            if (std::abs(ff.values[uk] -
                         static_cast<double>(d) * f.at(-static_cast<long long>(k))) > 1e-9)
                double_ok = false;
            if (std::abs(prod_hat.values[uk] - fhat.values[uk] * ghat.values[uk]) > 1e-9)
                conv_ok = false;
        }
    }
    rep.add("f * delta_0 = f", unit_ok);
    rep.add("dft(dft(f))(u) = d f(-u)", double_ok);
    rep.add("dft(f*g) = dft(f) dft(g)", conv_ok);
    return rep;
}

ESolution lift_solution(const ESolution& x, int dp) {
    if (dp % x.d != 0) throw IncompatibleOrders("target order is not a multiple of the source order");
    if (dp > 20 * 20) throw BoundExceeded("lift target order too large");
    const int q = dp / x.d;

    ESolution out;
    out.d = dp;
    std::vector<ComplexVal> vals(static_cast<std::size_t>(dp));
    for (int j = 0; j < dp; ++j)
        vals[static_cast<std::size_t>(j)] = x.values.values[static_cast<std::size_t>(j % x.d)];
    out.values = CyclicFn(dp, std::move(vals));
    for (int s : x.support) out.support.push_back(s * q);
    out.residual = e_residual(out.values);
    if (out.residual > 1e-10)
        throw IncompatibleOrders("lifted values fail the E-system residual check");
    return out;
}

} // namespace ydn
