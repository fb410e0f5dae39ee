#include "ydn/trace.hpp"

#include <cmath>
#include <numbers>

namespace ydn {

namespace {

int mod_d(long long m, int d) {
    long long r = m % d;
    if (r < 0) r += d;
    return static_cast<int>(r);
}

} // namespace

Poly trace_word(int d, const BasisWord& w) {
    const int n = w.strands();
    if (n == 0) return Poly(1);
    const Level top = w.levels.back();

    if (top.tail_from == 0) {
        BasisWord lower = w;
        lower.levels.pop_back();
        return Poly::x_var(top.exp) * trace_word(d, lower);
    }

    if (n == 1) throw MismatchedAlgebra("tail factor at level 1");
    const int i = top.tail_from;
    const int k = top.exp;

    // alpha' = g_{n-2} ... g_i t_i^k, the tail with its leading crossing
    // stripped, multiplied against the lower word in Y_{d,n-1}.
    AlgebraElement remnant(d, n - 1);
    BasisWord rw = BasisWord::identity(n - 1);
    rw.levels[static_cast<std::size_t>(n - 2)] = (i == n - 1) ? Level{0, k} : Level{i, k};
    remnant.add_term(rw, Poly(1));

    AlgebraElement lower(d, n - 1);
    BasisWord lw = w;
    lw.levels.pop_back();
    lower.add_term(lw, Poly(1));

    const AlgebraElement prod = alg_mul(remnant, lower);
    Poly sum;
    for (const auto& [pw, pc] : prod.terms()) sum += pc * trace_word(d, pw);
    return Poly::z_var() * sum;
}

Poly trace(const AlgebraElement& a) {
    Poly out;
    for (const auto& [w, c] : a.terms()) out += c * trace_word(a.d(), w);
    return out;
}

Poly E_poly(int d, int m) {
    if (m < 0 || m >= d) throw IndexError("E_d^{(m)} requires 0 <= m < d");
    Poly acc;
    for (int s = 0; s < d; ++s)
        acc += Poly::x_var(mod_d(m + s, d)) * Poly::x_var(mod_d(d - s, d));
    acc.scale(Rational(1, d));
    return acc;
}

AlgebraElement embed_in(const AlgebraElement& a, int m) {
    if (m < a.n()) throw MismatchedAlgebra("cannot embed into a smaller algebra");
    if (m == a.n()) return a;
    AlgebraElement out(a.d(), m);
    for (const auto& [w, c] : a.terms()) {
        BasisWord nw = w;
        nw.levels.resize(static_cast<std::size_t>(m));
        out.add_term(nw, c);
    }
    return out;
}

SuiteReport trace_properties_suite(int d, int n, int sample, std::uint64_t seed) {
    if (n < 1) throw IndexError("strand count must be >= 1");
    SuiteReport rep;
    std::mt19937_64 rng(seed);

    auto rand_elem = [&](int strands, int terms) { return random_element(d, strands, terms, rng); };

    // conjugation invariance and linearity
    {
        bool conj = true, lin = true;
        for (int t = 0; t < sample && (conj || lin); ++t) {
            AlgebraElement a = rand_elem(n, 2);
            AlgebraElement b = rand_elem(n, 2);
            if (trace(alg_mul(a, b)) != trace(alg_mul(b, a))) conj = false;
            AlgebraElement combo = a;
            combo.scale(Rational(3));
            AlgebraElement b5 = b;
            b5.scale(Rational(-5, 2));
            combo += b5;
            Poly expect = trace(a);
            expect.scale(Rational(3));
            Poly tb = trace(b);
            tb.scale(Rational(-5, 2));
            expect += tb;
            if (trace(combo) != expect) lin = false;
        }
        rep.add("tr(ab) = tr(ba)", conj);
        rep.add("linearity", lin);
    }

    // Markov property and framing rule on Y_{d,n} inside Y_{d,n+1}
    {
        bool markov = true, framing = true, engn = true;
        const Poly z = Poly::z_var();
        for (int t = 0; t < sample; ++t) {
            AlgebraElement a = rand_elem(n, 2);
            AlgebraElement up = embed_in(a, n + 1);
            if (trace(rmul_g(up, n)) != z * trace(a)) markov = false;
            for (int m = 0; m < d; ++m)
                if (trace(rmul_t(up, n + 1, m)) != Poly::x_var(m) * trace(a)) framing = false;
            // Lemma: tr(y e_{d,n} g_n) = z tr(y)
            AlgebraElement yeg = rmul_g(alg_mul(up, e_idempotent(d, n + 1, n)), n);
            if (trace(yeg) != z * trace(a)) engn = false;
        }
        rep.add("tr(a g_n) = z tr(a)", markov);
        rep.add("tr(a t_{n+1}^m) = x_m tr(a)", framing);
        rep.add("tr(y e_{d,n} g_n) = z tr(y)", engn);
    }

    // cross-multiplied general factoring: x_k tr(a t_n^k e_{d,n}^{(m)}) =
    // E^{(m+k)} tr(a t_n^k) for a in Y_{d,n-1}
    if (n >= 2) {
        bool ok = true;
        for (int t = 0; t < std::max(1, sample / 4) && ok; ++t) {
            AlgebraElement a = rand_elem(n - 1, 2);
            for (int k = 0; k < d && ok; ++k) {
                AlgebraElement alpha = rmul_t(embed_in(a, n), n, k);
                Poly tr_alpha = trace(alpha);
                for (int m = 0; m < d && ok; ++m) {
                    AlgebraElement ae = alg_mul(embed_in(alpha, n + 1), e_shift(d, n + 1, n, m));
                    Poly lhs = Poly::x_var(k) * trace(ae);
                    Poly rhs = E_poly(d, mod_d(m + k, d)) * tr_alpha;
                    if (lhs != rhs) ok = false;
                }
            }
        }
        rep.add("x_k tr(a e^{(m)}) = E^{(m+k)} tr(a)", ok);
    }

    // index-shift identities (both the element and the polynomial form)
    {
        bool elem_ok = true, poly_ok = true;
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                AlgebraElement lhs(d, n >= 2 ? n : 2);
                const int nn = lhs.n();
                const Rational inv_d(1, d);
                for (int s = 0; s < d; ++s) {
                    AlgebraElement word = rmul_t(rmul_t(AlgebraElement::unit(d, nn), 1, k + s), 2, l - s);
                    word.scale(inv_d);
                    lhs += word;
                }
                if (lhs != e_shift(d, nn, 1, mod_d(k + l, d))) elem_ok = false;

                Poly psum;
                for (int s = 0; s < d; ++s)
                    psum += Poly::x_var(mod_d(k + s, d)) * Poly::x_var(mod_d(l - s, d));
                psum.scale(inv_d);
                if (psum != E_poly(d, mod_d(k + l, d))) poly_ok = false;
            }
        rep.add("(1/d) sum t^{k+s} t^{l-s} = e^{(k+l)}", elem_ok);
        rep.add("(1/d) sum x_{k+s} x_{l-s} = E^{(k+l)}", poly_ok);
    }

    // cyclic values x_k = c^k with c a primitive d-th root of unity:
    // tr(a e_{d,n}) = tr(a) tr(e_{d,n}) and tr(e_{d,n}) = 1.  (For generic
    // c the substitution is not compatible with the modular framings; the
    // root-of-unity sample is the case where the identity is exact.)
    {
        const double pi = std::numbers::pi;
        ComplexVal c = std::polar(1.0, 2.0 * pi / static_cast<double>(d));
        std::vector<ComplexVal> xs(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) xs[static_cast<std::size_t>(k)] = std::pow(c, k);
        const ComplexVal u{1.7, 0.3};
        const ComplexVal zv{0.4, -0.2};
        AlgebraElement en = e_idempotent(d, n + 1, n);
        double worst = 0.0;
        for (int t = 0; t < std::max(1, sample / 4); ++t) {
            AlgebraElement a = embed_in(rand_elem(n, 2), n + 1);
            ComplexVal lhs = trace(alg_mul(a, en)).eval(u, zv, xs);
            ComplexVal rhs = trace(a).eval(u, zv, xs) * trace(en).eval(u, zv, xs);
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
        }
        double e_val = std::abs(trace(en).eval(u, zv, xs) - ComplexVal{1.0, 0.0});
        rep.add("cyclic values: tr(a e) = tr(a) tr(e)", worst < 1e-10);
        rep.add("cyclic values: tr(e_{d,n}) = 1", e_val < 1e-10);
    }

    return rep;
}

} // namespace ydn
