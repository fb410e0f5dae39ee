#include "ydn/algebra.hpp"

#include <sstream>
#include <utility>

namespace ydn {

namespace {

int mod_d(long long m, int d) {
    long long r = m % d;
    if (r < 0) r += d;
    return static_cast<int>(r);
}

void check_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.d() != b.d() || a.n() != b.n())
        throw MismatchedAlgebra("elements live in different algebras Y_{d,n}");
}

} // namespace

std::string BasisWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= strands(); ++k) {
        const Level& L = levels[static_cast<std::size_t>(k - 1)];
        if (L.tail_from == 0) {
            if (L.exp == 0) continue;
            if (!first) os << " ";
            first = false;
            os << "t" << k << "^" << L.exp;
        } else {
            if (!first) os << " ";
            first = false;
            for (int g = k - 1; g >= L.tail_from; --g) os << "g" << g << " ";
            os << "t" << L.tail_from << "^" << L.exp;
        }
    }
    if (first) return "1";
    return os.str();
}

AlgebraElement::AlgebraElement(int d, int n) : d_(d), n_(n) {
    if (d < 1) throw IndexError("modulus d must be >= 1");
    if (n < 1) throw IndexError("strand count must be >= 1");
}

AlgebraElement AlgebraElement::unit(int d, int n) {
    AlgebraElement e(d, n);
    e.terms_.emplace(BasisWord::identity(n), Poly(1));
    return e;
}

void AlgebraElement::add_term(const BasisWord& w, const Poly& c) {
    if (c.is_zero()) return;
    if (w.strands() != n_) throw MismatchedAlgebra("basis word has wrong strand count");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    check_same(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    check_same(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

AlgebraElement& AlgebraElement::scale(const Poly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<BasisWord, Poly> scaled;
    for (auto& [w, q] : terms_) {
        Poly p = q * c;
        if (!p.is_zero()) scaled.emplace(w, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
}

AlgebraElement& AlgebraElement::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, q] : terms_) q.scale(c);
    return *this;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") " << w.to_string();
    }
    return os.str();
}

AlgebraElement t_power(int d, int n, int j, long long m) {
    if (j < 1 || j > n) throw IndexError("framing generator index out of range");
    AlgebraElement e(d, n);
    BasisWord w = BasisWord::identity(n);
    w.levels[static_cast<std::size_t>(j - 1)].exp = mod_d(m, d);
    e.add_term(w, Poly(1));
    return e;
}

AlgebraElement g_generator(int d, int n, int i) {
    if (i < 1 || i >= n) throw IndexError("braid generator index out of range");
    AlgebraElement e(d, n);
    BasisWord w = BasisWord::identity(n);
    w.levels[static_cast<std::size_t>(i)] = Level{i, 0};  // level i+1 factor g_i t_i^0
    e.add_term(w, Poly(1));
    return e;
}

namespace {

// Right-multiplies levels[0..top) by t_j^m.  Always resolves to a single
// word: the letter either merges into the level that owns strand j or
// commutes further down, reindexed by the tail permutation.
void word_rmul_t(BasisWord& w, int top, int j, long long m, int d) {
    int add = mod_d(m, d);
    if (add == 0) return;
    for (int lev = top; lev >= 1; --lev) {
        Level& cur = w.levels[static_cast<std::size_t>(lev - 1)];
        if (cur.tail_from == 0) {
            if (j == lev) {
                cur.exp = mod_d(cur.exp + add, d);
                return;
            }
            // j < lev: t_j commutes with t_lev^k
        } else {
            if (j == cur.tail_from) {
                cur.exp = mod_d(cur.exp + add, d);
                return;
            }
            // Passing t_j through g_{lev-1}...g_i sends j to j-1 when
            // j > i and fixes it otherwise.
            if (j > cur.tail_from) --j;
        }
    }
    throw MismatchedAlgebra("framing index exceeded word size");
}

Level top_factor(int from, int exp, int level) {
    // g_{level-1}...g_from t_from^exp degenerates to t_level^exp when the
    // chain is empty.
    return from == level ? Level{0, exp} : Level{from, exp};
}

struct TermSink {
    std::vector<std::pair<BasisWord, Poly>> out;
    void add(BasisWord w, Poly c) { out.emplace_back(std::move(w), std::move(c)); }
};

// Right-multiplies levels[0..top) by g_j (1 <= j <= top-1).
void word_rmul_g(BasisWord w, int top, int j, int d, const Poly& coeff, TermSink& sink) {
    const Level cur = w.levels[static_cast<std::size_t>(top - 1)];
    if (cur.tail_from == 0) {
        if (j == top - 1) {
            // t_top^k g_{top-1} = g_{top-1} t_{top-1}^k
            w.levels[static_cast<std::size_t>(top - 1)] = Level{j, cur.exp};
            sink.add(std::move(w), coeff);
            return;
        }
        word_rmul_g(std::move(w), top - 1, j, d, coeff, sink);
        return;
    }

    const int i = cur.tail_from;
    const int k = cur.exp;
    if (j < i - 1) {
        word_rmul_g(std::move(w), top - 1, j, d, coeff, sink);
        return;
    }
    if (j == i - 1) {
        // the tail absorbs g_{i-1}: (g_{top-1}...g_i t_i^k) g_{i-1}
        //   = g_{top-1}...g_{i-1} t_{i-1}^k
        w.levels[static_cast<std::size_t>(top - 1)] = Level{i - 1, k};
        sink.add(std::move(w), coeff);
        return;
    }
    if (j > i) {
        // (g_{top-1}...g_i) g_j = g_{j-1} (g_{top-1}...g_i) by the braid
        // relations, and g_{j-1} belongs to the lower levels.
        word_rmul_g(std::move(w), top - 1, j - 1, d, coeff, sink);
        return;
    }

    // j == i: the crossing meets the head of its own tail,
    //   (g_{top-1}...g_i t_i^k) g_i = g_{top-1}...g_{i+1} g_i^2 t_{i+1}^k,
    // and the quadratic relation g_i^2 = 1 + (u-1)e_{d,i} - (u-1)e_{d,i}g_i
    // resolves it into 1 + 2d words.
    const Poly u_minus_1 = Poly::u_power(1) - Poly(1);
    const Rational inv_d(1, d);
    {
        BasisWord w1 = w;
        w1.levels[static_cast<std::size_t>(top - 1)] = top_factor(i + 1, k, top);
        sink.add(std::move(w1), coeff);
    }
    Poly c_pos = coeff * u_minus_1;
    c_pos.scale(inv_d);
    const Poly c_neg = -c_pos;
    for (int s = 0; s < d; ++s) {
        {
            BasisWord w2 = w;
            w2.levels[static_cast<std::size_t>(top - 1)] = top_factor(i + 1, mod_d(k - s, d), top);
            word_rmul_t(w2, top - 1, i, s, d);
            sink.add(std::move(w2), c_pos);
        }
        {
            BasisWord w3 = w;
            w3.levels[static_cast<std::size_t>(top - 1)] = Level{i, mod_d(-s, d)};
            word_rmul_t(w3, top - 1, i, k + s, d);
            sink.add(std::move(w3), c_neg);
        }
    }
}

} // namespace

AlgebraElement rmul_t(const AlgebraElement& a, int j, long long m) {
    if (j < 1 || j > a.n()) throw IndexError("framing generator index out of range");
    if (mod_d(m, a.d()) == 0) return a;
    AlgebraElement out(a.d(), a.n());
    for (const auto& [w, c] : a.terms()) {
        BasisWord nw = w;
        word_rmul_t(nw, a.n(), j, m, a.d());
        out.add_term(nw, c);
    }
    return out;
}

AlgebraElement rmul_g(const AlgebraElement& a, int j) {
    if (j < 1 || j >= a.n()) throw IndexError("braid generator index out of range");
    AlgebraElement out(a.d(), a.n());
    for (const auto& [w, c] : a.terms()) {
        TermSink sink;
        word_rmul_g(w, a.n(), j, a.d(), c, sink);
        for (auto& [nw, nc] : sink.out) out.add_term(nw, nc);
    }
    return out;
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a, b);
    const int n = a.n();
    AlgebraElement out(a.d(), n);
    for (const auto& [wb, cb] : b.terms()) {
        AlgebraElement cur = a;
        for (int lev = 1; lev <= n; ++lev) {
            const Level& f = wb.levels[static_cast<std::size_t>(lev - 1)];
            if (f.tail_from == 0) {
                if (f.exp != 0) cur = rmul_t(cur, lev, f.exp);
            } else {
                for (int gi = lev - 1; gi >= f.tail_from; --gi) cur = rmul_g(cur, gi);
                if (f.exp != 0) cur = rmul_t(cur, f.tail_from, f.exp);
            }
        }
        cur.scale(cb);
        out += cur;
    }
    return out;
}

AlgebraElement embed_braid(const SplitFramedBraid& w, int d) {
    AlgebraElement cur(d, w.n);
    BasisWord frames = BasisWord::identity(w.n);
    for (int j = 1; j <= w.n; ++j)
        frames.levels[static_cast<std::size_t>(j - 1)].exp = mod_d(w.framings[static_cast<std::size_t>(j - 1)], d);
    cur.add_term(frames, Poly(1));
    for (const auto& [i, sign] : w.crossings) {
        if (sign > 0)
            cur = rmul_g(cur, i);
        else
            cur = alg_mul(cur, g_power(d, w.n, i, -1));
    }
    return cur;
}

AlgebraElement e_idempotent(int d, int n, int i) {
    if (i < 1 || i >= n) throw IndexError("e_{d,i} requires 1 <= i < n");
    return e_pair(d, n, i, i + 1);
}

AlgebraElement e_pair(int d, int n, int i, int k) {
    if (i < 1 || i > n || k < 1 || k > n || i == k)
        throw IndexError("e_{d,i,k} requires distinct strand indices in range");
    AlgebraElement e(d, n);
    const Rational inv_d(1, d);
    for (int s = 0; s < d; ++s) {
        BasisWord w = BasisWord::identity(n);
        w.levels[static_cast<std::size_t>(i - 1)].exp = s;
        w.levels[static_cast<std::size_t>(k - 1)].exp = mod_d(-s, d);
        e.add_term(w, Poly(inv_d));
    }
    return e;
}

AlgebraElement e_shift(int d, int n, int i, int k) {
    if (i < 1 || i >= n) throw IndexError("e_{d,i}^{(k)} requires 1 <= i < n");
    if (k < 0 || k >= d) throw IndexError("shift exponent must lie in 0..d-1");
    AlgebraElement e(d, n);
    const Rational inv_d(1, d);
    for (int s = 0; s < d; ++s) {
        BasisWord w = BasisWord::identity(n);
        word_rmul_t(w, n, i, k + s, d);
        word_rmul_t(w, n, i + 1, d - s, d);
        e.add_term(w, Poly(inv_d));
    }
    return e;
}

AlgebraElement g_power(int d, int n, int i, long long m) {
    if (i < 1 || i >= n) throw IndexError("braid generator index out of range");
    if (m == 0) return AlgebraElement::unit(d, n);

    const Poly u1 = Poly::u_power(1);
    const Poly v1 = Poly::u_power(-1);
    auto geom = [](const Poly& step, long long count) {
        // 1 + step + ... + step^{count-1}
        Poly acc;
        Poly pw(1);
        for (long long l = 0; l < count; ++l) {
            acc += pw;
            pw *= step;
        }
        return acc;
    };

    const AlgebraElement e = e_idempotent(d, n, i);
    const AlgebraElement eg = rmul_g(e, i);

    Poly coeff;
    bool even = (m % 2) == 0;
    if (m > 0) {
        if (even)
            coeff = (u1 - Poly(1)) * geom(u1 * u1, m / 2);             // alpha_m
        else
            coeff = u1 * (u1 - Poly(1)) * geom(u1 * u1, (m - 1) / 2);  // beta_m
    } else {
        if (even)
            coeff = v1 * (v1 - Poly(1)) * geom(v1 * v1, -m / 2);       // alpha'_m
        else
            coeff = (v1 - Poly(1)) * geom(v1 * v1, (1 - m) / 2);       // beta'_m
    }

    AlgebraElement out(d, n);
    if (even) {
        // g_i^m = 1 + a e_{d,i} - a e_{d,i} g_i
        out = AlgebraElement::unit(d, n);
        AlgebraElement pe = e;
        pe.scale(coeff);
        out += pe;
        AlgebraElement peg = eg;
        peg.scale(-coeff);
        out += peg;
    } else {
        // g_i^m = g_i - b e_{d,i} + b e_{d,i} g_i
        out = g_generator(d, n, i);
        AlgebraElement pe = e;
        pe.scale(-coeff);
        out += pe;
        AlgebraElement peg = eg;
        peg.scale(coeff);
        out += peg;
    }
    return out;
}

std::vector<BasisWord> enumerate_basis(int d, int n, std::size_t max_words) {
    double est = 1.0;
    for (int k = 1; k <= n; ++k) est *= static_cast<double>(d) * k;
    if (est > static_cast<double>(max_words))
        throw BoundExceeded("basis of Y_{d,n} has " + std::to_string(est) +
                            " words, above the bound " + std::to_string(max_words));

    std::vector<BasisWord> words{BasisWord{{}}};
    for (int k = 1; k <= n; ++k) {
        std::vector<BasisWord> next;
        next.reserve(words.size() * static_cast<std::size_t>(d * k));
        for (const auto& w : words) {
            for (int from = 0; from < k; ++from) {       // 0 = Frame, else Tail(from, .)
                for (int m = 0; m < d; ++m) {
                    BasisWord nw = w;
                    nw.levels.push_back(Level{from, m});
                    next.push_back(std::move(nw));
                }
            }
        }
        words = std::move(next);
    }
    return words;
}

BasisWord random_basis_word(int d, int n, std::mt19937_64& rng) {
    BasisWord w;
    w.levels.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        std::uniform_int_distribution<int> from_dist(0, k - 1);
        std::uniform_int_distribution<int> exp_dist(0, d - 1);
        w.levels.push_back(Level{from_dist(rng), exp_dist(rng)});
    }
    return w;
}

AlgebraElement random_element(int d, int n, int terms, std::mt19937_64& rng) {
    AlgebraElement out(d, n);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> upow(-2, 2);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        m.u_exp = upow(rng);
        int c = num(rng);
        if (c == 0) c = 1;
        out.add_term(random_basis_word(d, n, rng), Poly::term(m, Rational(c)));
    }
    return out;
}

SuiteReport relation_suite(int d, int n, std::size_t max_words) {
    double est = 1.0;
    for (int k = 1; k <= n; ++k) est *= static_cast<double>(d) * k;
    if (est > static_cast<double>(max_words))
        throw BoundExceeded("Y_{d,n} too large for the relation suite");

    SuiteReport rep;
    const AlgebraElement one = AlgebraElement::unit(d, n);
    auto g = [&](int i) { return g_generator(d, n, i); };
    auto t = [&](int j, long long m = 1) { return t_power(d, n, j, m); };
    auto tag = [](const std::string& base, int i, int j = -1) {
        std::string s = base + "[i=" + std::to_string(i);
        if (j >= 0) s += ",j=" + std::to_string(j);
        return s + "]";
    };

    // braid relations
    for (int i = 1; i + 1 < n; ++i) {
        AlgebraElement lhs = alg_mul(alg_mul(g(i), g(i + 1)), g(i));
        AlgebraElement rhs = alg_mul(alg_mul(g(i + 1), g(i)), g(i + 1));
        rep.add(tag("g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", i), lhs == rhs);
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            rep.add(tag("g_i g_j = g_j g_i", i, j), alg_mul(g(i), g(j)) == alg_mul(g(j), g(i)));

    // mixed relations
    for (int i = 1; i < n; ++i) {
        rep.add(tag("g_i t_i = t_{i+1} g_i", i), alg_mul(g(i), t(i)) == alg_mul(t(i + 1), g(i)));
        rep.add(tag("g_i t_{i+1} = t_i g_i", i), alg_mul(g(i), t(i + 1)) == alg_mul(t(i), g(i)));
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            rep.add(tag("g_i t_j = t_j g_i", i, j), alg_mul(g(i), t(j)) == alg_mul(t(j), g(i)));
        }
    }

    // modular relations, exercised through the multiplication engine
    for (int j = 1; j <= n; ++j)
        rep.add(tag("t_j^d = 1", j), alg_mul(t(j), t_power(d, n, j, d - 1)) == one);

    // quadratic relation and inverses
    for (int i = 1; i < n; ++i) {
        AlgebraElement e = e_idempotent(d, n, i);
        AlgebraElement quad = one;
        AlgebraElement pe = e;
        pe.scale(Poly::u_power(1) - Poly(1));
        quad += pe;
        AlgebraElement peg = rmul_g(e, i);
        peg.scale(Poly(1) - Poly::u_power(1));
        quad += peg;
        rep.add(tag("g_i^2 = 1 + (u-1)e - (u-1)e g", i), alg_mul(g(i), g(i)) == quad);
        rep.add(tag("g_i^2 closed form", i), g_power(d, n, i, 2) == quad);
        rep.add(tag("g_i g_i^{-1} = 1", i), alg_mul(g(i), g_power(d, n, i, -1)) == one);
        rep.add(tag("g_i^{-1} g_i = 1", i), alg_mul(g_power(d, n, i, -1), g(i)) == one);
    }

    // e_{d,i} commutation and idempotency, including the g -> g^{-1} variants
    for (int i = 1; i < n; ++i) {
        AlgebraElement e = e_idempotent(d, n, i);
        rep.add(tag("e_i e_i = e_i", i), alg_mul(e, e) == e);
        for (int j = 1; j <= n; ++j)
            rep.add(tag("t_j e_i = e_i t_j", i, j), alg_mul(t(j), e) == alg_mul(e, t(j)));
        for (int j = 1; j < n; ++j) {
            if (j == i - 1 || j == i + 1) continue;
            rep.add(tag("g_j e_i = e_i g_j", i, j), alg_mul(g(j), e) == alg_mul(e, g(j)));
            AlgebraElement gj_inv = g_power(d, n, j, -1);
            rep.add(tag("g_j^{-1} e_i = e_i g_j^{-1}", i, j),
                    alg_mul(gj_inv, e) == alg_mul(e, gj_inv));
        }
        for (int j = 1; j < n; ++j)
            rep.add(tag("e_j e_i = e_i e_j", i, j),
                    alg_mul(e_idempotent(d, n, j), e) == alg_mul(e, e_idempotent(d, n, j)));
        if (i >= 2) {
            AlgebraElement mixed = e_pair(d, n, i - 1, i + 1);
            rep.add(tag("g_{i-1} e_i = e_{i-1,i+1} g_{i-1}", i),
                    alg_mul(g(i - 1), e) == alg_mul(mixed, g(i - 1)));
            rep.add(tag("e_i g_{i-1} = g_{i-1} e_{i-1,i+1}", i),
                    alg_mul(e, g(i - 1)) == alg_mul(g(i - 1), mixed));
            AlgebraElement gi_inv = g_power(d, n, i - 1, -1);
            rep.add(tag("g_{i-1}^{-1} e_i = e_{i-1,i+1} g_{i-1}^{-1}", i),
                    alg_mul(gi_inv, e) == alg_mul(mixed, gi_inv));
        }
        if (i + 2 <= n) {
            AlgebraElement mixed = e_pair(d, n, i, i + 2);
            rep.add(tag("g_{i+1} e_i = e_{i,i+2} g_{i+1}", i),
                    alg_mul(g(i + 1), e) == alg_mul(mixed, g(i + 1)));
            rep.add(tag("e_i g_{i+1} = g_{i+1} e_{i,i+2}", i),
                    alg_mul(e, g(i + 1)) == alg_mul(g(i + 1), mixed));
            AlgebraElement gi_inv = g_power(d, n, i + 1, -1);
            rep.add(tag("g_{i+1}^{-1} e_i = e_{i,i+2} g_{i+1}^{-1}", i),
                    alg_mul(gi_inv, e) == alg_mul(mixed, gi_inv));
        }
    }

    // pair idempotents
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            AlgebraElement eik = e_pair(d, n, i, k);
            rep.add(tag("e_{i,k} = e_{k,i}", i, k), eik == e_pair(d, n, k, i));
            rep.add(tag("e_{i,k}^2 = e_{i,k}", i, k), alg_mul(eik, eik) == eik);
        }

    // e_{d,i}^{(0)} = e_{d,i}
    for (int i = 1; i < n; ++i)
        rep.add(tag("e_i^{(0)} = e_i", i), e_shift(d, n, i, 0) == e_idempotent(d, n, i));

    return rep;
}

} // namespace ydn
