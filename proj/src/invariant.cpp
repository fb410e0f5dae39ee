#include "ydn/invariant.hpp"

#include <cmath>
#include <map>

#include "ydn/algebra.hpp"
#include "ydn/trace.hpp"

namespace ydn {

namespace {

ComplexVal cpow(ComplexVal base, long long e) {
    if (e == 0) return {1.0, 0.0};
    bool neg = e < 0;
    unsigned long long k = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    ComplexVal acc{1.0, 0.0};
    ComplexVal b = base;
    while (k > 0) {
        if (k & 1ull) acc *= b;
        b *= b;
        k >>= 1ull;
    }
    return neg ? ComplexVal{1.0, 0.0} / acc : acc;
}

std::vector<ComplexVal> solution_values(const InvariantParams& p) {
    return p.solution.values.values;
}

} // namespace

ComplexVal InvariantParams::E_shift(long long m) const {
    ComplexVal acc{0.0, 0.0};
    for (int s = 0; s < d; ++s) acc += x(m + s) * x(static_cast<long long>(d) - s);
    return acc / static_cast<double>(d);
}

InvariantParams make_params(int d, ESolution solution, ComplexVal u, ComplexVal z,
                            SqrtBranch branch) {
    if (solution.d != d) throw ParamDomainError("solution order does not match d");
    if (u == ComplexVal{0.0, 0.0} || u == ComplexVal{1.0, 0.0})
        throw ParamDomainError("u must avoid 0 and 1");
    if (z == ComplexVal{0.0, 0.0}) throw ParamDomainError("z must be nonzero");

    InvariantParams p;
    p.d = d;
    p.solution = std::move(solution);
    p.u = u;
    p.z = z;
    p.branch = branch;
    p.Ed = p.E_shift(0);
    p.omega = (z + (u - ComplexVal{1.0, 0.0}) * p.Ed) / (u * z);
    if (std::abs(p.omega) < 1e-15) throw ParamDomainError("omega vanishes at these parameters");
    p.sqrt_omega = std::sqrt(p.omega);
    if (branch == SqrtBranch::Negated) p.sqrt_omega = -p.sqrt_omega;
    p.delta = ComplexVal{1.0, 0.0} / (z * p.sqrt_omega);
    return p;
}

ComplexVal gamma_of_trace(const Poly& tr, int n, long long eps, const InvariantParams& params) {
    const ComplexVal value = tr.eval(params.u, params.z, solution_values(params));
    return cpow(params.delta, n - 1) * cpow(params.sqrt_omega, eps) * value;
}

ComplexVal gamma(const FramedBraidWord& w, const InvariantParams& params) {
    const SplitFramedBraid split = mod_reduce(split_form(w), params.d);
    const AlgebraElement image = embed_braid(split, params.d);
    return gamma_of_trace(trace(image), w.n, exponent_sum(w), params);
}

FramedBraidWord link_braid(const Link& link) {
    using K = Link::Kind;
    switch (link.kind) {
        case K::Unknot: {
            FramedBraidWord w(1, {});
            if (link.k != 0) w.append(BraidLetter::frame(1, link.k));
            return w;
        }
        case K::Hopf: {
            FramedBraidWord w(2, {});
            w.append(BraidLetter::sigma(1, 1)).append(BraidLetter::sigma(1, 1));
            if (link.k != 0) w.append(BraidLetter::frame(1, link.k));
            if (link.l != 0) w.append(BraidLetter::frame(2, link.l));
            return w;
        }
        case K::TrefoilR: {
            FramedBraidWord w(2, {});
            for (int i = 0; i < 3; ++i) w.append(BraidLetter::sigma(1, 1));
            if (link.k != 0) w.append(BraidLetter::frame(1, link.k));
            return w;
        }
        case K::TrefoilL: {
            FramedBraidWord w(2, {});
            for (int i = 0; i < 3; ++i) w.append(BraidLetter::sigma(1, -1));
            if (link.k != 0) w.append(BraidLetter::frame(1, link.k));
            return w;
        }
    }
    throw ParamDomainError("unknown link kind");
}

ComplexVal closed_form(const Link& link, const InvariantParams& p) {
    using K = Link::Kind;
    const ComplexVal one{1.0, 0.0};
    const ComplexVal u = p.u;
    const ComplexVal z = p.z;
    switch (link.kind) {
        case K::Unknot:
            return p.x(link.k);
        case K::Hopf: {
            ComplexVal bracket = p.x(link.l) * p.x(link.k) +
                                 (u - one) * p.E_shift(link.k + link.l) -
                                 (u - one) * z * p.x(link.k + link.l);
            return p.delta * p.omega * bracket;
        }
        case K::TrefoilR: {
            ComplexVal bracket = (u * u - u + one) * z * p.x(link.k) -
                                 u * (u - one) * p.E_shift(link.k);
            return p.delta * cpow(p.sqrt_omega, 3) * bracket;
        }
        case K::TrefoilL: {
            const ComplexVal v = one / u;
            ComplexVal poly = v * v * v - v * v + v;
            ComplexVal bracket = poly * z * p.x(link.k) - (poly - one) * p.E_shift(link.k);
            return p.delta * cpow(p.sqrt_omega, -3) * bracket;
        }
    }
    throw ParamDomainError("unknown link kind");
}

SuiteReport markov_check(const FramedBraidWord& w, const InvariantParams& params,
                         int trials, std::uint64_t seed) {
    SuiteReport rep;
    std::mt19937_64 rng(seed);
    const ComplexVal base = gamma(w, params);
    const double tol = 1e-8 * (1.0 + std::abs(base));

    bool conj_ok = true;
    double conj_worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        FramedBraidWord beta = random_braid_word(w.n, 4, 3, rng);
        ComplexVal ab = gamma(w.concat(beta), params);
        ComplexVal ba = gamma(beta.concat(w), params);
        double err = std::abs(ab - ba) / (1.0 + std::abs(ab));
        conj_worst = std::max(conj_worst, err);
        if (err > 1e-8) conj_ok = false;
    }
    rep.add("conjugation invariance", conj_ok, "worst " + std::to_string(conj_worst));

    // stabilization: view w on one more strand and append sigma_n^{+-1}
    FramedBraidWord up(w.n + 1, w.letters);
    FramedBraidWord stab_pos = up;
    stab_pos.append(BraidLetter::sigma(w.n, 1));
    FramedBraidWord stab_neg = up;
    stab_neg.append(BraidLetter::sigma(w.n, -1));
    const double err_pos = std::abs(gamma(stab_pos, params) - base);
    const double err_neg = std::abs(gamma(stab_neg, params) - base);
    rep.add("positive stabilization", err_pos <= tol, "err " + std::to_string(err_pos));
    rep.add("negative stabilization", err_neg <= tol, "err " + std::to_string(err_neg));
    return rep;
}

double skein_residual(const FramedBraidWord& beta, int i, const InvariantParams& p) {
    if (i < 1 || i >= beta.n) throw IndexError("crossing site out of range");
    const ComplexVal one{1.0, 0.0};
    const ComplexVal vm1 = one / p.u - one;  // u^{-1} - 1

    FramedBraidWord lp = beta;
    lp.append(BraidLetter::sigma(i, 1));
    FramedBraidWord lm = beta;
    lm.append(BraidLetter::sigma(i, -1));

    ComplexVal lhs = gamma(lp, p) / p.sqrt_omega - p.sqrt_omega * gamma(lm, p);

    ComplexVal sum_m{0.0, 0.0};
    ComplexVal sum_mp{0.0, 0.0};
    for (int m = 0; m < p.d; ++m) {
        FramedBraidWord twisted = beta;
        twisted.append(BraidLetter::frame(i, m));
        twisted.append(BraidLetter::frame(i + 1, -m));
        FramedBraidWord lmw = twisted;
        lmw.append(BraidLetter::sigma(i, 1));
        sum_m += gamma(lmw, p);
        sum_mp += gamma(twisted, p);
    }
    ComplexVal rhs = (vm1 / static_cast<double>(p.d)) * sum_m -
                     (vm1 / (static_cast<double>(p.d) * p.sqrt_omega)) * sum_mp;
    return std::abs(lhs - rhs);
}

namespace {

// Two-strand tower V(k) = Gamma(closure(sigma^k)) computed purely from the
// skein relation and the unknot/unlink normalization.
ComplexVal two_strand_tower(long long k, const InvariantParams& p,
                            std::map<long long, ComplexVal>& memo) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    const ComplexVal one{1.0, 0.0};
    const ComplexVal uo = p.u * p.omega;
    const ComplexVal vm1 = one / p.u - one;
    ComplexVal v;
    if (k >= 2)
        v = uo * two_strand_tower(k - 2, p, memo) +
            uo * vm1 / p.sqrt_omega * two_strand_tower(k - 1, p, memo);
    else
        v = two_strand_tower(k + 2, p, memo) / uo -
            vm1 / p.sqrt_omega * two_strand_tower(k + 1, p, memo);
    memo.emplace(k, v);
    return v;
}

} // namespace

ComplexVal homflypt_oracle(const FramedBraidWord& w, const InvariantParams& p) {
    if (p.d != 1) throw ParamDomainError("the HOMFLYPT oracle runs at d = 1");
    std::vector<std::pair<int, int>> crossings;
    for (const auto& l : w.letters) {
        if (l.kind == BraidLetter::Kind::Frame) {
            if (l.exp != 0) throw ParamDomainError("the HOMFLYPT oracle needs zero framings");
            continue;
        }
        crossings.emplace_back(l.index, static_cast<int>(l.exp));
    }
    // free reduction
    std::vector<std::pair<int, int>> reduced;
    for (const auto& c : crossings) {
        if (!reduced.empty() && reduced.back().first == c.first &&
            reduced.back().second == -c.second)
            reduced.pop_back();
        else
            reduced.push_back(c);
    }
    if (reduced.size() > 3) throw OracleBoundExceeded("oracle handles at most 3 crossings");
    for (const auto& c : reduced)
        if (c.first != reduced.front().first)
            throw OracleBoundExceeded("oracle handles a single generator index");

    const ComplexVal delta_val = p.delta;
    if (reduced.empty()) return cpow(delta_val, w.n - 1);

    long long k = 0;
    for (const auto& c : reduced) k += c.second;

    std::map<long long, ComplexVal> memo;
    memo.emplace(0, delta_val);  // 2-component unlink
    memo.emplace(1, ComplexVal{1.0, 0.0});
    memo.emplace(-1, ComplexVal{1.0, 0.0});
    return two_strand_tower(k, p, memo) * cpow(delta_val, w.n - 2);
}

CrossCheck homflypt_crosscheck(const FramedBraidWord& w, const InvariantParams& p, double tol) {
    CrossCheck out;
    out.engine = gamma(w, p);
    out.oracle = homflypt_oracle(w, p);
    out.pass = std::abs(out.engine - out.oracle) <= tol * (1.0 + std::abs(out.oracle));
    return out;
}

FramedBraidWord random_braid_word(int n, int len, long long max_framing,
                                  std::mt19937_64& rng) {
    FramedBraidWord b(n, {});
    std::uniform_int_distribution<int> kind(0, n >= 2 ? 2 : 0);
    std::uniform_int_distribution<int> strand(1, n);
    std::uniform_int_distribution<int> crossing(1, std::max(1, n - 1));
    std::uniform_int_distribution<long long> framing(-max_framing, max_framing);
    for (int i = 0; i < len; ++i) {
        switch (kind(rng)) {
            case 0: b.append(BraidLetter::frame(strand(rng), framing(rng))); break;
            case 1: b.append(BraidLetter::sigma(crossing(rng), 1)); break;
            default: b.append(BraidLetter::sigma(crossing(rng), -1)); break;
        }
    }
    return b;
}

SuiteReport invariant_suite(int d, ComplexVal u, ComplexVal z, std::uint64_t seed, double tol) {
    SuiteReport rep;
    std::mt19937_64 rng(seed);
    const std::vector<Link> links = {
        {Link::Kind::Unknot, 0, 0}, {Link::Kind::Unknot, 1, 0},
        {Link::Kind::Hopf, 0, 0},   {Link::Kind::Hopf, 1, d - 1},
        {Link::Kind::TrefoilR, 0},  {Link::Kind::TrefoilR, 1},
        {Link::Kind::TrefoilL, 0},  {Link::Kind::TrefoilL, 1},
    };
    for (const auto& sol : solve_all(d)) {
        for (const auto branch : {SqrtBranch::Principal, SqrtBranch::Negated}) {
            const InvariantParams params = make_params(d, sol, u, z, branch);
            bool ok = true;
            double worst = 0.0;
            for (const auto& link : links) {
                ComplexVal lhs = gamma(link_braid(link), params);
                ComplexVal rhs = closed_form(link, params);
                double err = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
                worst = std::max(worst, err);
                if (err > tol) ok = false;
            }
            std::string name = "gamma = closed form, |S|=" + std::to_string(sol.support.size());
            for (int s : sol.support) name += "," + std::to_string(s);
            name += (branch == SqrtBranch::Principal ? " principal" : " negated");
            rep.add(name, ok, "worst " + std::to_string(worst));
        }
    }
    {
        const InvariantParams params = make_params(d, delta_solution(d), u, z);
        FramedBraidWord braid = random_braid_word(3, 6, d - 1, rng);
        SuiteReport mk = markov_check(braid, params, 5, rng());
        rep.add("markov moves on a random braid", mk.all_pass());
    }
    return rep;
}

SuiteReport skein_suite(int d, ComplexVal u, ComplexVal z, int trials, std::uint64_t seed,
                        double tol) {
    SuiteReport rep;
    std::mt19937_64 rng(seed);
    for (const auto& sol : solve_all(d)) {
        const InvariantParams params = make_params(d, sol, u, z);
        bool ok = true;
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            std::uniform_int_distribution<int> strands(2, 3);
            const int n = strands(rng);
            std::uniform_int_distribution<int> site(1, n - 1);
            FramedBraidWord beta = random_braid_word(n, 4, d - 1, rng);
            double res = skein_residual(beta, site(rng), params);
            worst = std::max(worst, res);
            if (res > tol) ok = false;
        }
        std::string name = "skein residual, |S|=" + std::to_string(sol.support.size());
        for (int s : sol.support) name += "," + std::to_string(s);
        rep.add(name, ok, "worst " + std::to_string(worst));
    }
    return rep;
}

} // namespace ydn
