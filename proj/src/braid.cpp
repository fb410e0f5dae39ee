#include "ydn/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace ydn {

namespace {

void check_letter(const BraidLetter& l, int n) {
    if (l.kind == BraidLetter::Kind::Sigma) {
        if (l.index < 1 || l.index >= n)
            throw IndexError("crossing index s" + std::to_string(l.index) +
                             " out of range for " + std::to_string(n) + " strands");
        if (l.exp != 1 && l.exp != -1)
            throw IndexError("crossing exponent must be +-1");
    } else {
        if (l.index < 1 || l.index > n)
            throw IndexError("framing index t" + std::to_string(l.index) +
                             " out of range for " + std::to_string(n) + " strands");
    }
}

} // namespace

FramedBraidWord::FramedBraidWord(int strands, std::vector<BraidLetter> ls)
    : n(strands), letters(std::move(ls)) {
    if (n < 1) throw IndexError("strand count must be >= 1");
    for (const auto& l : letters) check_letter(l, n);
}

FramedBraidWord& FramedBraidWord::append(const BraidLetter& l) {
    check_letter(l, n);
    letters.push_back(l);
    return *this;
}

FramedBraidWord FramedBraidWord::concat(const FramedBraidWord& other) const {
    if (n != other.n) throw MismatchedStrands("cannot concatenate words on different strand counts");
    FramedBraidWord out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
}

std::string FramedBraidWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters) {
        if (!first) os << " ";
        first = false;
        if (l.kind == BraidLetter::Kind::Sigma) {
            os << "s" << l.index;
            if (l.exp < 0) os << "^-1";
        } else {
            os << "t" << l.index;
            if (l.exp != 1) os << "^" << l.exp;
        }
    }
    return os.str();
}

SplitFramedBraid::SplitFramedBraid(int strands) : n(strands), framings(strands, 0) {
    if (n < 1) throw IndexError("strand count must be >= 1");
}

FramedBraidWord parse_braid(const std::string& text, int n) {
    FramedBraidWord out(n, {});
    std::size_t pos = 0;
    const std::size_t len = text.size();
    while (pos < len) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t tok_start = pos;
        char head = text[pos];
        if (head != 's' && head != 't')
            throw ParseError(tok_start, "expected 's' or 't' token");
        ++pos;
        std::size_t digits_start = pos;
        while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_start)
            throw ParseError(digits_start, "expected strand index after '" + std::string(1, head) + "'");
        int index = std::stoi(text.substr(digits_start, pos - digits_start));
        long long exp = 1;
        if (pos < len && text[pos] == '^') {
            ++pos;
            std::size_t exp_start = pos;
            if (pos < len && (text[pos] == '-' || text[pos] == '+')) ++pos;
            std::size_t exp_digits = pos;
            while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == exp_digits)
                throw ParseError(exp_start, "expected integer exponent after '^'");
            exp = std::stoll(text.substr(exp_start, pos - exp_start));
        }
        if (pos < len && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, "unexpected character inside token");
        if (head == 's') {
            if (exp != 1 && exp != -1)
                throw ParseError(tok_start, "crossing exponent must be 1 or -1");
            out.append(BraidLetter::sigma(index, static_cast<int>(exp)));
        } else {
            out.append(BraidLetter::frame(index, exp));
        }
    }
    return out;
}

std::vector<int> braid_permutation(const std::vector<std::pair<int, int>>& crossings, int n) {
    // perm[j-1] = image of strand j; built so that for the word w,
    // w * t_j = t_{perm(j)} * w.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    // Processing letters left to right and precomposing with the
    // transposition (i, i+1) swaps the two slots.
    for (const auto& [i, sign] : crossings) {
        (void)sign;
        std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    }
    return perm;
}

int closure_components(const SplitFramedBraid& b) {
    std::vector<int> perm = braid_permutation(b.crossings, b.n);
    std::vector<bool> seen(static_cast<std::size_t>(b.n), false);
    int cycles = 0;
    for (int j = 1; j <= b.n; ++j) {
        if (seen[static_cast<std::size_t>(j - 1)]) continue;
        ++cycles;
        int cur = j;
        while (!seen[static_cast<std::size_t>(cur - 1)]) {
            seen[static_cast<std::size_t>(cur - 1)] = true;
            cur = perm[static_cast<std::size_t>(cur - 1)];
        }
    }
    return cycles;
}

SplitFramedBraid split_form(const FramedBraidWord& w) {
    SplitFramedBraid out(w.n);
    // perm tracks the permutation of the crossing prefix read so far, so a
    // framing letter t_j^m moves to the top as t_{perm(j)}^m.
    std::vector<int> perm(static_cast<std::size_t>(w.n));
    std::iota(perm.begin(), perm.end(), 1);
    for (const auto& l : w.letters) {
        if (l.kind == BraidLetter::Kind::Frame) {
            int target = perm[static_cast<std::size_t>(l.index - 1)];
            out.framings[static_cast<std::size_t>(target - 1)] += l.exp;
        } else {
            out.crossings.emplace_back(l.index, static_cast<int>(l.exp));
            std::swap(perm[static_cast<std::size_t>(l.index - 1)],
                      perm[static_cast<std::size_t>(l.index)]);
        }
    }
    return out;
}

SplitFramedBraid braid_mul(const SplitFramedBraid& a, const SplitFramedBraid& b) {
    if (a.n != b.n) throw MismatchedStrands("cannot multiply braids on different strand counts");
    SplitFramedBraid out(a.n);
    std::vector<int> perm = braid_permutation(a.crossings, a.n);
    for (int i = 1; i <= a.n; ++i) {
        out.framings[static_cast<std::size_t>(i - 1)] =
            a.framings[static_cast<std::size_t>(i - 1)] +
            b.framings[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] - 1)];
    }
    out.crossings = a.crossings;
    out.crossings.insert(out.crossings.end(), b.crossings.begin(), b.crossings.end());
    return out;
}

long long exponent_sum(const FramedBraidWord& w) {
    long long e = 0;
    for (const auto& l : w.letters)
        if (l.kind == BraidLetter::Kind::Sigma) e += l.exp;
    return e;
}

long long exponent_sum(const SplitFramedBraid& b) {
    long long e = 0;
    for (const auto& [i, sign] : b.crossings) e += sign;
    return e;
}

SplitFramedBraid mod_reduce(const SplitFramedBraid& b, int d) {
    if (d < 1) throw IndexError("modulus must be >= 1");
    SplitFramedBraid out = b;
    for (auto& f : out.framings) {
        f %= d;
        if (f < 0) f += d;
    }
    return out;
}

} // namespace ydn
