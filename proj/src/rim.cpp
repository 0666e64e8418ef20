#include "grasscat/rim.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

#include "grasscat/errors.hpp"

namespace grasscat {

Rim::Rim(int n, const std::vector<int>& elements) : n_(n) {
    if (n < 2 || n > 64) throw Error("rim: ambient size out of range");
    for (int e : elements) {
        if (e < 1 || e > n) throw Error("rim: element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
        std::uint64_t bit = std::uint64_t{1} << (e - 1);
        if (mask_ & bit) throw Error("rim: repeated element " + std::to_string(e));
        mask_ |= bit;
    }
    elems_ = elements;
    std::sort(elems_.begin(), elems_.end());
}

Rim Rim::from_mask(int n, std::uint64_t mask) {
    std::vector<int> e;
    for (int i = 1; i <= n; ++i)
        if ((mask >> (i - 1)) & 1) e.push_back(i);
    return Rim(n, e);
}

std::string Rim::str() const {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (n_ >= 10 && i) s += ',';
        s += std::to_string(elems_[i]);
    }
    return s;
}

std::vector<Rim> all_rims(int k, int n) {
    std::vector<Rim> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) == k) out.push_back(Rim::from_mask(n, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> peaks(const Rim& r) {
    std::vector<int> p;
    for (int i = 1; i <= r.n(); ++i)
        if (!r.contains(i) && r.contains(i + 1)) p.push_back(i);
    return p;
}

namespace {

// Maximal cyclic runs of positions where pred holds, ordered by start.
template <class Pred>
std::vector<Interval> runs(int n, Pred in) {
    std::vector<Interval> out;
    for (int s = 1; s <= n; ++s) {
        if (!in(s) || in(s - 1)) continue;
        int len = 0;
        while (len < n && in(s + len)) ++len;
        out.push_back({s, len});
    }
    return out;
}

}  // namespace

SlopeData slopes(const Rim& r) {
    SlopeData d;
    const int n = r.n();
    d.down = runs(n, [&](int i) { return r.contains(i); });
    d.up = runs(n, [&](int i) { return !r.contains(i); });
    d.min_slope = n;
    for (auto& iv : d.down) d.min_slope = std::min(d.min_slope, iv.length);
    for (auto& iv : d.up) d.min_slope = std::min(d.min_slope, iv.length);
    return d;
}

Rim shift(const Rim& r, int m) {
    std::vector<int> e;
    for (int x : r.elements()) e.push_back(wrap(x + m, r.n()));
    return Rim(r.n(), e);
}

std::optional<int> is_projective(const Rim& r) {
    auto d = runs(r.n(), [&](int i) { return r.contains(i); });
    if (d.size() != 1) return std::nullopt;
    return wrap(d[0].start - 1, r.n());
}

Rim projective_rim(int j, int k, int n) {
    std::vector<int> e;
    for (int a = 1; a <= k; ++a) e.push_back(wrap(j + a, n));
    return Rim(n, e);
}

std::optional<std::pair<int, int>> is_almost_consecutive(const Rim& r) {
    auto d = runs(r.n(), [&](int i) { return r.contains(i); });
    if (d.size() != 2) return std::nullopt;
    std::optional<std::pair<int, int>> best;
    for (int a = 0; a < 2; ++a) {
        if (d[a].length != 1) continue;
        std::pair<int, int> cand{d[a].start, d[1 - a].start};
        if (!best || cand.first < best->first) best = cand;
    }
    return best;
}

Rim syzygy_rim(const Rim& r) {
    auto ij = is_almost_consecutive(r);
    if (!ij) throw NotAlmostConsecutive("syzygy_rim: " + r.str() + " is not almost consecutive");
    auto [i, j] = *ij;
    const int k = r.k(), n = r.n();
    std::vector<int> e;
    for (int a = 1; a <= k - 1; ++a) e.push_back(wrap(i + a, n));
    e.push_back(wrap(j + k - 1, n));
    return Rim(n, e);
}

namespace {

void check_ambient(const Rim& a, const Rim& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw MismatchedAmbient("rims " + a.str() + " and " + b.str() + " live in different (k,n)");
}

}  // namespace

int interlacing_degree(const Rim& a, const Rim& b) {
    check_ambient(a, b);
    std::vector<int> side;
    for (int i = 1; i <= a.n(); ++i) {
        bool x = a.contains(i), y = b.contains(i);
        if (x != y) side.push_back(x ? 0 : 1);
    }
    if (side.empty()) return 0;
    int changes = 0;
    for (std::size_t i = 0; i < side.size(); ++i)
        if (side[i] != side[(i + 1) % side.size()]) ++changes;
    return changes / 2;
}

bool crossing(const Rim& a, const Rim& b) { return interlacing_degree(a, b) >= 2; }

PairClass classify_pair(const Rim& a, const Rim& b) {
    PairClass c;
    c.interlacing_degree = interlacing_degree(a, b);
    c.intersection_size = std::popcount(a.mask() & b.mask());
    c.crossing = c.interlacing_degree >= 2;
    c.tight = c.interlacing_degree == 3 && c.intersection_size == a.k() - 3;
    if (c.interlacing_degree >= 1) c.poset = "(1^" + std::to_string(c.interlacing_degree) + ",2)";
    return c;
}

ARMiddle ar_middle_profile(const Rim& r) {
    auto ij = is_almost_consecutive(r);
    if (!ij) throw NotAlmostConsecutive("ar_middle_profile: " + r.str() + " is not almost consecutive");
    auto [i, j] = *ij;
    const int k = r.k(), n = r.n();
    ARMiddle m;
    if (wrap(j - i, n) == 2) {
        m.split = true;
        m.projective = i;
        std::vector<int> u{wrap(i, n)};
        for (int a = i + 2; a <= k + i - 1; ++a) u.push_back(wrap(a, n));
        u.push_back(wrap(k + i + 1, n));
        m.U = Rim(n, u);
        return m;
    }
    std::vector<int> x{wrap(i + 1, n)};
    for (int a = j; a <= j + k - 3; ++a) x.push_back(wrap(a, n));
    x.push_back(wrap(j + k - 1, n));
    m.X = Rim(n, x);

    std::map<int, int> mult;
    for (int e : r.elements()) ++mult[e];
    const Rim J = syzygy_rim(r);
    for (int e : J.elements()) ++mult[e];
    for (int e : m.X.elements())
        if (--mult[e] < 0) throw Error("ar_middle_profile: X is not contained in I + J");
    std::vector<int> y;
    for (auto [e, c] : mult) {
        if (c > 1) throw Error("ar_middle_profile: Y has a repeated element");
        if (c == 1) y.push_back(e);
    }
    m.Y = Rim(n, y);
    return m;
}

std::pair<int, int> parse_ambient(const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos) return {0, 0};
    std::string s = text.substr(at + 1);
    int k = 0, n = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(s);
    if (!(is >> c1 >> k >> c2 >> n >> c3) || c1 != '(' || c2 != ',' || c3 != ')')
        throw ParseError("cannot read ambient parameters from '" + text + "'");
    return {k, n};
}

Rim parse_rim(const std::string& text, int n_hint) {
    auto [k, n] = parse_ambient(text);
    if (n == 0) n = n_hint;
    if (n == 0) throw ParseError("rim '" + text + "' needs an @(k,n) suffix");
    std::string body = text.substr(0, text.find('@'));
    std::vector<int> e;
    if (body.find(',') != std::string::npos) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) e.push_back(std::stoi(tok));
    } else {
        if (n >= 10) throw ParseError("rim '" + text + "': use commas when n >= 10");
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad rim text '" + text + "'");
            e.push_back(c - '0');
        }
    }
    Rim r(n, e);
    if (k && r.k() != k) throw ParseError("rim '" + text + "' has size " + std::to_string(r.k()) + ", expected " + std::to_string(k));
    return r;
}

}  // namespace grasscat
