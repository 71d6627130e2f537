#include "szeta/words.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

namespace szeta {

namespace {

// comparison key: word symbols, then element index
bool pair_less(const GClosedPair& a, const GClosedPair& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.g < b.g;
}

std::vector<int> pair_key(const GClosedPair& p) {
    std::vector<int> k = p.word;
    k.push_back(p.g);
    return k;
}

} // namespace

bool is_valid_pair(const IfsScheme& s, const Group& G, const GClosedPair& p) {
    if (p.word.size() < 2) return false;
    for (size_t i = 0; i + 1 < p.word.size(); ++i)
        if (!s.adjacent(p.word[i], p.word[i + 1])) return false;
    return G.apply(p.g, p.word.back()) == p.word.front();
}

GClosedPair shift_left(const Group& G, const GClosedPair& p) {
    const int n = p.length();
    GClosedPair q;
    q.g = p.g;
    q.word.reserve(n + 1);
    for (int i = 1; i <= n; ++i) q.word.push_back(p.word[i]);
    q.word.push_back(G.apply(G.inverse(p.g), p.word[1]));
    return q;
}

GClosedPair shift_right(const Group& G, const GClosedPair& p) {
    const int n = p.length();
    GClosedPair q;
    q.g = p.g;
    q.word.reserve(n + 1);
    q.word.push_back(G.apply(p.g, p.word[n - 1]));
    for (int i = 0; i < n; ++i) q.word.push_back(p.word[i]);
    return q;
}

GClosedPair act(const Group& G, int h, const GClosedPair& p) {
    GClosedPair q;
    q.word.reserve(p.word.size());
    for (int w : p.word) q.word.push_back(G.apply(h, w));
    q.g = G.multiply(G.multiply(h, p.g), G.inverse(h));
    return q;
}

GClosedPair iterate_pair(const Group& G, const GClosedPair& p, int k) {
    if (k < 1) throw Error("iterate_pair: k must be >= 1");
    const int n = p.length();
    GClosedPair q;
    q.g = G.power(p.g, k);
    q.word.reserve(k * n + 1);
    for (int j = k - 1; j >= 0; --j) {
        const int gj = G.power(p.g, j);
        if (j == k - 1) q.word.push_back(G.apply(gj, p.word[0]));
        for (int i = 1; i <= n; ++i) q.word.push_back(G.apply(gj, p.word[i]));
    }
    return q;
}

std::vector<GClosedPair> full_orbit(const Group& G, const GClosedPair& p) {
    const int n = p.length();
    std::vector<GClosedPair> orbit;
    std::set<std::vector<int>> seen;
    for (int h = 0; h < G.size(); ++h) {
        GClosedPair q = act(G, h, p);
        for (int k = 0; k < n; ++k) {
            if (seen.insert(pair_key(q)).second) orbit.push_back(q);
            q = shift_left(G, q);
        }
    }
    return orbit;
}

GClosedPair canonicalize(const Group& G, const GClosedPair& p) {
    const int n = p.length();
    GClosedPair best = p;
    for (int h = 0; h < G.size(); ++h) {
        GClosedPair q = act(G, h, p);
        for (int k = 0; k < n; ++k) {
            if (pair_less(q, best)) best = q;
            q = shift_left(G, q);
        }
    }
    return best;
}

namespace {

double class_length(const IfsScheme& s, const Group& G, const GClosedPair& p, int m) {
    const GClosedPair closed = (m == 1) ? p : iterate_pair(G, p, m);
    return displacement_length(closed_word_matrix(s, closed.word));
}

} // namespace

std::vector<PrimeClassDatum> enumerate_prime_classes_bruteforce(const IfsScheme& s,
                                                                const Group& G, int max_n) {
    const int N = s.n_symbols();
    if (max_n * std::log(double(N)) > std::log(1e8))
        throw TooLarge("enumerate_prime_classes_bruteforce: symbol_count^max_n > 1e8");

    // closers[a][b]: elements g with g(b) = a
    std::vector<std::vector<std::vector<int>>> closers(N + 1,
                                                       std::vector<std::vector<int>>(N + 1));
    for (int g = 0; g < G.size(); ++g)
        for (int b = 1; b <= N; ++b) closers[G.apply(g, b)][b].push_back(g);

    std::vector<PrimeClassDatum> out;
    std::set<std::vector<int>> iterate_canon; // canonical keys of composites

    std::vector<PrimeClassDatum> primes_so_far;
    for (int n = 1; n <= max_n; ++n) {
        // register iterates of shorter primes landing at length n
        for (const auto& cls : primes_so_far)
            if (n % cls.n_w == 0 && n > cls.n_w) {
                const GClosedPair it = iterate_pair(G, cls.canonical, n / cls.n_w);
                iterate_canon.insert(pair_key(canonicalize(G, it)));
            }
        std::map<std::vector<int>, GClosedPair> found;
        Word w;
        w.reserve(n + 1);
        auto visit = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                for (int g : closers[w.front()][w.back()]) {
                    GClosedPair p{w, g};
                    const GClosedPair c = canonicalize(G, p);
                    found.emplace(pair_key(c), c);
                }
                return;
            }
            for (int j = 1; j <= N; ++j)
                if (s.adjacent(w.back(), j)) {
                    w.push_back(j);
                    self(self, depth + 1);
                    w.pop_back();
                }
        };
        for (int start = 1; start <= N; ++start) {
            w.assign(1, start);
            visit(visit, 0);
        }
        for (const auto& [key, c] : found) {
            if (iterate_canon.count(key)) continue; // composite
            PrimeClassDatum d;
            d.canonical = c;
            d.n_w = n;
            d.m_w = G.order(c.g);
            d.length_L = class_length(s, G, c, d.m_w);
            primes_so_far.push_back(d);
            out.push_back(std::move(d));
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeClassDatum& a, const PrimeClassDatum& b) {
        if (a.n_w != b.n_w) return a.n_w < b.n_w;
        return pair_less(a.canonical, b.canonical);
    });
    return out;
}

std::vector<int> reduced_alphabet(int n_f) {
    std::vector<int> a;
    if (n_f % 2 == 1) {
        const int h = (n_f - 1) / 2;
        for (int k = -h; k <= h; ++k)
            if (k != 0) a.push_back(k);
    } else {
        const int h = (n_f - 2) / 2;
        for (int k = -h; k <= h; ++k) a.push_back(k);
    }
    return a;
}

GClosedPair circle_walk(const Group& G, int n_f, const std::vector<int>& reduced) {
    if (G.family() != GroupFamily::DihedralTimesZ2 || G.n_f() != n_f)
        throw ContextMismatch("circle_walk: needs the matching D_{n_f} x Z2 group");
    if (reduced.empty()) throw InvalidSymbol("circle_walk: empty reduced word");
    const int hmax = (n_f % 2 == 1) ? (n_f - 1) / 2 : (n_f - 2) / 2;
    int pos = 1, copy = 0, orient = +1;
    Word word{1};
    for (int k : reduced) {
        if (std::abs(k) > hmax || (k == 0 && n_f % 2 == 1))
            throw InvalidSymbol("circle_walk: symbol " + std::to_string(k) +
                                " outside the reduced alphabet");
        const int step = (k == 0) ? n_f / 2 : std::abs(k);
        pos = ((pos - 1 + orient * step) % n_f + n_f) % n_f + 1;
        copy = 1 - copy;
        if (k < 0) orient = -orient;
        word.push_back(pos + copy * n_f);
    }
    GClosedPair p;
    p.word = std::move(word);
    p.g = G.closing_element(1, +1, p.word.back(), orient);
    return p;
}

namespace {

// Duval's algorithm: all Lyndon words over {0,..,q-1} of length <= nmax.
std::vector<std::vector<int>> lyndon_words(int q, int nmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        const int m = static_cast<int>(w.size());
        if (m <= nmax) out.push_back(w);
        while (static_cast<int>(w.size()) < nmax) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == q - 1) w.pop_back();
    }
    return out;
}

} // namespace

std::vector<PrimeClassDatum> enumerate_prime_classes_reduced(const IfsScheme& s, const Group& G,
                                                             int max_n) {
    if (s.kind() != SchemeKind::FlowAdapted)
        throw ContextMismatch("enumerate_prime_classes_reduced: flow-adapted schemes only");
    const int nf = s.n_f();
    const std::vector<int> alpha = reduced_alphabet(nf);
    std::vector<PrimeClassDatum> out;
    for (const auto& lw : lyndon_words(static_cast<int>(alpha.size()), max_n)) {
        std::vector<int> rw(lw.size());
        for (size_t i = 0; i < lw.size(); ++i) rw[i] = alpha[lw[i]];
        GClosedPair p = circle_walk(G, nf, rw);
        PrimeClassDatum d;
        d.n_w = p.length();
        d.m_w = G.order(p.g);
        d.length_L = class_length(s, G, p, d.m_w);
        d.canonical = canonicalize(G, p);
        d.reduced_word = rw;
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const PrimeClassDatum& a, const PrimeClassDatum& b) {
        if (a.n_w != b.n_w) return a.n_w < b.n_w;
        return pair_less(a.canonical, b.canonical);
    });
    return out;
}

bool compare_class_multisets(const Group& G, const std::vector<PrimeClassDatum>& a,
                             const std::vector<PrimeClassDatum>& b) {
    auto sig = [&](const std::vector<PrimeClassDatum>& v) {
        std::vector<std::tuple<int, int, int, long long>> t;
        t.reserve(v.size());
        for (const auto& d : v)
            t.emplace_back(d.n_w, d.m_w, G.conjugacy_class_of(d.canonical.g),
                           std::llround(d.length_L * 1e9));
        std::sort(t.begin(), t.end());
        return t;
    };
    const auto sa = sig(a);
    const auto sb = sig(b);
    if (sa == sb) return true;
    for (size_t i = 0; i < std::max(sa.size(), sb.size()); ++i) {
        const bool differ = i >= sa.size() || i >= sb.size() || sa[i] != sb[i];
        if (differ) {
            const auto& d = i < sa.size() ? sa[i] : sb[i];
            throw Mismatch("class multisets disagree near (n_w=" +
                           std::to_string(std::get<0>(d)) + ", m_w=" +
                           std::to_string(std::get<1>(d)) + ", L~" +
                           std::to_string(std::get<3>(d) / 1e9) + ")");
        }
    }
    throw Mismatch("class multisets disagree in size");
}

bool cross_check(const IfsScheme& s, const Group& G, int max_n) {
    return compare_class_multisets(G, enumerate_prime_classes_bruteforce(s, G, max_n),
                                   enumerate_prime_classes_reduced(s, G, max_n));
}

bool check_free_action(const IfsScheme& s, const Group& G, int max_order) {
    const int N = s.n_symbols();
    std::vector<std::vector<std::vector<int>>> closers(N + 1,
                                                       std::vector<std::vector<int>>(N + 1));
    for (int g = 0; g < G.size(); ++g)
        for (int b = 1; b <= N; ++b) closers[G.apply(g, b)][b].push_back(g);
    bool free = true;
    Word w;
    auto visit = [&](auto&& self, int depth, int n) -> void {
        if (!free) return;
        if (depth == n) {
            for (int g : closers[w.front()][w.back()]) {
                const GClosedPair p{w, g};
                for (int h = 1; h < G.size(); ++h)
                    if (act(G, h, p) == p) free = false;
            }
            return;
        }
        for (int j = 1; j <= N && free; ++j)
            if (s.adjacent(w.back(), j)) {
                w.push_back(j);
                self(self, depth + 1, n);
                w.pop_back();
            }
    };
    for (int n = 1; n <= max_order && free; ++n)
        for (int start = 1; start <= N && free; ++start) {
            w.assign(1, start);
            visit(visit, 0, n);
        }
    return free;
}

} // namespace szeta
