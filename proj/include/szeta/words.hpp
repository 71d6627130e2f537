#pragma once

#include <optional>
#include <vector>

#include "szeta/group.hpp"
#include "szeta/surface.hpp"

namespace szeta {

/// Symbol sequence (w_0,...,w_n); the word length n counts transitions.
using Word = std::vector<int>;

/// A word together with a closing group element: g w_n = w_0.
struct GClosedPair {
    Word word;
    int g = 0; // element index in the attached group

    int length() const { return static_cast<int>(word.size()) - 1; }
    bool operator==(const GClosedPair&) const = default;
};

bool is_valid_pair(const IfsScheme& s, const Group& G, const GClosedPair& p);

GClosedPair shift_left(const Group& G, const GClosedPair& p);
GClosedPair shift_right(const Group& G, const GClosedPair& p);
GClosedPair act(const Group& G, int h, const GClosedPair& p);

/// k-fold iteration: word (g^{k-1}w_0,...,g^{k-1}w_n, g^{k-2}w_1,...,w_n), element g^k.
GClosedPair iterate_pair(const Group& G, const GClosedPair& p, int k);

/// Lexicographic minimum over the full G x Z orbit; constant on orbits.
GClosedPair canonicalize(const Group& G, const GClosedPair& p);

std::vector<GClosedPair> full_orbit(const Group& G, const GClosedPair& p);

struct PrimeClassDatum {
    GClosedPair canonical;
    int n_w = 0;
    int m_w = 1;       // order of the closing element
    double length_L = 0; // geodesic length of the closed word w^{m_w}
    std::optional<std::vector<int>> reduced_word; // set by the reduced enumerator
};

/// Exhaustive enumeration: every adjacency-valid word of length <= max_n,
/// every closing element, canonicalized and dedup'd, composites filtered by
/// divisor iteration. Guard: n_symbols^max_n <= 1e8.
std::vector<PrimeClassDatum> enumerate_prime_classes_bruteforce(const IfsScheme& s,
                                                                const Group& G, int max_n);

/// Decode a reduced word into its G-closed pair by walking the circles.
/// Alphabet: odd n_f -> {+-1,...,+-(n_f-1)/2}; even n_f adds the symbol 0.
GClosedPair circle_walk(const Group& G, int n_f, const std::vector<int>& reduced);

std::vector<int> reduced_alphabet(int n_f);

/// Lyndon-word generation over the reduced alphabet, one representative per
/// aperiodic shift class, decoded through the circle walk. Flow-adapted only.
std::vector<PrimeClassDatum> enumerate_prime_classes_reduced(const IfsScheme& s, const Group& G,
                                                             int max_n);

/// Asserts both enumerators produce the same multiset of
/// (n_w, m_w, conjugacy class, length rounded to 1e-9); throws Mismatch.
bool cross_check(const IfsScheme& s, const Group& G, int max_n);

/// The comparison underneath cross_check, exposed for direct use.
bool compare_class_multisets(const Group& G, const std::vector<PrimeClassDatum>& a,
                             const std::vector<PrimeClassDatum>& b);

/// Brute-force verification that no nonidentity element fixes any pair with
/// n_w <= max_order under h.(w,g) = (hw, h g h^{-1}).
bool check_free_action(const IfsScheme& s, const Group& G, int max_order);

} // namespace szeta
