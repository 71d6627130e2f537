#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "szeta/errors.hpp"

namespace szeta {

/// Permutation of the symbols 1..N, stored 0-based internally.
using Perm = std::vector<int>; // perm[i] = image of symbol i+1, as symbol index 1..N

enum class GroupFamily {
    DihedralTimesZ2, // D_n x Z2 acting on 2n symbols of a flow-adapted scheme
    KleinFour,       // Z2 x Z2 acting on the 4 Bowen-Series symbols
    Z2,              // single reflection sigma_1 on the Bowen-Series symbols
    Trivial,
};

struct Irrep {
    std::string label; // paper-table labels: I_1..III_2, I_1..V_2, A..D
    int dim = 1;
    // closed-form parameters: one-dimensional irreps are sign characters,
    // two-dimensional ones are the dihedral standard reps tensored with a
    // sign on the copy-swap generator.
    int sign_rot = 1;  // u: sign at the rotation generator (even n only)
    int sign_refl = 1; // v: sign at the reflection generator
    int sign_swap = 1; // t: sign at the copy-swap generator
    int two_dim_k = 0; // k >= 1 marks a 2-dim irrep chi(rot^a) = 2cos(2 pi k a / n)
};

/// A finite symmetry group given as an explicit list of elements with exact
/// integer structure: multiplication/inverse/order tables, the permutation
/// action on scheme symbols, conjugacy classes, and the character table.
class Group {
  public:
    static Group dihedral_times_z2(int n_f);
    static Group klein_four();                // Bowen-Series, l1 = l2
    static Group z2_reflection();             // Bowen-Series, generic lengths
    static Group trivial(int n_symbols);

    GroupFamily family() const { return family_; }
    int size() const { return static_cast<int>(perms_.size()); }
    int n_symbols() const { return n_symbols_; }
    int n_f() const { return n_f_; }

    int identity() const { return 0; }
    int multiply(int g, int h) const;
    int inverse(int g) const;
    int power(int g, int k) const;
    int order(int g) const;

    const Perm& symbol_permutation(int g) const { return perms_.at(g); }
    int apply(int g, int symbol) const { return perms_[g][symbol - 1]; }

    int conjugacy_class_of(int g) const { return class_of_[g]; }
    int n_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_representative(int c) const { return class_reps_[c]; }
    const std::vector<int>& class_sizes() const { return class_sizes_; }

    const std::vector<Irrep>& irreps() const { return irreps_; }
    const Irrep& irrep(const std::string& label) const;
    double character_value(const Irrep& irr, int g) const;
    double character_value(int irrep_index, int g) const;

    /// True for elements in the rotation/swap subgroup; reflections reverse
    /// the orientation transported along the circle walk.
    bool orientation_preserving(int g) const { return refl_bit_[g] == 0; }

    /// The unique element carrying (end circle, end orientation) back to
    /// (start circle, start orientation). Total by simple transitivity of the
    /// D_{n_f} x Z2 action on (circle, orientation) pairs.
    int closing_element(int start_circle, int start_orient,
                        int end_circle, int end_orient) const;

    /// Element index whose symbol permutation equals p; throws GroupMismatch.
    int element_from_perm(const Perm& p) const;

    std::string element_name(int g) const;
    /// Cycle notation of the symbol action, e.g. "(1,6,2,4,3,5)".
    std::string cycle_notation(int g) const;

    /// (rot, refl, swap) exponents of the element's normal form
    /// g = rotation^a reflection^b swap^c.
    const std::array<int, 3>& normal_form(int g) const { return abc_.at(g); }

  private:
    Group() = default;
    void finish(); // builds multiplication/inverse/order/class tables

    GroupFamily family_ = GroupFamily::Trivial;
    int n_symbols_ = 0;
    int n_f_ = 0; // dihedral only
    std::vector<Perm> perms_;
    std::vector<std::array<int, 3>> abc_; // (rot, refl, swap) normal form per element
    std::vector<int> refl_bit_;
    std::vector<int> mult_;    // size * size
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    std::vector<int> class_sizes_;
    std::vector<Irrep> irreps_;
};

} // namespace szeta
