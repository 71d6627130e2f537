#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "szeta/group.hpp"
#include "szeta/moebius.hpp"

namespace szeta {

struct SymmetricFunnels {
    int n_f = 3;
    double psi = 0.5;
};

struct ThreeFunnel {
    double l1 = 7, l2 = 7, l3 = 7;
};

using SurfaceSpec = std::variant<SymmetricFunnels, ThreeFunnel>;

/// "sym:3:0.5930" or "bs:7,7,7.01"
SurfaceSpec parse_surface(const std::string& text);
std::string render_surface(const SurfaceSpec& spec);

enum class SchemeKind { FlowAdapted, BowenSeries };

/// Which symmetry group to attach when building tables/enumerations.
enum class GroupChoice { Full, Klein, Trivial };

/// Edge map u -> mobius(m, u - pre_offset) + post_offset.
struct EdgeMap {
    Matrix2 m;
    double pre_offset = 0.0;
    double post_offset = 0.0;

    Complex apply(Complex u) const;
    Disk image(const Disk& d) const;
};

struct ValidationReport {
    bool disks_disjoint = true;
    bool images_nested = true;
    bool images_disjoint = true;
    std::vector<std::string> failures;

    bool pass() const { return disks_disjoint && images_nested && images_disjoint; }
};

class IfsScheme {
  public:
    SchemeKind kind() const { return kind_; }
    int n_symbols() const { return static_cast<int>(disks_.size()); }
    int n_f() const { return n_f_; }
    const std::vector<Disk>& disks() const { return disks_; }
    bool adjacent(int i, int j) const;
    EdgeMap edge_map(int i, int j) const; // throws InvalidTransition

    /// Base reflection matrices R_1..R_{n_f} (flow-adapted) or the generators
    /// S_1..S_4 (Bowen-Series); used by the closed-word matrix rule.
    const std::vector<Matrix2>& base_matrices() const { return base_; }
    double offset() const { return offset_; }

    /// Largest symmetry group the construction carries.
    const Group& symmetry() const { return *symmetry_; }
    Group group_for(GroupChoice choice) const;

    /// Point action of a symmetry element on u inside disk `symbol`.
    Complex point_action(const Group& g, int elem, int symbol, Complex u) const;

    /// Parameters the builders solved for (Bowen-Series a; surface spec).
    const SurfaceSpec& spec() const { return spec_; }
    double bowen_series_a() const { return bs_a_; }

    friend IfsScheme build_flow_adapted(const SymmetricFunnels&);
    friend IfsScheme build_bowen_series(const ThreeFunnel&);

  private:
    SchemeKind kind_ = SchemeKind::FlowAdapted;
    int n_f_ = 0;
    double offset_ = 0.0;
    double bs_a_ = 0.0;
    std::vector<Disk> disks_;
    std::vector<uint8_t> adj_; // N*N
    std::vector<Matrix2> base_;
    std::shared_ptr<const Group> symmetry_;
    SurfaceSpec spec_;
};

IfsScheme build_scheme(const SurfaceSpec& spec);
IfsScheme build_flow_adapted(const SymmetricFunnels& spec);
IfsScheme build_bowen_series(const ThreeFunnel& spec);

/// Checks disk disjointness, nesting of every edge image, and pairwise
/// disjointness of the images. Report-only; never throws.
ValidationReport validate_ifs(const IfsScheme& s);

/// det +1 matrix realizing a closed word; its displacement length is the
/// geodesic length of the word.
ScaledMatrix closed_word_matrix(const IfsScheme& s, const std::vector<int>& word);

/// Geodesic length of the class of reduced word (-1): one winding around a
/// funnel. Equals the funnel width of X_{n_f, psi}.
double funnel_length(const SymmetricFunnels& spec);

/// Inverse of funnel_length by bisection in psi; checks monotonicity first.
double psi_for_length(int n_f, double target_length);

} // namespace szeta
