#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kfc/cfk.hpp"
#include "kfc/laurent.hpp"

namespace kfc {

/// Minimal s such that C{i = 0, j <= s} carries the generator of H(C{i = 0}).
/// Throws RankNotOne unless the column homology has rank one.
int tau(const CfkComplex& c);

/// Generators (indices into c) of a cycle representing the nonzero class of
/// H(C{i = 0}). The representative is reduced modulo column boundaries with
/// high Alexander gradings eliminated first, so it lies in j <= tau.
std::vector<std::size_t> vertical_class(const CfkComplex& c);

/// Whether F_s : H(C{i = 0}) -> H(C{min(i, j - s) = 0}) vanishes.
bool f_map_trivial(const CfkComplex& c, int s);
/// Whether G_s : H(C{max(i, j - s) = 0}) -> H(C{i = 0}) vanishes.
bool g_map_trivial(const CfkComplex& c, int s);

/// +1 if F_tau is trivial, -1 if G_tau is trivial, 0 otherwise. Throws
/// InternalInconsistency if both are trivial.
int epsilon(const CfkComplex& c);

/// epsilon computed a second way, from the row complex C{j = tau} alone:
/// whether the top part of the vertical class is hit by the horizontal
/// differential from i > 0, or survives it from i < 0.
int epsilon_oracle(const CfkComplex& c);

/// min{s >= 0 : the vertical class dies in C{min(i, j - tau) = 0, i <= s}}.
/// Throws EpsilonNotOne, or SearchExhausted if no s <= max A - min A works.
int a1(const CfkComplex& c);

/// min{s >= 1 : the vertical class survives in the truncated hook with the
/// tail {i = a1, tau - s <= j < tau}}, or nullopt when no s <= max A - min A
/// works. Throws EpsilonNotOne.
std::optional<int> a2(const CfkComplex& c);

/// (n_0 - n_1, n_1 - n_2). Throws TooShort for the unknot's [0].
std::pair<int, int> staircase_a_invariants(const StaircaseExponents& e);

/// Generator counts per (alexander, maslov) of reduce(c).
std::map<std::pair<int, int>, int> hfk_table(const CfkComplex& c);

/// The knot Floer ranks of the Whitehead double of the trefoil.
const std::map<std::pair<int, int>, int>& whitehead_rank_table();

struct WhiteheadModelReport {
  bool ranks_match = false;
  std::map<std::pair<int, int>, int> ranks;
  bool tau_epsilon_match = false;
  std::optional<int> tau;
  std::optional<int> epsilon;
  bool trefoil_difference_vanishes = false;
  std::optional<int> difference_epsilon;
  std::vector<std::string> notes;

  bool passed() const { return ranks_match && tau_epsilon_match && trefoil_difference_vanishes; }
  std::string to_text() const;
};

/// Checks a candidate complex for the Whitehead double D of the trefoil:
/// its rank table, tau = epsilon = 1, and epsilon(c # -T(2,3)) == 0.
WhiteheadModelReport check_whitehead_model(const CfkComplex& c);

}  // namespace kfc
