#pragma once

// Slow, independent reference computations used to cross-check the library.
// Nothing here uses kfc::gf2 or kfc::RegionComplex.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kfc/cfk.hpp"
#include "kfc/laurent.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;  // rows x cols over F_2, entries 0/1

/// Rank over F_2 by plain row reduction on an int matrix.
int dense_rank(Matrix m);

/// Points of the plane and the boundary matrix of C{S} for a predicate S,
/// found by scanning every U-power in [-span, span] instead of intersecting
/// diagonals.
struct Subquotient {
  std::vector<std::pair<std::size_t, int>> elements;  // (generator, U-power)
  Matrix boundary;                                     // boundary[row][col]: col -> row
};
Subquotient subquotient(const kfc::CfkComplex& c, const std::function<bool(int, int)>& in_region,
                        int span = 40);

/// Homology rank of C{S} from dense ranks.
int homology_rank(const Subquotient& s);

/// Whether chain (a 0/1 vector over s.elements) is a boundary, by trying
/// every combination of at most 22 columns.
bool brute_force_is_boundary(const Subquotient& s, const std::vector<int>& chain);

/// tau from first principles: the least s for which some cycle supported in
/// {i = 0, j <= s} is not a column boundary, found by enumerating subsets.
/// Only for complexes with at most ~10 generators.
int brute_force_tau(const kfc::CfkComplex& c);

/// Evaluates p at an integer point with 128-bit arithmetic (t != 0).
__int128 evaluate(const kfc::LaurentPoly& p, std::int64_t t);

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) at an integer t >= 2.
__int128 torus_value(int p, int q, std::int64_t t);

/// Staircase exponents of T(p, q) read off (1 - t) * sum_{s in S} t^s, where S
/// is the semigroup generated by p and q, truncated above 2g.
std::vector<int> semigroup_staircase(int p, int q);

/// Catalog of knot expressions whose class complexes the suites exercise.
const std::vector<std::string>& catalog();

/// c with random acyclic squares added and random filtered basis changes
/// applied. Keeps Alexander gradings of squares within [-radius, radius].
kfc::CfkComplex perturb(const kfc::CfkComplex& c, std::mt19937& rng, int squares, int changes,
                        int radius = 3);

}  // namespace oracle
