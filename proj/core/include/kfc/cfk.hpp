#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kfc {

/// Basis element over F[U, U^-1], stored at i = 0, i.e. at lattice position
/// (0, alexander). U^k * x sits at (-k, alexander - k) with Maslov grading
/// maslov - 2k.
struct Generator {
  std::string name;
  int alexander = 0;
  int maslov = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// One term U^u_exp * target of the differential of source. Arrows form a
/// set over F_2: toggling an existing (source, target, u_exp) removes it.
struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  int u_exp = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Finitely generated free complex over F_2[U, U^-1] with an Alexander
/// filtration and a Maslov grading: the CFK-infinity model of a knot.
///
/// The structure itself never rejects arrows; the filtration and grading
/// conditions are checked by validate() so that malformed input can be
/// loaded and diagnosed.
class CfkComplex {
 public:
  /// Throws SemanticError if the name is empty, contains whitespace or is
  /// already taken.
  std::size_t add_generator(std::string name, int alexander, int maslov);

  void toggle_arrow(std::size_t source, std::size_t target, int u_exp);
  void toggle_arrow(std::string_view source, std::string_view target, int u_exp);

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;

  const std::set<Arrow>& arrows() const noexcept { return arrows_; }
  bool has_arrow(std::size_t source, std::size_t target, int u_exp) const;
  /// Arrows leaving source, ordered by (target, u_exp).
  std::vector<Arrow> outgoing(std::size_t source) const;

  /// Smallest / largest Alexander grading; 0 for the empty complex.
  int min_alexander() const noexcept;
  int max_alexander() const noexcept;

  /// Same complex with generators reordered by (alexander, maslov, name).
  CfkComplex canonical() const;

  /// Equality of canonical forms: same named generators, same arrows.
  friend bool operator==(const CfkComplex& a, const CfkComplex& b);

 private:
  std::vector<Generator> gens_;
  std::set<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Lattice position of U^k * generator: (-k, A - k).
struct LatticePoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// i-drop and j-drop of an arrow. Both are >= 0 for a filtered differential.
struct ArrowDrops {
  int i_drop = 0;
  int j_drop = 0;
};
ArrowDrops arrow_drops(const CfkComplex& c, const Arrow& a);

inline bool is_vertical(const Arrow& a) { return a.u_exp == 0; }
inline bool is_horizontal(const CfkComplex& c, const Arrow& a) { return arrow_drops(c, a).j_drop == 0; }

/// Findings of validate(). Problems make valid() false; warnings do not.
struct ValidationReport {
  std::vector<std::string> arrow_violations;
  /// (x, z) pairs where del(del(x)) has a nonzero U^n * z term.
  std::vector<std::pair<std::string, std::string>> d_squared_witnesses;
  bool checked_knot_class = false;
  std::optional<std::size_t> column_rank;
  std::optional<std::size_t> row_rank;
  std::vector<std::string> warnings;

  bool valid() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Checks filtration, grading and d^2 = 0. With as_knot_class, also that the
/// column {i = 0} and row {j = 0} homologies have rank one. Always adds the
/// graded-rank symmetry check #{A=s, M=m} == #{A=-s, M=m-2s} of the reduced
/// complex as a warning.
ValidationReport validate(const CfkComplex& c, bool as_knot_class);

/// Generator name of the pair (x, y) in a tensor product.
std::string tensor_name(std::string_view x, std::string_view y);
/// Generator name of x* in a dual complex; dual_name(dual_name(x)) == x.
std::string dual_name(std::string_view x);

/// Tensor product over F[U, U^-1]; models connected sum. Gradings add and the
/// differential obeys the Leibniz rule.
CfkComplex tensor(const CfkComplex& a, const CfkComplex& b);

/// Dual complex; models the mirror. Gradings are negated and every arrow is
/// reversed with its U-power kept.
CfkComplex dual(const CfkComplex& c);

/// Disjoint union of two complexes. Throws SemanticError on a name clash.
CfkComplex direct_sum(const CfkComplex& a, const CfkComplex& b);

/// Prepends prefix to every generator name.
CfkComplex with_prefix(const CfkComplex& c, std::string_view prefix);

struct ReduceOptions {
  /// Re-validate arrows and d^2 after every cancellation; throws
  /// InternalInconsistency on failure.
  bool verify_steps = false;
};

/// Cancels every arrow that preserves both filtrations (u_exp == 0 and
/// Alexander drop 0) until none is left. Candidates are taken in canonical
/// (source, target) order, so the result is deterministic.
CfkComplex reduce(const CfkComplex& c, ReduceOptions options = {});

/// Filtered change of basis target -> target + U^u_exp * addend. Requires
/// u_exp >= 0, A(addend) - u_exp <= A(target) and M(addend) - 2 u_exp ==
/// M(target); throws SemanticError otherwise. The result is isomorphic to c as
/// a bifiltered complex.
CfkComplex filtered_basis_change(const CfkComplex& c, std::size_t target, std::size_t addend,
                                 int u_exp);

/// Acyclic four-generator box b, a, c, d with
///   del(b) = U^h a + c,  del(a) = d,  del(c) = U^h d,
/// horizontal length h and vertical length v (both >= 1). b sits at
/// (0, alexander_b) with Maslov grading maslov_b.
CfkComplex square_summand(std::string_view prefix, int h, int v, int alexander_b, int maslov_b);

/// The one-generator complex of the unknot.
CfkComplex unknot_complex();

/// Counts of generators per (alexander, maslov).
std::map<std::pair<int, int>, int> grading_table(const CfkComplex& c);

/// Canonical text form:
///   cfk v1
///   gen <name> A=<int> M=<int>
///   arr <source> <target> u=<int>
/// Generators are sorted by (A, M, name), arrows by (source, target, u).
std::string serialize(const CfkComplex& c);

/// Parses the text form. Blank lines and lines starting with '#' are skipped.
/// Throws ParseError with line and column. Grading/filtration problems are
/// left to validate().
CfkComplex deserialize(std::string_view text);

}  // namespace kfc
