#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <optional>
#include <string>
#include <vector>

#include "kfc/cfk.hpp"
#include "kfc/gf2.hpp"

namespace kfc {

/// Finite order-convex subsets of the (i, j)-lattice used to cut subquotient
/// complexes out of a CfkComplex.
///
///   Column0                 {i = 0}
///   FullHook(t)             {i = 0, j >= t} u {j = t, i >= 0}
///   GHook(t)                {i = 0, j <= t} u {j = t, i <= 0}
///   TruncatedHook(t, s)     {i = 0, j >= t} u {j = t, 0 <= i <= s}
///   HookWithTail(t, a, s)   TruncatedHook(t, a) u {i = a, t - s <= j < t}
///   Row(t)                  {j = t}
class Region {
 public:
  enum class Kind { Column0, FullHook, GHook, TruncatedHook, HookWithTail, Row };

  static Region column0() { return Region(Kind::Column0, 0, 0, 0); }
  static Region full_hook(int tau) { return Region(Kind::FullHook, tau, 0, 0); }
  static Region g_hook(int tau) { return Region(Kind::GHook, tau, 0, 0); }
  static Region truncated_hook(int tau, int s) { return Region(Kind::TruncatedHook, tau, s, 0); }
  static Region hook_with_tail(int tau, int a1, int s) {
    return Region(Kind::HookWithTail, tau, a1, s);
  }
  static Region row(int j) { return Region(Kind::Row, j, 0, 0); }

  Kind kind() const noexcept { return kind_; }
  bool contains(LatticePoint p) const noexcept;
  /// i-coordinates (ascending, distinct) where the diagonal j - i == alexander
  /// meets the region. The U-orbit of a generator lives on that diagonal.
  std::vector<int> diagonal_hits(int alexander) const;
  std::string describe() const;

  /// Brute-force check over the box [-radius, radius]^2 that p <= q <= r with
  /// p, r in the region forces q into it.
  bool is_order_convex_within(int radius) const;

 private:
  Region(Kind kind, int a, int b, int c) : kind_(kind), t_(a), p1_(b), p2_(c) {}

  Kind kind_;
  int t_;
  int p1_;
  int p2_;
};

/// One element U^u_power * generator of a region complex.
struct RegionElement {
  std::size_t generator = 0;
  int u_power = 0;
  LatticePoint position;
};

/// The finite F_2 complex C{S}: elements of the plane inside S with the arrows
/// between them. Boundary columns satisfy del^2 = 0 whenever S is order-convex.
class RegionComplex {
 public:
  RegionComplex(const CfkComplex& complex, const Region& region);

  const Region& region() const noexcept { return region_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<RegionElement>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> find(std::size_t generator, int u_power) const;

  /// Column e is del(e) as a chain.
  const std::vector<gf2::BitVec>& boundary_columns() const noexcept { return columns_; }
  gf2::BitVec boundary(const gf2::BitVec& chain) const;
  gf2::BitVec zero_chain() const { return gf2::BitVec(elements_.size()); }
  bool squares_to_zero() const;

 private:
  Region region_;
  std::vector<RegionElement> elements_;
  std::vector<gf2::BitVec> columns_;
  std::map<std::pair<std::size_t, int>, std::size_t> index_;
};

RegionComplex region_complex(const CfkComplex& complex, const Region& region);

/// Cycles, boundaries and Betti number of a region complex.
class Homology {
 public:
  explicit Homology(const RegionComplex& rc);

  std::size_t rank() const noexcept { return cycles_.size() - boundaries_.rank(); }
  const std::vector<gf2::BitVec>& cycle_basis() const noexcept { return cycles_; }
  const gf2::EchelonBasis& boundary_basis() const noexcept { return boundaries_; }
  bool is_boundary(const gf2::BitVec& chain) const { return boundaries_.contains(chain); }
  bool is_cycle(const gf2::BitVec& chain) const;

 private:
  std::vector<gf2::BitVec> columns_;
  std::vector<gf2::BitVec> cycles_;
  gf2::EchelonBasis boundaries_;
};

Homology homology_data(const RegionComplex& rc);

/// Map between region complexes that keeps elements with identical
/// (generator, U-power) and drops the rest. This is the "quotient then
/// include" map whenever the dropped part is a subcomplex of the source and
/// the kept part a subcomplex of the target.
class ChainMap {
 public:
  static ChainMap projection(const RegionComplex& from, const RegionComplex& to);

  gf2::BitVec apply(const gf2::BitVec& chain) const;
  /// del_to(f(e)) == f(del_from(e)) for every source element e.
  bool commutes(const RegionComplex& from, const RegionComplex& to) const;

 private:
  std::vector<std::optional<std::size_t>> image_;
  std::size_t target_size_ = 0;
};

}  // namespace kfc
