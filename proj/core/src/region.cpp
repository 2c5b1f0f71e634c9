#include "kfc/region.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kfc {

bool Region::contains(LatticePoint p) const noexcept {
  const auto upper_column = [&] { return p.i == 0 && p.j >= t_; };
  switch (kind_) {
    case Kind::Column0:
      return p.i == 0;
    case Kind::FullHook:
      return upper_column() || (p.j == t_ && p.i >= 0);
    case Kind::GHook:
      return (p.i == 0 && p.j <= t_) || (p.j == t_ && p.i <= 0);
    case Kind::TruncatedHook:
      return upper_column() || (p.j == t_ && p.i >= 0 && p.i <= p1_);
    case Kind::HookWithTail:
      return upper_column() || (p.j == t_ && p.i >= 0 && p.i <= p1_) ||
             (p.i == p1_ && p.j >= t_ - p2_ && p.j < t_);
    case Kind::Row:
      return p.j == t_;
  }
  return false;
}

std::vector<int> Region::diagonal_hits(int alexander) const {
  // Candidates: the column i = 0, the row j = t at i = t - A, and the tail
  // column i = a1.
  std::vector<int> candidates{0, t_ - alexander};
  if (kind_ == Kind::HookWithTail) candidates.push_back(p1_);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<int> hits;
  for (int i : candidates) {
    if (contains({i, i + alexander})) hits.push_back(i);
  }
  return hits;
}

std::string Region::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Column0:
      out << "{i=0}";
      break;
    case Kind::FullHook:
      out << "{min(i, j-" << t_ << ")=0}";
      break;
    case Kind::GHook:
      out << "{max(i, j-" << t_ << ")=0}";
      break;
    case Kind::TruncatedHook:
      out << "{min(i, j-" << t_ << ")=0, i<=" << p1_ << "}";
      break;
    case Kind::HookWithTail:
      out << "{min(i, j-" << t_ << ")=0, i<=" << p1_ << "} u {i=" << p1_ << ", " << t_ - p2_
          << "<=j<" << t_ << "}";
      break;
    case Kind::Row:
      out << "{j=" << t_ << "}";
      break;
  }
  return out.str();
}

bool Region::is_order_convex_within(int radius) const {
  std::vector<LatticePoint> pts;
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) {
      if (contains({i, j})) pts.push_back({i, j});
    }
  }
  for (const auto& p : pts) {
    for (const auto& r : pts) {
      if (p.i > r.i || p.j > r.j) continue;
      for (int i = p.i; i <= r.i; ++i) {
        for (int j = p.j; j <= r.j; ++j) {
          if (!contains({i, j})) return false;
        }
      }
    }
  }
  return true;
}

RegionComplex::RegionComplex(const CfkComplex& complex, const Region& region) : region_(region) {
  auto& index = index_;
  for (std::size_t g = 0; g < complex.size(); ++g) {
    const int a = complex.generator(g).alexander;
    for (int i : region.diagonal_hits(a)) {
      index.emplace(std::pair{g, -i}, elements_.size());
      elements_.push_back({g, -i, {i, a + i}});
    }
  }

  columns_.assign(elements_.size(), gf2::BitVec(elements_.size()));
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const auto& el = elements_[e];
    for (const Arrow& arrow : complex.outgoing(el.generator)) {
      auto it = index.find({arrow.target, el.u_power + arrow.u_exp});
      if (it != index.end()) columns_[e].flip(it->second);
    }
  }
}

std::optional<std::size_t> RegionComplex::find(std::size_t generator, int u_power) const {
  auto it = index_.find({generator, u_power});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

gf2::BitVec RegionComplex::boundary(const gf2::BitVec& chain) const {
  gf2::BitVec out(elements_.size());
  for (std::size_t e : chain.ones()) out ^= columns_[e];
  return out;
}

bool RegionComplex::squares_to_zero() const {
  for (const auto& col : columns_) {
    if (boundary(col).any()) return false;
  }
  return true;
}

RegionComplex region_complex(const CfkComplex& complex, const Region& region) {
  return RegionComplex(complex, region);
}

Homology::Homology(const RegionComplex& rc)
    : columns_(rc.boundary_columns()), cycles_(gf2::kernel_basis(columns_)), boundaries_(rc.size()) {
  for (const auto& col : columns_) boundaries_.insert(col);
}

bool Homology::is_cycle(const gf2::BitVec& chain) const {
  gf2::BitVec out(chain.size());
  for (std::size_t e : chain.ones()) out ^= columns_[e];
  return out.none();
}

Homology homology_data(const RegionComplex& rc) { return Homology(rc); }

ChainMap ChainMap::projection(const RegionComplex& from, const RegionComplex& to) {
  ChainMap map;
  map.target_size_ = to.size();
  map.image_.reserve(from.size());
  for (const auto& el : from.elements()) map.image_.push_back(to.find(el.generator, el.u_power));
  return map;
}

gf2::BitVec ChainMap::apply(const gf2::BitVec& chain) const {
  gf2::BitVec out(target_size_);
  for (std::size_t e : chain.ones()) {
    if (image_[e]) out.flip(*image_[e]);
  }
  return out;
}

bool ChainMap::commutes(const RegionComplex& from, const RegionComplex& to) const {
  for (std::size_t e = 0; e < from.size(); ++e) {
    gf2::BitVec unit(from.size());
    unit.set(e);
    if (to.boundary(apply(unit)) != apply(from.boundary(unit))) return false;
  }
  return true;
}

}  // namespace kfc
