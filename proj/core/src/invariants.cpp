#include "kfc/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "kfc/error.hpp"
#include "kfc/gf2.hpp"
#include "kfc/knots.hpp"
#include "kfc/region.hpp"

namespace kfc {

namespace {

// Column data for a complex in canonical order, so column elements are sorted
// by Alexander grading and the highest bit of a chain is its top filtration
// level.
struct Column {
  CfkComplex complex;
  RegionComplex rc;
  Homology homology;
  gf2::BitVec vertical;  // reduced representative of the nonzero class
  int tau = 0;

  explicit Column(const CfkComplex& c)
      : complex(c.canonical()),
        rc(complex, Region::column0()),
        homology(rc) {
    const std::size_t rank = homology.rank();
    if (rank != 1) {
      throw RankNotOne("column homology has rank " + std::to_string(rank) + ", expected 1", rank);
    }
    tau = search_tau();
    for (const auto& z : homology.cycle_basis()) {
      if (!homology.is_boundary(z)) {
        vertical = homology.boundary_basis().reduce(z);
        break;
      }
    }
  }

  int alexander_of(std::size_t element) const {
    return rc.elements()[element].position.j;
  }

  // Number of column elements with j <= s (a prefix, by canonical order).
  std::size_t prefix_length(int s) const {
    std::size_t n = 0;
    while (n < rc.size() && alexander_of(n) <= s) ++n;
    return n;
  }

  // Cycles of C{i = 0, j <= s}, as chains of the full column.
  std::vector<gf2::BitVec> cycles_below(int s) const {
    const std::size_t n = prefix_length(s);
    std::vector<gf2::BitVec> cols(rc.boundary_columns().begin(),
                                  rc.boundary_columns().begin() + static_cast<long>(n));
    std::vector<gf2::BitVec> out;
    for (const auto& combo : gf2::kernel_basis(cols)) {
      gf2::BitVec chain(rc.size());
      for (std::size_t e : combo.ones()) chain.flip(e);
      out.push_back(std::move(chain));
    }
    return out;
  }

  int search_tau() const {
    for (int s = complex.min_alexander(); s <= complex.max_alexander(); ++s) {
      for (const auto& z : cycles_below(s)) {
        if (!homology.is_boundary(z)) return s;
      }
    }
    throw InternalInconsistency("no filtration level carries the column generator");
  }

  // Whether the vertical class maps to zero in the given region.
  bool dies_in(const Region& region) const {
    const RegionComplex target(complex, region);
    const Homology h(target);
    const auto map = ChainMap::projection(rc, target);
    const bool dead = h.is_boundary(map.apply(vertical));
#ifndef NDEBUG
    for (const auto& b : rc.boundary_columns()) {
      if (b.none()) continue;
      if (h.is_boundary(map.apply(vertical ^ b)) != dead) {
        throw InternalInconsistency("map triviality depends on the representative");
      }
      break;
    }
#endif
    return dead;
  }

  bool g_trivial(int s) const {
    const RegionComplex hook(complex, Region::g_hook(s));
    const Homology h(hook);
    const auto map = ChainMap::projection(hook, rc);
    for (const auto& z : h.cycle_basis()) {
      if (!homology.is_boundary(map.apply(z))) return false;
    }
    return true;
  }

  int epsilon() const {
    const bool f = dies_in(Region::full_hook(tau));
    const bool g = g_trivial(tau);
    if (f && g) throw InternalInconsistency("F_tau and G_tau are both trivial");
    if (f) return 1;
    if (g) return -1;
    return 0;
  }
};

}  // namespace

int tau(const CfkComplex& c) { return Column(c).tau; }

std::vector<std::size_t> vertical_class(const CfkComplex& c) {
  const Column col(c);
  std::vector<std::size_t> out;
  for (std::size_t e : col.vertical.ones()) {
    const auto& name = col.complex.generator(col.rc.elements()[e].generator).name;
    out.push_back(*c.find(name));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool f_map_trivial(const CfkComplex& c, int s) { return Column(c).dies_in(Region::full_hook(s)); }

bool g_map_trivial(const CfkComplex& c, int s) { return Column(c).g_trivial(s); }

int epsilon(const CfkComplex& c) { return Column(c).epsilon(); }

int epsilon_oracle(const CfkComplex& c) {
  const Column col(c);
  const int t = col.tau;
  const RegionComplex row(col.complex, Region::row(t));
  const std::size_t n = row.size();
  const auto i_of = [&](std::size_t e) { return row.elements()[e].position.i; };

  // Top part of a column chain: its j = tau terms, read as row elements at i = 0.
  const auto top = [&](const gf2::BitVec& chain) {
    gf2::BitVec out(n);
    for (std::size_t e : chain.ones()) {
      if (col.alexander_of(e) != t) continue;
      out.flip(*row.find(col.rc.elements()[e].generator, 0));
    }
    return out;
  };
  const auto restrict_to = [&](gf2::BitVec v, auto keep) {
    for (std::size_t e : v.ones()) {
      if (!keep(i_of(e))) v.reset(e);
    }
    return v;
  };

  // Cycles in j <= tau split into one class representative and the rest,
  // which are column boundaries.
  std::optional<gf2::BitVec> c0;
  std::vector<gf2::BitVec> bounding;
  std::vector<gf2::BitVec> generating;
  for (auto& z : col.cycles_below(t)) {
    (col.homology.is_boundary(z) ? bounding : generating).push_back(std::move(z));
  }
  if (generating.empty()) throw InternalInconsistency("no class representative below tau");
  c0 = generating.front();
  for (std::size_t k = 1; k < generating.size(); ++k) bounding.push_back(generating[k] ^ *c0);

  const gf2::BitVec top0 = top(*c0);

  // epsilon = +1: top0 is hit, modulo the tops of bounding cycles, by row
  // chains from i > 0 whose boundary has no i > 0 part left.
  {
    std::vector<std::size_t> positive;
    for (std::size_t e = 0; e < n; ++e) {
      if (i_of(e) > 0) positive.push_back(e);
    }
    std::vector<gf2::BitVec> cols;
    for (std::size_t e : positive) {
      cols.push_back(restrict_to(row.boundary_columns()[e], [](int i) { return i > 0; }));
    }
    gf2::EchelonBasis span(n);
    for (const auto& combo : gf2::kernel_basis(cols)) {
      gf2::BitVec y(n);
      for (std::size_t k : combo.ones()) y.flip(positive[k]);
      span.insert(restrict_to(row.boundary(y), [](int i) { return i == 0; }));
    }
    for (const auto& k : bounding) span.insert(top(k));
    if (span.contains(top0)) return 1;
  }

  // epsilon = -1 unless the horizontal boundary of top0 into i < 0 can be
  // cancelled by bounding cycles and by chains living in i < 0.
  const auto leak = [&](const gf2::BitVec& v) {
    return restrict_to(row.boundary(v), [](int i) { return i < 0; });
  };
  gf2::EchelonBasis span(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (i_of(e) < 0) span.insert(row.boundary_columns()[e]);
  }
  for (const auto& k : bounding) span.insert(leak(top(k)));
  return span.contains(leak(top0)) ? 0 : -1;
}

int a1(const CfkComplex& c) {
  const Column col(c);
  if (col.epsilon() != 1) throw EpsilonNotOne("a1 requires epsilon = 1");
  const int w = col.complex.max_alexander() - col.complex.min_alexander();
  for (int s = 0; s <= w; ++s) {
    if (col.dies_in(Region::truncated_hook(col.tau, s))) return s;
  }
  throw SearchExhausted("vertical class survives every truncated hook up to width " +
                        std::to_string(w));
}

std::optional<int> a2(const CfkComplex& c) {
  const int first = a1(c);
  const Column col(c);
  const int w = col.complex.max_alexander() - col.complex.min_alexander();
  for (int s = 1; s <= w; ++s) {
    if (!col.dies_in(Region::hook_with_tail(col.tau, first, s))) return s;
  }
  return std::nullopt;
}

std::pair<int, int> staircase_a_invariants(const StaircaseExponents& e) {
  if (e.k() < 2) throw TooShort("a-invariants need at least three staircase exponents");
  return {e[0] - e[1], e[1] - e[2]};
}

std::map<std::pair<int, int>, int> hfk_table(const CfkComplex& c) { return grading_table(reduce(c)); }

const std::map<std::pair<int, int>, int>& whitehead_rank_table() {
  static const std::map<std::pair<int, int>, int> table{
      {{1, 0}, 2}, {{1, -1}, 2}, {{0, -1}, 3}, {{0, -2}, 4}, {{-1, -2}, 2}, {{-1, -3}, 2}};
  return table;
}

std::string WhiteheadModelReport::to_text() const {
  std::ostringstream out;
  out << "rank table: " << (ranks_match ? "match" : "mismatch") << '\n';
  out << "tau/epsilon: " << (tau_epsilon_match ? "match" : "mismatch");
  if (tau && epsilon) out << " (tau=" << *tau << ", epsilon=" << *epsilon << ")";
  out << '\n';
  out << "difference with T(2,3): " << (trefoil_difference_vanishes ? "epsilon 0" : "nonzero");
  if (difference_epsilon) out << " (epsilon=" << *difference_epsilon << ")";
  out << '\n';
  for (const auto& n : notes) out << "note: " << n << '\n';
  out << (passed() ? "accepted" : "rejected") << '\n';
  return out.str();
}

WhiteheadModelReport check_whitehead_model(const CfkComplex& c) {
  WhiteheadModelReport report;
  try {
    report.ranks = hfk_table(c);
    report.ranks_match = report.ranks == whitehead_rank_table();
  } catch (const Error& e) {
    report.notes.push_back(std::string("rank table: ") + e.what());
  }
  try {
    const Column col(c);
    report.tau = col.tau;
    report.epsilon = col.epsilon();
    report.tau_epsilon_match = report.tau == 1 && report.epsilon == 1;
  } catch (const Error& e) {
    report.notes.push_back(std::string("tau/epsilon: ") + e.what());
  }
  try {
    const auto trefoil = staircase(StaircaseExponents({2, 1, 0}));
    report.difference_epsilon = epsilon(reduce(tensor(dual(trefoil), c)));
    report.trefoil_difference_vanishes = report.difference_epsilon == 0;
  } catch (const Error& e) {
    report.notes.push_back(std::string("difference: ") + e.what());
  }
  return report;
}

}  // namespace kfc
