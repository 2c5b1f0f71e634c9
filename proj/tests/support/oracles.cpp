#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

int dense_rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k != r && m[k][c] != 0) {
        for (std::size_t x = 0; x < cols; ++x) m[k][x] ^= m[r][x];
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

Subquotient subquotient(const kfc::CfkComplex& c, const std::function<bool(int, int)>& in_region, int span) {
  Subquotient s;
  std::map<std::pair<std::size_t, int>, std::size_t> index;
  for (std::size_t g = 0; g < c.size(); ++g) {
    for (int k = -span; k <= span; ++k) {
      const int i = -k;
      const int j = c.generator(g).alexander - k;
      if (in_region(i, j)) {
        index[{g, k}] = s.elements.size();
        s.elements.emplace_back(g, k);
      }
    }
  }
  const std::size_t n = s.elements.size();
  s.boundary.assign(n, std::vector<int>(n, 0));
  for (const auto& a : c.arrows()) {
    for (std::size_t e = 0; e < n; ++e) {
      if (s.elements[e].first != a.source) continue;
      auto it = index.find({a.target, s.elements[e].second + a.u_exp});
      if (it != index.end()) s.boundary[it->second][e] ^= 1;
    }
  }
  return s;
}

int homology_rank(const Subquotient& s) {
  const int n = static_cast<int>(s.elements.size());
  const int r = dense_rank(s.boundary);
  // dim ker = n - r, dim im = r.
  return n - 2 * r;
}

bool brute_force_is_boundary(const Subquotient& s, const std::vector<int>& chain) {
  const std::size_t n = s.elements.size();
  if (n > 22) throw std::runtime_error("brute_force_is_boundary: too many elements");
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> image(n, 0);
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask >> col & 1U)) continue;
      for (std::size_t row = 0; row < n; ++row) image[row] ^= s.boundary[row][col];
    }
    if (image == chain) return true;
  }
  return false;
}

int brute_force_tau(const kfc::CfkComplex& c) {
  const auto column = subquotient(c, [](int i, int) { return i == 0; });
  const std::size_t n = column.elements.size();
  if (n > 16) throw std::runtime_error("brute_force_tau: too many generators");
  const auto level = [&](std::size_t e) { return c.generator(column.elements[e].first).alexander; };
  int best = 1 << 30;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> chain(n, 0);
    int top = -(1 << 30);
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1U) {
        chain[e] = 1;
        top = std::max(top, level(e));
      }
    }
    if (top >= best) continue;
    std::vector<int> d(n, 0);
    for (std::size_t col = 0; col < n; ++col) {
      if (!chain[col]) continue;
      for (std::size_t row = 0; row < n; ++row) d[row] ^= column.boundary[row][col];
    }
    if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; })) continue;
    if (!brute_force_is_boundary(column, chain)) best = top;
  }
  return best;
}

__int128 evaluate(const kfc::LaurentPoly& p, std::int64_t t) {
  // Work with t^min * p to stay in integers.
  __int128 acc = 0;
  if (p.is_zero()) return 0;
  const int lo = p.min_exponent();
  for (int e = p.max_exponent(); e >= lo; --e) acc = acc * t + p.coefficient(e);
  if (lo < 0) throw std::runtime_error("evaluate: negative exponents");
  for (int e = 0; e < lo; ++e) acc *= t;
  return acc;
}

__int128 torus_value(int p, int q, std::int64_t t) {
  const auto pw = [](std::int64_t base, int e) {
    __int128 r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  const __int128 num = (pw(t, p * q) - 1) * (t - 1);
  const __int128 den = (pw(t, p) - 1) * (pw(t, q) - 1);
  return num / den;
}

std::vector<int> semigroup_staircase(int p, int q) {
  const int two_g = (p - 1) * (q - 1);
  std::vector<bool> in(static_cast<std::size_t>(two_g + 2), false);
  for (int a = 0; a * p <= two_g + 1; ++a) {
    for (int b = 0; a * p + b * q <= two_g + 1; ++b) in[static_cast<std::size_t>(a * p + b * q)] = true;
  }
  std::vector<int> out;
  for (int n = two_g; n >= 0; --n) {
    const int coeff = (in[static_cast<std::size_t>(n)] ? 1 : 0) - (n > 0 && in[static_cast<std::size_t>(n - 1)] ? 1 : 0);
    if (coeff != 0) out.push_back(n);
  }
  return out;
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> list{
      "U",          "T(2,3)",        "T(2,5)",        "T(3,4)",       "T(3,5)",          "T(4,5)",
      "-T(2,3)",    "-T(3,4)",       "C(T(2,3);2,3)", "C(D;3,4)",     "T(2,3) + T(2,3)", "T(3,4) + -T(2,3)",
      "T(2,5) + -T(3,4)", "T(2,3) + -T(2,3)", "D", "C(D;2,5)"};
  return list;
}

kfc::CfkComplex perturb(const kfc::CfkComplex& c, std::mt19937& rng, int squares, int changes, int radius) {
  kfc::CfkComplex out = c;
  std::uniform_int_distribution<int> side(1, 3);
  std::uniform_int_distribution<int> level(-radius, radius);
  std::uniform_int_distribution<int> maslov(-6, 6);
  for (int s = 0; s < squares; ++s) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      const int h = side(rng);
      const int v = side(rng);
      const int ab = level(rng);
      const int lo = std::min({ab, ab + h, ab - v, ab + h - v});
      const int hi = std::max({ab, ab + h, ab - v, ab + h - v});
      if (lo < -radius || hi > radius) continue;
      out = kfc::direct_sum(out, kfc::square_summand("s" + std::to_string(s) + "_", h, v, ab, maslov(rng)));
      break;
    }
  }
  for (int k = 0; k < changes; ++k) {
    struct Move {
      std::size_t x, y;
      int u;
    };
    std::vector<Move> moves;
    for (std::size_t x = 0; x < out.size(); ++x) {
      for (std::size_t y = 0; y < out.size(); ++y) {
        if (x == y) continue;
        const int dm = out.generator(y).maslov - out.generator(x).maslov;
        if (dm < 0 || dm % 2 != 0) continue;
        const int u = dm / 2;
        if (out.generator(y).alexander - u <= out.generator(x).alexander) moves.push_back({x, y, u});
      }
    }
    if (moves.empty()) break;
    const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    out = kfc::filtered_basis_change(out, m.x, m.y, m.u);
  }
  return out;
}

}  // namespace oracle
