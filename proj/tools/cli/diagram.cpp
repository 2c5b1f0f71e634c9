#include "diagram.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace kfc::cli {

Layout layout(const CfkComplex& complex) {
  const CfkComplex c = complex.canonical();
  const std::size_t n = c.size();

  struct Edge {
    std::size_t other;
    int shift;  // U-power of other relative to this end
  };
  std::vector<std::vector<Edge>> adj(n);
  for (const Arrow& a : c.arrows()) {
    adj[a.source].push_back({a.target, a.u_exp});
    adj[a.target].push_back({a.source, -a.u_exp});
  }

  // Roots by descending Alexander grading, so staircases grow down and right.
  std::vector<std::size_t> order(n);
  for (std::size_t g = 0; g < n; ++g) order[g] = n - 1 - g;

  std::vector<std::optional<int>> power(n);
  for (std::size_t root : order) {
    if (power[root]) continue;
    power[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      for (const Edge& e : adj[g]) {
        if (power[e.other]) continue;
        power[e.other] = *power[g] + e.shift;
        queue.push_back(e.other);
      }
    }
  }

  const auto at = [&](std::size_t g, int k) { return LatticePoint{-k, c.generator(g).alexander - k}; };
  Layout out;
  for (std::size_t g = 0; g < n; ++g) out.dots.push_back({c.generator(g).name, at(g, *power[g])});
  for (const Arrow& a : c.arrows()) {
    const int k = *power[a.source] + a.u_exp;
    out.segments.push_back({at(a.source, *power[a.source]), at(a.target, k), *power[a.target] == k});
  }
  return out;
}

namespace {

struct Bounds {
  int imin = 0, imax = 0, jmin = 0, jmax = 0;
};

Bounds bounds_of(const Layout& l) {
  Bounds b;
  bool first = true;
  const auto take = [&](LatticePoint p) {
    if (first) {
      b = {p.i, p.i, p.j, p.j};
      first = false;
      return;
    }
    b.imin = std::min(b.imin, p.i);
    b.imax = std::max(b.imax, p.i);
    b.jmin = std::min(b.jmin, p.j);
    b.jmax = std::max(b.jmax, p.j);
  };
  for (const auto& d : l.dots) take(d.at);
  for (const auto& s : l.segments) {
    take(s.from);
    take(s.to);
  }
  return b;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_ascii(const CfkComplex& c) {
  const Layout l = layout(c);
  if (l.dots.empty()) return "(empty complex)\n";
  const Bounds b = bounds_of(l);
  const int width = (b.imax - b.imin) * 4 + 1;
  const int height = (b.jmax - b.jmin) * 2 + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
  const auto col = [&](int i) { return static_cast<std::size_t>((i - b.imin) * 4); };
  const auto row = [&](int j) { return static_cast<std::size_t>((b.jmax - j) * 2); };

  for (const auto& s : l.segments) {
    if (s.from.j == s.to.j) {
      const std::size_t lo = std::min(col(s.from.i), col(s.to.i));
      const std::size_t hi = std::max(col(s.from.i), col(s.to.i));
      for (std::size_t x = lo + 1; x < hi; ++x) grid[row(s.from.j)][x] = '-';
    } else if (s.from.i == s.to.i) {
      const std::size_t lo = std::min(row(s.from.j), row(s.to.j));
      const std::size_t hi = std::max(row(s.from.j), row(s.to.j));
      for (std::size_t y = lo + 1; y < hi; ++y) grid[y][col(s.from.i)] = '|';
    }
  }
  for (const auto& s : l.segments) {
    if (!s.ends_on_dot) grid[row(s.to.j)][col(s.to.i)] = 'o';
  }
  for (const auto& d : l.dots) grid[row(d.at.j)][col(d.at.i)] = '*';

  std::ostringstream out;
  for (int r = 0; r < height; ++r) {
    if (r % 2 == 0) {
      out << "j=" << std::setw(3) << b.jmax - r / 2 << " ";
    } else {
      out << "      ";
    }
    std::string line = grid[static_cast<std::size_t>(r)];
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  for (const auto& d : l.dots) out << d.name << " at (" << d.at.i << "," << d.at.j << ")\n";
  return out.str();
}

std::string render_svg(const CfkComplex& c) {
  constexpr int pitch = 24;
  const Layout l = layout(c);
  const Bounds b = l.dots.empty() ? Bounds{} : bounds_of(l);
  const int x0 = pitch * b.imin - pitch;
  const int y0 = -pitch * b.jmax - pitch;
  const int w = pitch * (b.imax - b.imin) + 2 * pitch;
  const int h = pitch * (b.jmax - b.jmin) + 2 * pitch;
  const auto x = [&](int i) { return pitch * i; };
  const auto y = [&](int j) { return -pitch * j; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << y0 << ' ' << w << ' ' << h
      << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& s : l.segments) {
    out << "<line x1=\"" << x(s.from.i) << "\" y1=\"" << y(s.from.j) << "\" x2=\"" << x(s.to.i)
        << "\" y2=\"" << y(s.to.j) << "\"/>\n";
  }
  out << "</g>\n";
  for (const auto& s : l.segments) {
    if (s.ends_on_dot) continue;
    out << "<circle cx=\"" << x(s.to.i) << "\" cy=\"" << y(s.to.j)
        << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  }
  out << "<g fill=\"black\">\n";
  for (const auto& d : l.dots) {
    out << "<circle cx=\"" << x(d.at.i) << "\" cy=\"" << y(d.at.j) << "\" r=\"4\"><title>" << xml_escape(d.name)
        << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace kfc::cli
