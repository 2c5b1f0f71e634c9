#include "kfc/cfk.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "kfc/error.hpp"
#include "kfc/region.hpp"

namespace kfc {

std::size_t CfkComplex::add_generator(std::string name, int alexander, int maslov) {
  if (name.empty()) throw SemanticError("generator name is empty");
  if (std::any_of(name.begin(), name.end(), [](unsigned char ch) { return std::isspace(ch); })) {
    throw SemanticError("generator name '" + name + "' contains whitespace");
  }
  if (index_.count(name)) throw SemanticError("duplicate generator '" + name + "'");
  index_.emplace(name, gens_.size());
  gens_.push_back({std::move(name), alexander, maslov});
  return gens_.size() - 1;
}

void CfkComplex::toggle_arrow(std::size_t source, std::size_t target, int u_exp) {
  if (source >= gens_.size() || target >= gens_.size()) {
    throw SemanticError("arrow endpoint out of range");
  }
  const Arrow a{source, target, u_exp};
  if (!arrows_.erase(a)) arrows_.insert(a);
}

void CfkComplex::toggle_arrow(std::string_view source, std::string_view target, int u_exp) {
  auto s = find(source);
  auto t = find(target);
  if (!s) throw SemanticError("unknown generator '" + std::string(source) + "'");
  if (!t) throw SemanticError("unknown generator '" + std::string(target) + "'");
  toggle_arrow(*s, *t, u_exp);
}

std::optional<std::size_t> CfkComplex::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CfkComplex::has_arrow(std::size_t source, std::size_t target, int u_exp) const {
  return arrows_.count({source, target, u_exp}) != 0;
}

std::vector<Arrow> CfkComplex::outgoing(std::size_t source) const {
  std::vector<Arrow> out;
  for (auto it = arrows_.lower_bound({source, 0, std::numeric_limits<int>::min()});
       it != arrows_.end() && it->source == source; ++it) {
    out.push_back(*it);
  }
  return out;
}

int CfkComplex::min_alexander() const noexcept {
  if (gens_.empty()) return 0;
  int m = gens_.front().alexander;
  for (const auto& g : gens_) m = std::min(m, g.alexander);
  return m;
}

int CfkComplex::max_alexander() const noexcept {
  if (gens_.empty()) return 0;
  int m = gens_.front().alexander;
  for (const auto& g : gens_) m = std::max(m, g.alexander);
  return m;
}

CfkComplex CfkComplex::canonical() const {
  std::vector<std::size_t> order(gens_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = gens_[a];
    const auto& y = gens_[b];
    return std::tie(x.alexander, x.maslov, x.name) < std::tie(y.alexander, y.maslov, y.name);
  });
  std::vector<std::size_t> position(gens_.size());
  CfkComplex out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = k;
    const auto& g = gens_[order[k]];
    out.add_generator(g.name, g.alexander, g.maslov);
  }
  for (const auto& a : arrows_) out.arrows_.insert({position[a.source], position[a.target], a.u_exp});
  return out;
}

bool operator==(const CfkComplex& a, const CfkComplex& b) {
  if (a.size() != b.size() || a.arrows_.size() != b.arrows_.size()) return false;
  const CfkComplex ca = a.canonical();
  const CfkComplex cb = b.canonical();
  return ca.gens_ == cb.gens_ && ca.arrows_ == cb.arrows_;
}

ArrowDrops arrow_drops(const CfkComplex& c, const Arrow& a) {
  const int da = c.generator(a.source).alexander - c.generator(a.target).alexander;
  return {a.u_exp, da + a.u_exp};
}

namespace {

std::string describe_arrow(const CfkComplex& c, const Arrow& a) {
  std::ostringstream out;
  out << c.generator(a.source).name << " -> " << c.generator(a.target).name << " u=" << a.u_exp;
  return out.str();
}

// Pairs (x, z) where del^2 x has an odd number of U^n z terms for some n.
std::vector<std::pair<std::size_t, std::size_t>> d_squared_failures(const CfkComplex& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < c.size(); ++x) {
    std::set<std::pair<std::size_t, int>> terms;
    for (const Arrow& a : c.outgoing(x)) {
      for (const Arrow& b : c.outgoing(a.target)) {
        const std::pair<std::size_t, int> key{b.target, a.u_exp + b.u_exp};
        if (!terms.erase(key)) terms.insert(key);
      }
    }
    std::set<std::size_t> targets;
    for (const auto& [z, n] : terms) targets.insert(z);
    for (std::size_t z : targets) out.emplace_back(x, z);
  }
  return out;
}

std::vector<std::string> arrow_problems(const CfkComplex& c) {
  std::vector<std::string> out;
  for (const Arrow& a : c.arrows()) {
    const auto drops = arrow_drops(c, a);
    const auto& s = c.generator(a.source);
    const auto& t = c.generator(a.target);
    if (drops.i_drop < 0) out.push_back(describe_arrow(c, a) + ": negative U-power");
    if (drops.j_drop < 0) out.push_back(describe_arrow(c, a) + ": raises the Alexander filtration");
    if (s.maslov - 1 != t.maslov - 2 * a.u_exp) {
      out.push_back(describe_arrow(c, a) + ": Maslov grading " + std::to_string(s.maslov) + " -> " +
                    std::to_string(t.maslov - 2 * a.u_exp) + ", expected " +
                    std::to_string(s.maslov - 1));
    }
  }
  return out;
}

}  // namespace

bool ValidationReport::valid() const {
  if (!arrow_violations.empty() || !d_squared_witnesses.empty()) return false;
  if (checked_knot_class) return column_rank == 1U && row_rank == 1U;
  return true;
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << (valid() ? "valid" : "invalid") << '\n';
  for (const auto& v : arrow_violations) out << "arrow: " << v << '\n';
  for (const auto& [x, z] : d_squared_witnesses) out << "d^2: " << x << " -> " << z << '\n';
  if (checked_knot_class) {
    out << "column rank: " << (column_rank ? std::to_string(*column_rank) : "n/a") << '\n';
    out << "row rank: " << (row_rank ? std::to_string(*row_rank) : "n/a") << '\n';
  }
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["valid"] = valid();
  j["arrow_violations"] = arrow_violations;
  auto& d2 = j["d_squared_witnesses"] = nlohmann::ordered_json::array();
  for (const auto& [x, z] : d_squared_witnesses) d2.push_back({x, z});
  j["checked_knot_class"] = checked_knot_class;
  j["column_rank"] = column_rank ? nlohmann::ordered_json(*column_rank) : nlohmann::ordered_json();
  j["row_rank"] = row_rank ? nlohmann::ordered_json(*row_rank) : nlohmann::ordered_json();
  j["warnings"] = warnings;
  return j.dump(2);
}

ValidationReport validate(const CfkComplex& c, bool as_knot_class) {
  ValidationReport report;
  report.arrow_violations = arrow_problems(c);
  for (const auto& [x, z] : d_squared_failures(c)) {
    report.d_squared_witnesses.emplace_back(c.generator(x).name, c.generator(z).name);
  }
  report.checked_knot_class = as_knot_class;
  const bool structurally_sound =
      report.arrow_violations.empty() && report.d_squared_witnesses.empty();
  if (!structurally_sound) {
    if (as_knot_class) report.warnings.push_back("homology ranks skipped: complex is malformed");
    return report;
  }

  if (as_knot_class) {
    report.column_rank = Homology(RegionComplex(c, Region::column0())).rank();
    report.row_rank = Homology(RegionComplex(c, Region::row(0))).rank();
  }

  const auto table = grading_table(reduce(c));
  for (const auto& [key, count] : table) {
    const auto [s, m] = key;
    auto it = table.find({-s, m - 2 * s});
    const int mirror = it == table.end() ? 0 : it->second;
    if (mirror != count) {
      std::ostringstream w;
      w << "grading asymmetry: #(A=" << s << ",M=" << m << ")=" << count << " but #(A=" << -s
        << ",M=" << m - 2 * s << ")=" << mirror;
      report.warnings.push_back(w.str());
    }
  }
  return report;
}

std::string tensor_name(std::string_view x, std::string_view y) {
  const auto wrap = [](std::string_view s) {
    if (s.find('.') == std::string_view::npos) return std::string(s);
    return "(" + std::string(s) + ")";
  };
  return wrap(x) + "." + wrap(y);
}

std::string dual_name(std::string_view x) {
  if (!x.empty() && x.back() == '*') return std::string(x.substr(0, x.size() - 1));
  return std::string(x) + "*";
}

namespace {

// Adds a generator, appending "#n" on a name collision.
std::size_t add_unique(CfkComplex& c, const std::string& name, int alexander, int maslov) {
  if (!c.find(name)) return c.add_generator(name, alexander, maslov);
  for (int n = 2;; ++n) {
    std::string candidate = name + "#" + std::to_string(n);
    if (!c.find(candidate)) return c.add_generator(std::move(candidate), alexander, maslov);
  }
}

}  // namespace

CfkComplex tensor(const CfkComplex& a, const CfkComplex& b) {
  CfkComplex out;
  const std::size_t nb = b.size();
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      add_unique(out, tensor_name(x.name, y.name), x.alexander + y.alexander, x.maslov + y.maslov);
    }
  }
  for (const Arrow& arr : a.arrows()) {
    for (std::size_t y = 0; y < nb; ++y) out.toggle_arrow(arr.source * nb + y, arr.target * nb + y, arr.u_exp);
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (const Arrow& arr : b.arrows()) out.toggle_arrow(x * nb + arr.source, x * nb + arr.target, arr.u_exp);
  }
  return out;
}

CfkComplex dual(const CfkComplex& c) {
  CfkComplex out;
  for (const auto& g : c.generators()) out.add_generator(dual_name(g.name), -g.alexander, -g.maslov);
  for (const Arrow& a : c.arrows()) out.toggle_arrow(a.target, a.source, a.u_exp);
  return out;
}

CfkComplex direct_sum(const CfkComplex& a, const CfkComplex& b) {
  CfkComplex out = a;
  const std::size_t offset = a.size();
  for (const auto& g : b.generators()) out.add_generator(g.name, g.alexander, g.maslov);
  for (const Arrow& arr : b.arrows()) out.toggle_arrow(arr.source + offset, arr.target + offset, arr.u_exp);
  return out;
}

CfkComplex with_prefix(const CfkComplex& c, std::string_view prefix) {
  CfkComplex out;
  for (const auto& g : c.generators()) out.add_generator(std::string(prefix) + g.name, g.alexander, g.maslov);
  for (const Arrow& a : c.arrows()) out.toggle_arrow(a.source, a.target, a.u_exp);
  return out;
}

namespace {

// Mutable adjacency used during cancellation.
class Workspace {
 public:
  explicit Workspace(const CfkComplex& c)
      : gens_(c.generators()), alive_(c.size(), true), out_(c.size()), in_(c.size()) {
    for (const Arrow& a : c.arrows()) toggle(a.source, a.target, a.u_exp);
  }

  void toggle(std::size_t s, std::size_t t, int u) {
    if (!out_[s].erase({t, u})) {
      out_[s].insert({t, u});
      in_[t].insert({s, u});
    } else {
      in_[t].erase({s, u});
    }
  }

  // First arrow in (source, target) order with u == 0 and no Alexander drop.
  std::optional<Arrow> next_cancellable() const {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      if (!alive_[s]) continue;
      for (const auto& [t, u] : out_[s]) {
        if (u == 0 && gens_[s].alexander == gens_[t].alexander) return Arrow{s, t, 0};
      }
    }
    return std::nullopt;
  }

  void cancel(const Arrow& a) {
    const std::size_t x = a.source;
    const std::size_t y = a.target;
    std::size_t powers = 0;
    for (const auto& [t, u] : out_[x]) {
      if (t == y) ++powers;
    }
    if (powers != 1) {
      throw InternalInconsistency("cancellation coefficient " + gens_[x].name + " -> " +
                                  gens_[y].name + " is not a unit");
    }
    std::vector<std::pair<std::size_t, int>> into_y;
    for (const auto& [w, n1] : in_[y]) {
      if (w != x) into_y.emplace_back(w, n1);
    }
    std::vector<std::pair<std::size_t, int>> from_x;
    for (const auto& [z, n2] : out_[x]) {
      if (z != y) from_x.emplace_back(z, n2);
    }
    for (const auto& [w, n1] : into_y) {
      for (const auto& [z, n2] : from_x) toggle(w, z, n1 + n2);
    }
    remove(x);
    remove(y);
  }

  CfkComplex snapshot() const {
    CfkComplex out;
    std::vector<std::size_t> position(gens_.size());
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (!alive_[g]) continue;
      position[g] = out.add_generator(gens_[g].name, gens_[g].alexander, gens_[g].maslov);
    }
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      if (!alive_[s]) continue;
      for (const auto& [t, u] : out_[s]) out.toggle_arrow(position[s], position[t], u);
    }
    return out;
  }

 private:
  void remove(std::size_t g) {
    for (const auto& [t, u] : std::vector(out_[g].begin(), out_[g].end())) toggle(g, t, u);
    for (const auto& [s, u] : std::vector(in_[g].begin(), in_[g].end())) toggle(s, g, u);
    alive_[g] = false;
  }

  std::vector<Generator> gens_;
  std::vector<bool> alive_;
  std::vector<std::set<std::pair<std::size_t, int>>> out_;
  std::vector<std::set<std::pair<std::size_t, int>>> in_;
};

}  // namespace

CfkComplex reduce(const CfkComplex& c, ReduceOptions options) {
  Workspace ws(c.canonical());
  while (auto a = ws.next_cancellable()) {
    ws.cancel(*a);
    if (options.verify_steps) {
      const CfkComplex step = ws.snapshot();
      if (!arrow_problems(step).empty() || !d_squared_failures(step).empty()) {
        throw InternalInconsistency("reduction step produced an invalid complex");
      }
    }
  }
  return ws.snapshot();
}

CfkComplex filtered_basis_change(const CfkComplex& c, std::size_t target, std::size_t addend,
                                 int u_exp) {
  if (target >= c.size() || addend >= c.size() || target == addend) {
    throw SemanticError("basis change needs two distinct generators");
  }
  const auto& x = c.generator(target);
  const auto& y = c.generator(addend);
  if (u_exp < 0) throw SemanticError("basis change with negative U-power");
  if (y.alexander - u_exp > x.alexander) throw SemanticError("basis change is not filtered");
  if (y.maslov - 2 * u_exp != x.maslov) throw SemanticError("basis change is not homogeneous");

  CfkComplex out = c;
  // del(x') = del(x) + U^k del(y).
  for (const Arrow& a : c.outgoing(addend)) out.toggle_arrow(target, a.target, a.u_exp + u_exp);
  // U^n x = U^n x' + U^{n+k} y in every boundary that hits x.
  for (const Arrow& a : c.arrows()) {
    if (a.target == target) out.toggle_arrow(a.source, addend, a.u_exp + u_exp);
  }
  return out;
}

CfkComplex square_summand(std::string_view prefix, int h, int v, int alexander_b, int maslov_b) {
  if (h < 1 || v < 1) throw SemanticError("square side lengths must be positive");
  const std::string p(prefix);
  CfkComplex out;
  const auto b = out.add_generator(p + "b", alexander_b, maslov_b);
  const auto a = out.add_generator(p + "a", alexander_b + h, maslov_b - 1 + 2 * h);
  const auto cc = out.add_generator(p + "c", alexander_b - v, maslov_b - 1);
  const auto d = out.add_generator(p + "d", alexander_b + h - v, maslov_b - 2 + 2 * h);
  out.toggle_arrow(b, a, h);
  out.toggle_arrow(b, cc, 0);
  out.toggle_arrow(a, d, 0);
  out.toggle_arrow(cc, d, h);
  return out;
}

CfkComplex unknot_complex() {
  CfkComplex out;
  out.add_generator("x0", 0, 0);
  return out;
}

std::map<std::pair<int, int>, int> grading_table(const CfkComplex& c) {
  std::map<std::pair<int, int>, int> table;
  for (const auto& g : c.generators()) ++table[{g.alexander, g.maslov}];
  return table;
}

}  // namespace kfc
