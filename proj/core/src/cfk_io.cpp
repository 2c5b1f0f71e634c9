#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "kfc/cfk.hpp"
#include "kfc/error.hpp"

namespace kfc {

std::string serialize(const CfkComplex& c) {
  const CfkComplex canon = c.canonical();
  std::ostringstream out;
  out << "cfk v1\n";
  for (const auto& g : canon.generators()) {
    out << "gen " << g.name << " A=" << g.alexander << " M=" << g.maslov << '\n';
  }
  for (const Arrow& a : canon.arrows()) {
    out << "arr " << canon.generator(a.source).name << ' ' << canon.generator(a.target).name
        << " u=" << a.u_exp << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

int keyed_int(const Token& tok, std::string_view key, std::size_t line) {
  if (tok.text.substr(0, key.size()) != key) {
    throw ParseError("expected " + std::string(key) + "<int>, got '" + std::string(tok.text) + "'",
                     line, tok.column);
  }
  const std::string_view digits = tok.text.substr(key.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed integer in '" + std::string(tok.text) + "'", line, tok.column);
  }
  return value;
}

struct PendingArrow {
  Token source;
  Token target;
  int u_exp;
  std::size_t line;
};

}  // namespace

CfkComplex deserialize(std::string_view text) {
  CfkComplex out;
  std::vector<PendingArrow> arrows;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto toks = split(line);
    if (toks.empty() || toks.front().text.front() == '#') continue;

    const Token& head = toks.front();
    if (!header) {
      if (head.text != "cfk" || toks.size() != 2 || toks[1].text != "v1") {
        throw ParseError("expected header 'cfk v1'", line_no, head.column);
      }
      header = true;
      continue;
    }
    if (head.text == "gen") {
      if (toks.size() != 4) throw ParseError("expected 'gen <name> A=<int> M=<int>'", line_no, head.column);
      const int a = keyed_int(toks[2], "A=", line_no);
      const int m = keyed_int(toks[3], "M=", line_no);
      try {
        out.add_generator(std::string(toks[1].text), a, m);
      } catch (const SemanticError& e) {
        throw ParseError(e.what(), line_no, toks[1].column);
      }
    } else if (head.text == "arr") {
      if (toks.size() != 4) throw ParseError("expected 'arr <source> <target> u=<int>'", line_no, head.column);
      arrows.push_back({toks[1], toks[2], keyed_int(toks[3], "u=", line_no), line_no});
    } else {
      throw ParseError("unknown directive '" + std::string(head.text) + "'", line_no, head.column);
    }
  }
  if (!header) throw ParseError("missing header 'cfk v1'", line_no == 0 ? 1 : line_no, 1);

  for (const auto& a : arrows) {
    const auto s = out.find(a.source.text);
    if (!s) throw ParseError("unknown generator '" + std::string(a.source.text) + "'", a.line, a.source.column);
    const auto t = out.find(a.target.text);
    if (!t) throw ParseError("unknown generator '" + std::string(a.target.text) + "'", a.line, a.target.column);
    out.toggle_arrow(*s, *t, a.u_exp);
  }
  return out;
}

}  // namespace kfc
