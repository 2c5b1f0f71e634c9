#include "json.hpp"
#include "kfc/concordance.hpp"
#include "kfc/invariants.hpp"

namespace kfc {

using nlohmann::ordered_json;

namespace {

ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(); }

}  // namespace

std::string Certificate::to_json() const {
  ordered_json doc;
  doc["format"] = "kfc-independence-certificate";
  doc["version"] = 1;
  auto& chain = doc["chain"] = ordered_json::array();
  for (const auto& e : entries) {
    chain.push_back({{"expr", e.rep.provenance.to_string()},
                     {"tau", e.tau},
                     {"epsilon", e.epsilon},
                     {"a1", e.a1},
                     {"a2", optional_int(e.a2)}});
  }
  auto& links = doc["links"] = ordered_json::array();
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    links.push_back({{"dominant", i}, {"dominated", i + 1}, {"lemma", lemmas[i]}});
  }
  if (!entries.empty()) {
    doc["positivity"] = {{"index", entries.size() - 1}, {"epsilon", entries.back().epsilon}};
  }
  return doc.dump(2) + "\n";
}

RecheckResult recheck_certificate(const std::string& json,
                                  const std::function<ClassRep(const KnotExpr&)>& build) {
  RecheckResult result;
  auto& problems = result.problems;
  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    problems.push_back(std::string("malformed JSON: ") + e.what());
    return result;
  }

  try {
    if (doc.value("format", "") != "kfc-independence-certificate") {
      problems.push_back("not an independence certificate");
      return result;
    }
    const auto& chain = doc.at("chain");
    std::vector<ClassRep> reps;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& item = chain[i];
      const auto expr = item.at("expr").get<std::string>();
      const std::string where = "chain[" + std::to_string(i) + "] " + expr;
      ClassRep rep = build(parse_knot(expr));
      const int t = tau(rep.complex);
      const int e = epsilon(rep.complex);
      if (t != item.at("tau").get<int>()) problems.push_back(where + ": tau is " + std::to_string(t));
      if (e != item.at("epsilon").get<int>()) problems.push_back(where + ": epsilon is " + std::to_string(e));
      if (e == 1) {
        const int first = a1(rep.complex);
        const auto second = a2(rep.complex);
        if (first != item.at("a1").get<int>()) problems.push_back(where + ": a1 is " + std::to_string(first));
        if (optional_int(second) != item.at("a2")) problems.push_back(where + ": a2 differs");
      } else {
        problems.push_back(where + ": epsilon is not 1");
      }
      reps.push_back(std::move(rep));
    }

    const auto& links = doc.at("links");
    if (reps.size() > 0 && links.size() != reps.size() - 1) {
      problems.push_back("expected " + std::to_string(reps.size() - 1) + " links");
    }
    if (problems.empty()) {
      for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& link = links[i];
        const auto from = link.at("dominant").get<std::size_t>();
        const auto to = link.at("dominated").get<std::size_t>();
        if (from != i || to != i + 1) {
          problems.push_back("link " + std::to_string(i) + " does not join adjacent entries");
          continue;
        }
        const auto check = dominates_by_invariants(reps[from], reps[to]);
        if (!check.proved || check.lemma != link.at("lemma").get<std::string>()) {
          problems.push_back("link " + std::to_string(i) + " is not reproduced");
        }
      }
      const auto& pos = doc.at("positivity");
      if (!reps.empty() && (pos.at("index").get<std::size_t>() != reps.size() - 1 ||
                            pos.at("epsilon").get<int>() != 1)) {
        problems.push_back("positivity witness does not match");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    problems.push_back(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    problems.push_back(std::string("recomputation failed: ") + e.what());
  }
  result.ok = problems.empty();
  return result;
}

}  // namespace kfc
