#include "kfc/concordance.hpp"

#include <algorithm>
#include <numeric>

#include "kfc/invariants.hpp"

namespace kfc {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "LT";
    case Ordering::Equal:
      return "EQ";
    case Ordering::Greater:
      return "GT";
  }
  return "?";
}

Ordering class_cmp(const ClassRep& k1, const ClassRep& k2) {
  const int e = epsilon(reduce(tensor(k1.complex, dual(k2.complex))));
  if (e > 0) return Ordering::Greater;
  if (e < 0) return Ordering::Less;
  return Ordering::Equal;
}

DominanceCheck dominates_by_invariants(const ClassRep& k, const ClassRep& j) {
  DominanceCheck out;
  out.a1_k = a1(k.complex);
  out.a1_j = a1(j.complex);
  out.a2_k = a2(k.complex);
  out.a2_j = a2(j.complex);
  if (out.a1_k < out.a1_j) {
    out.proved = true;
    out.lemma = kSmallerA1;
  } else if (out.a1_k == out.a1_j && out.a2_k && out.a2_j && *out.a2_k > *out.a2_j) {
    out.proved = true;
    out.lemma = kLargerA2;
  }
  return out;
}

DominanceEvidence dominance_evidence(const ClassRep& k, const ClassRep& j, int max_n) {
  if (epsilon(j.complex) != 1) return {false, 0};
  const CfkComplex minus_j = dual(j.complex);
  CfkComplex current = k.complex;
  for (int n = 1; n <= max_n; ++n) {
    current = reduce(tensor(current, minus_j));
    if (epsilon(current) != 1) return {false, n};
  }
  return {true, max_n};
}

Certificate independence_certificate(const std::vector<ClassRep>& classes) {
  std::vector<CertificateEntry> entries;
  for (const auto& rep : classes) {
    CertificateEntry e{rep, tau(rep.complex), epsilon(rep.complex), 0, std::nullopt};
    if (e.epsilon != 1) {
      const auto name = rep.provenance.to_string();
      throw NotAChain(name + " has epsilon " + std::to_string(e.epsilon) + ", not 1", name, "0");
    }
    e.a1 = a1(rep.complex);
    e.a2 = a2(rep.complex);
    entries.push_back(std::move(e));
  }
  // Undefined a2 sorts last within its a1 group.
  std::stable_sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    if (x.a1 != y.a1) return x.a1 < y.a1;
    if (x.a2.has_value() != y.a2.has_value()) return x.a2.has_value();
    return x.a2.value_or(0) > y.a2.value_or(0);
  });

  Certificate cert;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const auto check = dominates_by_invariants(entries[i].rep, entries[i + 1].rep);
    if (!check.proved) {
      const auto a = entries[i].rep.provenance.to_string();
      const auto b = entries[i + 1].rep.provenance.to_string();
      throw NotAChain("cannot prove " + a + " >> " + b, a, b);
    }
    cert.lemmas.push_back(check.lemma);
  }
  cert.entries = std::move(entries);
  return cert;
}

int cable_tau(int tau_k, int epsilon_k, int p, int q) {
  if (p < 1) throw SemanticError("cable winding number must be positive");
  if (std::gcd(p, q) != 1) throw NotCoprime("cable parameters are not coprime");
  switch (epsilon_k) {
    case 1:
      return p * tau_k + (p - 1) * (q - 1) / 2;
    case -1:
      return p * tau_k + (p - 1) * (q + 1) / 2;
    case 0:
      if (tau_k != 0) throw InconsistentInput("epsilon = 0 forces tau = 0");
      return q > 0 ? (p - 1) * (q - 1) / 2 : (p - 1) * (q + 1) / 2;
    default:
      throw InconsistentInput("epsilon must be -1, 0 or 1");
  }
}

std::optional<int> epsilon_from_cable_taus(int tau_21, int tau_2m1) {
  if (tau_21 % 2 != 0) return -1;
  if (tau_2m1 % 2 != 0) return 1;
  if (tau_21 == 0 && tau_2m1 == 0) return 0;
  return std::nullopt;
}

int class_sign(const ClassRep& k) { return epsilon(k.complex); }

ClassRep abs_class(const ClassRep& k) {
  if (class_sign(k) >= 0) return k;
  return {dual(k.complex), KnotExpr::mirror(k.provenance)};
}

}  // namespace kfc
