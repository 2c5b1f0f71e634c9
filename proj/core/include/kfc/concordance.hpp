#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kfc/error.hpp"
#include "kfc/knots.hpp"

namespace kfc {

enum class Ordering { Less, Equal, Greater };

std::string to_string(Ordering o);

/// Compares classes by the sign of epsilon(K1 # -K2).
Ordering class_cmp(const ClassRep& k1, const ClassRep& k2);

/// Lemma tags used in certificates.
inline constexpr const char* kSmallerA1 = "a1_smaller";
inline constexpr const char* kLargerA2 = "a2_larger";

struct DominanceCheck {
  bool proved = false;
  /// kSmallerA1 or kLargerA2 when proved, empty otherwise.
  std::string lemma;
  int a1_k = 0;
  int a1_j = 0;
  std::optional<int> a2_k;
  std::optional<int> a2_j;
};

/// Sufficient conditions for K >> J between classes with epsilon = 1:
///   a1(K) < a1(J), or
///   a1(K) == a1(J) and a2(K) > a2(J), both defined.
/// An unproved result is not a refutation. Throws EpsilonNotOne.
DominanceCheck dominates_by_invariants(const ClassRep& k, const ClassRep& j);

/// Outcome of testing epsilon(K # -nJ) = 1 for n = 1..N. When consistent,
/// n is N; otherwise n is the first failure, 0 meaning epsilon(J) != 1.
struct DominanceEvidence {
  bool consistent = false;
  int n = 0;
};

DominanceEvidence dominance_evidence(const ClassRep& k, const ClassRep& j, int max_n);

class NotAChain : public Error {
 public:
  NotAChain(const std::string& what, std::string first, std::string second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

struct CertificateEntry {
  ClassRep rep;
  int tau = 0;
  int epsilon = 0;
  int a1 = 0;
  std::optional<int> a2;
};

/// entries[i] >> entries[i+1] by lemmas[i]; the last entry has epsilon = 1.
struct Certificate {
  std::vector<CertificateEntry> entries;
  std::vector<std::string> lemmas;

  std::string to_json() const;
};

/// Orders the classes by (a1 ascending, a2 descending) and proves every link
/// with dominates_by_invariants. Throws NotAChain naming the first pair that
/// cannot be linked, or a class whose epsilon is not 1.
Certificate independence_certificate(const std::vector<ClassRep>& classes);

struct RecheckResult {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Rebuilds every class in a certificate JSON document with build and
/// recomputes all witnesses.
RecheckResult recheck_certificate(const std::string& json,
                                  const std::function<ClassRep(const KnotExpr&)>& build = class_complex);

/// tau of the (p, q) cable from tau and epsilon of the companion:
///   epsilon =  1:  p tau + (p-1)(q-1)/2
///   epsilon = -1:  p tau + (p-1)(q+1)/2
///   epsilon =  0:  tau(T(p,q))
/// Throws InconsistentInput for epsilon = 0 with tau != 0 or epsilon outside
/// {-1, 0, 1}; NotCoprime / SemanticError for bad (p, q).
int cable_tau(int tau_k, int epsilon_k, int p, int q);

/// epsilon(K) from tau(K_{2,1}) and tau(K_{2,-1}); nullopt when undetermined.
std::optional<int> epsilon_from_cable_taus(int tau_21, int tau_2m1);

int class_sign(const ClassRep& k);
/// K if epsilon(K) >= 0, else its mirror.
ClassRep abs_class(const ClassRep& k);

}  // namespace kfc
