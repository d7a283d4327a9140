#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "mccool/automorphism.hpp"

namespace mccool {

/// One identity lhs = rhs between formal expressions, tagged with the family
/// it belongs to and the index tuple that instantiated it.
struct RelationInstance {
  std::string family;
  std::vector<int> indices;
  GroupExpression lhs;
  GroupExpression rhs;

  int rank() const { return lhs.rank(); }
};

// Family names used by the enumerators below.
//   mccool-1 .. mccool-4     McCool presentation of the basis-conjugating group
//   tau-conj, xi-conj        conjugation of c[s,t] by tau[i] and xi[i]
//   kernel-i .. kernel-vi    conjugation of the kernel generators c[n,j], c[j,n]
//   bp-1, bp-2, bp-3         braid-permutation presentation
//   bp-factor                xi[i] * s[i] = c[i+1,i]

/// McCool's relations. Family 2 runs over ordered 4-tuples (k,j,s,t) of
/// distinct indices; the others over ordered triples of distinct indices.
std::vector<RelationInstance> mccool_relations(int n);

/// tau[i] c[s,t] tau[i]^-1 and xi[i] c[s,t] xi[i]^-1 rewritten as single
/// generators, for every valid i and s != t.
std::vector<RelationInstance> conjugation_formulas(int n);

/// Conjugates of c[n,j] and c[j,n] by generators with indices below n.
std::vector<RelationInstance> kernel_conjugation_formulas(int n);

/// Braid-permutation relations in left-action form, plus the factorization
/// of c[i+1,i] through xi[i] and s[i].
///
/// The right-action presentation of BP_n reads every relation with its
/// factors reversed; the stored forms are those reversals. Palindromic
/// relations (involutions, commutations, braid relations) are unchanged.
std::vector<RelationInstance> bp_relations(int n);

std::vector<RelationInstance> all_relations(int n);

bool holds(const RelationInstance& r);

struct InstanceResult {
  std::string family;
  std::vector<int> indices;
  bool ok = false;
};

struct FamilyTally {
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct VerificationReport {
  int n = 0;
  std::vector<InstanceResult> results;       // sorted by (family, indices)
  std::map<std::string, FamilyTally> families;
  std::chrono::duration<double> runtime{};

  std::size_t total() const { return results.size(); }
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Every family name that all_relations(n) may produce, in a stable order.
const std::vector<std::string>& relation_families();

/// Evaluates every instance (optionally only one family). Families with no
/// valid index tuples at this n are still listed, with zero instances.
VerificationReport verify_all(int n, const std::string& family_filter = "");

}  // namespace mccool
