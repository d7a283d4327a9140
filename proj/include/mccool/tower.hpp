#pragma once

#include <vector>

#include "mccool/automorphism.hpp"
#include "mccool/subgroup.hpp"
#include "mccool/word.hpp"

namespace mccool {

// The split projection of the basis-conjugating group of rank n onto rank n-1
// (delete x_n), its section, and the kernel K_n. The plus variant restricts
// to the upper triangular subgroup generated by c[k,i] with i < k, where the
// kernel K_n^+ is free on c[n,1], ..., c[n,n-1].

struct TowerLevel {
  int n = 2;
  Variant variant = Variant::full;
};

/// Throws unless every factor is a Chi admissible at this level.
void check_level(const GroupExpression& e, const TowerLevel& level);

/// plus when every factor is c[k,i] with i < k, else full.
Variant infer_variant(const GroupExpression& e);

/// Drops every factor that mentions index n.
GroupExpression project(const GroupExpression& e, const TowerLevel& level);

/// The canonical section: the same factors viewed one rank higher.
GroupExpression lift(const GroupExpression& e);

/// Whether e projects to the identity automorphism of F_{n-1}.
bool in_kernel(const GroupExpression& e, const TowerLevel& level);

struct Decomposition {
  GroupExpression w_head;  // lift(project(e))
  GroupExpression x_tail;  // w_head^-1 e, freely reduced; lies in the kernel
};

Decomposition decompose(const GroupExpression& e, const TowerLevel& level);

/// x_i^{±1} -> c[n,i]^{±1} for a word w of rank n-1.
GroupExpression phi(const Word& w);

/// Inverse of phi on K_n^+: returns U with f(x_n) = U^-1 x_n U.
///
/// Throws Error if f does not fix x_1..x_{n-1} or f(x_n) is not a conjugate
/// of x_n by a word in x_1..x_{n-1}, so this also decides membership in K_n^+.
Word retract_plus(const Endomorphism& f);

/// The kernel part of a plus-variant decomposition as a word in c[n,i].
GroupExpression kernel_word(const Decomposition& d);

/// Exponent sums of c[i,n], i = 1..n-1. Every factor must be c[n,i] or c[i,n].
std::vector<long> gamma(const GroupExpression& e);

/// Membership in the kernel of gamma.
bool in_gamma_kernel(const GroupExpression& e);

}  // namespace mccool
