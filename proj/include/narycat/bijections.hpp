#pragma once

#include "narycat/fpaths.hpp"
#include "narycat/monomial.hpp"
#include "narycat/paths.hpp"
#include "narycat/permutations.hpp"
#include "narycat/trees.hpp"

// The eight bijections relating the nine families, with inverses, plus the
// two counting injections. Every map validates its input eagerly and throws
// std::invalid_argument when it is outside the stated domain. Forward maps
// read the degree off the argument where they need it at all; inverses take
// it explicitly.
//
// Statistic transport, for m with topt n and lopt k:
//   f1: semilength = deg+lopt, up steps = lopt       (monomial -> Schroder)
//   f2: edges = deg+lopt, internal nodes = lopt+1    (monomial -> tree)
//   f3: semilength = edges, peaks = internal nodes   (tree -> Dyck)
//   f4: size = semilength, runs = peaks              (Dyck -> permutation)
//   f5: semilength = topt, hdd = lopt                (monomial -> ~S)
//   f6: length = topt, north = lopt, height = lofi   (monomial -> F)
//   f7: semilength = length+1, UU = north            (F -> ~Q)
//   f8: edges = semilength, leaves = UU+1            (~Q -> ~T)

namespace narycat {

// Token map L( -> U, indeterminate -> H, ) -> D.
LatticePath f1(const Monomial& m);
Monomial f1_inv(const LatticePath& p, int d);

// Factor-to-subtree: a monomial of c factors becomes a node of outdegree c,
// leaf factors become leaves, L(X) becomes the subtree of X.
OrderedTree f2(const Monomial& m);
Monomial f2_inv(const OrderedTree& t, int d);

// Preorder outdegrees (j1..j_{N-1}, 0) <-> U^{j1}D U^{j2}D ... U^{j_{N-1}}D.
// Defined on all trees with at least one edge; restricts to T_d <-> Q_d.
LatticePath f3(const OrderedTree& t);
OrderedTree f3_inv(const LatticePath& p, int d);

// P_i = j where the j-th down step matches the i-th up step. Defined on all
// Dyck paths; restricts to Q_d <-> P_d. d in f4_inv only gates d >= 2.
Perm f4(const LatticePath& p);
LatticePath f4_inv(const Perm& q, int d = 2);

// Three-case recursion: indeterminate -> empty, L(X) -> f5(X)H, product ->
// f5(M_0) U f5(M'_{i_1}) ... U f5(M_{d-1}) D^{|I|+1} labelled I, where
// M_1..M_{d-1} are the last d-1 factors and I marks which of M_1..M_{d-2}
// are L-factors.
LabeledSchroderPath f5(const Monomial& m);
Monomial f5_inv(const LabeledSchroderPath& s, int d);

// Three-case recursion: indeterminate -> empty, L(X) -> f6(X),(0,1),
// product -> f6(M_0), then (0,1),f6(M_i') for each L-factor among the last
// d-1, then (m,1) labelled (m_1..m_{d-1}) with m_i = lofi(M_i), m = 1+sum.
// The inverse splits at the last (0,1) step starting at each split height.
FPath f6(const Monomial& m);
Monomial f6_inv(const FPath& f, int d);

// (l_1,1)...(l_n,1) -> UD^{l_1}...UD^{l_n}UD^{n+1-sum}, labels carried over,
// final descent unlabelled.
LabeledDyckPath f7(const FPath& f);
FPath f7_inv(const LabeledDyckPath& q, int d);

// Block runs UD^{a_1}...UD^{a_m} -> preorder outdegrees (a_m,...,a_1,0),
// labels transferred in reversed order.
LabeledTree f8(const LabeledDyckPath& q);
LabeledDyckPath f8_inv(const LabeledTree& t, int d);

// Counting injections. inject_2_to_d pads every factor sequence
// [F_1,...,F_c] to [F_1, F_2, X^{d-2}, F_3, X^{d-2}, ..., F_c, X^{d-2}]
// with fresh indeterminates, preserving topt and lopt; the first factor
// stays unexpanded. reparse_d_to_2 keeps the factor structure and rereads
// it with binary products, giving topt' = (n-k)(d-1)+k, lopt' = k.
Monomial inject_2_to_d(const Monomial& m, int d_target);
Monomial reparse_d_to_2(const Monomial& m);

} // namespace narycat
