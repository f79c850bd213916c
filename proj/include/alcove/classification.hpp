#pragma once

#include "alcove/roots.hpp"

namespace alcove::classify {

using roots::AffineRootSystem;
using roots::FiniteSubsystem;

// A root system together with a weight lattice for it.
struct IntegralRootSystem {
    AffineRootSystem sys;
    Lattice lattice;
    // Throws Error("NotWeightLattice").
    IntegralRootSystem(AffineRootSystem s, Lattice l);
};

// The affine function vanishing on the wall of simple root s, nonnegative
// on the alcove, whose gradient generates {chi in L : s(chi) = -chi}.
AffineFunctional primitive_functional(int s, const IntegralRootSystem& ir);

struct AmbiguityRecord {
    int index;
    AffineFunctional prim;
    Q d;  // <L, prim^vee> = dZ
    bool ambiguous;
};
// One record per simple reflection.  Throws Error("Internal") if a node on a
// simple edge comes out ambiguous or two ambiguous nodes are conjugate.
std::vector<AmbiguityRecord> ambiguous_reflections(const IntegralRootSystem& ir);
std::vector<int> ambiguous_set(const IntegralRootSystem& ir);
// {s : alpha_s = 2 alpha_s^prim}.
std::vector<int> doubled_set(const IntegralRootSystem& ir);

// All root systems with the Weyl group and alcove of ir and weight lattice
// ir.lattice, indexed by subsets of the ambiguous set in bitmask order.
std::vector<IntegralRootSystem> root_systems_for(const IntegralRootSystem& ir);

struct P2Result {
    bool in_table = false;
    std::string row;            // table name, e.g. "B2^(1)" or "D_{n+1}^(2)"
    std::vector<int> starred;   // ambiguous nodes (simple-root indices)
    bool starred_match = false; // starred nodes equal the table's asterisks
    bool lattice_is_prim_span = false;
    std::string reason;         // why not in the table
};
// Irreducible systems only.
P2Result phi_empty_classify(const IntegralRootSystem& ir);

// Pairwise crystallographic angles, a common interior point, no redundant
// member.  Throws Error with kind AngleViolation, NonCrystallographic,
// NoInteriorPoint or Redundancy; the message names the indices.
Polytope validate_simple_system(const std::vector<AffineFunctional>& fs, const InnerProduct& ip,
                                const std::vector<AffineFunctional>& equalities = {});

struct LocalRootAssignment {
    std::vector<FiniteSubsystem> points;
};

// Glues local root systems on P into a global one living on the affine span
// of P.  Errors: IncoherentAssignment, ValidationFailure, WallNotMet.
IntegralRootSystem assemble_global(const AffineRootSystem& ambient, const Polytope& p,
                                   const LocalRootAssignment& assign, const Lattice& l);

// gcd of labels outside I.  Throws Error("FullIndexSet") when I is everything.
long d_I(const std::vector<long>& labels, const std::vector<int>& I);
// Z/d_I for an irreducible infinite system, trivial for a finite one.
AbelianGroup component_group_adjoint(const AffineRootSystem& sys, const std::vector<int>& I);
// (Z Phi_x)^vee / (L^vee + (R Phi_x)^perp), computed inside the span of Phi_x.
AbelianGroup component_group_general(const FiniteSubsystem& phi_x, const Lattice& l, const InnerProduct& ip);
// L^vee intersected with the orthogonal complement of Phi_x.
Lattice kernel_stalk(const FiniteSubsystem& phi_x, const Lattice& l, const InnerProduct& ip);

struct StalkReport {
    QVec x;
    std::vector<int> I;     // walls through x
    AbelianGroup group;     // direct sum of Z/d over the infinite components
    Lattice kernel;
    bool ok = true;
    std::string failure;    // first broken exactness
};
// 0 -> K_x -> L^vee -> Z^{I_x} -> C_x -> 0 for an adjoint-type lattice.
StalkReport stalk_sequence_check(const QVec& x, const IntegralRootSystem& ir);
// For y near x: d_{I_y} | a_i for i in I_x \ I_y and the reduction square
// commutes.  Empty string when fine.
std::string restriction_check(const AffineRootSystem& sys, const QVec& x, const QVec& y);

struct H0Entry {
    long p;
    int e_max;
    AbelianGroup group;
    int witness;  // index i0 with p not dividing a_i0
};
// Irreducible infinite systems; entries only for e_max >= 1.
std::vector<H0Entry> h0_component_data(const Polytope& p, const IntegralRootSystem& ir);

struct AdjointDecomposition {
    bool adjoint = false;
    Lattice root_part, fixed_part;
    QVec witness;  // element of L outside root_part + fixed_part
};
AdjointDecomposition adjoint_decompose(const IntegralRootSystem& ir);
// Z Phi + L^W: the adjoint-type lattice commensurable with L.
Lattice adjoint_replacement(const IntegralRootSystem& ir);

}  // namespace alcove::classify
