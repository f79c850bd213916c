#pragma once

#include "alcove/polytope.hpp"

#include <map>

namespace alcove::roots {

struct CartanType {
    char family = 'A';
    int rank = 1;
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

// order 1 means untwisted.  perm is 0-based on the finite simple roots;
// empty picks the standard automorphism of the given order.  m > 1 folds
// m copies of the factor cyclically.
struct TwistSpec {
    int order = 1;
    std::vector<int> perm;
    int m = 1;
};

// Everything needed to rebuild one simple factor.
struct FactorSpec {
    CartanType type;
    bool affine = false;
    TwistSpec twist;
    Q scale = 1;     // Gram matrix multiplier for this block
    std::string str() const;
};

class AffineRootSystem {
public:
    AffineRootSystem() = default;
    // Generic constructor: validates Cartan integrality, splits into
    // components, computes labels, type names and the alcove.
    AffineRootSystem(InnerProduct ip, std::vector<AffineFunctional> equalities,
                     std::vector<AffineFunctional> simple);

    int ambient_dim() const { return ip_.dim(); }
    const InnerProduct& ip() const { return ip_; }
    const std::vector<AffineFunctional>& equalities() const { return eqs_; }
    const std::vector<AffineFunctional>& simple_roots() const { return simple_; }
    int size() const { return int(simple_.size()); }
    // Aligned with simple_roots(); 0 on finite components.
    const std::vector<long>& label_vector() const { return labels_; }
    const std::vector<std::vector<int>>& components() const { return comps_; }
    bool component_affine(int c) const { return comp_affine_[c]; }
    const std::vector<std::string>& component_types() const { return comp_types_; }
    bool is_affine() const;
    // "A2^(1)", "A1^(1)xA1^(1)", "B2", "" for the empty system.
    std::string type_name() const;
    const Polytope& alcove() const { return alcove_; }
    // Basis of the translation space (kernel of the equalities).
    const QMat& translation_space() const { return space_; }
    QMat cartan_matrix() const;
    const std::vector<FactorSpec>& spec() const { return spec_; }
    void set_spec(std::vector<FactorSpec> s) { spec_ = std::move(s); }

    // Projects the covector so its gradient lies in the translation space.
    AffineFunctional normalize(const AffineFunctional& f) const;
    bool in_space(const QVec& x) const;

private:
    InnerProduct ip_ = InnerProduct::standard(0);
    std::vector<AffineFunctional> eqs_, simple_;
    std::vector<long> labels_;
    std::vector<std::vector<int>> comps_;
    std::vector<bool> comp_affine_;
    std::vector<std::string> comp_types_;
    Polytope alcove_;
    QMat space_;
    std::vector<FactorSpec> spec_;
};

// x -> lin x + trans.
struct WeylElement {
    QMat lin;
    QVec trans;
    static WeylElement identity(int n);
    static WeylElement reflection(const AffineFunctional& alpha, const InnerProduct& ip);
    QVec operator()(const QVec& x) const { return matvec(lin, x) + trans; }
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool preserves(const InnerProduct& ip) const;
    bool operator==(const WeylElement& o) const { return lin == o.lin && trans == o.trans; }
};

// Representative of f on the affine subspace cut out by eqs whose
// gradient lies in the translation space.  Values on the subspace agree.
AffineFunctional normalize_on(const InnerProduct& ip, const std::vector<AffineFunctional>& eqs,
                              const AffineFunctional& f);

// Cartan matrix A_ij = <alpha_i-bar, alpha_j-bar^vee>.
QMat cartan_matrix(const std::vector<AffineFunctional>& roots, const InnerProduct& ip);

// Realizations (coordinates x1..xn):
//   A_r in R^{r+1} with sum x = 0, alpha_i = x_i - x_{i+1}
//   B_r, C_r, D_r in R^r with last roots x_r, 2x_r, x_{r-1} + x_r
//   E_6, E_7, E_8 inside R^8 in Bourbaki numbering
//   F_4 in R^4: x2-x3, x3-x4, x4, (x1-x2-x3-x4)/2
//   G_2 in R^3 with sum x = 0: alpha_1 = -2x1+x2+x3 (long), alpha_2 = x1-x2
AffineRootSystem build_finite(CartanType t);
// alpha_0 = 1 - theta with theta the highest root.
AffineRootSystem build_affine_untwisted(CartanType t);
// Lives on the fixed space of the automorphism with the induced metric;
// alpha_0 = 1/r - theta.  A_{2n} takes the longest dominant restricted
// root for theta, every other case the dominant short one.
AffineRootSystem build_affine_twisted(CartanType t, const TwistSpec& tw);
// alpha(x) = alpha_0(m x) / m, metric scaled by m.
AffineRootSystem fold_cyclic(const AffineRootSystem& base, int m);
AffineRootSystem build(const FactorSpec& f);
// One spec per irreducible affine type whose finite part has rank at most
// max_rank, twisted types included (rank of the folded system).
std::vector<FactorSpec> irreducible_affine_specs(int max_rank);
// Orthogonal product, each block's Gram matrix multiplied by its scale.
AffineRootSystem product(const std::vector<FactorSpec>& factors);
AffineRootSystem product(const std::vector<AffineRootSystem>& parts, const std::vector<Q>& scales);

// All roots of the finite system generated by the given simple roots under
// their reflections (covectors).
std::vector<QVec> finite_roots(const std::vector<QVec>& simple, const InnerProduct& ip);
// Dual basis to the simple coroots inside their span.
QMat fundamental_weights(const std::vector<QVec>& simple, const InnerProduct& ip);
QVec coroot(const QVec& a, const InnerProduct& ip);

// Labels per irreducible component; finite components give empty lists.
std::vector<std::vector<long>> labels(const AffineRootSystem& sys);

struct FiniteSubsystem {
    QVec base;
    std::vector<AffineFunctional> roots;   // every root vanishing at base
    std::vector<AffineFunctional> simple;  // alcove walls through base
    std::vector<int> simple_index;         // indices into the ambient simple roots
    int positive_count() const { return int(roots.size()) / 2; }
};
// Throws Error("NotInAlcove").
FiniteSubsystem local_subsystem(const AffineRootSystem& sys, const QVec& x);

Lattice root_lattice(const AffineRootSystem& sys);
Lattice coroot_lattice(const AffineRootSystem& sys);
Lattice weight_lattice(const AffineRootSystem& sys);
bool is_weight_lattice(const Lattice& l, const AffineRootSystem& sys);

struct CentralizerDatum {
    FiniteSubsystem local;
    Lattice lattice;
    std::string type;  // "A2", "C1xB2", "" for a torus
};
CentralizerDatum centralizer_root_datum(const AffineRootSystem& sys, const Lattice& l, const QVec& x);

// Identification of a connected Cartan matrix against the finite and
// affine classification; "" when nothing matches.
std::string identify_component(const QMat& cartan, bool affine);
// Name of a finite root system given by simple covectors, components joined by "x".
std::string finite_type_name(const std::vector<QVec>& simple, const InnerProduct& ip);
// Connected components of the Dynkin graph.
std::vector<std::vector<int>> dynkin_components(const QMat& cartan);

// Text form used by the CLI ("A 3 affine", "A 5 twist 2", ...).
FactorSpec parse_factor(const std::string& s);

}  // namespace alcove::roots
