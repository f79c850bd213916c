#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alcove {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& what) : std::runtime_error(what), kind(std::move(k)) {}
};

// Reduced p/q.  mpq_class(p, q) alone does not canonicalize.
inline Q qq(long p, long q = 1) {
    Q r(p, q);
    r.canonicalize();
    return r;
}

// "p/q", "p", "-p/q" or a plain decimal like "0.25".  Throws Error("Parse").
Q parse_q(std::string_view s);
std::string str(const Q& q);
std::string str(const QVec& v);

QVec zeros(int n);
QVec unit(int n, int i);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Q& s, const QVec& a);
Q dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);
// Scale to the primitive integer vector with the same direction.
ZVec primitive(const QVec& v);
QVec to_q(const ZVec& v);
Z lcm_denominators(const QVec& v);

QMat transpose(const QMat& a);
QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& a, const QVec& v);
QMat identity(int n);
int cols(const QMat& a, int fallback = 0);

struct Rref {
    QMat m;
    std::vector<int> pivots;
};
Rref rref(QMat a);
int rank(const QMat& a);
// Basis of {x : a x = 0}; ncols needed when a has no rows.
QMat nullspace(const QMat& a, int ncols);
// Some solution of a x = b, or nullopt.
std::optional<QVec> solve(const QMat& a, const QVec& b, int ncols);
Q det(QMat a);
// Throws Error("Singular").
QMat inverse(const QMat& a);
// Row basis of the row span (reduced echelon rows).
QMat row_basis(const QMat& a);

class InnerProduct {
public:
    // Refuses matrices that are not symmetric positive definite.
    explicit InnerProduct(QMat gram);
    static InnerProduct standard(int n);
    static InnerProduct block_diagonal(const std::vector<InnerProduct>& blocks);

    int dim() const { return int(g_.size()); }
    const QMat& gram() const { return g_; }
    Q operator()(const QVec& a, const QVec& b) const;
    Q norm2(const QVec& a) const { return (*this)(a, a); }
    // G v: the covector that pairs like v.
    QVec lower(const QVec& v) const;
    // G^{-1} a: the vector representing covector a.
    QVec raise(const QVec& a) const;
    InnerProduct scaled(const Q& s) const;
    bool operator==(const InnerProduct& o) const { return g_ == o.g_; }

private:
    QMat g_, ginv_;
};

// Row Hermite normal form: pivots positive, entries above a pivot reduced
// into [0, pivot), zero rows dropped.
ZMat hnf(ZMat a);
// Basis (in HNF) of the left kernel {y in Z^m : y a = 0}.
ZMat integer_kernel(const ZMat& a, int ncols);
// Nonzero diagonal of the Smith normal form, each dividing the next.
ZVec smith_diagonal(ZMat a);

struct AbelianGroup {
    // d1 | d2 | ... with no factor 1; 0 stands for a copy of Z.
    ZVec factors;
    bool trivial() const { return factors.empty(); }
    bool finite() const;
    Z order() const;  // 0 when infinite
    std::string str() const;
    bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
};
AbelianGroup group_from_diagonal(const ZVec& diag, int free_rank);

class Lattice {
public:
    Lattice() = default;
    Lattice(int ambient_dim, const QMat& generators);
    static Lattice zero(int n) { return Lattice(n, {}); }
    static Lattice standard(int n);

    int ambient_dim() const { return n_; }
    int rank() const { return int(basis_.size()); }
    const QMat& basis() const { return basis_; }
    // Smallest positive D with D*L integral.
    const Z& denominator() const { return den_; }

    std::optional<ZVec> coords(const QVec& v) const;
    bool contains(const QVec& v) const { return coords(v).has_value(); }
    bool contains(const Lattice& o) const;
    Lattice operator+(const Lattice& o) const;
    Lattice intersect(const Lattice& o) const;
    // {v in L : f.v = 0 for every row f}.
    Lattice annihilated_by(const QMat& covectors) const;
    Lattice scaled(const Q& s) const;
    // Dual inside span(L): {y in span L : <y, L> in Z}.
    Lattice dual(const InnerProduct& ip) const;
    // Image under the ip-orthogonal projection onto span(sub).
    Lattice project(const QMat& sub, const InnerProduct& ip) const;

    bool operator==(const Lattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    int n_ = 0;
    Z den_ = 1;
    QMat basis_;
};

// L_big / L_small.  Throws Error("NotSublattice").
AbelianGroup quotient(const Lattice& small, const Lattice& big);

// Dependent generators are reduced first.
QVec orthogonal_project(const QVec& v, const QMat& subspace, const InnerProduct& ip);

}  // namespace alcove
