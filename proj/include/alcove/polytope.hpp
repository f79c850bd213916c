#pragma once

#include "alcove/functional.hpp"

namespace alcove {

// Polyhedron in Q^n held in both descriptions.  Equalities are in reduced
// echelon form, inequalities are primitive integral, reduced against the
// equalities and sorted, so equal sets have equal representations.  Vertices
// are sorted lexicographically.  Rays and lineality appear only for
// unbounded sets such as alcoves of finite systems.
class Polytope {
public:
    Polytope() = default;
    static Polytope from_h(int n, const std::vector<AffineFunctional>& eqs,
                           const std::vector<AffineFunctional>& ineqs);
    static Polytope hull(int n, const QMat& points, const QMat& rays = {}, const QMat& lines = {});

    int ambient_dim() const { return n_; }
    bool empty() const { return vertices_.empty(); }
    bool bounded() const { return rays_.empty() && lines_.empty(); }
    int dim() const;

    const std::vector<AffineFunctional>& equalities() const { return eqs_; }
    const std::vector<AffineFunctional>& inequalities() const { return ineqs_; }
    const QMat& vertices() const { return vertices_; }
    const QMat& rays() const { return rays_; }
    const QMat& lines() const { return lines_; }

    bool contains(const QVec& x) const;
    bool contains(const Polytope& o) const;
    bool is_vertex(const QVec& x) const;
    // Indices of inequalities tight at x.
    std::vector<int> active(const QVec& x) const;
    Polytope intersect(const std::vector<AffineFunctional>& eqs,
                       const std::vector<AffineFunctional>& ineqs = {}) const;

    bool operator==(const Polytope& o) const {
        return n_ == o.n_ && eqs_ == o.eqs_ && ineqs_ == o.ineqs_ && vertices_ == o.vertices_ &&
               rays_ == o.rays_ && lines_ == o.lines_;
    }

private:
    int n_ = 0;
    std::vector<AffineFunctional> eqs_, ineqs_;
    QMat vertices_, rays_, lines_;
    friend struct PolytopeBuilder;
};

// Cone with apex at the origin: generators and the dual facet description.
struct Cone {
    int n = 0;
    QMat generators;  // primitive integral, sorted
    QMat lines;       // lineality basis
    QMat facets;      // covectors f with f.v >= 0
    QMat equalities;  // covectors f with f.v = 0

    static Cone from_generators(int n, const QMat& gens, const QMat& lines = {});
    static Cone from_h(int n, const QMat& equalities, const QMat& facets);
    bool contains(const QVec& v) const;
    bool pointed() const { return lines.empty(); }
    int dim() const;
};

bool cone_equal(const Cone& a, const Cone& b);

struct AffineSpan {
    QVec base;
    QMat directions;  // reduced echelon basis of the translation space
};
AffineSpan affine_span(const Polytope& p);

// R_{>=0}(P - x).  Throws Error("NotInPolytope").
Cone tangent_cone(const Polytope& p, const QVec& x);

struct Face {
    std::vector<int> vertices;  // indices into Polytope::vertices()
    std::vector<int> tight;     // indices of tight inequalities
    int dim = 0;
};
// Nonempty faces of a bounded polytope, including P itself.
std::vector<Face> faces(const Polytope& p);

// Whether P meets the zero set of every functional in walls (each assumed
// nonnegative on P).
bool meets_every_wall(const Polytope& p, const std::vector<AffineFunctional>& walls);
// Index of the first wall missed, or -1.
int first_missed_wall(const Polytope& p, const std::vector<AffineFunctional>& walls);

}  // namespace alcove
