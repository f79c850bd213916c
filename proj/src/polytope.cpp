#include "alcove/polytope.hpp"

#include <algorithm>
#include <set>

namespace alcove {

namespace {

QVec prim_q(const QVec& v) { return to_q(primitive(v)); }

QMat rows_at(const QMat& m, const std::vector<int>& idx) {
    QMat r;
    for (int i : idx) r.push_back(m[i]);
    return r;
}

// Extreme rays of {z : m z >= 0} when m has full column rank k (so the
// cone is pointed).  Incremental double description.
QMat pointed_rays(const QMat& m, int k) {
    std::vector<int> basis;
    QMat acc;
    for (int i = 0; i < int(m.size()) && int(basis.size()) < k; ++i) {
        acc.push_back(m[i]);
        if (rank(acc) > int(basis.size()))
            basis.push_back(i);
        else
            acc.pop_back();
    }
    QMat binv = inverse(rows_at(m, basis));
    QMat rays;
    for (int j = 0; j < k; ++j) {
        QVec r(k);
        for (int i = 0; i < k; ++i) r[i] = binv[i][j];
        rays.push_back(prim_q(r));
    }
    std::vector<int> done = basis;
    std::vector<bool> used(m.size(), false);
    for (int i : basis) used[i] = true;
    for (int i = 0; i < int(m.size()); ++i) {
        if (used[i]) continue;
        std::vector<Q> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) val[r] = dot(m[i], rays[r]);
        QMat next;
        for (size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) next.push_back(rays[r]);
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                std::vector<int> z;
                for (int j : done)
                    if (dot(m[j], rays[p]) == 0 && dot(m[j], rays[q]) == 0) z.push_back(j);
                if (int(z.size()) < k - 2 || rank(rows_at(m, z)) != k - 2) continue;
                QVec nr = val[p] * rays[q] - val[q] * rays[p];
                if (!is_zero(nr)) next.push_back(prim_q(nr));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        done.push_back(i);
    }
    return rays;
}

struct ConeGens {
    QMat rays, lines;
};

// Generators of {y in Q^d : eqs y = 0, ineqs y >= 0}.
ConeGens cone_generators(const QMat& eqs, const QMat& ineqs, int d) {
    ConeGens out;
    QMat nb = eqs.empty() ? identity(d) : nullspace(eqs, d);
    int k = int(nb.size());
    if (k == 0) return out;
    QMat m;
    for (auto& f : ineqs) {
        QVec row(k);
        for (int j = 0; j < k; ++j) row[j] = dot(f, nb[j]);
        m.push_back(row);
    }
    auto lift = [&](const QVec& z) {
        QVec y = zeros(d);
        for (int j = 0; j < k; ++j) y = y + z[j] * nb[j];
        return y;
    };
    for (auto& l : nullspace(m, k)) out.lines.push_back(lift(l));
    out.lines = row_basis(out.lines);
    QMat r = row_basis(m);
    int kk = int(r.size());
    if (kk == 0) return out;
    QMat mp = matmul(m, transpose(r));
    for (auto& w : pointed_rays(mp, kk)) {
        QVec z = zeros(k);
        for (int i = 0; i < kk; ++i) z = z + w[i] * r[i];
        out.rays.push_back(prim_q(lift(z)));
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

struct DualDesc {
    QMat equalities;  // reduced echelon
    QMat facets;      // primitive, reduced against equalities, sorted
};

QVec reduce_against(QVec f, const Rref& eq) {
    for (size_t i = 0; i < eq.pivots.size(); ++i) {
        Q s = f[eq.pivots[i]];
        if (s != 0) f = f - s * eq.m[i];
    }
    return f;
}

// H-description of cone(gens) + span(lines) in Q^d.
DualDesc dual_description(int d, const QMat& gens, const QMat& lines) {
    DualDesc out;
    QMat all = gens;
    all.insert(all.end(), lines.begin(), lines.end());
    out.equalities = row_basis(nullspace(all, d));
    Rref eq{out.equalities, {}};
    for (auto& row : out.equalities)
        for (int j = 0; j < d; ++j)
            if (row[j] != 0) { eq.pivots.push_back(j); break; }
    QMat b = row_basis(all);
    int k = int(b.size());
    if (k == 0) return out;
    QMat bt = transpose(b);
    auto coords = [&](const QVec& g) { return *solve(bt, g, k); };
    QMat ineq, eqs;
    for (auto& g : gens) ineq.push_back(coords(g));
    for (auto& l : lines) eqs.push_back(coords(l));
    ConeGens dual = cone_generators(eqs, ineq, k);
    for (auto& f : dual.rays) {
        QVec full = *solve(b, f, d);
        full = reduce_against(full, eq);
        if (is_zero(full)) continue;
        out.facets.push_back(prim_q(full));
    }
    std::sort(out.facets.begin(), out.facets.end());
    out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
    return out;
}

QVec homog(const AffineFunctional& f) {
    QVec v = f.a;
    v.push_back(f.c);
    return v;
}

AffineFunctional dehomog(const QVec& v) {
    QVec a(v.begin(), v.end() - 1);
    return {v.back(), a};
}

}  // namespace

struct PolytopeBuilder {
    static Polytope from_generators(int n, QMat points, QMat rays, QMat lines) {
        Polytope p;
        p.n_ = n;
        if (points.empty()) {
            p.eqs_.push_back({Q(1), zeros(n)});
            return p;
        }
        QMat gens;
        for (auto& x : points) {
            QVec g = x;
            g.push_back(1);
            gens.push_back(g);
        }
        for (auto& r : rays) {
            QVec g = r;
            g.push_back(0);
            gens.push_back(g);
        }
        QMat hl;
        for (auto& l : lines) {
            QVec g = l;
            g.push_back(0);
            hl.push_back(g);
        }
        DualDesc dd = dual_description(n + 1, gens, hl);
        for (auto& e : dd.equalities) p.eqs_.push_back(dehomog(e));
        for (auto& f : dd.facets) {
            AffineFunctional a = dehomog(f);
            if (a.constant()) continue;  // face at infinity
            p.ineqs_.push_back(a);
        }
        std::sort(p.ineqs_.begin(), p.ineqs_.end());
        // Extreme points and rays back from the canonical H-description.
        QMat he, hi;
        for (auto& e : p.eqs_) he.push_back(homog(e));
        for (auto& f : p.ineqs_) hi.push_back(homog(f));
        hi.push_back(unit(n + 1, n));
        ConeGens cg = cone_generators(he, hi, n + 1);
        for (auto& y : cg.rays) {
            Q t = y[n];
            QVec x(y.begin(), y.end() - 1);
            if (t > 0)
                p.vertices_.push_back((1 / t) * x);
            else
                p.rays_.push_back(x);
        }
        for (auto& y : cg.lines) p.lines_.push_back(QVec(y.begin(), y.end() - 1));
        p.lines_ = row_basis(p.lines_);
        std::sort(p.vertices_.begin(), p.vertices_.end());
        std::sort(p.rays_.begin(), p.rays_.end());
        return p;
    }
};

Polytope Polytope::hull(int n, const QMat& points, const QMat& rays, const QMat& lines) {
    return PolytopeBuilder::from_generators(n, points, rays, lines);
}

Polytope Polytope::from_h(int n, const std::vector<AffineFunctional>& eqs,
                          const std::vector<AffineFunctional>& ineqs) {
    QMat he, hi;
    for (auto& e : eqs) he.push_back(homog(e));
    for (auto& f : ineqs) hi.push_back(homog(f));
    hi.push_back(unit(n + 1, n));
    ConeGens cg = cone_generators(he, hi, n + 1);
    QMat points, rays, lines;
    for (auto& y : cg.rays) {
        QVec x(y.begin(), y.end() - 1);
        if (y[n] > 0)
            points.push_back((1 / y[n]) * x);
        else
            rays.push_back(x);
    }
    for (auto& y : cg.lines) lines.push_back(QVec(y.begin(), y.end() - 1));
    Polytope p = PolytopeBuilder::from_generators(n, points, rays, lines);
    for (auto& v : p.vertices_) {
        for (auto& e : eqs)
            if (e(v) != 0) throw Error("Internal", "vertex violates an input equality");
        for (auto& f : ineqs)
            if (f(v) < 0) throw Error("Internal", "vertex violates an input inequality");
    }
    return p;
}

int Polytope::dim() const {
    if (empty()) return -1;
    return int(affine_span(*this).directions.size());
}

bool Polytope::contains(const QVec& x) const {
    if (int(x.size()) != n_ || empty()) return false;
    for (auto& e : eqs_)
        if (e(x) != 0) return false;
    for (auto& f : ineqs_)
        if (f(x) < 0) return false;
    return true;
}

bool Polytope::contains(const Polytope& o) const {
    if (o.empty()) return true;
    for (auto& v : o.vertices_)
        if (!contains(v)) return false;
    auto in_recession = [&](const QVec& r) {
        for (auto& e : eqs_)
            if (dot(e.a, r) != 0) return false;
        for (auto& f : ineqs_)
            if (dot(f.a, r) < 0) return false;
        return true;
    };
    for (auto& r : o.rays_)
        if (!in_recession(r)) return false;
    for (auto& l : o.lines_)
        if (!in_recession(l) || !in_recession(-l)) return false;
    return true;
}

bool Polytope::is_vertex(const QVec& x) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

std::vector<int> Polytope::active(const QVec& x) const {
    std::vector<int> out;
    for (int i = 0; i < int(ineqs_.size()); ++i)
        if (ineqs_[i](x) == 0) out.push_back(i);
    return out;
}

Polytope Polytope::intersect(const std::vector<AffineFunctional>& eqs,
                             const std::vector<AffineFunctional>& ineqs) const {
    if (empty()) return *this;
    auto e = eqs_;
    e.insert(e.end(), eqs.begin(), eqs.end());
    auto f = ineqs_;
    f.insert(f.end(), ineqs.begin(), ineqs.end());
    return from_h(n_, e, f);
}

Cone Cone::from_generators(int n, const QMat& gens, const QMat& lines) {
    Cone c;
    c.n = n;
    DualDesc dd = dual_description(n, gens, lines);
    c.equalities = dd.equalities;
    c.facets = dd.facets;
    ConeGens cg = cone_generators(c.equalities, c.facets, n);
    c.generators = cg.rays;
    c.lines = cg.lines;
    return c;
}

Cone Cone::from_h(int n, const QMat& equalities, const QMat& facets) {
    ConeGens cg = cone_generators(equalities, facets, n);
    return from_generators(n, cg.rays, cg.lines);
}

bool Cone::contains(const QVec& v) const {
    for (auto& e : equalities)
        if (dot(e, v) != 0) return false;
    for (auto& f : facets)
        if (dot(f, v) < 0) return false;
    return true;
}

int Cone::dim() const {
    QMat all = generators;
    all.insert(all.end(), lines.begin(), lines.end());
    return rank(all);
}

bool cone_equal(const Cone& a, const Cone& b) {
    if (a.n != b.n) return false;
    auto inside = [](const Cone& x, const Cone& y) {
        for (auto& g : x.generators)
            if (!y.contains(g)) return false;
        for (auto& l : x.lines)
            if (!y.contains(l) || !y.contains(-l)) return false;
        return true;
    };
    return inside(a, b) && inside(b, a);
}

AffineSpan affine_span(const Polytope& p) {
    AffineSpan s;
    if (p.empty()) return s;
    s.base = p.vertices().front();
    QMat dirs;
    for (auto& v : p.vertices()) dirs.push_back(v - s.base);
    for (auto& r : p.rays()) dirs.push_back(r);
    for (auto& l : p.lines()) dirs.push_back(l);
    s.directions = row_basis(dirs);
    return s;
}

Cone tangent_cone(const Polytope& p, const QVec& x) {
    if (!p.contains(x)) throw Error("NotInPolytope", "point " + str(x) + " is not in the polytope");
    QMat eqs, facets;
    for (auto& e : p.equalities()) eqs.push_back(e.a);
    for (int i : p.active(x)) facets.push_back(p.inequalities()[i].a);
    return Cone::from_h(p.ambient_dim(), eqs, facets);
}

std::vector<Face> faces(const Polytope& p) {
    if (!p.bounded()) throw Error("Unbounded", "face enumeration needs a bounded polytope");
    std::vector<Face> out;
    if (p.empty()) return out;
    int nv = int(p.vertices().size());
    std::vector<std::vector<int>> tight_sets;
    for (auto& f : p.inequalities()) {
        std::vector<int> t;
        for (int v = 0; v < nv; ++v)
            if (f(p.vertices()[v]) == 0) t.push_back(v);
        tight_sets.push_back(t);
    }
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> all(nv);
    for (int v = 0; v < nv; ++v) all[v] = v;
    seen.insert(all);
    queue.push_back(all);
    for (size_t q = 0; q < queue.size(); ++q) {
        for (auto& t : tight_sets) {
            std::vector<int> inter;
            std::set_intersection(queue[q].begin(), queue[q].end(), t.begin(), t.end(),
                                  std::back_inserter(inter));
            if (inter.empty() || seen.count(inter)) continue;
            seen.insert(inter);
            queue.push_back(inter);
        }
    }
    for (auto& vs : seen) {
        Face f;
        f.vertices = vs;
        QMat dirs;
        for (int v : vs) dirs.push_back(p.vertices()[v] - p.vertices()[vs[0]]);
        f.dim = rank(dirs);
        for (int i = 0; i < int(tight_sets.size()); ++i)
            if (std::includes(tight_sets[i].begin(), tight_sets[i].end(), vs.begin(), vs.end()))
                f.tight.push_back(i);
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    return out;
}

int first_missed_wall(const Polytope& p, const std::vector<AffineFunctional>& walls) {
    for (int i = 0; i < int(walls.size()); ++i) {
        bool hit = false;
        for (auto& v : p.vertices())
            if (walls[i](v) == 0) { hit = true; break; }
        if (!hit) return i;
    }
    return -1;
}

bool meets_every_wall(const Polytope& p, const std::vector<AffineFunctional>& walls) {
    return first_missed_wall(p, walls) < 0;
}

}  // namespace alcove
