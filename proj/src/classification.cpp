#include "alcove/classification.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace alcove::classify {

using roots::normalize_on;

namespace {

std::string idx_str(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Positive generator of d Z = <values>_Z for integral values.
Z integral_gcd(const std::vector<Q>& vals) {
    Z g = 0;
    for (auto& v : vals) {
        if (v.get_den() != 1) throw Error("NotWeightLattice", "pairing " + str(v) + " is not integral");
        Z num = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    return g;
}

int comp_of(const AffineRootSystem& sys, int i) {
    for (size_t c = 0; c < sys.components().size(); ++c) {
        auto& m = sys.components()[c];
        if (std::find(m.begin(), m.end(), i) != m.end()) return int(c);
    }
    return -1;
}

// d over the infinite component c for the walls I (ambient indices).
long comp_d(const AffineRootSystem& sys, int c, const std::vector<int>& I) {
    long g = 0;
    for (int j : sys.components()[c])
        if (std::find(I.begin(), I.end(), j) == I.end()) g = std::gcd(g, sys.label_vector()[j]);
    if (g == 0) throw Error("FullIndexSet", "every wall of a component passes through the point");
    return g;
}

std::vector<QVec> simple_covectors(const FiniteSubsystem& f) {
    std::vector<QVec> out;
    for (auto& s : f.simple) out.push_back(s.a);
    return out;
}

AbelianGroup cyclic_sum(const std::vector<long>& ds) {
    ZVec diag;
    for (long d : ds) diag.push_back(Z(d));
    return group_from_diagonal(diag, 0);
}

std::vector<int> short_nodes(const AffineRootSystem& sys) {
    std::vector<Q> len;
    for (auto& s : sys.simple_roots()) len.push_back(dot(s.a, sys.ip().raise(s.a)));
    Q m = *std::min_element(len.begin(), len.end());
    std::vector<int> out;
    for (size_t i = 0; i < len.size(); ++i)
        if (len[i] == m) out.push_back(int(i));
    return out;
}

// Irreducible Phi_empty systems with S_amb nonempty.  Names as printed in the
// original table; our naming of the same diagram in `family`/`order`.  The
// asterisks sit exactly on the short nodes in every row.
struct P2Row {
    const char* row;
    char family;
    int order;  // 0 finite, else the affine twist order
    int min_rank, max_rank;  // rank of our type name; 0 = unbounded
};
constexpr P2Row kP2Table[] = {
    {"A1", 'A', 0, 1, 1},
    {"B_n", 'B', 0, 2, 0},
    {"A1^(1)", 'A', 1, 1, 1},
    {"B2^(1)", 'C', 1, 2, 2},
    {"B_n^(1)", 'B', 1, 3, 0},
    {"D_{n+1}^(2)", 'D', 2, 3, 0},
};

}  // namespace

IntegralRootSystem::IntegralRootSystem(AffineRootSystem s, Lattice l) : sys(std::move(s)), lattice(std::move(l)) {
    if (!roots::is_weight_lattice(lattice, sys)) throw Error("NotWeightLattice", "lattice is not a weight lattice for " + sys.type_name());
}

AffineFunctional primitive_functional(int s, const IntegralRootSystem& ir) {
    const auto& sys = ir.sys;
    if (s < 0 || s >= sys.size()) throw Error("IndexOutOfRange", "no simple root " + std::to_string(s));
    const AffineFunctional& al = sys.simple_roots()[s];
    QVec g = sys.ip().raise(al.a);
    Lattice line = ir.lattice.annihilated_by(nullspace({g}, sys.ambient_dim()));
    if (line.rank() != 1) throw Error("Internal", "lattice meets the root line in rank " + std::to_string(line.rank()));
    const QVec& gamma = line.basis()[0];
    size_t k = 0;
    while (g[k] == 0) ++k;
    Q t = gamma[k] / g[k];
    if (t < 0) t = -t;
    return t * al;
}

std::vector<AmbiguityRecord> ambiguous_reflections(const IntegralRootSystem& ir) {
    const auto& sys = ir.sys;
    std::vector<AmbiguityRecord> out;
    for (int s = 0; s < sys.size(); ++s) {
        AffineFunctional prim = primitive_functional(s, ir);
        QVec cv = roots::coroot(prim.a, sys.ip());
        std::vector<Q> vals;
        for (auto& v : ir.lattice.basis()) vals.push_back(sys.ip()(v, cv));
        Z d = integral_gcd(vals);
        out.push_back({s, prim, Q(d), d == 2});
    }
    // A node on a simple edge is never ambiguous; with that, no two ambiguous
    // nodes are joined by a string of simple edges.
    QMat c = sys.cartan_matrix();
    int k = sys.size();
    std::vector<int> cls(k);
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int i) { return cls[i] == i ? i : cls[i] = find(cls[i]); };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && c[i][j] * c[j][i] == 1) {
                if (out[i].ambiguous) throw Error("Internal", "ambiguous node " + std::to_string(i) + " on a simple edge");
                cls[find(i)] = find(j);
            }
    std::set<int> seen;
    for (auto& r : out)
        if (r.ambiguous && !seen.insert(find(r.index)).second)
            throw Error("Internal", "two conjugate ambiguous reflections");
    return out;
}

std::vector<int> ambiguous_set(const IntegralRootSystem& ir) {
    std::vector<int> out;
    for (auto& r : ambiguous_reflections(ir))
        if (r.ambiguous) out.push_back(r.index);
    return out;
}

std::vector<int> doubled_set(const IntegralRootSystem& ir) {
    std::vector<int> out;
    for (int s = 0; s < ir.sys.size(); ++s) {
        AffineFunctional prim = primitive_functional(s, ir);
        const AffineFunctional& al = ir.sys.simple_roots()[s];
        if (al == Q(2) * prim)
            out.push_back(s);
        else if (al != prim)
            throw Error("NotWeightLattice", "simple root " + al.str() + " is neither prim nor 2 prim");
    }
    return out;
}

std::vector<IntegralRootSystem> root_systems_for(const IntegralRootSystem& ir) {
    std::vector<int> amb = ambiguous_set(ir);
    std::vector<AffineFunctional> prim;
    for (int s = 0; s < ir.sys.size(); ++s) prim.push_back(primitive_functional(s, ir));
    std::vector<IntegralRootSystem> out;
    for (unsigned mask = 0; mask < (1u << amb.size()); ++mask) {
        std::vector<AffineFunctional> simple = prim;
        for (size_t j = 0; j < amb.size(); ++j)
            if (mask >> j & 1) simple[amb[j]] = Q(2) * prim[amb[j]];
        AffineRootSystem sys(ir.sys.ip(), ir.sys.equalities(), simple);
        out.emplace_back(sys, ir.lattice);
    }
    return out;
}

P2Result phi_empty_classify(const IntegralRootSystem& ir) {
    const auto& sys = ir.sys;
    if (sys.components().size() != 1) throw Error("Reducible", "classification of irreducible systems only");
    P2Result r;
    std::vector<int> dbl = doubled_set(ir);
    r.starred = ambiguous_set(ir);
    if (!dbl.empty()) {
        r.reason = "not of the form Phi_empty: alpha_s = 2 alpha_s^prim for s in " + idx_str(dbl);
        return r;
    }
    if (r.starred.empty()) {
        r.reason = "no ambiguous reflection";
        return r;
    }
    std::string name = sys.type_name();
    char fam = name[0];
    size_t caret = name.find('^');
    int rank = std::stoi(name.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int order = caret == std::string::npos ? 0 : name[caret + 2] - '0';
    for (auto& row : kP2Table) {
        if (row.family != fam || row.order != order || rank < row.min_rank || (row.max_rank && rank > row.max_rank)) continue;
        r.in_table = true;
        r.row = row.row;
        r.starred_match = r.starred == short_nodes(sys);
        QMat gens;
        for (int s = 0; s < sys.size(); ++s) gens.push_back(sys.ip().raise(primitive_functional(s, ir).a));
        r.lattice_is_prim_span = Lattice(sys.ambient_dim(), gens) == ir.lattice;
        return r;
    }
    r.reason = "type " + name + " has ambiguous reflections but no table row";
    return r;
}

Polytope validate_simple_system(const std::vector<AffineFunctional>& input, const InnerProduct& ip,
                                const std::vector<AffineFunctional>& equalities) {
    std::vector<AffineFunctional> fs;
    for (auto& f : input) fs.push_back(normalize_on(ip, equalities, f));
    int k = int(fs.size());
    std::vector<QVec> g;
    for (int i = 0; i < k; ++i) {
        if (fs[i].constant()) throw Error("ConstantFunctional", "functional " + std::to_string(i) + " is constant");
        g.push_back(ip.raise(fs[i].a));
    }
    int n = ip.dim();
    Polytope p = Polytope::from_h(n, equalities, fs);
    QMat eq_rows;
    for (auto& e : equalities) eq_rows.push_back(e.a);
    int space = n - rank(eq_rows);
    if (p.empty() || p.dim() < space) throw Error("NoInteriorPoint", "the functionals have no common positive point");
    for (int i = 0; i < k; ++i) {
        Polytope face = p.intersect({fs[i]});
        if (face.empty() || face.dim() != p.dim() - 1)
            throw Error("Redundancy", "functional " + std::to_string(i) + " (" + fs[i].str() + ") is redundant");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Q pr = ip(g[i], g[j]);
            std::string ij = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (pr > 0) throw Error("AngleViolation", "acute angle between functionals " + ij);
            Q c = 4 * pr * pr / (ip.norm2(g[i]) * ip.norm2(g[j]));
            if (c.get_den() != 1 || c > 4) throw Error("NonCrystallographic", "angle between functionals " + ij + " has 4cos^2 = " + str(c));
        }
    return p;
}

IntegralRootSystem assemble_global(const AffineRootSystem& ambient, const Polytope& p,
                                   const LocalRootAssignment& assign, const Lattice& l) {
    const InnerProduct& ip = ambient.ip();
    std::vector<AffineFunctional> eqs = ambient.equalities();
    for (auto& e : p.equalities()) eqs.push_back(e);
    auto norm = [&](const AffineFunctional& f) { return normalize_on(ip, eqs, f); };

    std::vector<std::set<AffineFunctional>> local;
    std::vector<AffineFunctional> simple;
    for (auto& pt : assign.points) {
        std::set<AffineFunctional> roots;
        std::vector<AffineFunctional> frontier;
        for (auto& s : pt.simple) {
            AffineFunctional f = norm(s);
            if (f(pt.base) != 0) throw Error("IncoherentAssignment", "root " + s.str() + " does not vanish at " + str(pt.base));
            for (auto& v : p.vertices())
                if (f(v) < 0) throw Error("IncoherentAssignment", "simple root " + s.str() + " is negative on P");
            if (std::find(simple.begin(), simple.end(), f) == simple.end()) simple.push_back(f);
            for (const AffineFunctional& h : {f, AffineFunctional(-f)})
                if (roots.insert(h).second) frontier.push_back(h);
        }
        while (!frontier.empty()) {
            std::vector<AffineFunctional> next;
            for (auto& b : frontier)
                for (auto& s : pt.simple) {
                    AffineFunctional r = norm(reflect_functional(norm(s), b, ip));
                    if (roots.insert(r).second) next.push_back(r);
                }
            frontier = std::move(next);
        }
        for (auto& r : roots) {
            bool pos = true, neg = true;
            for (auto& v : p.vertices()) pos = pos && r(v) >= 0, neg = neg && r(v) <= 0;
            if (!pos && !neg) throw Error("IncoherentAssignment", "root " + r.str() + " changes sign on P");
        }
        local.push_back(roots);
    }
    // Phi(x)_y = Phi(y)_x along edges of P
    if (p.bounded())
        for (auto& f : faces(p)) {
            if (f.dim != 1) continue;
            const QVec &a = p.vertices()[f.vertices[0]], &b = p.vertices()[f.vertices[1]];
            for (size_t i = 0; i < assign.points.size(); ++i)
                for (size_t j = 0; j < assign.points.size(); ++j) {
                    if (assign.points[i].base != a || assign.points[j].base != b) continue;
                    std::set<AffineFunctional> xy, yx;
                    for (auto& r : local[i])
                        if (r(b) == 0) xy.insert(r);
                    for (auto& r : local[j])
                        if (r(a) == 0) yx.insert(r);
                    if (xy != yx) throw Error("IncoherentAssignment", "local roots at " + str(a) + " and " + str(b) + " disagree");
                }
        }

    std::optional<AffineRootSystem> sys;
    try {
        validate_simple_system(simple, ip, eqs);
        sys.emplace(ip, eqs, simple);
    } catch (const Error& e) {
        throw Error("ValidationFailure", e.kind + ": " + e.what());
    }
    std::optional<IntegralRootSystem> ir;
    try {
        ir.emplace(*sys, l);
    } catch (const Error& e) {
        throw Error("ValidationFailure", e.kind + ": " + e.what());
    }
    for (size_t i = 0; i < assign.points.size(); ++i) {
        auto loc = roots::local_subsystem(*sys, assign.points[i].base);
        std::set<AffineFunctional> got(loc.roots.begin(), loc.roots.end());
        if (got != local[i]) throw Error("ValidationFailure", "assembled roots differ from the local ones at " + str(assign.points[i].base));
    }
    if (!sys->alcove().contains(p)) throw Error("ValidationFailure", "P is not inside the assembled alcove");
    int w = first_missed_wall(p, sys->simple_roots());
    if (w >= 0) throw Error("WallNotMet", "P misses the wall " + sys->simple_roots()[w].str() + " = 0");

    // S_amb(Phi) is the union of the local S_amb(x)
    std::vector<int> dbl = doubled_set(*ir), from_local;
    for (int s : dbl) {
        bool found = false;
        for (auto& pt : assign.points)
            for (auto& f : pt.simple) found = found || norm(f) == sys->simple_roots()[s];
        if (found) from_local.push_back(s);
    }
    if (from_local != dbl) throw Error("Internal", "doubled simple roots not accounted for locally");
    return *ir;
}

long d_I(const std::vector<long>& labels, const std::vector<int>& I) {
    long g = 0;
    for (int j = 0; j < int(labels.size()); ++j)
        if (std::find(I.begin(), I.end(), j) == I.end()) g = std::gcd(g, labels[j]);
    if (g == 0) throw Error("FullIndexSet", "I must be a proper subset");
    return g;
}

AbelianGroup component_group_adjoint(const AffineRootSystem& sys, const std::vector<int>& I) {
    if (sys.components().size() != 1) throw Error("Reducible", "irreducible systems only");
    if (!sys.component_affine(0)) return {};
    return cyclic_sum({d_I(sys.label_vector(), I)});
}

AbelianGroup component_group_general(const FiniteSubsystem& phi_x, const Lattice& l, const InnerProduct& ip) {
    if (phi_x.simple.empty()) return {};
    QMat grads;
    for (auto& s : phi_x.simple) grads.push_back(ip.raise(s.a));
    int n = ip.dim();
    Lattice coweights = Lattice(n, grads).dual(ip);
    Lattice image = l.dual(ip).project(grads, ip);
    return quotient(image, coweights);
}

Lattice kernel_stalk(const FiniteSubsystem& phi_x, const Lattice& l, const InnerProduct& ip) {
    return l.dual(ip).annihilated_by(simple_covectors(phi_x));
}

StalkReport stalk_sequence_check(const QVec& x, const IntegralRootSystem& ir) {
    const auto& sys = ir.sys;
    const InnerProduct& ip = sys.ip();
    if (!adjoint_decompose(ir).adjoint) throw Error("NotAdjoint", "stalk sequence needs an adjoint-type lattice");
    StalkReport rep;
    rep.x = x;
    FiniteSubsystem loc = roots::local_subsystem(sys, x);
    rep.I = loc.simple_index;
    rep.kernel = kernel_stalk(loc, ir.lattice, ip);
    int k = int(rep.I.size());
    Lattice dual = ir.lattice.dual(ip);
    const QMat& B = dual.basis();
    int m = int(B.size());
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        if (rep.failure.empty()) rep.failure = why;
    };

    // rho(v) = (<alpha_i-bar, v>)_{i in I}
    ZMat R(m, ZVec(k));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < k; ++j) {
            Q v = dot(sys.simple_roots()[rep.I[j]].a, B[r]);
            if (v.get_den() != 1) {
                fail("rho is not integral");
                return rep;
            }
            R[r][j] = v.get_num();
        }
    QMat kv;
    for (auto& y : integer_kernel(R, k)) {
        QVec v = zeros(ip.dim());
        for (int r = 0; r < m; ++r) v = v + Q(y[r]) * B[r];
        kv.push_back(v);
    }
    if (Lattice(ip.dim(), kv) != rep.kernel) fail("ker rho differs from the kernel stalk");

    // psi(y) = (sum_{i in I cap c} a_i y_i mod d_c) over infinite components c
    std::vector<int> comps;
    std::vector<long> ds;
    for (size_t c = 0; c < sys.components().size(); ++c)
        if (sys.component_affine(int(c))) comps.push_back(int(c)), ds.push_back(comp_d(sys, int(c), rep.I));
    rep.group = cyclic_sum(ds);
    int nc = int(comps.size());
    if (k > 0) {
        QMat im;
        for (auto& row : R) im.push_back(to_q(row));
        Lattice image(k, im);
        Lattice kerpsi = Lattice::standard(k);
        if (nc > 0) {
            ZMat M(k + nc, ZVec(nc));
            for (int j = 0; j < k; ++j) {
                int c = comp_of(sys, rep.I[j]);
                auto it = std::find(comps.begin(), comps.end(), c);
                if (it != comps.end()) M[j][it - comps.begin()] = sys.label_vector()[rep.I[j]];
            }
            for (int c = 0; c < nc; ++c) M[k + c][c] = -ds[c];
            QMat gens;
            for (auto& y : integer_kernel(M, nc)) gens.push_back(to_q(ZVec(y.begin(), y.begin() + k)));
            kerpsi = Lattice(k, gens);
        }
        if (image != kerpsi) fail("im rho differs from ker psi");
    }
    if (nc > 0) {
        QMat gens;
        for (int j = 0; j < k; ++j) {
            QVec e = zeros(nc);
            auto it = std::find(comps.begin(), comps.end(), comp_of(sys, rep.I[j]));
            if (it != comps.end()) e[it - comps.begin()] = sys.label_vector()[rep.I[j]];
            gens.push_back(e);
        }
        for (int c = 0; c < nc; ++c) gens.push_back(Q(ds[c]) * unit(nc, c));
        if (Lattice(nc, gens) != Lattice::standard(nc)) fail("psi is not surjective");
    }
    if (!(component_group_general(loc, ir.lattice, ip) == rep.group)) fail("component group differs from the gcd formula");
    return rep;
}

std::string restriction_check(const AffineRootSystem& sys, const QVec& x, const QVec& y) {
    auto Ix = roots::local_subsystem(sys, x).simple_index;
    auto Iy = roots::local_subsystem(sys, y).simple_index;
    for (int i : Iy)
        if (std::find(Ix.begin(), Ix.end(), i) == Ix.end()) return "I_y is not contained in I_x";
    for (size_t c = 0; c < sys.components().size(); ++c) {
        if (!sys.component_affine(int(c))) continue;
        long dx = comp_d(sys, int(c), Ix), dy = comp_d(sys, int(c), Iy);
        if (dx % dy != 0) return "d_{I_y} does not divide d_{I_x}";
        for (int i : Ix) {
            if (comp_of(sys, i) != int(c)) continue;
            bool in_y = std::find(Iy.begin(), Iy.end(), i) != Iy.end();
            long a = sys.label_vector()[i];
            // psi_x(e_i) reduced mod d_y against psi_y(e_i restricted to I_y)
            long lhs = (a % dx) % dy, rhs = in_y ? a % dy : 0;
            if (lhs != rhs) return "restriction square fails at simple root " + std::to_string(i);
        }
    }
    return "";
}

std::vector<H0Entry> h0_component_data(const Polytope& p, const IntegralRootSystem& ir) {
    const auto& sys = ir.sys;
    if (sys.components().size() != 1 || !sys.component_affine(0))
        throw Error("Reducible", "irreducible infinite systems only");
    const auto& a = sys.label_vector();
    long amax = *std::max_element(a.begin(), a.end());
    std::set<long> primes;
    for (long v : a)
        for (long q = 2; q <= v; ++q)
            if (v % q == 0) {
                bool prime = true;
                for (long t = 2; t * t <= q; ++t) prime = prime && q % t != 0;
                if (prime) primes.insert(q);
            }
    std::vector<H0Entry> out;
    for (long pr : primes) {
        int e_max = 0;
        for (long pe = pr, e = 1; pe <= amax; pe *= pr, ++e) {
            std::vector<AffineFunctional> eqs;
            for (int i = 0; i < sys.size(); ++i)
                if (a[i] % pe != 0) eqs.push_back(sys.simple_roots()[i]);
            if (p.intersect(eqs).empty()) break;
            e_max = int(e);
        }
        if (e_max == 0) continue;
        int witness = -1;
        for (int i = 0; i < sys.size() && witness < 0; ++i)
            if (a[i] % pr != 0) witness = i;
        long order = 1;
        for (int e = 0; e < e_max; ++e) order *= pr;
        out.push_back({pr, e_max, cyclic_sum({order}), witness});
    }
    return out;
}

AdjointDecomposition adjoint_decompose(const IntegralRootSystem& ir) {
    AdjointDecomposition d;
    d.root_part = roots::root_lattice(ir.sys);
    std::vector<QVec> cov;
    for (auto& s : ir.sys.simple_roots()) cov.push_back(s.a);
    d.fixed_part = ir.lattice.annihilated_by(cov);
    Lattice sum = d.root_part + d.fixed_part;
    for (auto& v : ir.lattice.basis())
        if (!sum.contains(v)) {
            d.witness = v;
            return d;
        }
    d.adjoint = true;
    return d;
}

Lattice adjoint_replacement(const IntegralRootSystem& ir) {
    AdjointDecomposition d = adjoint_decompose(ir);
    return d.root_part + d.fixed_part;
}

}  // namespace alcove::classify
