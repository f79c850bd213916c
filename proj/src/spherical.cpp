#include "alcove/spherical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace alcove::spherical {

using roots::FiniteSubsystem;

namespace {

// Rational coordinates of v in the basis of l, or nullopt outside its span.
std::optional<QVec> span_coords(const Lattice& l, const QVec& v) {
    if (l.rank() == 0) return is_zero(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
    return solve(transpose(l.basis()), v, l.rank());
}

QVec combine(const QMat& rows, const ZVec& u) {
    QVec out = zeros(cols(rows));
    for (size_t i = 0; i < rows.size(); ++i) out = out + Q(u[i]) * rows[i];
    return out;
}

QVec combine(const QMat& rows, const QVec& u) {
    QVec out = zeros(cols(rows));
    for (size_t i = 0; i < rows.size(); ++i) out = out + u[i] * rows[i];
    return out;
}

// Ray generators scaled to primitive vectors of l.
QMat lattice_primitive(const QMat& rays, const Lattice& l) {
    QMat out;
    for (auto& r : rays) {
        auto u = span_coords(l, r);
        if (!u) throw Error("Internal", "ray " + str(r) + " leaves the span of the lattice");
        out.push_back(combine(l.basis(), primitive(*u)));
    }
    return out;
}

std::vector<std::string> split_type(const std::string& type) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : type) {
        if (ch == 'x') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

roots::CartanType parse_type_token(const std::string& tok) {
    if (tok.size() < 2 || !std::isupper(static_cast<unsigned char>(tok[0])))
        throw Error("InvalidEntry", "bad type token '" + tok + "'");
    roots::CartanType t;
    t.family = tok[0];
    try {
        size_t used = 0;
        t.rank = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw Error("InvalidEntry", "bad type token '" + tok + "'");
    }
    return t;
}

// All bijections local node -> entry node preserving the Cartan matrix.
std::vector<std::vector<int>> cartan_isomorphisms(const QMat& a, const QMat& b) {
    std::vector<std::vector<int>> out;
    int m = int(a.size());
    if (int(b.size()) != m) return out;
    std::vector<int> img(m, -1);
    std::vector<bool> used(m, false);
    std::function<void(int)> go = [&](int i) {
        if (i == m) {
            out.push_back(img);
            return;
        }
        for (int j = 0; j < m; ++j) {
            if (used[j] || a[i][i] != b[j][j]) continue;
            bool ok = true;
            for (int p = 0; p < i && ok; ++p)
                ok = a[i][p] == b[j][img[p]] && a[p][i] == b[img[p]][j];
            if (!ok) continue;
            used[j] = true;
            img[i] = j;
            go(i + 1);
            used[j] = false;
        }
        img[i] = -1;
    };
    go(0);
    return out;
}

// Vertex data in (c | z) coordinates.
struct LocalFrame {
    FiniteSubsystem local;
    QMat cartan;
    std::vector<QVec> coroots;
    QMat center;     // basis of the center inside the translation space
    QMat zbasis;     // projected weight lattice, a basis of the central characters
    Lattice derived;  // c(X(T))

    QVec operator()(const QVec& v, const InnerProduct& ip) const {
        QVec out;
        for (auto& cv : coroots) out.push_back(ip(v, cv));
        if (!center.empty()) {
            QVec p = orthogonal_project(v, center, ip);
            auto z = solve(transpose(zbasis), p, int(zbasis.size()));
            if (!z) throw Error("Internal", "central part outside the projected weight lattice");
            out.insert(out.end(), z->begin(), z->end());
        }
        return out;
    }
};

LocalFrame local_frame(const AffineRootSystem& amb, const QVec& x) {
    LocalFrame f;
    const InnerProduct& ip = amb.ip();
    f.local = roots::local_subsystem(amb, x);
    f.cartan = roots::cartan_matrix(f.local.simple, ip);
    QMat rows;
    for (auto& e : amb.equalities()) rows.push_back(e.a);
    for (auto& s : f.local.simple) {
        f.coroots.push_back(roots::coroot(s.a, ip));
        rows.push_back(s.a);
    }
    f.center = nullspace(rows, amb.ambient_dim());
    Lattice xt = roots::weight_lattice(amb);
    if (!f.center.empty()) f.zbasis = xt.project(f.center, ip).basis();
    if (f.zbasis.size() != f.center.size()) throw Error("Internal", "weight lattice does not span the center");
    QMat d;
    for (auto& b : xt.basis()) {
        QVec c;
        for (auto& cv : f.coroots) c.push_back(ip(b, cv));
        d.push_back(c);
    }
    f.derived = Lattice(int(f.coroots.size()), d);
    return f;
}

// Monoid presented by rays and a lattice basis, both in (c | z).
struct Presentation {
    QMat rays;
    QMat lattice;
};

Presentation entry_presentation(const LocalModelEntry& e) {
    int dim = e.semisimple_rank() + e.central_rank;
    Lattice l(dim, e.generators);
    Presentation p;
    if (!e.generators.empty()) p.rays = lattice_primitive(Cone::from_generators(dim, e.generators).generators, l);
    p.lattice = l.basis();
    return p;
}

QVec permute_c(const QVec& v, const std::vector<int>& sigma) {
    QVec out = v;
    for (size_t i = 0; i < sigma.size(); ++i) out[sigma[i]] = v[i];
    return out;
}

QVec z_part(const QVec& v, int m) { return QVec(v.begin() + m, v.end()); }

// A linear map id on c plus an invertible map on z carrying rays to rays
// and lattice to lattice.
bool presentations_match(const Presentation& a, const Presentation& b, int m) {
    if (a.rays.size() != b.rays.size()) return false;
    int dim = cols(a.lattice, cols(a.rays));
    if (dim != cols(b.lattice, cols(b.rays))) return false;
    int r = rank(a.rays);
    if (r != rank(b.rays) || int(a.lattice.size()) != int(b.lattice.size())) return false;
    if (a.rays.empty()) return a.lattice.empty() && b.lattice.empty();

    std::vector<int> basis;
    QMat chosen;
    for (int i = 0; i < int(a.rays.size()) && int(basis.size()) < r; ++i) {
        chosen.push_back(a.rays[i]);
        if (rank(chosen) == int(chosen.size()))
            basis.push_back(i);
        else
            chosen.pop_back();
    }
    QMat abasis = transpose(chosen);
    auto coeffs = [&](const QVec& v) { return solve(abasis, v, r); };
    std::vector<QVec> lam;
    for (auto& ray : a.rays) lam.push_back(*coeffs(ray));
    QMat lat_lam;
    for (auto& v : a.lattice) {
        auto c = coeffs(v);
        if (!c) return false;
        lat_lam.push_back(*c);
    }
    // null space of z on span(a) in ray-basis coordinates
    QMat zcols;
    for (int i : basis) zcols.push_back(z_part(a.rays[i], m));
    QMat zker = dim > m ? nullspace(transpose(zcols), r) : identity(r);

    int n = int(a.rays.size());
    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    auto c_part = [&](const QVec& v) { return QVec(v.begin(), v.begin() + m); };
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == n) {
            QMat img;
            for (int j : basis) img.push_back(b.rays[pi[j]]);
            for (int j = 0; j < n; ++j)
                if (combine(img, lam[j]) != b.rays[pi[j]]) return false;
            for (auto& k : zker)
                if (!is_zero(z_part(combine(img, k), m))) return false;
            QMat bz;
            for (auto& v : img) bz.push_back(z_part(v, m));
            if (dim > m && rank(bz) != rank(zcols)) return false;
            QMat lat;
            for (auto& c : lat_lam) lat.push_back(combine(img, c));
            return Lattice(dim, lat) == Lattice(dim, b.lattice);
        }
        for (int j = 0; j < n; ++j) {
            if (used[j] || c_part(a.rays[i]) != c_part(b.rays[j])) continue;
            used[j] = true;
            pi[i] = j;
            if (go(i + 1)) return true;
            used[j] = false;
        }
        pi[i] = -1;
        return false;
    };
    return go(0);
}

std::string node_list(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

void validate_pair(const IntegralPair& pair) {
    const AffineRootSystem& amb = pair.ambient;
    int n = amb.ambient_dim();
    auto bad = [](const std::string& why) { return Error("PairInvalid", why); };
    if (pair.P.ambient_dim() != n) throw bad("P lives in dimension " + std::to_string(pair.P.ambient_dim()) + ", the ambient in " + std::to_string(n));
    if (pair.lattice.ambient_dim() != n) throw bad("lattice lives in the wrong dimension");
    if (pair.P.empty()) throw bad("P is empty");
    if (!pair.P.bounded()) throw bad("P is unbounded");
    for (auto& v : pair.P.vertices()) {
        for (auto& e : amb.equalities())
            if (e(v) != 0) throw bad("vertex " + str(v) + " violates the equality " + e.str() + " = 0");
        for (int i = 0; i < amb.size(); ++i) {
            const AffineFunctional& s = amb.simple_roots()[i];
            if (s(v) < 0)
                throw bad("P is not inside the alcove: vertex " + str(v) + " violates the wall alpha_" + std::to_string(i) +
                          " = " + s.str() + " >= 0");
        }
    }
    AffineSpan span = affine_span(pair.P);
    int d = int(span.directions.size());
    if (pair.lattice.rank() != d)
        throw bad("lattice has rank " + std::to_string(pair.lattice.rank()) + " but P has dimension " + std::to_string(d));
    for (auto& b : pair.lattice.basis()) {
        QMat m = span.directions;
        m.push_back(b);
        if (rank(m) != d) throw bad("lattice vector " + str(b) + " is not parallel to P");
    }
    if (!roots::weight_lattice(amb).contains(pair.lattice)) throw bad("lattice is not inside the weight lattice");
}

std::optional<QMat> hilbert_basis(const Cone& cone, const Lattice& lattice, long budget) {
    if (!cone.pointed()) throw Error("NotPointed", "Hilbert basis of a cone with lines");
    int r = lattice.rank();
    std::vector<ZVec> rays;
    for (auto& g : cone.generators) {
        auto u = span_coords(lattice, g);
        if (!u) throw Error("Internal", "cone leaves the span of the lattice");
        rays.push_back(primitive(*u));
    }
    if (rays.empty()) return QMat{};
    std::vector<long> lo(r, 0), hi(r, 0);
    for (auto& u : rays)
        for (int j = 0; j < r; ++j) {
            long v = u[j].get_si();
            (v < 0 ? lo[j] : hi[j]) += v;
        }
    double total = 1;
    for (int j = 0; j < r; ++j) total *= double(hi[j] - lo[j] + 1);
    if (total > double(budget)) return std::nullopt;

    // facets and equalities pulled back to lattice coordinates
    auto pull = [&](const QMat& covs) {
        QMat out;
        for (auto& f : covs) {
            QVec g;
            for (auto& b : lattice.basis()) g.push_back(dot(f, b));
            out.push_back(g);
        }
        return out;
    };
    QMat facets = pull(cone.facets), eqs = pull(cone.equalities);
    QVec degree = zeros(r);
    for (auto& f : facets) degree = degree + f;
    auto in_cone = [&](const QVec& u) {
        for (auto& e : eqs)
            if (dot(e, u) != 0) return false;
        for (auto& f : facets)
            if (dot(f, u) < 0) return false;
        return true;
    };

    std::vector<std::pair<Q, QVec>> pts;
    QVec u(r);
    std::function<void(int)> walk = [&](int j) {
        if (j == r) {
            if (!is_zero(u) && in_cone(u)) pts.emplace_back(dot(degree, u), u);
            return;
        }
        for (long v = lo[j]; v <= hi[j]; ++v) {
            u[j] = v;
            walk(j + 1);
        }
    };
    walk(0);
    std::sort(pts.begin(), pts.end());
    std::vector<QVec> irr;
    for (auto& [deg, p] : pts) {
        bool reducible = false;
        for (auto& h : irr)
            if (in_cone(p - h)) {
                reducible = true;
                break;
            }
        if (!reducible) irr.push_back(p);
    }
    QMat out;
    for (auto& p : irr) out.push_back(combine(lattice.basis(), p));
    std::sort(out.begin(), out.end());
    return out;
}

WeightMonoid weight_monoid_at(const IntegralPair& pair, const QVec& x, int max_rays) {
    if (!pair.P.is_vertex(x)) throw Error("NotVertex", "point " + str(x) + " is not a vertex of P");
    WeightMonoid m{tangent_cone(pair.P, x), pair.lattice, std::nullopt};
    if (int(m.cone.generators.size()) <= max_rays) m.hilbert = hilbert_basis(m.cone, m.lattice);
    return m;
}

bool monoid_equal(const WeightMonoid& a, const WeightMonoid& b) { return cone_equal(a.cone, b.cone) && a.lattice == b.lattice; }

int LocalModelEntry::semisimple_rank() const {
    int r = 0;
    for (auto& tok : split_type(type)) r += parse_type_token(tok).rank;
    return r;
}

QMat LocalModelEntry::cartan() const {
    std::vector<QMat> blocks;
    int m = 0;
    for (auto& tok : split_type(type)) {
        QMat c;
        try {
            c = roots::build_finite(parse_type_token(tok)).cartan_matrix();
        } catch (const Error& e) {
            throw Error("InvalidEntry", "type '" + type + "': " + e.what());
        }
        m += int(c.size());
        blocks.push_back(c);
    }
    QMat out(m, QVec(m, Q(0)));
    int off = 0;
    for (auto& b : blocks) {
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[off + i][off + j] = b[i][j];
        off += int(b.size());
    }
    return out;
}

void validate_entry(const LocalModelEntry& e) {
    auto bad = [&](const std::string& why) { return Error("InvalidEntry", "entry '" + e.name + "': " + why); };
    if (e.name.empty()) throw Error("InvalidEntry", "entry without a name");
    QMat a;
    try {
        a = e.cartan();
    } catch (const Error& err) {
        throw bad(err.what());
    }
    int m = int(a.size());
    if (e.central_rank < 0) throw bad("negative central rank");
    int dim = m + e.central_rank;
    for (auto& g : e.generators) {
        if (int(g.size()) != dim) throw bad("generator " + str(g) + " should have " + std::to_string(dim) + " entries");
        for (int i = 0; i < m; ++i)
            if (g[i] < 0) throw bad("generator " + str(g) + " is not dominant");
    }
    Lattice derived = e.derived.empty() ? Lattice::standard(m) : Lattice(m, e.derived);
    if (derived.rank() != m) throw bad("derived lattice must have rank " + std::to_string(m));
    for (auto& row : a)  // c-values of the simple roots
        if (!derived.contains(row)) throw bad("derived lattice misses the root " + str(row));
    for (auto& g : e.generators)
        if (!derived.contains(QVec(g.begin(), g.begin() + m))) throw bad("generator " + str(g) + " is not a character of L");
    if (e.roots_known)
        for (auto& s : e.spherical_roots) {
            if (int(s.size()) != m) throw bad("spherical root " + str(s) + " should have " + std::to_string(m) + " entries");
            bool nonzero = false;
            for (auto& q : s) {
                if (q < 0 || q.get_den() != 1) throw bad("spherical root " + str(s) + " is not a nonnegative integer combination");
                nonzero = nonzero || q != 0;
            }
            if (!nonzero) throw bad("zero spherical root");
        }
    if (!e.smooth && e.note.empty()) throw bad("an entry without a smooth model needs a note");
}

VertexRecord check_vertex(const IntegralPair& pair, const QVec& x, const Catalog& catalog) {
    const InnerProduct& ip = pair.ambient.ip();
    VertexRecord rec;
    rec.vertex = x;
    rec.monoid = weight_monoid_at(pair, x);
    rec.centralizer = roots::centralizer_root_datum(pair.ambient, pair.lattice, x);
    LocalFrame frame = local_frame(pair.ambient, x);
    int m = int(frame.coroots.size());
    int k = int(frame.center.size());

    Presentation here;
    for (auto& r : lattice_primitive(rec.monoid.cone.generators, pair.lattice)) here.rays.push_back(frame(r, ip));
    for (auto& b : pair.lattice.basis()) here.lattice.push_back(frame(b, ip));
    rec.rays = here.rays;
    rec.lattice = Lattice(m + k, here.lattice).basis();

    const LocalModelEntry* witness = nullptr;
    const LocalModelEntry* obstruction = nullptr;
    std::vector<int> witness_sigma;
    for (auto& e : catalog.entries) {
        if (e.central_rank != k || e.semisimple_rank() != m) continue;
        Presentation theirs = entry_presentation(e);
        Lattice derived = e.derived.empty() ? Lattice::standard(m) : Lattice(m, e.derived);
        for (auto& sigma : cartan_isomorphisms(frame.cartan, e.cartan())) {
            QMat d;
            for (auto& b : frame.derived.basis()) d.push_back(permute_c(b, sigma));
            if (Lattice(m, d) != derived) continue;
            Presentation moved;
            for (auto& r : here.rays) moved.rays.push_back(permute_c(r, sigma));
            for (auto& b : here.lattice) moved.lattice.push_back(permute_c(b, sigma));
            if (!presentations_match(moved, theirs, m)) continue;
            rec.matches.push_back({e.name, sigma, e.smooth});
            if (e.smooth && !witness) {
                witness = &e;
                witness_sigma = sigma;
            }
            if (!e.smooth && !obstruction) obstruction = &e;
            break;
        }
    }
    if (witness) {
        rec.verified = true;
        rec.witness = witness->name;
        rec.alignment = witness_sigma;
        if (witness->roots_known) {
            std::vector<int> inv(m);
            for (int i = 0; i < m; ++i) inv[witness_sigma[i]] = i;
            std::vector<AffineFunctional> rs;
            for (auto& row : witness->spherical_roots) {
                AffineFunctional f(Q(0), zeros(pair.ambient.ambient_dim()));
                for (int j = 0; j < m; ++j)
                    if (row[j] != 0) f = f + row[j] * frame.local.simple[inv[j]];
                rs.push_back(f);
            }
            rec.spherical_roots = rs;
        }
    } else if (obstruction) {
        rec.note = obstruction->note;
    } else {
        rec.note = "no catalog entry matches this monoid";
    }
    return rec;
}

VerificationReport check_pair(const IntegralPair& pair, const Catalog& catalog) {
    validate_pair(pair);
    VerificationReport rep;
    rep.name = pair.name;
    rep.rank = pair.lattice.rank();
    rep.dual_lattice = pair.lattice.dual(pair.ambient.ip());
    rep.spherical = true;
    for (auto& v : pair.P.vertices()) {
        rep.vertices.push_back(check_vertex(pair, v, catalog));
        rep.spherical = rep.spherical && rep.vertices.back().verified;
    }
    if (!rep.spherical) {
        rep.phi_m_note = "not every vertex is verified";
        return rep;
    }
    classify::LocalRootAssignment assign;
    for (auto& r : rep.vertices) {
        if (!r.spherical_roots) {
            rep.phi_m_note = "entry '" + r.witness + "' lists no spherical roots";
            return rep;
        }
        FiniteSubsystem f;
        f.base = r.vertex;
        f.simple = *r.spherical_roots;
        assign.points.push_back(f);
    }
    try {
        rep.phi_m = classify::assemble_global(pair.ambient, pair.P, assign, pair.lattice);
    } catch (const Error& e) {
        rep.phi_m_note = e.kind + ": " + e.what();
    }
    return rep;
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "pair: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
    os << "rank: " << r.rank << "\n";
    os << "dual lattice:";
    for (auto& b : r.dual_lattice.basis()) os << " " << str(b);
    os << "\n";
    for (auto& v : r.vertices) {
        os << "vertex " << str(v.vertex) << "\n";
        os << "  centralizer: " << (v.centralizer.type.empty() ? "torus" : v.centralizer.type) << ", walls "
           << node_list(v.centralizer.local.simple_index) << "\n";
        os << "  rays (c | z):";
        for (auto& ray : v.rays) os << " " << str(ray);
        os << "\n  lattice (c | z):";
        for (auto& b : v.lattice) os << " " << str(b);
        os << "\n  hilbert basis:";
        if (v.monoid.hilbert)
            for (auto& h : *v.monoid.hilbert) os << " " << str(h);
        else
            os << " (not computed)";
        os << "\n";
        if (v.verified)
            os << "  Verified: " << v.witness << "\n";
        else
            os << "  Unverified: " << v.note << "\n";
    }
    os << "status: " << (r.spherical ? "Spherical" : "Inconclusive") << "\n";
    if (r.phi_m) {
        os << "Phi_M: " << (r.phi_m->sys.type_name().empty() ? "empty" : r.phi_m->sys.type_name()) << "\n";
        for (auto& s : r.phi_m->sys.simple_roots()) os << "  " << s.str() << "\n";
    } else {
        os << "Phi_M: unavailable (" << r.phi_m_note << ")\n";
    }
    return os.str();
}

}  // namespace alcove::spherical
