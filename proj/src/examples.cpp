#include "alcove/spherical.hpp"

#include <algorithm>

namespace alcove::spherical {

namespace {

using roots::FactorSpec;

AffineRootSystem ambient_of(const std::vector<std::string>& factors) {
    std::vector<FactorSpec> fs;
    for (auto& f : factors) fs.push_back(roots::parse_factor(f));
    return roots::product(fs);
}

// The alcove vertex where every simple root but alpha_i vanishes.
QVec alcove_vertex(const AffineRootSystem& sys, int i) {
    for (auto& v : sys.alcove().vertices()) {
        bool ok = true;
        for (int j = 0; j < sys.size() && ok; ++j) ok = (sys.simple_roots()[j](v) == 0) == (j != i);
        if (ok) return v;
    }
    throw Error("Internal", "no alcove vertex opposite alpha_" + std::to_string(i));
}

IntegralPair make_pair(std::string name, AffineRootSystem amb, const QMat& vertices, const Lattice& l) {
    IntegralPair p;
    p.name = std::move(name);
    int n = amb.ambient_dim();
    p.P = Polytope::hull(n, vertices);
    p.ambient = std::move(amb);
    p.lattice = l;
    return p;
}

// Weight lattice points on the direction of P.
Lattice lattice_along(const AffineRootSystem& amb, const Polytope& p) {
    AffineSpan s = affine_span(p);
    QMat across = nullspace(s.directions, amb.ambient_dim());
    return roots::weight_lattice(amb).annihilated_by(across);
}

Example full_alcove(std::string name, const std::string& factor, int scale) {
    AffineRootSystem amb = ambient_of({factor});
    Lattice l = roots::weight_lattice(amb).scaled(scale);
    Example ex;
    ex.pair = make_pair(name, amb, amb.alcove().vertices(), l);
    ex.name = std::move(name);
    return ex;
}

std::string su(int n) { return "SU(" + std::to_string(n) + ")"; }
std::string sp(int n) { return "Sp(" + std::to_string(n) + ")"; }

// -w0 on the rank <= 2 realizations used for doubles.
QVec opposition(char family, const QVec& v) {
    if (family != 'A') return v;
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[v.size() - 1 - i];
    return out;
}

QVec concat(const QVec& a, const QVec& b) {
    QVec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Example double_of(const std::string& name, char family, int rank, const std::string& group,
                  const std::vector<std::string>& witnesses) {
    std::string f = std::string(1, family) + " " + std::to_string(rank) + " affine";
    AffineRootSystem k0 = ambient_of({f});
    AffineRootSystem amb = ambient_of({f, f});
    QMat verts, gens;
    for (auto& v : k0.alcove().vertices()) verts.push_back(concat(v, opposition(family, v)));
    Lattice p0 = roots::weight_lattice(k0);
    for (auto& b : p0.basis()) gens.push_back(concat(b, opposition(family, b)));
    Example ex;
    ex.name = name;
    ex.description = "double D(" + group + ")";
    ex.pair = make_pair(name, amb, verts, Lattice(amb.ambient_dim(), gens));
    ex.expect_witnesses = witnesses;
    ex.manifold = "D(" + group + ")";
    return ex;
}

std::string sp_name(int k) { return "Sp(" + std::to_string(2 * k) + ")"; }

std::string quaternionic_witness(int n, int k) {
    if (n == 1) return "C^2 for SL(2)";
    if (k == n) return "C^" + std::to_string(2 * n) + " for Sp(" + std::to_string(2 * n) + ")";
    return "Sp(" + std::to_string(2 * n) + ")x^{" + sp_name(k) + "x" + sp_name(n - k) + "}C^" + std::to_string(2 * k);
}

std::string x_model(int n) {
    std::string g = "SL(" + std::to_string(n) + ")";
    if (n == 2) return "C^2 for SL(2)";
    if (n % 2) return g + "/Sp(" + std::to_string(n - 1) + ")";
    return g + "x^{Sp(" + std::to_string(n) + ")}C^" + std::to_string(n);
}

std::string y_model(int i, int n) {
    if (i > n - i) i = n - i;
    if (i == 0) return n == 1 ? "C^2 for SL(2)" : "Y_" + std::to_string(n) + " for " + sp_name(n);
    return "Y_{" + std::to_string(i) + "," + std::to_string(n - i) + "} for " + sp_name(i) + "x" + sp_name(n - i);
}

std::string so_name(int m) { return "SO(" + std::to_string(m) + ")"; }

// Local model of the twisted SU(2n+1) surjective case at the vertex with
// centralizer Sp(2i) x SO(2n+1-2i).
std::string z_model(int i, int n) {
    int m = n - i;
    if (m == 0) return y_model(0, n);
    if (i == 0) return m == 1 ? "SO(3)/SO(2)" : so_name(2 * m + 1) + "/GL(" + std::to_string(m) + ")";
    return "Y_" + std::to_string(i) + " x Z_" + std::to_string(m) + " for " + sp_name(i) + "x" + so_name(2 * m + 1);
}

}  // namespace

std::vector<Example> builtin_examples() {
    std::vector<Example> out;

    // rank one: SU(2) and twisted SU(3) with P the whole alcove
    struct Su2 {
        int k;
        bool ok;
        std::string a, b, manifold;
    };
    for (auto& c : std::vector<Su2>{{1, true, "C^2 for SL(2)", "C^2 for SL(2)", "S^4"},
                                    {2, true, "SL(2)/C*", "SL(2)/C*", "S^2 x S^2"},
                                    {3, false, "", "", ""},
                                    {4, true, "SL(2)/N(C*)", "SL(2)/N(C*)", "CP^2"},
                                    {6, false, "", "", ""}}) {
        Example ex = full_alcove("su2-" + (c.k == 1 ? std::string() : std::to_string(c.k)) + "P", "A 1 affine", c.k);
        ex.description = "SU(2), P the alcove, lattice " + std::to_string(c.k) + "P";
        ex.expect_spherical = c.ok;
        if (c.ok) {
            if (c.k > 1) ex.expect_type = "A1^(1)";
            ex.expect_witnesses = {c.a, c.b};
        }
        ex.manifold = c.manifold;
        out.push_back(ex);
    }
    for (auto& c : std::vector<Su2>{{1, true, "C^2 for SL(2)", "SO(3)/SO(2)", ""},
                                    {2, true, "SL(2)/C*", "SO(3)/O(2)", ""},
                                    {4, false, "", "", ""}}) {
        Example ex = full_alcove("twisted-su3-" + (c.k == 1 ? std::string() : std::to_string(c.k)) + "P", "A 2 twist 2", c.k);
        ex.description = "SU(3) twisted by complex conjugation, P the alcove, lattice " + std::to_string(c.k) + "P";
        ex.expect_spherical = c.ok;
        if (c.ok) {
            ex.expect_witnesses = {c.a, c.b};
            std::sort(ex.expect_witnesses.begin(), ex.expect_witnesses.end());
        } else {
            ex.expect_note = "smooth";
        }
        out.push_back(ex);
    }

    // spinning 2n-sphere: the edge [0, omega_1] of the SU(n) alcove
    for (int n = 2; n <= 5; ++n) {
        AffineRootSystem amb = ambient_of({"A " + std::to_string(n - 1) + " affine"});
        QVec w1 = alcove_vertex(amb, 1);
        Example ex;
        ex.name = "spinning-sphere-" + std::to_string(n);
        ex.description = "spinning " + std::to_string(2 * n) + "-sphere for " + su(n);
        ex.pair = make_pair(ex.name, amb, {zeros(n), w1}, Lattice(n, {w1}));
        std::string w = "C^" + std::to_string(n) + " for SL(" + std::to_string(n) + ")";
        ex.expect_witnesses = {w, w};
        ex.manifold = "S^" + std::to_string(2 * n);
        out.push_back(ex);
    }

    // quaternionic Grassmannians: the edge [x_{k-1}, x_k] of the Sp(2n) alcove
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            AffineRootSystem amb = ambient_of({n == 1 ? "A 1 affine" : "C " + std::to_string(n) + " affine"});
            Example ex;
            ex.name = "quaternionic-" + std::to_string(n) + "-" + std::to_string(k);
            ex.description = "Gr_" + std::to_string(k) + "(H^" + std::to_string(n + 1) + ") for " + sp(2 * n);
            QMat verts;
            Lattice l;
            if (n == 1) {
                verts = amb.alcove().vertices();
                l = roots::weight_lattice(amb);
            } else {
                verts = {alcove_vertex(amb, k - 1), alcove_vertex(amb, k)};
                l = Lattice(n, {unit(n, k - 1)});
            }
            ex.pair = make_pair(ex.name, amb, verts, l);
            ex.expect_witnesses = {quaternionic_witness(n, k), quaternionic_witness(n, n - k + 1)};
            std::sort(ex.expect_witnesses.begin(), ex.expect_witnesses.end());
            ex.manifold = "Gr_" + std::to_string(k) + "(H^" + std::to_string(n + 1) + ")";
            out.push_back(ex);
        }

    // doubles D(K0) with (P, L) = (id x delta)(A0, P0)
    out.push_back(double_of("double-su2", 'A', 1, "SU(2)", {"SL(2) as SL(2)xSL(2)-variety", "SL(2) as SL(2)xSL(2)-variety"}));
    out.back().expect_type = "A1^(1)";
    out.push_back(double_of("double-su3", 'A', 2, "SU(3)", std::vector<std::string>(3, "SL(3) as SL(3)xSL(3)-variety")));
    out.back().expect_type = "A2^(1)";
    out.push_back(double_of("double-sp4", 'C', 2, "Sp(4)",
                            {"SL(2)xSL(2) as (SL(2)xSL(2))^2-variety", "Sp(4) as Sp(4)xSp(4)-variety",
                             "Sp(4) as Sp(4)xSp(4)-variety"}));
    out.back().expect_type = "C2^(1)";
    out.push_back(double_of("double-g2", 'G', 2, "G2",
                            {"G2 as G2xG2-variety", "SL(3) as SL(3)xSL(3)-variety", "SO(4) as SO(4)xSO(4)-variety"}));
    out.back().expect_type = "G2^(1)";
    {
        // the diagonal of the SU(2) x SU(2) alcove with metrics in ratio 2
        AffineRootSystem amb = ambient_of({"A 1 affine", "A 1 affine scale 2"});
        QVec w = alcove_vertex(ambient_of({"A 1 affine"}), 1);
        Example ex;
        ex.name = "double-su2-scaled";
        ex.description = "diagonal of the SU(2) x SU(2) alcove, second metric doubled";
        ex.pair = make_pair(ex.name, amb, {zeros(4), concat(w, w)}, Lattice(4, {}));
        ex.pair.lattice = lattice_along(amb, ex.pair.P);
        ex.expect_spherical = false;
        out.push_back(ex);
    }

    // disymmetric SU(2n)/SO(2n) x SU(2n)/Sp(2n)
    for (int n = 2; n <= 3; ++n) {
        AffineRootSystem amb = ambient_of({"A " + std::to_string(2 * n - 1) + " affine"});
        AffineRootSystem half = ambient_of({"A " + std::to_string(n - 1) + " affine"});
        QMat verts;
        for (auto& y : half.alcove().vertices()) {
            QVec v;
            for (auto& q : y) v.push_back(q / 2 + qq(1, 4));
            for (auto& q : y) v.push_back(q / 2 - qq(1, 4));
            verts.push_back(v);
        }
        // weight lattice of sigma_i = alpha_i + alpha_{n+i} inside their span
        QMat coroots;
        const auto& al = amb.simple_roots();
        for (int i = 1; i <= n; ++i) coroots.push_back(roots::coroot((al[i] + al[(n + i) % (2 * n)]).a, amb.ip()));
        Lattice l = Lattice(2 * n, coroots).dual(amb.ip());
        Example ex;
        ex.name = "disymmetric-su" + std::to_string(2 * n);
        ex.description = su(2 * n) + "/SO(" + std::to_string(2 * n) + ") x " + su(2 * n) + "/Sp(" + std::to_string(2 * n) + ")";
        ex.pair = make_pair(ex.name, amb, verts, l);
        ex.expect_type = "A" + std::to_string(n - 1) + "^(1)";
        ex.expect_witnesses = std::vector<std::string>(n, "SL(" + std::to_string(n) + ") as S(GL(" + std::to_string(n) + ")xGL(" +
                                                              std::to_string(n) + "))-variety");
        ex.manifold = ex.description;
        out.push_back(ex);
    }

    // free actions with surjective moment map
    for (int n = 3; n <= 5; ++n) {
        Example ex = full_alcove("surjective-su" + std::to_string(n), "A " + std::to_string(n - 1) + " affine", 1);
        ex.description = su(n) + ", P the alcove, L the weight lattice";
        ex.expect_type = n % 2 ? "A" + std::to_string(n - 1) + "^(1)"
                               : "A" + std::to_string(n / 2 - 1) + "^(1)xA" + std::to_string(n / 2 - 1) + "^(1)";
        ex.expect_witnesses = std::vector<std::string>(n, x_model(n));
        out.push_back(ex);
    }
    for (int n = 2; n <= 3; ++n) {
        Example ex = full_alcove("surjective-sp" + std::to_string(2 * n), "C " + std::to_string(n) + " affine", 1);
        ex.description = sp(2 * n) + ", P the alcove, L the weight lattice";
        ex.expect_type = "A" + std::to_string(n - 1) + "^(1)";
        for (int i = 0; i <= n; ++i) ex.expect_witnesses.push_back(y_model(i, n));
        std::sort(ex.expect_witnesses.begin(), ex.expect_witnesses.end());
        out.push_back(ex);
    }
    for (int n = 1; n <= 2; ++n) {
        Example ex = full_alcove("surjective-twisted-su" + std::to_string(2 * n + 1), "A " + std::to_string(2 * n) + " twist 2", 1);
        ex.description = su(2 * n + 1) + " twisted by complex conjugation, P the alcove, L the weight lattice";
        ex.expect_type = "A" + std::to_string(2 * n) + "^(2)";
        for (int i = 0; i <= n; ++i) ex.expect_witnesses.push_back(z_model(i, n));
        std::sort(ex.expect_witnesses.begin(), ex.expect_witnesses.end());
        out.push_back(ex);
    }

    // triangles inscribed in rank-two alcoves
    auto inscribed = [&](const std::string& name, const std::string& factor, const QMat& bary, bool root_lattice,
                         bool spherical) {
        AffineRootSystem amb = ambient_of({factor});
        std::vector<QVec> corner;
        for (int i = 0; i < 3; ++i) corner.push_back(alcove_vertex(amb, i));
        QMat verts;
        for (auto& b : bary) verts.push_back(b[0] * corner[0] + b[1] * corner[1] + b[2] * corner[2]);
        Example ex;
        ex.name = name;
        Lattice l = root_lattice ? roots::root_lattice(amb) : roots::weight_lattice(amb);
        ex.description = "triangle inscribed in the " + factor.substr(0, 1) + factor.substr(2, 1) + " alcove, lattice " +
                         (root_lattice ? "R" : "P");
        ex.pair = make_pair(name, amb, verts, l);
        ex.expect_spherical = spherical;
        out.push_back(ex);
    };
    auto h = [](long a, long b, long c, long d) { return QVec{qq(a, d), qq(b, d), qq(c, d)}; };
    // corners are ordered (alpha_0 opposite, alpha_1 opposite, alpha_2 opposite)
    QMat medial = {h(1, 1, 0, 2), h(0, 1, 1, 2), h(1, 0, 1, 2)};
    inscribed("inscribed-su3-1-P", "A 2 affine", medial, false, true);
    inscribed("inscribed-su3-1-R", "A 2 affine", medial, true, true);
    inscribed("inscribed-su3-2-R", "A 2 affine", {h(1, 2, 0, 3), h(0, 1, 2, 3), h(2, 0, 1, 3)}, true, true);
    // Sp(4): corners 0, e1/2, (e1+e2)/2
    inscribed("inscribed-sp4-3-R", "C 2 affine", medial, true, true);
    inscribed("inscribed-sp4-4-R", "C 2 affine", {h(1, 2, 0, 3), h(0, 2, 1, 3), h(2, 0, 1, 3)}, true, true);
    inscribed("inscribed-sp4-3-P", "C 2 affine", medial, false, false);
    inscribed("inscribed-sp4-4-P", "C 2 affine", {h(1, 2, 0, 3), h(0, 2, 1, 3), h(2, 0, 1, 3)}, false, false);
    // G2: corners 0, the right-angle vertex, the 60 degree vertex
    inscribed("inscribed-G2", "G 2 affine", {h(1, 2, 0, 3), h(0, 2, 1, 3), h(1, 0, 2, 3)}, true, true);
    for (auto& ex : out) std::sort(ex.expect_witnesses.begin(), ex.expect_witnesses.end());
    return out;
}

ExampleOutcome run_example(const Example& ex, const Catalog& catalog) {
    ExampleOutcome o;
    try {
        o.report = check_pair(ex.pair, catalog);
    } catch (const Error& e) {
        o.detail = e.kind + ": " + e.what();
        return o;
    }
    const VerificationReport& r = o.report;
    std::vector<std::string> problems;
    if (r.spherical != ex.expect_spherical)
        problems.push_back(std::string("expected ") + (ex.expect_spherical ? "Spherical" : "Inconclusive") + ", got " +
                           (r.spherical ? "Spherical" : "Inconclusive"));
    if (ex.expect_spherical && r.spherical) {
        std::vector<std::string> got;
        for (auto& v : r.vertices) got.push_back(v.witness);
        std::sort(got.begin(), got.end());
        if (!ex.expect_witnesses.empty() && got != ex.expect_witnesses) {
            std::string s;
            for (auto& g : got) s += (s.empty() ? "" : ", ") + g;
            problems.push_back("witnesses " + s);
        }
        if (!ex.expect_type.empty()) {
            std::string t = r.phi_m ? r.phi_m->sys.type_name() : "none (" + r.phi_m_note + ")";
            if (t != ex.expect_type) problems.push_back("Phi_M type " + t + ", expected " + ex.expect_type);
        }
    }
    if (!ex.expect_note.empty()) {
        bool found = false;
        for (auto& v : r.vertices) found = found || v.note.find(ex.expect_note) != std::string::npos;
        if (!found) problems.push_back("no vertex note mentions '" + ex.expect_note + "'");
    }
    o.pass = problems.empty();
    for (auto& p : problems) o.detail += (o.detail.empty() ? "" : "; ") + p;
    if (o.pass) {
        o.detail = r.spherical ? "Spherical" : "Inconclusive";
        if (r.phi_m) o.detail += ", Phi_M " + (r.phi_m->sys.type_name().empty() ? std::string("empty") : r.phi_m->sys.type_name());
    }
    return o;
}

}  // namespace alcove::spherical
