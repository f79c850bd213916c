#include "doctest.h"

#include "alcove/roots.hpp"

#include <algorithm>
#include <random>
#include <numeric>
#include <set>

using namespace alcove;
using namespace alcove::roots;

namespace {

AffineFunctional F(Q c, QVec a) { return {c, a}; }

// Exhaustive permutation search; fine up to 6 nodes.
bool same_diagram(const QMat& a, const QMat& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> p(a.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = int(i);
    do {
        bool ok = true;
        for (size_t i = 0; i < p.size() && ok; ++i)
            for (size_t j = 0; j < p.size() && ok; ++j) ok = a[p[i]][p[j]] == b[i][j];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

QMat qmat(std::initializer_list<std::initializer_list<int>> rows) {
    QMat m;
    for (auto& r : rows) {
        QVec v;
        for (int x : r) v.push_back(x);
        m.push_back(v);
    }
    return m;
}

// Generalized Cartan matrices as tabulated by Kac (a_ij = <alpha_i^vee, alpha_j>)
// with their marks.  Our convention is the transpose.
struct KacEntry {
    std::string name;
    FactorSpec spec;
    QMat kac;
    std::vector<long> marks;
};

std::vector<KacEntry> kac_table() {
    auto fs = [](char f, int r, int order) {
        FactorSpec s;
        s.type = {f, r};
        s.affine = true;
        s.twist.order = order;
        return s;
    };
    return {
        {"A1^(1)", fs('A', 1, 1), qmat({{2, -2}, {-2, 2}}), {1, 1}},
        {"A2^(1)", fs('A', 2, 1), qmat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), {1, 1, 1}},
        {"A3^(1)", fs('A', 3, 1), qmat({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}), {1, 1, 1, 1}},
        {"C2^(1)", fs('C', 2, 1), qmat({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}), {1, 2, 1}},
        {"G2^(1)", fs('G', 2, 1), qmat({{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}), {1, 2, 3}},
        {"B3^(1)", fs('B', 3, 1), qmat({{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -2, 2}}), {1, 1, 2, 2}},
        {"C3^(1)", fs('C', 3, 1), qmat({{2, -1, 0, 0}, {-2, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -1, 2}}), {1, 2, 2, 1}},
        {"D4^(1)", fs('D', 4, 1),
         qmat({{2, 0, -1, 0, 0}, {0, 2, -1, 0, 0}, {-1, -1, 2, -1, -1}, {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}}),
         {1, 1, 2, 1, 1}},
        {"F4^(1)", fs('F', 4, 1),
         qmat({{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -2, 2, -1}, {0, 0, 0, -1, 2}}),
         {1, 2, 3, 4, 2}},
        {"A2^(2)", fs('A', 2, 2), qmat({{2, -4}, {-1, 2}}), {2, 1}},
        {"A4^(2)", fs('A', 4, 2), qmat({{2, -2, 0}, {-1, 2, -2}, {0, -1, 2}}), {2, 2, 1}},
        {"D3^(2)", fs('D', 3, 2), qmat({{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}}), {1, 1, 1}},
        {"A5^(2)", fs('A', 5, 2), qmat({{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -2}, {0, 0, -1, 2}}), {1, 1, 2, 1}},
        {"D5^(2)", fs('D', 5, 2),
         qmat({{2, -2, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {0, 0, 0, -2, 2}}),
         {1, 1, 1, 1, 1}},
        {"E6^(2)", fs('E', 6, 2),
         qmat({{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -2, 0}, {0, 0, -1, 2, -1}, {0, 0, 0, -1, 2}}),
         {1, 2, 3, 2, 1}},
        {"D4^(3)", fs('D', 4, 3), qmat({{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}), {1, 2, 1}},
    };
}

std::vector<FactorSpec> small_affine_specs() {
    std::vector<FactorSpec> out;
    for (auto& e : kac_table()) out.push_back(e.spec);
    return out;
}

QVec random_point(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    QVec x(n);
    for (auto& v : x) v = qq(num(rng), den(rng));
    return x;
}

// Independent enumeration of Phi_x: close the group generated by the
// reflections in the walls through x, then move those walls around.
std::set<AffineFunctional> roots_by_group(const AffineRootSystem& sys, const QVec& x) {
    std::vector<WeylElement> gens;
    std::vector<AffineFunctional> walls;
    for (auto& s : sys.simple_roots())
        if (s(x) == 0) walls.push_back(s), gens.push_back(WeylElement::reflection(s, sys.ip()));
    int n = sys.ambient_dim();
    std::vector<WeylElement> group{WeylElement::identity(n)};
    auto key = [](const WeylElement& w) { return std::make_pair(w.lin, w.trans); };
    std::set<std::pair<QMat, QVec>> seen{key(group[0])};
    for (size_t i = 0; i < group.size(); ++i)
        for (auto& g : gens) {
            WeylElement h = g * group[i];
            if (seen.insert(key(h)).second) group.push_back(h);
        }
    std::set<AffineFunctional> out;
    for (auto& w : group) {
        WeylElement wi = w.inverse();
        for (auto& a : walls) {
            // (w a)(y) = a(w^{-1} y)
            QVec coeff(n);
            for (int j = 0; j < n; ++j) {
                Q s = 0;
                for (int i = 0; i < n; ++i) s += a.a[i] * wi.lin[i][j];
                coeff[j] = s;
            }
            AffineFunctional wa{a.c + dot(a.a, wi.trans), coeff};
            out.insert(sys.normalize(wa));
            out.insert(sys.normalize(-wa));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("finite realizations") {
    auto a1 = build_finite({'A', 1});
    REQUIRE(a1.size() == 1);
    CHECK(coroot_pairing(a1.simple_roots()[0].a, a1.simple_roots()[0].a, a1.ip()) == 2);
    CHECK(build_finite({'A', 2}).cartan_matrix() == qmat({{2, -1}, {-1, 2}}));
    auto c3 = build_finite({'C', 3});
    CHECK(c3.simple_roots()[0] == F(0, {1, -1, 0}));
    CHECK(c3.simple_roots()[1] == F(0, {0, 1, -1}));
    CHECK(c3.simple_roots()[2] == F(0, {0, 0, 2}));
    CHECK(c3.type_name() == "C3");
    CHECK(build_finite({'B', 2}).type_name() == "B2");
    CHECK(build_finite({'C', 2}).type_name() == "B2");
    CHECK(build_finite({'D', 3}).type_name() == "A3");
    CHECK(build_finite({'G', 2}).type_name() == "G2");
    CHECK(build_finite({'E', 6}).type_name() == "E6");
    CHECK(build_finite({'E', 7}).type_name() == "E7");
    CHECK(build_finite({'E', 8}).type_name() == "E8");
    CHECK(build_finite({'F', 4}).type_name() == "F4");
    CHECK(finite_roots(std::vector<QVec>{QVec{1, -1, 0}, QVec{0, 1, -1}}, InnerProduct::standard(3)).size() == 6);
    CHECK_THROWS_AS(build_finite({'E', 9}), Error);
    CHECK_THROWS_AS(build_finite({'B', 1}), Error);
    CHECK_THROWS_AS(build_finite({'X', 2}), Error);
}

TEST_CASE("root counts of the exceptional realizations") {
    auto count = [](CartanType t) {
        auto s = build_finite(t);
        std::vector<QVec> a;
        for (auto& f : s.simple_roots()) a.push_back(f.a);
        return finite_roots(a, s.ip()).size();
    };
    CHECK(count({'E', 6}) == 72);
    CHECK(count({'E', 7}) == 126);
    CHECK(count({'E', 8}) == 240);
    CHECK(count({'F', 4}) == 48);
    CHECK(count({'G', 2}) == 12);
    CHECK(count({'D', 5}) == 40);
}

TEST_CASE("fundamental weights pair to a unit matrix with coroots") {
    auto s = build_finite({'B', 3});
    std::vector<QVec> a;
    for (auto& f : s.simple_roots()) a.push_back(f.a);
    QMat w = fundamental_weights(a, s.ip());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) CHECK(s.ip()(w[i], coroot(a[j], s.ip())) == (i == j ? 1 : 0));
}

TEST_CASE("untwisted affine simple roots") {
    for (int n = 2; n <= 6; ++n) {
        auto s = build_affine_untwisted({'A', n - 1});
        QVec a0 = zeros(n);
        a0[0] = -1, a0[n - 1] = 1;
        CHECK(s.simple_roots()[0] == F(1, a0));
        CHECK(s.label_vector() == std::vector<long>(n, 1));
        CHECK(s.alcove().vertices().size() == size_t(n));
    }
    for (int n = 2; n <= 4; ++n) {
        auto s = build_affine_untwisted({'C', n});
        QVec a0 = zeros(n);
        a0[0] = -2;
        CHECK(s.simple_roots()[0] == F(1, a0));
        std::vector<long> lab(n + 1, 2);
        lab.front() = lab.back() = 1;
        CHECK(s.label_vector() == lab);
        CHECK(s.type_name() == "C" + std::to_string(n) + "^(1)");
    }
    auto a1 = build_affine_untwisted({'A', 1});
    CHECK(labels(a1) == std::vector<std::vector<long>>{{1, 1}});
    auto g2 = build_affine_untwisted({'G', 2});
    CHECK(g2.label_vector() == std::vector<long>{1, 2, 3});
    CHECK(g2.size() == 3);
}

TEST_CASE("twisted affine simple roots") {
    auto a2 = build_affine_twisted({'A', 2}, {2, {}, 1});
    REQUIRE(a2.size() == 2);
    CHECK(a2.simple_roots()[0] == F(qq(1, 2), {-2}));
    CHECK(a2.simple_roots()[1] == F(0, {1}));
    CHECK(a2.label_vector() == std::vector<long>{1, 2});
    QVec g0 = a2.ip().raise(a2.simple_roots()[0].a), g1 = a2.ip().raise(a2.simple_roots()[1].a);
    CHECK(g0 == Q(-2) * g1);
    CHECK(a2.type_name() == "A2^(2)");

    for (int n = 2; n <= 3; ++n) {
        auto s = build_affine_twisted({'A', 2 * n}, {2, {}, 1});
        REQUIRE(s.size() == n + 1);
        QVec a0 = zeros(n);
        a0[0] = -2;
        CHECK(s.simple_roots()[0] == F(qq(1, 2), a0));
        for (int i = 1; i < n; ++i) {
            QVec a = zeros(n);
            a[i - 1] = 1, a[i] = -1;
            CHECK(s.simple_roots()[i] == F(0, a));
        }
        CHECK(s.simple_roots()[n] == F(0, unit(n, n - 1)));
        for (int i = 0; i < n; ++i) CHECK(s.ip().gram()[i] == Q(2) * unit(n, i));
    }
    CHECK(build_affine_twisted({'A', 5}, {2, {}, 1}).type_name() == "A5^(2)");
    auto d43 = build_affine_twisted({'D', 4}, {3, {}, 1});
    CHECK(d43.type_name() == "D4^(3)");
    CHECK(d43.alcove().vertices().size() == 3);
    CHECK(d43.label_vector() == std::vector<long>{1, 2, 1});
    CHECK(build_affine_twisted({'E', 6}, {2, {}, 1}).label_vector() == std::vector<long>{1, 2, 3, 2, 1});
    // explicit automorphism: the other D4 swap
    CHECK(build_affine_twisted({'D', 4}, {2, {0, 1, 3, 2}, 1}).type_name() == "D4^(2)");
    CHECK(build_affine_twisted({'D', 4}, {2, {3, 1, 2, 0}, 1}).type_name() == "D4^(2)");
    CHECK_THROWS_AS(build_affine_twisted({'A', 3}, {3, {}, 1}), Error);
    CHECK_THROWS_AS(build_affine_twisted({'B', 3}, {2, {}, 1}), Error);
    CHECK_THROWS_AS(build_affine_twisted({'A', 3}, {2, {1, 0, 2}, 1}), Error);
    CHECK_THROWS_AS(build_affine_twisted({'D', 4}, {2, {2, 1, 3, 0}, 1}), Error);
}

TEST_CASE("affine types against the Kac tables") {
    for (auto& e : kac_table()) {
        CAPTURE(e.name);
        auto s = build(e.spec);
        CHECK(s.type_name() == e.name);
        CHECK(same_diagram(s.cartan_matrix(), transpose(e.kac)));
        std::vector<long> got = s.label_vector(), want = e.marks;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        // marks are the kernel of the Kac matrix
        for (auto& row : e.kac) {
            Q sum = 0;
            for (size_t j = 0; j < row.size(); ++j) sum += row[j] * long(e.marks[j]);
            CHECK(sum == 0);
        }
        CHECK(s.alcove().bounded());
        CHECK(int(s.alcove().vertices().size()) == s.size());
    }
}

TEST_CASE("reflection formulas") {
    auto a1 = build_finite({'A', 1});
    const AffineFunctional& al = a1.simple_roots()[0];
    QVec cv = coroot(al.a, a1.ip());
    CHECK(al(cv) == 2);
    CHECK(reflect(al, cv, a1.ip()) == -cv);
    QVec on_wall{1, 1};
    CHECK(reflect(al, on_wall, a1.ip()) == on_wall);
    CHECK(reflect_functional(al, al, a1.ip()) == -al);
    AffineFunctional ortho = AffineFunctional::linear({1, 1});
    CHECK(reflect_functional(al, ortho, a1.ip()) == ortho);
    CHECK_THROWS_AS(reflect(AffineFunctional{1, {0, 0}}, on_wall, a1.ip()), Error);
}

TEST_CASE("cyclic folding") {
    auto base = build_affine_untwisted({'A', 1});
    CHECK(fold_cyclic(base, 1).simple_roots() == base.simple_roots());
    auto f = fold_cyclic(base, 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(f.simple_roots()[i].c == base.simple_roots()[i].c / 2);
        CHECK(f.ip().raise(f.simple_roots()[i].a) == qq(1, 2) * base.ip().raise(base.simple_roots()[i].a));
    }
    QMat vb = base.alcove().vertices(), vf = f.alcove().vertices();
    REQUIRE(vb.size() == vf.size());
    for (size_t i = 0; i < vb.size(); ++i) CHECK(vf[i] == qq(1, 2) * vb[i]);
    CHECK(f.cartan_matrix() == base.cartan_matrix());
    CHECK(f.spec()[0].twist.m == 2);
    CHECK_THROWS_AS(fold_cyclic(base, 0), Error);
}

TEST_CASE("products and factor specs") {
    FactorSpec a = parse_factor("A1 affine"), b = parse_factor("A 1 affine scale 2");
    auto p = product({a, b});
    CHECK(p.type_name() == "A1^(1)xA1^(1)");
    CHECK(p.components().size() == 2);
    CHECK(p.ip().gram()[2][2] == 2);
    CHECK(labels(p) == std::vector<std::vector<long>>{{1, 1}, {1, 1}});
    CHECK(parse_factor("D4 twist 3").str() == "D4 twist 3");
    CHECK(parse_factor("a5 twist 2 perm 5,4,3,2,1 cyclic 2 scale 1/2").str() == "A5 twist 2 perm 5,4,3,2,1 cyclic 2 scale 1/2");
    CHECK_THROWS_AS(parse_factor("A x"), Error);
    CHECK_THROWS_AS(parse_factor("A2 bogus"), Error);
    CHECK_THROWS_AS(parse_factor(""), Error);
}

TEST_CASE("generic constructor rejects non-root systems") {
    auto ip = InnerProduct::standard(2);
    using V = std::vector<AffineFunctional>;
    CHECK_THROWS_AS(AffineRootSystem(ip, {}, V{F(0, {1, 0}), F(0, {1, 1})}), Error);  // acute
    CHECK_THROWS_AS(AffineRootSystem(ip, {}, V{F(0, {1, 0}), F(0, {-1, 3})}), Error);  // non-integral
    CHECK_THROWS_AS(AffineRootSystem(ip, {}, V{F(-1, {1, 0}), F(0, {-1, 0})}), Error);  // empty alcove
    AffineRootSystem ok(ip, {}, V{F(0, {1, 0}), F(1, {-1, 0})});
    CHECK(ok.type_name() == "A1^(1)");
    CHECK(!ok.alcove().bounded());
}

TEST_CASE("local subsystems") {
    auto su3 = build_affine_untwisted({'A', 2});
    QVec interior{qq(1, 6), 0, qq(-1, 6)};
    CHECK(local_subsystem(su3, interior).roots.empty());
    for (int n = 2; n <= 5; ++n) {
        auto s = build_affine_untwisted({'A', n - 1});
        auto l = local_subsystem(s, zeros(n));
        CHECK(int(l.roots.size()) == n * (n - 1));
    }
    // Sp(2n) at x_k = (1/2, ..., 1/2, 0, ...)
    for (int n = 2; n <= 4; ++n) {
        auto s = build_affine_untwisted({'C', n});
        for (int k = 0; k <= n; ++k) {
            QVec x = zeros(n);
            for (int i = 0; i < k; ++i) x[i] = qq(1, 2);
            REQUIRE(s.alcove().is_vertex(x));
            auto d = centralizer_root_datum(s, weight_lattice(s), x);
            std::multiset<std::string> got, want;
            for (std::string t = d.type; !t.empty();) {
                auto pos = t.find('x');
                got.insert(t.substr(0, pos));
                t = pos == std::string::npos ? "" : t.substr(pos + 1);
            }
            for (int r : {k, n - k}) {
                if (r == 1) want.insert("A1");
                else if (r == 2) want.insert("B2");
                else if (r >= 3) want.insert("C" + std::to_string(r));
            }
            CHECK(got == want);
            CHECK(int(d.local.roots.size()) == 2 * k * k + 2 * (n - k) * (n - k));
        }
    }
    CHECK_THROWS_AS(local_subsystem(su3, QVec{2, -1, -1}), Error);
}

TEST_CASE("centralizers from the examples") {
    // SU(2n) at the vertex where only alpha_0 and alpha_n are positive
    for (int n = 2; n <= 3; ++n) {
        auto s = build_affine_untwisted({'A', 2 * n - 1});
        // half of the fundamental weight omega_n
        QVec x(2 * n, qq(1, 4));
        for (int i = n; i < 2 * n; ++i) x[i] = qq(-1, 4);
        auto d = centralizer_root_datum(s, weight_lattice(s), x);
        std::string an = "A" + std::to_string(n - 1);
        CHECK(d.type == an + "x" + an);
    }
    // twisted SU(2n+1): B_n at the origin, C_n at the far vertex
    for (int n = 2; n <= 3; ++n) {
        auto s = build_affine_twisted({'A', 2 * n}, {2, {}, 1});
        CHECK(centralizer_root_datum(s, weight_lattice(s), zeros(n)).type == "B" + std::to_string(n));
        QVec far(n, qq(1, 4));
        std::string cn = n == 2 ? "B2" : "C" + std::to_string(n);
        CHECK(centralizer_root_datum(s, weight_lattice(s), far).type == cn);
    }
    auto s = build_affine_untwisted({'A', 2});
    QVec interior{qq(1, 6), 0, qq(-1, 6)};
    CHECK(centralizer_root_datum(s, weight_lattice(s), interior).type.empty());
}

TEST_CASE("weight lattices") {
    auto a2 = build_finite({'A', 2});
    CHECK(is_weight_lattice(root_lattice(a2), a2));
    CHECK(is_weight_lattice(weight_lattice(a2), a2));
    CHECK_FALSE(is_weight_lattice(root_lattice(a2).scaled(qq(1, 3)), a2));
    CHECK(quotient(root_lattice(a2), weight_lattice(a2)).str() == "Z/3");
    auto tw = build_affine_twisted({'A', 2}, {2, {}, 1});
    // P = Z alpha_1-bar
    CHECK(weight_lattice(tw) == Lattice(1, {tw.ip().raise(tw.simple_roots()[1].a)}));
}

TEST_CASE("property: local subsystems match the group closure") {
    std::mt19937 rng(20261017);
    auto specs = small_affine_specs();
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
        auto s = build(specs[it % specs.size()]);
        const QMat& verts = s.alcove().vertices();
        std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
        // a vertex, or the midpoint of two vertices
        QVec x = verts[pick(rng)];
        if (it % 2) x = qq(1, 2) * (x + verts[pick(rng)]);
        auto l = local_subsystem(s, x);
        std::set<AffineFunctional> got(l.roots.begin(), l.roots.end());
        CHECK(got == roots_by_group(s, x));
        for (auto& r : l.roots) CHECK(r(x) == 0);
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("property: reflections are isometric involutions") {
    std::mt19937 rng(404);
    auto specs = small_affine_specs();
    for (int it = 0; it < 150; ++it) {
        auto s = build(specs[it % specs.size()]);
        int n = s.ambient_dim();
        std::uniform_int_distribution<int> pick(0, s.size() - 1);
        const AffineFunctional& al = s.simple_roots()[pick(rng)];
        const AffineFunctional& be = s.simple_roots()[pick(rng)];
        QVec x = random_point(rng, n), y = random_point(rng, n);
        QVec sx = reflect(al, x, s.ip()), sy = reflect(al, y, s.ip());
        CHECK(reflect(al, sx, s.ip()) == x);
        CHECK(s.ip().norm2(sx - sy) == s.ip().norm2(x - y));
        CHECK(reflect_functional(al, be, s.ip())(sx) == be(x));
        WeylElement w = WeylElement::reflection(al, s.ip());
        CHECK(w(x) == sx);
        CHECK(w.preserves(s.ip()));
        CHECK(w * w == WeylElement::identity(n));
        CHECK(w.inverse() == w);
    }
}

TEST_CASE("property: pairing identities and Cartan integrality") {
    std::mt19937 rng(77);
    auto specs = small_affine_specs();
    std::uniform_int_distribution<int> sc(1, 4), nf(1, 3);
    for (int it = 0; it < 100; ++it) {
        std::vector<FactorSpec> fs;
        int k = nf(rng);
        for (int j = 0; j < k; ++j) {
            FactorSpec f = specs[(it + 5 * j) % specs.size()];
            f.scale = qq(sc(rng), sc(rng));
            fs.push_back(f);
        }
        auto s = product(fs);
        QMat c = s.cartan_matrix();
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < c.size(); ++j) {
                CHECK(c[i][j].get_den() == 1);
                if (i != j) CHECK(c[i][j] <= 0);
            }
        std::vector<QVec> grads;
        for (auto& r : s.simple_roots()) grads.push_back(r.a);
        for (auto& b : finite_roots(grads, s.ip())) CHECK(coroot_pairing(b, b, s.ip()) == 2);
        for (auto& l : labels(s)) {
            long g = 0;
            for (long a : l) {
                CHECK(a > 0);
                g = std::gcd(g, a);
            }
            CHECK(g == 1);
        }
        for (size_t ci = 0; ci < s.components().size(); ++ci) {
            QVec sum = zeros(s.ambient_dim());
            for (int i : s.components()[ci]) sum = sum + Q(s.label_vector()[i]) * s.ip().raise(s.simple_roots()[i].a);
            CHECK(is_zero(sum));
        }
        CHECK(is_weight_lattice(root_lattice(s), s));
        CHECK(is_weight_lattice(weight_lattice(s), s));
    }
}
