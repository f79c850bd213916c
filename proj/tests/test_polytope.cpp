#include "doctest.h"

#include "alcove/polytope.hpp"

#include <algorithm>
#include <random>

using namespace alcove;

namespace {

QVec v(std::initializer_list<Q> xs) { return QVec(xs); }

// Andrew's monotone chain, strict turns only: the extreme points of a
// planar point set, found without any polyhedral machinery.
QMat monotone_chain(QMat pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const QVec& o, const QVec& a, const QVec& b) -> Q {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    QMat h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    std::sort(h.begin(), h.end());
    return h;
}

QMat random_points(std::mt19937& rng, int count, int n, int range, int den) {
    std::uniform_int_distribution<int> d(-range, range), q(1, den);
    QMat pts;
    for (int i = 0; i < count; ++i) {
        QVec p(n);
        for (auto& x : p) x = qq(d(rng), q(rng));
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

TEST_CASE("hull of a single point") {
    Polytope p = Polytope::hull(2, {v({1, qq(1, 2)})});
    CHECK(p.dim() == 0);
    CHECK(p.vertices().size() == 1);
    CHECK(p.equalities().size() == 2);
    CHECK(p.inequalities().empty());
    CHECK(p.contains(v({1, qq(1, 2)})));
    CHECK_FALSE(p.contains(v({1, 0})));
}

TEST_CASE("SU(3) alcove from its vertices") {
    QVec w1{qq(2, 3), qq(-1, 3), qq(-1, 3)}, w2{qq(1, 3), qq(1, 3), qq(-2, 3)};
    Polytope from_v = Polytope::hull(3, {zeros(3), w1, w2});
    AffineFunctional sum = AffineFunctional::linear({1, 1, 1});
    AffineFunctional a0{1, {-1, 0, 1}};
    AffineFunctional a1 = AffineFunctional::linear({1, -1, 0}), a2 = AffineFunctional::linear({0, 1, -1});
    // alpha_0 = 1 + x3 - x1
    Polytope from_h = Polytope::from_h(3, {sum}, {a0, a1, a2});
    CHECK(from_h == from_v);
    CHECK(from_v.inequalities().size() == 3);
    CHECK(from_v.dim() == 2);
    CHECK(from_v.vertices().size() == 3);
}

TEST_CASE("unbounded chamber and lineality") {
    // Weyl chamber of A1 inside R^2 without the sum-zero equality: a
    // half-plane with one line.
    Polytope ch = Polytope::from_h(2, {}, {AffineFunctional::linear({1, -1})});
    CHECK_FALSE(ch.bounded());
    CHECK(ch.lines().size() == 1);
    CHECK(ch.vertices().size() == 1);
    Polytope quad = Polytope::from_h(2, {}, {AffineFunctional::linear({1, 0}), AffineFunctional::linear({0, 1})});
    CHECK(quad.rays().size() == 2);
    CHECK(quad.vertices() == QMat{zeros(2)});
    Polytope empty = Polytope::from_h(1, {}, {{Q(-1), {Q(1)}}, {Q(0), {Q(-1)}}});
    CHECK(empty.empty());
}

TEST_CASE("tangent cones") {
    Polytope seg = Polytope::hull(2, {zeros(2), v({qq(1, 2), qq(-1, 2)})});
    Cone c0 = tangent_cone(seg, zeros(2));
    CHECK(c0.generators == QMat{v({1, -1})});
    Cone mid = tangent_cone(seg, v({qq(1, 4), qq(-1, 4)}));
    CHECK(mid.lines.size() == 1);
    CHECK(mid.generators.empty());
    Polytope sq = Polytope::hull(2, {zeros(2), v({1, 0}), v({0, 1}), v({1, 1})});
    Cone full = tangent_cone(sq, v({qq(1, 2), qq(1, 2)}));
    CHECK(full.dim() == 2);
    CHECK(full.pointed() == false);
    Cone corner = tangent_cone(sq, zeros(2));
    CHECK(corner.pointed());
    CHECK_THROWS_AS(tangent_cone(sq, v({2, 2})), Error);
}

TEST_CASE("cone equality") {
    Cone quadrant = Cone::from_generators(2, {v({1, 0}), v({0, 1})});
    CHECK(cone_equal(quadrant, quadrant));
    CHECK(cone_equal(Cone::from_generators(2, {v({1, 0})}), Cone::from_generators(2, {v({2, 0})})));
    Cone half = Cone::from_generators(2, {v({0, 1})}, {v({1, 0})});
    CHECK_FALSE(cone_equal(quadrant, half));
    // e2 fails a facet test of the ray cone generated by e1 alone
    CHECK_FALSE(Cone::from_generators(2, {v({1, 0})}).contains(v({0, 1})));
}

TEST_CASE("faces of simplices") {
    for (int d = 1; d <= 4; ++d) {
        QMat pts{zeros(d)};
        for (int i = 0; i < d; ++i) pts.push_back(unit(d, i));
        Polytope s = Polytope::hull(d, pts);
        CHECK(int(faces(s).size()) == (1 << (d + 1)) - 1);
        CHECK(meets_every_wall(s, s.inequalities()));
    }
    Polytope sq = Polytope::hull(2, {zeros(2), v({1, 0}), v({0, 1}), v({1, 1})});
    CHECK(faces(sq).size() == 9);
    Polytope inner = Polytope::hull(2, {v({qq(1, 4), qq(1, 4)}), v({qq(1, 2), qq(1, 4)})});
    CHECK_FALSE(meets_every_wall(inner, sq.inequalities()));
}

TEST_CASE("property: planar hull vertices match monotone chain") {
    std::mt19937 rng(11);
    for (int it = 0; it < 120; ++it) {
        QMat pts = random_points(rng, 3 + it % 8, 2, 6, 3);
        QMat expect = monotone_chain(pts);
        if (expect.size() < 3) continue;
        Polytope p = Polytope::hull(2, pts);
        CHECK(p.vertices() == expect);
    }
}

TEST_CASE("property: H/V round trip and membership") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> dim(1, 4), cnt(1, 8);
    for (int it = 0; it < 120; ++it) {
        int n = dim(rng);
        QMat pts = random_points(rng, cnt(rng), n, 4, 2);
        Polytope p = Polytope::hull(n, pts);
        for (auto& x : pts) CHECK(p.contains(x));
        for (auto& x : p.vertices()) CHECK(std::find(pts.begin(), pts.end(), x) != pts.end());
        CHECK(Polytope::hull(n, p.vertices()) == p);
        CHECK(Polytope::from_h(n, p.equalities(), p.inequalities()) == p);
    }
}

TEST_CASE("property: local polyhedrality at vertices") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> w(0, 5);
    for (int it = 0; it < 100; ++it) {
        QMat pts = random_points(rng, 6, 3, 4, 1);
        Polytope p = Polytope::hull(3, pts);
        for (auto& x : p.vertices()) {
            Cone c = tangent_cone(p, x);
            if (p.dim() > 0) CHECK(c.pointed());
            // convex combinations leaning on x stay in the cone
            for (auto& y : p.vertices()) {
                Q t = qq(w(rng) + 1, 7);
                CHECK(c.contains(t * (y - x)));
            }
        }
    }
}
