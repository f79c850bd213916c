#include "alcove/roots.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace alcove::roots {

namespace {

struct Raw {
    InnerProduct ip;
    std::vector<AffineFunctional> eqs, simple;
};

AffineFunctional lin(QVec a) { return AffineFunctional::linear(std::move(a)); }

QVec ev(int n, std::initializer_list<std::pair<int, long>> entries) {
    QVec v = zeros(n);
    for (auto [i, c] : entries) v[i] = c;
    return v;
}

void check_rank(CartanType t) {
    bool ok = false;
    switch (t.family) {
        case 'A': ok = t.rank >= 1; break;
        case 'B': case 'C': ok = t.rank >= 2; break;
        case 'D': ok = t.rank >= 3; break;
        case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
        case 'F': ok = t.rank == 4; break;
        case 'G': ok = t.rank == 2; break;
        default: break;
    }
    if (!ok) throw Error("InvalidType", "no root system of type " + t.str());
}

Raw finite_raw(CartanType t) {
    check_rank(t);
    int r = t.rank;
    std::vector<AffineFunctional> eqs, s;
    int n = r;
    switch (t.family) {
        case 'A':
            n = r + 1;
            eqs.push_back(lin(QVec(n, Q(1))));
            for (int i = 0; i < r; ++i) s.push_back(lin(ev(n, {{i, 1}, {i + 1, -1}})));
            break;
        case 'B': case 'C': case 'D':
            for (int i = 0; i + 1 < r; ++i) s.push_back(lin(ev(n, {{i, 1}, {i + 1, -1}})));
            if (t.family == 'B') s.push_back(lin(ev(n, {{r - 1, 1}})));
            if (t.family == 'C') s.push_back(lin(ev(n, {{r - 1, 2}})));
            if (t.family == 'D') s.push_back(lin(ev(n, {{r - 2, 1}, {r - 1, 1}})));
            break;
        case 'E': {
            n = 8;
            QVec a1(8, qq(-1, 2));
            a1[0] = a1[7] = qq(1, 2);
            s.push_back(lin(a1));
            s.push_back(lin(ev(8, {{0, 1}, {1, 1}})));
            for (int i = 0; i + 2 < r; ++i) s.push_back(lin(ev(8, {{i, -1}, {i + 1, 1}})));
            if (r <= 7) eqs.push_back(lin(ev(8, {{6, 1}, {7, 1}})));
            if (r == 6) eqs.push_back(lin(ev(8, {{5, 1}, {6, -1}})));
            break;
        }
        case 'F':
            s.push_back(lin(ev(4, {{1, 1}, {2, -1}})));
            s.push_back(lin(ev(4, {{2, 1}, {3, -1}})));
            s.push_back(lin(ev(4, {{3, 1}})));
            s.push_back(lin(QVec{qq(1, 2), qq(-1, 2), qq(-1, 2), qq(-1, 2)}));
            break;
        case 'G':
            n = 3;
            eqs.push_back(lin(QVec(3, Q(1))));
            s.push_back(lin(ev(3, {{0, -2}, {1, 1}, {2, 1}})));
            s.push_back(lin(ev(3, {{0, 1}, {1, -1}})));
            break;
    }
    return {InnerProduct::standard(n), eqs, s};
}

std::vector<QVec> linear_parts(const std::vector<AffineFunctional>& fs) {
    std::vector<QVec> out;
    for (auto& f : fs) out.push_back(f.a);
    return out;
}

bool dominant(const QVec& b, const std::vector<QVec>& simple, const InnerProduct& ip) {
    QVec g = ip.raise(b);
    for (auto& s : simple)
        if (dot(s, g) < 0) return false;
    return true;
}

Q norm2_covector(const QVec& a, const InnerProduct& ip) { return dot(a, ip.raise(a)); }

QVec highest_root(const std::vector<QVec>& simple, const InnerProduct& ip) {
    QVec best;
    Q bn = -1;
    for (auto& b : finite_roots(simple, ip)) {
        if (!dominant(b, simple, ip)) continue;
        Q nb = norm2_covector(b, ip);
        if (nb > bn) best = b, bn = nb;
    }
    return best;
}

Raw untwisted_raw(CartanType t) {
    Raw f = finite_raw(t);
    QVec theta = highest_root(linear_parts(f.simple), f.ip);
    f.simple.insert(f.simple.begin(), AffineFunctional{Q(1), -theta});
    return f;
}

std::vector<int> default_automorphism(CartanType t, int order) {
    int N = t.rank;
    std::vector<int> p(N);
    std::iota(p.begin(), p.end(), 0);
    if (order == 2 && t.family == 'A' && N >= 2) {
        for (int i = 0; i < N; ++i) p[i] = N - 1 - i;
    } else if (order == 2 && t.family == 'D') {
        std::swap(p[N - 2], p[N - 1]);
    } else if (order == 2 && t.family == 'E' && N == 6) {
        std::swap(p[0], p[5]);
        std::swap(p[2], p[4]);
    } else if (order == 3 && t.family == 'D' && N == 4) {
        p = {2, 1, 3, 0};
    } else {
        throw Error("InvalidTwist", "no diagram automorphism of order " + std::to_string(order) + " on " + t.str());
    }
    return p;
}

Raw twisted_raw(CartanType t, const TwistSpec& tw) {
    int r = tw.order;
    if (r != 2 && r != 3) throw Error("InvalidTwist", "twist order must be 2 or 3");
    if (r == 3 && !(t.family == 'D' && t.rank == 4)) throw Error("InvalidTwist", "order 3 only exists for D4");
    Raw base = finite_raw(t);
    int N = t.rank, n = base.ip.dim();
    std::vector<int> sigma = tw.perm.empty() ? default_automorphism(t, r) : tw.perm;
    if (int(sigma.size()) != N) throw Error("InvalidTwist", "permutation has the wrong length");
    {
        std::vector<int> sorted = sigma;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < N; ++i)
            if (sorted[i] != i) throw Error("InvalidTwist", "not a permutation");
    }
    QMat A = cartan_matrix(base.simple, base.ip);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (A[sigma[i]][sigma[j]] != A[i][j]) throw Error("InvalidTwist", "permutation is not a diagram automorphism");
    auto power = [&](int k) {
        std::vector<int> q(N);
        for (int i = 0; i < N; ++i) {
            int j = i;
            for (int s = 0; s < k; ++s) j = sigma[j];
            q[i] = j;
        }
        return q;
    };
    std::vector<int> id(N);
    std::iota(id.begin(), id.end(), 0);
    if (power(r) != id || power(1) == id) throw Error("InvalidTwist", "automorphism does not have order " + std::to_string(r));

    // The automorphism as a linear map: alpha_i-bar -> alpha_sigma(i)-bar,
    // identity on the normal directions of the equalities.
    QMat src, dst;
    for (int i = 0; i < N; ++i) src.push_back(base.simple[i].a), dst.push_back(base.simple[sigma[i]].a);
    for (auto& e : base.eqs) src.push_back(e.a), dst.push_back(e.a);
    QMat T = matmul(transpose(dst), inverse(transpose(src)));
    QMat fixed_eqs;
    for (int i = 0; i < n; ++i) {
        QVec row = T[i];
        row[i] -= 1;
        fixed_eqs.push_back(row);
    }
    for (auto& e : base.eqs) fixed_eqs.push_back(e.a);
    QMat fixed = nullspace(fixed_eqs, n);
    int d = int(fixed.size());

    // Coordinates on the fixed space: the earliest ambient coordinates that
    // restrict to a basis of its dual.
    std::vector<int> coord;
    QMat chosen;
    for (int i = 0; i < n && int(coord.size()) < d; ++i) {
        QMat trial = chosen;
        QVec col;
        for (auto& b : fixed) col.push_back(b[i]);
        trial.push_back(col);
        if (rank(trial) > int(chosen.size())) chosen = trial, coord.push_back(i);
    }
    // f_k: the fixed vector with x_{coord l} = delta_kl.
    QMat R(d, QVec(d));
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) R[j][l] = fixed[j][coord[l]];
    QMat C = inverse(R);
    QMat f(d, zeros(n));
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) f[k] = f[k] + C[k][j] * fixed[j];

    QMat gram(d, QVec(d));
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) gram[k][l] = dot(f[k], f[l]);
    InnerProduct ip(gram);
    auto restrict_to = [&](const QVec& b) {
        QVec out(d);
        for (int k = 0; k < d; ++k) out[k] = dot(b, f[k]);
        return out;
    };

    std::vector<int> reps;
    if (tw.perm.empty() && t.family == 'E') {
        reps = {0, 2, 3, 1};
    } else {
        std::vector<bool> seen(N);
        for (int i = 0; i < N; ++i) {
            if (seen[i]) continue;
            reps.push_back(i);
            for (int j = i; !seen[j]; j = sigma[j]) seen[j] = true;
        }
    }
    std::vector<QVec> simple;
    for (int i : reps) simple.push_back(restrict_to(base.simple[i].a));

    std::set<QVec> restricted;
    for (auto& b : finite_roots(linear_parts(base.simple), base.ip)) restricted.insert(restrict_to(b));
    bool longest = t.family == 'A' && N % 2 == 0;
    QVec theta;
    Q tn;
    int ties = 0;
    for (auto& b : restricted) {
        if (!dominant(b, simple, ip)) continue;
        Q nb = norm2_covector(b, ip);
        if (theta.empty() || (longest ? nb > tn : nb < tn)) {
            theta = b, tn = nb, ties = 1;
        } else if (nb == tn) {
            ++ties;
        }
    }
    if (ties != 1) throw Error("InvalidTwist", "no unique choice of theta");

    Raw out{ip, {}, {}};
    out.simple.push_back(AffineFunctional{qq(1, r), -theta});
    for (auto& s : simple) out.simple.push_back(lin(s));
    return out;
}

bool isomorphic(const QMat& a, const QMat& b) {
    int k = int(a.size());
    if (int(b.size()) != k) return false;
    std::vector<int> p(k, -1);
    std::vector<bool> used(k);
    auto sig = [](const QMat& m, int i) {
        std::vector<Q> row = m[i];
        std::vector<Q> col;
        for (auto& r : m) col.push_back(r[i]);
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        return std::make_pair(row, col);
    };
    std::vector<std::pair<std::vector<Q>, std::vector<Q>>> sa(k), sb(k);
    for (int i = 0; i < k; ++i) sa[i] = sig(a, i), sb[i] = sig(b, i);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int c = 0; c < k; ++c) {
            if (used[c] || sa[c] != sb[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = a[c][p[j]] == b[i][j] && a[p[j]][c] == b[j][i];
            if (!ok) continue;
            p[i] = c, used[c] = true;
            if (self(self, i + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

std::string affine_name(CartanType t, int r) { return t.str() + "^(" + std::to_string(r) + ")"; }

std::vector<std::pair<std::string, QMat>> make_candidates(int k, bool affine) {
    std::vector<std::pair<std::string, QMat>> out;
    auto add = [&](const std::string& name, const Raw& raw) {
        out.emplace_back(name, cartan_matrix(raw.simple, raw.ip));
    };
    if (!affine) {
        add("A" + std::to_string(k), finite_raw({'A', k}));
        if (k >= 2) add("B" + std::to_string(k), finite_raw({'B', k}));
        if (k >= 3) add("C" + std::to_string(k), finite_raw({'C', k}));
        if (k >= 4) add("D" + std::to_string(k), finite_raw({'D', k}));
        if (k >= 6 && k <= 8) add("E" + std::to_string(k), finite_raw({'E', k}));
        if (k == 4) add("F4", finite_raw({'F', 4}));
        if (k == 2) add("G2", finite_raw({'G', 2}));
        return out;
    }
    int l = k - 1;
    if (l < 1) return out;
    auto un = [&](char fam, int rk) { add(affine_name({fam, rk}, 1), untwisted_raw({fam, rk})); };
    auto tw = [&](char fam, int rk, int r) { add(affine_name({fam, rk}, r), twisted_raw({fam, rk}, {r, {}, 1})); };
    un('A', l);
    if (l >= 3) un('B', l);
    if (l >= 2) un('C', l);
    if (l >= 4) un('D', l);
    if (l >= 6 && l <= 8) un('E', l);
    if (l == 4) un('F', 4);
    if (l == 2) un('G', 2);
    tw('A', 2 * l, 2);
    if (l >= 3) tw('A', 2 * l - 1, 2);
    if (l >= 2) tw('D', l + 1, 2);
    if (l == 4) tw('E', 6, 2);
    if (l == 2) tw('D', 4, 3);
    return out;
}

const std::vector<std::pair<std::string, QMat>>& candidates(int k, bool affine) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::vector<std::pair<std::string, QMat>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, affine);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_candidates(k, affine)).first;
    return it->second;
}

QMat submatrix(const QMat& m, const std::vector<int>& idx) {
    QMat out(idx.size(), QVec(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) out[i][j] = m[idx[i]][idx[j]];
    return out;
}

AffineRootSystem wrap(const Raw& raw, FactorSpec spec) {
    AffineRootSystem s(raw.ip, raw.eqs, raw.simple);
    s.set_spec({std::move(spec)});
    return s;
}

}  // namespace

std::string FactorSpec::str() const {
    std::ostringstream os;
    os << type.str();
    if (twist.order > 1)
        os << " twist " << twist.order;
    else if (affine)
        os << " affine";
    if (!twist.perm.empty()) {
        os << " perm ";
        for (size_t i = 0; i < twist.perm.size(); ++i) os << (i ? "," : "") << twist.perm[i] + 1;
    }
    if (twist.m > 1) os << " cyclic " << twist.m;
    if (scale != 1) os << " scale " << alcove::str(scale);
    return os.str();
}

FactorSpec parse_factor(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tok;
    for (std::string w; is >> w;) tok.push_back(w);
    if (tok.empty()) throw Error("Parse", "empty root system spec");
    FactorSpec f;
    size_t i = 0;
    std::string head = tok[i++];
    f.type.family = char(std::toupper(static_cast<unsigned char>(head[0])));
    std::string digits = head.substr(1);
    if (digits.empty()) {
        if (i >= tok.size()) throw Error("Parse", "missing rank in '" + text + "'");
        digits = tok[i++];
    }
    try {
        size_t used = 0;
        f.type.rank = std::stoi(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
        throw Error("Parse", "bad rank '" + digits + "'");
    }
    auto need = [&](const std::string& key) -> std::string {
        if (i >= tok.size()) throw Error("Parse", "missing value after '" + key + "'");
        return tok[i++];
    };
    auto to_int = [&](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw Error("Parse", "bad integer '" + s + "'");
        }
    };
    while (i < tok.size()) {
        std::string key = tok[i++];
        if (key == "affine") {
            f.affine = true;
        } else if (key == "twist") {
            f.twist.order = to_int(need(key));
            f.affine = true;
        } else if (key == "perm") {
            std::string list = need(key);
            std::replace(list.begin(), list.end(), ',', ' ');
            std::istringstream ls(list);
            for (std::string w; ls >> w;) f.twist.perm.push_back(to_int(w) - 1);
        } else if (key == "cyclic") {
            f.twist.m = to_int(need(key));
        } else if (key == "scale") {
            f.scale = parse_q(need(key));
            if (f.scale <= 0) throw Error("Parse", "scale must be positive");
        } else {
            throw Error("Parse", "unknown keyword '" + key + "'");
        }
    }
    return f;
}

WeylElement WeylElement::identity(int n) { return {alcove::identity(n), zeros(n)}; }

WeylElement WeylElement::reflection(const AffineFunctional& alpha, const InnerProduct& ip) {
    if (alpha.constant()) throw Error("ConstantFunctional", "reflection in a constant functional");
    int n = alpha.dim();
    QVec cv = coroot(alpha.a, ip);
    WeylElement w = identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.lin[i][j] -= cv[i] * alpha.a[j];
    w.trans = -alpha.c * cv;
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    return {matmul(lin, o.lin), matvec(lin, o.trans) + trans};
}

WeylElement WeylElement::inverse() const {
    QMat inv = alcove::inverse(lin);
    return {inv, -matvec(inv, trans)};
}

bool WeylElement::preserves(const InnerProduct& ip) const {
    return matmul(matmul(transpose(lin), ip.gram()), lin) == ip.gram();
}

QMat cartan_matrix(const std::vector<AffineFunctional>& roots, const InnerProduct& ip) {
    int k = int(roots.size());
    QMat m(k, QVec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = coroot_pairing(roots[i].a, roots[j].a, ip);
    return m;
}

std::vector<std::vector<int>> dynkin_components(const QMat& cartan) {
    int k = int(cartan.size());
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s}, stack{s};
        comp[s] = int(out.size());
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (comp[j] < 0 && (cartan[i][j] != 0 || cartan[j][i] != 0)) {
                    comp[j] = comp[s];
                    members.push_back(j);
                    stack.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

std::string identify_component(const QMat& cartan, bool affine) {
    for (auto& [name, m] : candidates(int(cartan.size()), affine))
        if (isomorphic(cartan, m)) return name;
    return "";
}

std::string finite_type_name(const std::vector<QVec>& simple, const InnerProduct& ip) {
    std::vector<AffineFunctional> fs;
    for (auto& a : simple) fs.push_back(lin(a));
    QMat c = cartan_matrix(fs, ip);
    std::string out;
    for (auto& comp : dynkin_components(c)) {
        std::string t = identify_component(submatrix(c, comp), false);
        if (t.empty()) t = "?";
        out += (out.empty() ? "" : "x") + t;
    }
    return out;
}

AffineRootSystem::AffineRootSystem(InnerProduct ip, std::vector<AffineFunctional> equalities,
                                   std::vector<AffineFunctional> simple)
    : ip_(std::move(ip)), eqs_(std::move(equalities)) {
    int n = ip_.dim();
    QMat eq_rows;
    for (auto& e : eqs_) {
        if (e.dim() != n) throw Error("DimensionMismatch", "equality has the wrong dimension");
        eq_rows.push_back(e.a);
    }
    space_ = nullspace(eq_rows, n);
    for (auto& s : simple) {
        if (s.dim() != n) throw Error("DimensionMismatch", "root has the wrong dimension");
        AffineFunctional f = normalize(s);
        if (f.constant()) throw Error("ConstantFunctional", "constant functional " + s.str() + " on the translation space");
        simple_.push_back(f);
    }
    QMat c = roots::cartan_matrix(simple_, ip_);
    int k = size();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (c[i][j].get_den() != 1)
                throw Error("NotCrystallographic", "non-integral Cartan entry between " + simple_[i].str() + " and " + simple_[j].str());
            if (i != j && c[i][j] > 0)
                throw Error("NotSimpleSystem", "acute angle between " + simple_[i].str() + " and " + simple_[j].str());
        }
    labels_.assign(k, 0);
    comps_ = dynkin_components(c);
    for (auto& comp : comps_) {
        QMat cols_m(n, QVec(comp.size()));
        for (size_t j = 0; j < comp.size(); ++j) {
            QVec g = ip_.raise(simple_[comp[j]].a);
            for (int i = 0; i < n; ++i) cols_m[i][j] = g[i];
        }
        QMat ker = nullspace(cols_m, int(comp.size()));
        if (ker.size() > 1) throw Error("NotAffineRootSystem", "gradients of one component span too little");
        bool aff = ker.size() == 1;
        if (aff) {
            ZVec p = primitive(ker[0]);
            if (p[0] < 0)
                for (auto& x : p) x = -x;
            Q level = 0;
            for (size_t j = 0; j < comp.size(); ++j) {
                if (p[j] <= 0) throw Error("NotAffineRootSystem", "relation among gradients has mixed signs");
                labels_[comp[j]] = p[j].get_si();
                level += Q(p[j]) * simple_[comp[j]].c;
            }
            if (level <= 0) throw Error("EmptyAlcove", "the simple roots have no common positive point");
        }
        std::string t = identify_component(submatrix(c, comp), aff);
        if (t.empty()) throw Error("UnknownType", "component not in the classification");
        comp_affine_.push_back(aff);
        comp_types_.push_back(t);
    }
    alcove_ = Polytope::from_h(n, eqs_, simple_);
}

AffineFunctional normalize_on(const InnerProduct& ip, const std::vector<AffineFunctional>& eqs,
                              const AffineFunctional& f) {
    if (eqs.empty()) return f;
    int n = ip.dim();
    QMat rows;
    for (auto& e : eqs) rows.push_back(e.a);
    QVec g = orthogonal_project(ip.raise(f.a), nullspace(rows, n), ip);
    QVec a = ip.lower(g);
    // f.a - a = sum t_k eq_k.a, and eq_k.a x = -eq_k.c on the subspace
    auto t = solve(transpose(rows), f.a - a, int(rows.size()));
    if (!t) throw Error("Internal", "normal component outside the span of the equalities");
    Q c = f.c;
    for (size_t k = 0; k < eqs.size(); ++k) c -= (*t)[k] * eqs[k].c;
    return {c, a};
}

AffineFunctional AffineRootSystem::normalize(const AffineFunctional& f) const { return normalize_on(ip_, eqs_, f); }

bool AffineRootSystem::in_space(const QVec& x) const {
    for (auto& e : eqs_)
        if (e(x) != 0) return false;
    return true;
}

bool AffineRootSystem::is_affine() const {
    return std::any_of(comp_affine_.begin(), comp_affine_.end(), [](bool b) { return b; });
}

std::string AffineRootSystem::type_name() const {
    std::string out;
    for (auto& t : comp_types_) out += (out.empty() ? "" : "x") + t;
    return out;
}

QMat AffineRootSystem::cartan_matrix() const { return roots::cartan_matrix(simple_, ip_); }

std::vector<QVec> finite_roots(const std::vector<QVec>& simple, const InnerProduct& ip) {
    std::set<QVec> seen;
    std::vector<QVec> order, frontier;
    for (auto& s : simple)
        for (const QVec& v : {s, QVec(-s)})
            if (seen.insert(v).second) order.push_back(v), frontier.push_back(v);
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (auto& b : frontier)
            for (auto& s : simple) {
                QVec r = b - coroot_pairing(b, s, ip) * s;
                if (seen.insert(r).second) order.push_back(r), next.push_back(r);
            }
        frontier = std::move(next);
    }
    return order;
}

QVec coroot(const QVec& a, const InnerProduct& ip) {
    QVec g = ip.raise(a);
    return (Q(2) / dot(a, g)) * g;
}

QMat fundamental_weights(const std::vector<QVec>& simple, const InnerProduct& ip) {
    std::vector<AffineFunctional> fs;
    for (auto& a : simple) fs.push_back(lin(a));
    QMat ainv = inverse(cartan_matrix(fs, ip));
    int k = int(simple.size());
    QMat out;
    for (int i = 0; i < k; ++i) {
        QVec w = zeros(ip.dim());
        for (int j = 0; j < k; ++j) w = w + ainv[i][j] * ip.raise(simple[j]);
        out.push_back(w);
    }
    return out;
}

std::vector<std::vector<long>> labels(const AffineRootSystem& sys) {
    std::vector<std::vector<long>> out;
    if (!sys.is_affine()) return out;
    for (size_t c = 0; c < sys.components().size(); ++c) {
        std::vector<long> l;
        if (sys.component_affine(int(c)))
            for (int i : sys.components()[c]) l.push_back(sys.label_vector()[i]);
        out.push_back(l);
    }
    return out;
}

AffineRootSystem build_finite(CartanType t) { return wrap(finite_raw(t), {t, false, {}, 1}); }

std::vector<FactorSpec> irreducible_affine_specs(int max_rank) {
    std::vector<FactorSpec> out;
    auto add = [&](char f, int r, int order) {
        FactorSpec s;
        s.type = {f, r};
        s.affine = true;
        s.twist.order = order;
        out.push_back(s);
    };
    for (int l = 1; l <= max_rank; ++l) {
        add('A', l, 1);
        if (l >= 3) add('B', l, 1);
        if (l >= 2) add('C', l, 1);
        if (l >= 4) add('D', l, 1);
        if (l >= 6 && l <= 8) add('E', l, 1);
        if (l == 4) add('F', 4, 1);
        if (l == 2) add('G', 2, 1);
        add('A', 2 * l, 2);
        if (l >= 3) add('A', 2 * l - 1, 2);
        if (l >= 2) add('D', l + 1, 2);
        if (l == 4) add('E', 6, 2);
        if (l == 2) add('D', 4, 3);
    }
    return out;
}

AffineRootSystem build_affine_untwisted(CartanType t) { return wrap(untwisted_raw(t), {t, true, {}, 1}); }

AffineRootSystem build_affine_twisted(CartanType t, const TwistSpec& tw) {
    if (tw.order == 1) return build_affine_untwisted(t);
    AffineRootSystem s = wrap(twisted_raw(t, tw), {t, true, {tw.order, tw.perm, 1}, 1});
    // A3 = D3, and its order-2 twist carries the D name
    std::string want = t.family == 'A' && t.rank == 3 && tw.order == 2 ? "D3^(2)" : affine_name(t, tw.order);
    if (s.type_name() != want) throw Error("InvalidTwist", "folding gave " + s.type_name() + " instead of " + want);
    return s;
}

AffineRootSystem fold_cyclic(const AffineRootSystem& base, int m) {
    if (m <= 0) throw Error("InvalidTwist", "cyclic factor must be positive");
    if (m == 1) return base;
    std::vector<AffineFunctional> s;
    for (auto& f : base.simple_roots()) s.push_back({f.c / m, f.a});
    AffineRootSystem out(base.ip().scaled(m), base.equalities(), s);
    std::vector<FactorSpec> spec = base.spec();
    for (auto& f : spec) f.twist.m *= m;
    out.set_spec(spec);
    return out;
}

AffineRootSystem build(const FactorSpec& f) { return product(std::vector<FactorSpec>{f}); }

AffineRootSystem product(const std::vector<FactorSpec>& factors) {
    std::vector<AffineRootSystem> parts;
    std::vector<Q> scales;
    for (auto& f : factors) {
        AffineRootSystem s;
        if (f.twist.order > 1)
            s = build_affine_twisted(f.type, f.twist);
        else if (f.affine)
            s = build_affine_untwisted(f.type);
        else
            s = build_finite(f.type);
        s = fold_cyclic(s, f.twist.m);
        parts.push_back(s);
        scales.push_back(f.scale);
    }
    return product(parts, scales);
}

AffineRootSystem product(const std::vector<AffineRootSystem>& parts, const std::vector<Q>& scales) {
    if (parts.size() != scales.size()) throw Error("DimensionMismatch", "one scale per factor");
    if (parts.size() == 1 && scales[0] == 1) return parts[0];
    int n = 0;
    for (auto& p : parts) n += p.ambient_dim();
    std::vector<InnerProduct> blocks;
    std::vector<AffineFunctional> eqs, simple;
    std::vector<FactorSpec> spec;
    int off = 0;
    auto pad = [&](const AffineFunctional& f) {
        QVec a = zeros(n);
        std::copy(f.a.begin(), f.a.end(), a.begin() + off);
        return AffineFunctional{f.c, a};
    };
    for (size_t i = 0; i < parts.size(); ++i) {
        if (scales[i] <= 0) throw Error("NotPositiveDefinite", "scales must be positive");
        blocks.push_back(parts[i].ip().scaled(scales[i]));
        for (auto& e : parts[i].equalities()) eqs.push_back(pad(e));
        for (auto& s : parts[i].simple_roots()) simple.push_back(pad(s));
        for (auto f : parts[i].spec()) {
            f.scale *= scales[i];
            spec.push_back(f);
        }
        off += parts[i].ambient_dim();
    }
    AffineRootSystem out(InnerProduct::block_diagonal(blocks), eqs, simple);
    out.set_spec(spec);
    return out;
}

FiniteSubsystem local_subsystem(const AffineRootSystem& sys, const QVec& x) {
    if (!sys.alcove().contains(x)) throw Error("NotInAlcove", "point " + str(x) + " is not in the alcove");
    FiniteSubsystem out;
    out.base = x;
    for (int i = 0; i < sys.size(); ++i)
        if (sys.simple_roots()[i](x) == 0) {
            out.simple.push_back(sys.simple_roots()[i]);
            out.simple_index.push_back(i);
        }
    std::set<AffineFunctional> seen;
    std::vector<AffineFunctional> frontier;
    for (auto& s : out.simple)
        for (const AffineFunctional& f : {s, AffineFunctional(-s)})
            if (seen.insert(f).second) frontier.push_back(f);
    while (!frontier.empty()) {
        std::vector<AffineFunctional> next;
        for (auto& b : frontier)
            for (auto& s : out.simple) {
                AffineFunctional r = reflect_functional(s, b, sys.ip());
                if (seen.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    out.roots.assign(seen.begin(), seen.end());
    return out;
}

Lattice root_lattice(const AffineRootSystem& sys) {
    QMat g;
    for (auto& s : sys.simple_roots()) g.push_back(sys.ip().raise(s.a));
    return Lattice(sys.ambient_dim(), g);
}

Lattice coroot_lattice(const AffineRootSystem& sys) {
    QMat g;
    for (auto& s : sys.simple_roots()) g.push_back(coroot(s.a, sys.ip()));
    return Lattice(sys.ambient_dim(), g);
}

Lattice weight_lattice(const AffineRootSystem& sys) { return coroot_lattice(sys).dual(sys.ip()); }

bool is_weight_lattice(const Lattice& l, const AffineRootSystem& sys) {
    const InnerProduct& ip = sys.ip();
    for (auto& s : sys.simple_roots())
        if (!l.contains(ip.raise(s.a))) return false;
    for (auto& b : finite_roots(linear_parts(sys.simple_roots()), ip)) {
        QVec cv = coroot(b, ip);
        for (auto& v : l.basis())
            if (ip(v, cv).get_den() != 1) return false;
    }
    return true;
}

CentralizerDatum centralizer_root_datum(const AffineRootSystem& sys, const Lattice& l, const QVec& x) {
    CentralizerDatum d{local_subsystem(sys, x), l, ""};
    d.type = finite_type_name(linear_parts(d.local.simple), sys.ip());
    return d;
}

}  // namespace alcove::roots
