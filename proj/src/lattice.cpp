#include "alcove/exact.hpp"

#include <algorithm>

namespace alcove {

namespace {

Z fdiv(const Z& a, const Z& b) {
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy_row(ZVec& dst, const Z& f, const ZVec& src) {
    if (f == 0) return;
    for (size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
}

// Row echelon over Z on the first ncols columns by unimodular row moves.
// Returns the number of pivot rows; rows below are zero on those columns.
int echelon(ZMat& a, int ncols, bool reduce_above) {
    int m = int(a.size());
    int r = 0;
    for (int c = 0; c < ncols && r < m; ++c) {
        for (;;) {
            int p = -1;
            for (int i = r; i < m; ++i)
                if (a[i][c] != 0 && (p < 0 || abs(a[i][c]) < abs(a[p][c]))) p = i;
            if (p < 0) break;
            std::swap(a[r], a[p]);
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                axpy_row(a[i], fdiv(a[i][c], a[r][c]), a[r]);
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (auto& x : a[r]) x = -x;
        if (reduce_above)
            for (int i = 0; i < r; ++i) axpy_row(a[i], fdiv(a[i][c], a[r][c]), a[r]);
        ++r;
    }
    return r;
}

}  // namespace

ZMat hnf(ZMat a) {
    if (a.empty()) return a;
    int r = echelon(a, int(a[0].size()), true);
    a.resize(r);
    return a;
}

ZMat integer_kernel(const ZMat& a, int ncols) {
    int m = int(a.size());
    ZMat aug(m, ZVec(ncols + m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
        aug[i][ncols + i] = 1;
    }
    int r = echelon(aug, ncols, false);
    ZMat ker;
    for (int i = r; i < m; ++i) ker.emplace_back(aug[i].begin() + ncols, aug[i].end());
    return hnf(ker);
}

ZVec smith_diagonal(ZMat a) {
    int m = int(a.size());
    int n = m ? int(a[0].size()) : 0;
    ZVec diag;
    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
            if (pi < 0) goto finish;
            std::swap(a[t], a[pi]);
            for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                Z f = fdiv(a[i][t], a[t][t]);
                axpy_row(a[i], f, a[t]);
                if (a[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                Z f = fdiv(a[t][j], a[t][t]);
                if (f != 0)
                    for (int i = 0; i < m; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot must divide the rest; otherwise fold an offending row in.
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) { bad = i; break; }
            if (bad < 0) break;
            for (int j = 0; j < n; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
finish:
    return diag;
}

bool AbelianGroup::finite() const {
    return std::none_of(factors.begin(), factors.end(), [](const Z& z) { return z == 0; });
}

Z AbelianGroup::order() const {
    Z o = 1;
    for (auto& f : factors) o *= f;
    return o;
}

std::string AbelianGroup::str() const {
    if (factors.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " + ";
        s += factors[i] == 0 ? "Z" : "Z/" + factors[i].get_str();
    }
    return s;
}

AbelianGroup group_from_diagonal(const ZVec& diag, int free_rank) {
    AbelianGroup g;
    for (auto& d : diag)
        if (d != 1) g.factors.push_back(d);
    for (int i = 0; i < free_rank; ++i) g.factors.push_back(0);
    return g;
}

Lattice::Lattice(int ambient_dim, const QMat& generators) : n_(ambient_dim) {
    Z d = 1;
    for (auto& g : generators) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), lcm_denominators(g).get_mpz_t());
    ZMat m;
    for (auto& g : generators) {
        if (int(g.size()) != n_) throw Error("Dimension", "generator length differs from ambient dimension");
        ZVec row(n_);
        for (int j = 0; j < n_; ++j) row[j] = Q(g[j] * d).get_num();
        m.push_back(std::move(row));
    }
    ZMat h = hnf(m);
    Z c = d;
    for (auto& row : h)
        for (auto& x : row) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    den_ = d / c;
    for (auto& row : h) {
        QVec q(n_);
        for (int j = 0; j < n_; ++j) {
            q[j] = Q(row[j] / c, den_);
            q[j].canonicalize();
        }
        basis_.push_back(std::move(q));
    }
}

Lattice Lattice::standard(int n) { return Lattice(n, identity(n)); }

std::optional<ZVec> Lattice::coords(const QVec& v) const {
    if (basis_.empty()) {
        if (is_zero(v)) return ZVec{};
        return std::nullopt;
    }
    auto c = solve(transpose(basis_), v, rank());
    if (!c) return std::nullopt;
    ZVec out;
    for (auto& x : *c) {
        if (x.get_den() != 1) return std::nullopt;
        out.push_back(x.get_num());
    }
    return out;
}

bool Lattice::contains(const Lattice& o) const {
    for (auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

Lattice Lattice::operator+(const Lattice& o) const {
    QMat g = basis_;
    g.insert(g.end(), o.basis_.begin(), o.basis_.end());
    return Lattice(n_, g);
}

Lattice Lattice::intersect(const Lattice& o) const {
    Z d;
    mpz_lcm(d.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    ZMat stacked;
    for (auto& b : basis_) {
        ZVec r(n_);
        for (int j = 0; j < n_; ++j) r[j] = Q(b[j] * d).get_num();
        stacked.push_back(r);
    }
    for (auto& b : o.basis_) {
        ZVec r(n_);
        for (int j = 0; j < n_; ++j) r[j] = -Q(b[j] * d).get_num();
        stacked.push_back(r);
    }
    ZMat ker = integer_kernel(stacked, n_);
    QMat gens;
    for (auto& y : ker) {
        QVec v = zeros(n_);
        for (int i = 0; i < rank(); ++i) v = v + Q(y[i]) * basis_[i];
        gens.push_back(v);
    }
    return Lattice(n_, gens);
}

Lattice Lattice::annihilated_by(const QMat& covectors) const {
    if (basis_.empty() || covectors.empty()) return *this;
    // Coordinates c with sum c_i f(b_i) = 0 for every f.
    ZMat m(rank(), ZVec(covectors.size()));
    // Clear denominators column by column.
    for (size_t j = 0; j < covectors.size(); ++j) {
        QVec col;
        for (int i = 0; i < rank(); ++i) col.push_back(dot(covectors[j], basis_[i]));
        Z d = lcm_denominators(col);
        for (int i = 0; i < rank(); ++i) m[i][j] = Q(col[i] * d).get_num();
    }
    ZMat ker = integer_kernel(m, int(covectors.size()));
    QMat gens;
    for (auto& y : ker) {
        QVec v = zeros(n_);
        for (int i = 0; i < rank(); ++i) v = v + Q(y[i]) * basis_[i];
        gens.push_back(v);
    }
    return Lattice(n_, gens);
}

Lattice Lattice::scaled(const Q& s) const {
    QMat g;
    for (auto& b : basis_) g.push_back(s * b);
    return Lattice(n_, g);
}

Lattice Lattice::dual(const InnerProduct& ip) const {
    int r = rank();
    if (r == 0) return *this;
    QMat gram(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gram[i][j] = ip(basis_[i], basis_[j]);
    QMat inv = inverse(gram);
    return Lattice(n_, matmul(inv, basis_));
}

Lattice Lattice::project(const QMat& sub, const InnerProduct& ip) const {
    QMat g;
    for (auto& b : basis_) g.push_back(orthogonal_project(b, sub, ip));
    return Lattice(n_, g);
}

AbelianGroup quotient(const Lattice& small, const Lattice& big) {
    if (small.ambient_dim() != big.ambient_dim())
        throw Error("NotSublattice", "lattices live in different ambient spaces");
    ZMat m;
    for (auto& b : small.basis()) {
        auto c = big.coords(b);
        if (!c) throw Error("NotSublattice", "generator " + str(b) + " is not in the larger lattice");
        m.push_back(*c);
    }
    ZVec diag = smith_diagonal(m);
    return group_from_diagonal(diag, big.rank() - int(diag.size()));
}

}  // namespace alcove
