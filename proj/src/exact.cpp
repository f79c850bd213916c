#include "alcove/exact.hpp"

#include <sstream>

namespace alcove {

Q parse_q(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw Error("Parse", "empty rational");
    auto bad = [&] { return Error("Parse", "malformed rational '" + std::string(s) + "'"); };
    auto dot_pos = t.find('.');
    if (dot_pos != std::string::npos) {
        if (t.find('/') != std::string::npos) throw bad();
        std::string ip = t.substr(0, dot_pos), fp = t.substr(dot_pos + 1);
        bool neg = !ip.empty() && (ip[0] == '-' || ip[0] == '+');
        bool minus = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (c < '0' || c > '9') throw bad();
        Z den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        Z num(ip + fp, 10);
        Q q(num, den);
        q.canonicalize();
        return minus ? Q(-q) : q;
    }
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok) throw bad();
    }
    if (t[0] == '+') t = t.substr(1);
    auto slash = t.find('/');
    if (slash != std::string::npos &&
        (slash == 0 || slash + 1 == t.size() || t.find('/', slash + 1) != std::string::npos))
        throw bad();
    if (t == "-") throw bad();
    Q q;
    if (q.set_str(t, 10) != 0) throw bad();
    if (q.get_den() == 0) throw Error("Parse", "zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

std::string str(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

std::string str(const QVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
    return out + ")";
}

QVec zeros(int n) { return QVec(n, Q(0)); }

QVec unit(int n, int i) {
    QVec v = zeros(n);
    v[i] = 1;
    return v;
}

QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec operator-(const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVec operator*(const Q& s, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Q dot(const QVec& a, const QVec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

Z lcm_denominators(const QVec& v) {
    Z d = 1;
    for (auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

ZVec primitive(const QVec& v) {
    Z d = lcm_denominators(v);
    ZVec r(v.size());
    Z g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Q t = v[i] * d;
        r[i] = t.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
    }
    if (g != 0)
        for (auto& x : r) x /= g;
    return r;
}

QVec to_q(const ZVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

int cols(const QMat& a, int fallback) { return a.empty() ? fallback : int(a[0].size()); }

QMat transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat t(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

QMat matmul(const QMat& a, const QMat& b) {
    if (a.empty()) return {};
    size_t m = b.empty() ? 0 : b[0].size();
    QMat r(a.size(), QVec(m));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QVec matvec(const QMat& a, const QVec& v) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
    return r;
}

QMat identity(int n) {
    QMat r(n, QVec(n));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Rref rref(QMat a) {
    Rref out;
    int m = int(a.size());
    int n = m ? int(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Q inv = 1 / a[r][c];
        for (int j = c; j < n; ++j) a[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Q f = a[i][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.m = std::move(a);
    return out;
}

int rank(const QMat& a) { return int(rref(a).pivots.size()); }

QMat row_basis(const QMat& a) { return rref(a).m; }

QMat nullspace(const QMat& a, int ncols) {
    Rref r = rref(a);
    std::vector<bool> piv(ncols, false);
    for (int p : r.pivots) piv[p] = true;
    QMat out;
    for (int f = 0; f < ncols; ++f) {
        if (piv[f]) continue;
        QVec v = zeros(ncols);
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<QVec> solve(const QMat& a, const QVec& b, int ncols) {
    QMat aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref r = rref(aug);
    QVec x = zeros(ncols);
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == ncols) return std::nullopt;
        x[r.pivots[i]] = r.m[i][ncols];
    }
    return x;
}

Q det(QMat a) {
    int n = int(a.size());
    Q d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) { std::swap(a[p], a[c]); d = -d; }
        d *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Q f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

QMat inverse(const QMat& a) {
    int n = int(a.size());
    QMat aug = a;
    for (int i = 0; i < n; ++i) {
        aug[i].resize(2 * n);
        aug[i][n + i] = 1;
    }
    Rref r = rref(aug);
    if (int(r.pivots.size()) < n || r.pivots[n - 1] >= n) throw Error("Singular", "matrix is singular");
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = r.m[i][n + j];
    return inv;
}

InnerProduct::InnerProduct(QMat gram) : g_(std::move(gram)) {
    int n = int(g_.size());
    for (auto& row : g_)
        if (int(row.size()) != n) throw Error("NotPositiveDefinite", "Gram matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (g_[i][j] != g_[j][i]) throw Error("NotPositiveDefinite", "Gram matrix is not symmetric");
    // Sylvester: every leading principal minor positive.
    for (int k = 1; k <= n; ++k) {
        QMat m(k, QVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = g_[i][j];
        if (det(m) <= 0)
            throw Error("NotPositiveDefinite",
                        "leading minor of order " + std::to_string(k) + " is not positive");
    }
    ginv_ = n ? inverse(g_) : QMat{};
}

InnerProduct InnerProduct::standard(int n) { return InnerProduct(identity(n)); }

InnerProduct InnerProduct::block_diagonal(const std::vector<InnerProduct>& blocks) {
    int n = 0;
    for (auto& b : blocks) n += b.dim();
    QMat g(n, QVec(n));
    int off = 0;
    for (auto& b : blocks) {
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) g[off + i][off + j] = b.gram()[i][j];
        off += b.dim();
    }
    return InnerProduct(g);
}

Q InnerProduct::operator()(const QVec& a, const QVec& b) const { return dot(a, matvec(g_, b)); }
QVec InnerProduct::lower(const QVec& v) const { return matvec(g_, v); }
QVec InnerProduct::raise(const QVec& a) const { return matvec(ginv_, a); }

InnerProduct InnerProduct::scaled(const Q& s) const {
    QMat g = g_;
    for (auto& r : g)
        for (auto& x : r) x *= s;
    return InnerProduct(g);
}

QVec orthogonal_project(const QVec& v, const QMat& subspace, const InnerProduct& ip) {
    QMat b = row_basis(subspace);
    if (b.empty()) return zeros(int(v.size()));
    int k = int(b.size());
    QMat gram(k, QVec(k));
    QVec rhs(k);
    for (int i = 0; i < k; ++i) {
        rhs[i] = ip(b[i], v);
        for (int j = 0; j < k; ++j) gram[i][j] = ip(b[i], b[j]);
    }
    QVec c = *solve(gram, rhs, k);
    QVec out = zeros(int(v.size()));
    for (int i = 0; i < k; ++i) out = out + c[i] * b[i];
    return out;
}

}  // namespace alcove
