#include "alcove/functional.hpp"

namespace alcove {

std::string AffineFunctional::str(const std::string& var) const {
    std::string out;
    if (c != 0) out = alcove::str(c);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Q m = abs(a[i]);
        std::string coef = m == 1 ? "" : (m.get_den() == 1 ? alcove::str(m) : "(" + alcove::str(m) + ")");
        std::string term = coef + var + std::to_string(i + 1);
        if (out.empty())
            out = (a[i] < 0 ? "-" : "") + term;
        else
            out += (a[i] < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Q coroot_pairing(const QVec& a, const QVec& b, const InnerProduct& ip) {
    QVec bb = ip.raise(b);
    Q nb = dot(b, bb);
    if (nb == 0) throw Error("ConstantFunctional", "coroot of a constant functional");
    return 2 * dot(a, bb) / nb;
}

QVec reflect(const AffineFunctional& alpha, const QVec& x, const InnerProduct& ip) {
    if (alpha.constant()) throw Error("ConstantFunctional", "reflection in a constant functional");
    QVec g = alpha.gradient(ip);
    Q s = 2 * alpha(x) / dot(alpha.a, g);
    return x - s * g;
}

AffineFunctional reflect_functional(const AffineFunctional& alpha, const AffineFunctional& beta,
                                    const InnerProduct& ip) {
    if (alpha.constant()) throw Error("ConstantFunctional", "reflection in a constant functional");
    return beta - coroot_pairing(beta.a, alpha.a, ip) * alpha;
}

}  // namespace alcove
