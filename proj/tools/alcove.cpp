#include "alcove/spherical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace alcove;
using namespace alcove::spherical;
using json = nlohmann::ordered_json;

namespace {

json q_json(const Q& q) { return str(q); }

json vec_json(const QVec& v) {
    json a = json::array();
    for (auto& q : v) a.push_back(q_json(q));
    return a;
}

json functional_json(const AffineFunctional& f) {
    return {{"text", f.str()}, {"constant", q_json(f.c)}, {"gradient", vec_json(f.a)}};
}

int cmd_rootsystem(const std::string& family, int rank, bool affine, int twist, const std::string& perm, int cyclic,
                   const std::string& scale, bool as_json) {
    std::string spec = family + " " + std::to_string(rank);
    if (twist > 1)
        spec += " twist " + std::to_string(twist);
    else if (affine)
        spec += " affine";
    if (!perm.empty()) spec += " perm " + perm;
    if (cyclic > 1) spec += " cyclic " + std::to_string(cyclic);
    if (!scale.empty()) spec += " scale " + scale;
    AffineRootSystem sys;
    try {
        sys = roots::build(roots::parse_factor(spec));
        sys.set_spec({roots::parse_factor(spec)});
    } catch (const Error& e) {
        std::cerr << "invalid root system '" << spec << "': " << e.what() << "\n";
        return 2;
    }
    QMat cartan = sys.cartan_matrix();
    if (as_json) {
        json j;
        j["spec"] = spec;
        j["type"] = sys.type_name();
        j["ambient_dim"] = sys.ambient_dim();
        j["equalities"] = json::array();
        for (auto& e : sys.equalities()) j["equalities"].push_back(functional_json(e));
        j["simple_roots"] = json::array();
        for (auto& s : sys.simple_roots()) j["simple_roots"].push_back(functional_json(s));
        j["labels"] = sys.label_vector();
        j["cartan"] = json::array();
        for (auto& row : cartan) j["cartan"].push_back(vec_json(row));
        j["alcove_vertices"] = json::array();
        for (auto& v : sys.alcove().vertices()) j["alcove_vertices"].push_back(vec_json(v));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "type: " << sys.type_name() << "\n";
    if (!sys.equalities().empty()) {
        std::cout << "equalities:\n";
        for (auto& e : sys.equalities()) std::cout << "  " << e.str() << " = 0\n";
    }
    std::cout << "simple roots:\n";
    for (int i = 0; i < sys.size(); ++i) std::cout << "  alpha_" << i << " = " << sys.simple_roots()[i].str() << "\n";
    std::cout << "labels:";
    for (long l : sys.label_vector()) std::cout << " " << l;
    std::cout << "\ncartan matrix:\n";
    for (auto& row : cartan) {
        std::cout << " ";
        for (auto& q : row) std::cout << " " << str(q);
        std::cout << "\n";
    }
    std::cout << "alcove vertices:\n";
    for (auto& v : sys.alcove().vertices()) std::cout << "  " << str(v) << "\n";
    return 0;
}

Catalog catalog_or_default(const std::string& path) { return load_catalog(path.empty() ? default_catalog_path() : path); }

int cmd_check(const std::string& pair_path, const std::string& catalog_path, bool as_json) {
    try {
        IntegralPair pair = load_pair(pair_path);
        Catalog catalog = catalog_or_default(catalog_path);
        VerificationReport r = check_pair(pair, catalog);
        std::cout << (as_json ? report_json(r) : report_text(r));
        return r.spherical ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.kind << ": " << e.what() << "\n";
        return 2;
    }
}

int cmd_examples(const std::string& name, bool all, bool list, const std::string& catalog_path) {
    std::vector<Example> registry = builtin_examples();
    if (list) {
        for (auto& ex : registry) std::cout << ex.name << "  " << ex.description << "\n";
        return 0;
    }
    std::vector<const Example*> chosen;
    for (auto& ex : registry) {
        bool su2_genuine = ex.name.rfind("su2-", 0) == 0 && ex.expect_spherical;
        if (all || ex.name == name || (name == "su2-all" && su2_genuine)) chosen.push_back(&ex);
    }
    if (chosen.empty()) {
        std::cerr << (name.empty() ? std::string("give an example name or --all") : "unknown example '" + name + "'")
                  << "\n";
        return 2;
    }
    Catalog catalog;
    try {
        catalog = catalog_or_default(catalog_path);
    } catch (const Error& e) {
        std::cerr << e.kind << ": " << e.what() << "\n";
        return 2;
    }
    int failed = 0;
    for (auto* ex : chosen) {
        ExampleOutcome o = run_example(*ex, catalog);
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << ex->name << ": " << o.detail;
        if (!ex->manifold.empty()) std::cout << " [" << ex->manifold << "]";
        std::cout << "\n";
    }
    std::cout << chosen.size() - failed << "/" << chosen.size() << " passed\n";
    return failed ? 1 : 0;
}

// SVG output works in doubles on an orthonormal basis of the translation space.
std::string num(double x) {
    if (std::fabs(x) < 1e-12) x = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

int cmd_render(const std::string& pair_path, const std::string& out_path, const std::string& catalog_path) {
    IntegralPair pair;
    VerificationReport report;
    try {
        pair = load_pair(pair_path);
        report = check_pair(pair, catalog_or_default(catalog_path));
    } catch (const Error& e) {
        std::cerr << e.kind << ": " << e.what() << "\n";
        return 2;
    }
    const AffineRootSystem& amb = pair.ambient;
    const InnerProduct& ip = amb.ip();
    const QMat& space = amb.translation_space();
    if (space.size() != 2) {
        std::cerr << "render needs a rank-2 ambient, got rank " << space.size() << "\n";
        return 2;
    }
    int n = amb.ambient_dim();
    auto dip = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += a[i] * ip.gram()[i][j].get_d() * b[j];
        return s;
    };
    std::vector<std::vector<double>> basis;
    for (auto& v : space) {
        std::vector<double> d(n);
        for (int i = 0; i < n; ++i) d[i] = v[i].get_d();
        for (auto& b : basis) {
            double c = dip(d, b);
            for (int i = 0; i < n; ++i) d[i] -= c * b[i];
        }
        double len = std::sqrt(dip(d, d));
        for (auto& x : d) x /= len;
        basis.push_back(d);
    }
    QVec origin = amb.alcove().vertices()[0];
    using P2 = std::pair<double, double>;
    auto plane = [&](const QVec& x) {
        std::vector<double> d(n);
        for (int i = 0; i < n; ++i) d[i] = Q(x[i] - origin[i]).get_d();
        return P2{dip(d, basis[0]), dip(d, basis[1])};
    };
    auto ring = [&](const QMat& verts) {
        std::vector<P2> pts;
        for (auto& v : verts) pts.push_back(plane(v));
        double cx = 0, cy = 0;
        for (auto& p : pts) cx += p.first / pts.size(), cy += p.second / pts.size();
        std::sort(pts.begin(), pts.end(), [&](const P2& a, const P2& b) {
            return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
        });
        return pts;
    };
    std::vector<P2> outline = ring(amb.alcove().vertices()), inner = ring(pair.P.vertices());
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (auto& p : outline) x0 = std::min(x0, p.first), x1 = std::max(x1, p.first), y0 = std::min(y0, p.second),
                            y1 = std::max(y1, p.second);
    double pad = 0.25 * std::max(x1 - x0, y1 - y0);
    x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
    double scale = 400 / std::max(x1 - x0, y1 - y0);
    auto sx = [&](double x) { return (x - x0) * scale; };
    auto sy = [&](double y) { return (y1 - y) * scale; };
    auto points = [&](const std::vector<P2>& pts) {
        std::string s;
        for (auto& p : pts) s += (s.empty() ? "" : " ") + num(sx(p.first)) + "," + num(sy(p.second));
        return s;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num((x1 - x0) * scale)
        << "\" height=\"" << num((y1 - y0) * scale) << "\">\n";
    svg << "  <title>" << (pair.name.empty() ? "pair" : pair.name) << "</title>\n";
    svg << "  <polygon points=\"" << points(inner) << "\" fill=\"#b0b0b0\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
    svg << "  <polygon points=\"" << points(outline) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (report.phi_m) {
        for (auto& f : report.phi_m->sys.simple_roots()) {
            // f(origin + u b0 + v b1) = c + u a0 + v a1, clipped to the box
            double c = f(origin).get_d(), a0 = 0, a1 = 0;
            for (int i = 0; i < n; ++i) a0 += f.a[i].get_d() * basis[0][i], a1 += f.a[i].get_d() * basis[1][i];
            std::vector<P2> hits;
            auto add = [&](double u, double v) {
                if (u < x0 - 1e-9 || u > x1 + 1e-9 || v < y0 - 1e-9 || v > y1 + 1e-9) return;
                for (auto& h : hits)
                    if (std::fabs(h.first - u) < 1e-9 && std::fabs(h.second - v) < 1e-9) return;
                hits.push_back({u, v});
            };
            if (std::fabs(a1) > 1e-12)
                for (double u : {x0, x1}) add(u, -(c + a0 * u) / a1);
            if (std::fabs(a0) > 1e-12)
                for (double v : {y0, y1}) add(-(c + a1 * v) / a0, v);
            if (hits.size() < 2) continue;
            std::sort(hits.begin(), hits.end());
            svg << "  <line x1=\"" << num(sx(hits.front().first)) << "\" y1=\"" << num(sy(hits.front().second))
                << "\" x2=\"" << num(sx(hits.back().first)) << "\" y2=\"" << num(sy(hits.back().second))
                << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"><title>" << f.str()
                << "</title></line>\n";
        }
    }
    svg << "</svg>\n";
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << svg.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alcove: affine root systems and spherical pairs"};
    app.require_subcommand(1);

    auto* rs = app.add_subcommand("rootsystem", "print an (affine) root system");
    std::string family, perm, scale;
    int rank = 0, twist = 1, cyclic = 1;
    bool affine = false, as_json = false;
    rs->add_option("family", family, "A, B, C, D, E, F or G")->required();
    rs->add_option("rank", rank, "rank of the finite type")->required();
    rs->add_flag("--affine", affine, "untwisted affine system");
    rs->add_option("--twist", twist, "order of the diagram automorphism");
    rs->add_option("--perm", perm, "diagram automorphism as a comma-separated permutation");
    rs->add_option("--cyclic", cyclic, "fold this many copies cyclically");
    rs->add_option("--scale", scale, "Gram matrix multiplier, p/q");
    rs->add_flag("--json", as_json, "machine-readable output");

    auto* ck = app.add_subcommand("check", "verify a pair file against the catalog");
    std::string pair_path, catalog_path;
    ck->add_option("pair", pair_path, "pair file")->required();
    ck->add_option("--catalog", catalog_path, "catalog file instead of the shipped one");
    ck->add_flag("--json", as_json, "machine-readable output");

    auto* ex = app.add_subcommand("examples", "run the builtin examples");
    std::string name;
    bool all = false, list = false;
    ex->add_option("name", name, "example name, or su2-all");
    ex->add_flag("--all", all, "run every example");
    ex->add_flag("--list", list, "list the registry");
    ex->add_option("--catalog", catalog_path, "catalog file instead of the shipped one");

    auto* rd = app.add_subcommand("render", "draw a rank-2 pair as SVG");
    std::string out_path;
    rd->add_option("pair", pair_path, "pair file")->required();
    rd->add_option("out", out_path, "output SVG")->required();
    rd->add_option("--catalog", catalog_path, "catalog file instead of the shipped one");

    auto* cat = app.add_subcommand("catalog", "print the catalog");
    cat->add_option("--catalog", catalog_path, "catalog file instead of the shipped one");
    cat->add_flag("--json", as_json, "JSON instead of the text format");

    auto* pr = app.add_subcommand("pair", "print a builtin example as a pair file");
    pr->add_option("name", name, "example name")->required();
    pr->add_flag("--json", as_json, "JSON instead of the text format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*rs) return cmd_rootsystem(family, rank, affine, twist, perm, cyclic, scale, as_json);
    if (*ck) return cmd_check(pair_path, catalog_path, as_json);
    if (*ex) return cmd_examples(name, all, list, catalog_path);
    if (*rd) return cmd_render(pair_path, out_path, catalog_path);
    if (*cat) {
        try {
            Catalog c = catalog_or_default(catalog_path);
            std::cout << (as_json ? catalog_json(c) : catalog_text(c));
            return 0;
        } catch (const Error& e) {
            std::cerr << e.kind << ": " << e.what() << "\n";
            return 2;
        }
    }
    if (*pr) {
        for (auto& e : builtin_examples())
            if (e.name == name) {
                std::cout << (as_json ? pair_json(e.pair) : pair_text(e.pair));
                return 0;
            }
        std::cerr << "unknown example '" << name << "'\n";
        return 2;
    }
    return 2;
}
