#include "alcove/spherical.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace alcove::spherical {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("Io", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// "1/2,0; 0,1" -> rows.  An empty string is the empty matrix.
QMat parse_rows(const std::string& text) {
    QMat out;
    std::string t = trim(text);
    if (t.empty()) return out;
    std::istringstream rows(t);
    for (std::string row; std::getline(rows, row, ';');) {
        QVec v;
        std::istringstream entries(row);
        for (std::string e; std::getline(entries, e, ',');) {
            e = trim(e);
            if (e.empty()) throw Error("Parse", "empty entry in '" + row + "'");
            v.push_back(parse_q(e));
        }
        out.push_back(v);
    }
    return out;
}

std::string rows_text(const QMat& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "; ";
        for (size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + str(m[i][j]);
    }
    return s;
}

json rows_json(const QMat& m) {
    json out = json::array();
    for (auto& r : m) {
        json row = json::array();
        for (auto& q : r) row.push_back(str(q));
        out.push_back(row);
    }
    return out;
}

QMat rows_from_json(const json& j) {
    QMat out;
    for (auto& r : j) {
        QVec v;
        for (auto& q : r) v.push_back(q.is_string() ? parse_q(q.get<std::string>()) : Q(q.get<long>()));
        out.push_back(v);
    }
    return out;
}

struct Line {
    int number;
    std::string key, value;
};

// key = value lines; '#' starts a comment line; "[entry]" is a section.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    int n = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++n;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            out.push_back({n, t, ""});
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw Error("Parse", "line " + std::to_string(n) + ": expected 'key = value'");
        out.push_back({n, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
    }
    return out;
}

template <class F>
auto at_line(int n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind == "Parse" && std::string(e.what()).rfind("line ", 0) == 0) throw;
        throw Error("Parse", "line " + std::to_string(n) + ": " + e.what());
    }
}

void check_format(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].key != "format")
        throw Error("Parse", "line " + std::to_string(lines.empty() ? 1 : lines[0].number) + ": expected 'format = 1' first");
    if (lines[0].value != "1") throw Error("Parse", "line " + std::to_string(lines[0].number) + ": unsupported format " + lines[0].value);
}

bool is_json(const std::string& text) {
    size_t a = text.find_first_not_of(" \t\r\n");
    return a != std::string::npos && text[a] == '{';
}

int to_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("Parse", "bad integer '" + s + "'");
    }
}

bool to_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw Error("Parse", "expected true or false, got '" + s + "'");
}

Catalog catalog_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("Parse", e.what());
    }
    if (j.value("format", 0) != 1) throw Error("Parse", "expected \"format\": 1");
    Catalog c;
    try {
        for (auto& je : j.at("entries")) {
            LocalModelEntry e;
            e.name = je.at("name").get<std::string>();
            e.type = je.at("type").get<std::string>();
            e.central_rank = je.value("central_rank", 0);
            e.generators = rows_from_json(je.at("generators"));
            if (je.contains("derived")) e.derived = rows_from_json(je["derived"]);
            e.roots_known = je.contains("spherical_roots") && !je["spherical_roots"].is_null();
            if (e.roots_known) e.spherical_roots = rows_from_json(je["spherical_roots"]);
            e.smooth = je.value("smooth", true);
            e.note = je.value("note", "");
            e.provenance = je.value("provenance", "");
            c.entries.push_back(e);
        }
    } catch (const json::exception& e) {
        throw Error("Parse", e.what());
    }
    return c;
}

IntegralPair assemble_pair(const std::string& name, const std::string& notes, const std::vector<std::string>& ambient,
                           const QMat& vertices, const QMat& ineqs, const QMat& eqs, const QMat& lattice) {
    if (ambient.empty()) throw Error("Parse", "missing ambient");
    std::vector<roots::FactorSpec> fs;
    for (auto& a : ambient) fs.push_back(roots::parse_factor(a));
    IntegralPair p;
    p.name = name;
    p.notes = notes;
    p.ambient = roots::product(fs);
    int n = p.ambient.ambient_dim();
    auto width = [&](const QMat& m, int w, const std::string& what) {
        for (auto& r : m)
            if (int(r.size()) != w)
                throw Error("Parse", what + " row " + str(r) + " should have " + std::to_string(w) + " entries");
    };
    width(vertices, n, "vertex");
    width(ineqs, n + 1, "inequality");
    width(eqs, n + 1, "equality");
    width(lattice, n, "lattice");
    if (!vertices.empty() && (!ineqs.empty() || !eqs.empty()))
        throw Error("Parse", "give either vertices or constraints, not both");
    if (!vertices.empty()) {
        p.P = Polytope::hull(n, vertices);
    } else {
        if (ineqs.empty() && eqs.empty()) throw Error("Parse", "missing vertices");
        auto fn = [](const QVec& r) { return AffineFunctional(r[0], QVec(r.begin() + 1, r.end())); };
        std::vector<AffineFunctional> fi, fe;
        for (auto& r : ineqs) fi.push_back(fn(r));
        for (auto& r : eqs) fe.push_back(fn(r));
        p.P = Polytope::from_h(n, fe, fi);
    }
    p.lattice = Lattice(n, lattice);
    return p;
}

}  // namespace

Catalog parse_catalog(const std::string& text) {
    Catalog c = is_json(text) ? catalog_from_json(text) : [&] {
        Catalog out;
        auto lines = tokenize(text);
        check_format(lines);
        LocalModelEntry* cur = nullptr;
        for (size_t i = 1; i < lines.size(); ++i) {
            const Line& l = lines[i];
            at_line(l.number, [&] {
                if (l.key == "[entry]") {
                    out.entries.emplace_back();
                    cur = &out.entries.back();
                    cur->roots_known = false;
                    return;
                }
                if (l.key.front() == '[') throw Error("Parse", "unknown section " + l.key);
                if (!cur) throw Error("Parse", "'" + l.key + "' outside an [entry] section");
                if (l.key == "name")
                    cur->name = l.value;
                else if (l.key == "type")
                    cur->type = l.value;
                else if (l.key == "central_rank")
                    cur->central_rank = to_int(l.value);
                else if (l.key == "generators")
                    cur->generators = parse_rows(l.value);
                else if (l.key == "derived")
                    cur->derived = parse_rows(l.value);
                else if (l.key == "spherical_roots") {
                    cur->roots_known = true;
                    cur->spherical_roots = l.value == "none" ? QMat{} : parse_rows(l.value);
                } else if (l.key == "smooth")
                    cur->smooth = to_bool(l.value);
                else if (l.key == "note")
                    cur->note = l.value;
                else if (l.key == "provenance")
                    cur->provenance = l.value;
                else
                    throw Error("Parse", "unknown key '" + l.key + "'");
            });
        }
        return out;
    }();
    for (auto& e : c.entries) validate_entry(e);
    return c;
}

Catalog load_catalog(const std::string& path) { return parse_catalog(read_file(path)); }

std::string default_catalog_path() { return std::string(ALCOVE_DATA_DIR) + "/catalog.txt"; }

std::string catalog_text(const Catalog& c) {
    std::ostringstream os;
    os << "format = 1\n";
    for (auto& e : c.entries) {
        os << "\n[entry]\n";
        os << "name = " << e.name << "\n";
        os << "type = " << e.type << "\n";
        os << "central_rank = " << e.central_rank << "\n";
        os << "generators = " << rows_text(e.generators) << "\n";
        if (!e.derived.empty()) os << "derived = " << rows_text(e.derived) << "\n";
        if (e.roots_known)
            os << "spherical_roots = " << (e.spherical_roots.empty() ? "none" : rows_text(e.spherical_roots)) << "\n";
        if (!e.smooth) os << "smooth = false\n";
        if (!e.note.empty()) os << "note = " << e.note << "\n";
        if (!e.provenance.empty()) os << "provenance = " << e.provenance << "\n";
    }
    return os.str();
}

std::string catalog_json(const Catalog& c) {
    json j;
    j["format"] = 1;
    j["entries"] = json::array();
    for (auto& e : c.entries) {
        json je;
        je["name"] = e.name;
        je["type"] = e.type;
        je["central_rank"] = e.central_rank;
        je["generators"] = rows_json(e.generators);
        if (!e.derived.empty()) je["derived"] = rows_json(e.derived);
        je["spherical_roots"] = e.roots_known ? rows_json(e.spherical_roots) : json(nullptr);
        je["smooth"] = e.smooth;
        if (!e.note.empty()) je["note"] = e.note;
        if (!e.provenance.empty()) je["provenance"] = e.provenance;
        j["entries"].push_back(je);
    }
    return j.dump(2) + "\n";
}

IntegralPair parse_pair(const std::string& text) {
    std::string name, notes;
    std::vector<std::string> ambient;
    QMat vertices, ineqs, eqs, lattice;
    if (is_json(text)) {
        json j;
        try {
            j = json::parse(text);
            if (j.value("format", 0) != 1) throw Error("Parse", "expected \"format\": 1");
            name = j.value("name", "");
            notes = j.value("notes", "");
            for (auto& a : j.at("ambient")) ambient.push_back(a.get<std::string>());
            if (j.contains("vertices")) vertices = rows_from_json(j["vertices"]);
            if (j.contains("inequalities")) ineqs = rows_from_json(j["inequalities"]);
            if (j.contains("equalities")) eqs = rows_from_json(j["equalities"]);
            lattice = rows_from_json(j.at("lattice"));
        } catch (const json::exception& e) {
            throw Error("Parse", e.what());
        }
        return assemble_pair(name, notes, ambient, vertices, ineqs, eqs, lattice);
    }
    auto lines = tokenize(text);
    check_format(lines);
    int last = lines.back().number;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        at_line(l.number, [&] {
            if (l.key == "name")
                name = l.value;
            else if (l.key == "notes")
                notes = l.value;
            else if (l.key == "ambient")
                ambient.push_back(l.value);
            else if (l.key == "vertices")
                vertices = parse_rows(l.value);
            else if (l.key == "inequalities")
                ineqs = parse_rows(l.value);
            else if (l.key == "equalities")
                eqs = parse_rows(l.value);
            else if (l.key == "lattice")
                lattice = parse_rows(l.value);
            else
                throw Error("Parse", "unknown key '" + l.key + "'");
        });
    }
    return at_line(last, [&] { return assemble_pair(name, notes, ambient, vertices, ineqs, eqs, lattice); });
}

IntegralPair load_pair(const std::string& path) { return parse_pair(read_file(path)); }

std::string pair_text(const IntegralPair& p) {
    std::ostringstream os;
    os << "format = 1\n";
    if (!p.name.empty()) os << "name = " << p.name << "\n";
    if (!p.notes.empty()) os << "notes = " << p.notes << "\n";
    for (auto& f : p.ambient.spec()) os << "ambient = " << f.str() << "\n";
    os << "vertices = " << rows_text(p.P.vertices()) << "\n";
    os << "lattice = " << rows_text(p.lattice.basis()) << "\n";
    return os.str();
}

std::string pair_json(const IntegralPair& p) {
    json j;
    j["format"] = 1;
    j["name"] = p.name;
    if (!p.notes.empty()) j["notes"] = p.notes;
    j["ambient"] = json::array();
    for (auto& f : p.ambient.spec()) j["ambient"].push_back(f.str());
    j["vertices"] = rows_json(p.P.vertices());
    j["lattice"] = rows_json(p.lattice.basis());
    return j.dump(2) + "\n";
}

std::string report_json(const VerificationReport& r) {
    json j;
    j["format"] = 1;
    j["pair"] = r.name;
    j["status"] = r.spherical ? "Spherical" : "Inconclusive";
    j["rank"] = r.rank;
    j["dual_lattice"] = rows_json(r.dual_lattice.basis());
    j["vertices"] = json::array();
    for (auto& v : r.vertices) {
        json jv;
        jv["vertex"] = rows_json({v.vertex})[0];
        jv["centralizer"] = v.centralizer.type;
        jv["walls"] = v.centralizer.local.simple_index;
        jv["rays"] = rows_json(v.rays);
        jv["cone_generators"] = rows_json(v.monoid.cone.generators);
        jv["lattice"] = rows_json(v.monoid.lattice.basis());
        jv["hilbert_basis"] = v.monoid.hilbert ? rows_json(*v.monoid.hilbert) : json(nullptr);
        jv["status"] = v.verified ? "Verified" : "Unverified";
        if (v.verified) {
            jv["witness"] = v.witness;
            jv["alignment"] = v.alignment;
        } else {
            jv["note"] = v.note;
        }
        json ms = json::array();
        for (auto& m : v.matches) ms.push_back({{"entry", m.entry}, {"smooth", m.smooth}});
        jv["matches"] = ms;
        j["vertices"].push_back(jv);
    }
    if (r.phi_m) {
        json pm;
        pm["type"] = r.phi_m->sys.type_name();
        pm["simple_roots"] = json::array();
        for (auto& s : r.phi_m->sys.simple_roots()) {
            QVec row{s.c};
            row.insert(row.end(), s.a.begin(), s.a.end());
            pm["simple_roots"].push_back(rows_json({row})[0]);
            pm["simple_roots_text"].push_back(s.str());
        }
        j["phi_m"] = pm;
    } else {
        j["phi_m"] = nullptr;
        j["phi_m_note"] = r.phi_m_note;
    }
    return j.dump(2) + "\n";
}

}  // namespace alcove::spherical
