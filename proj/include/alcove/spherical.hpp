#pragma once

#include "alcove/classification.hpp"

#include <optional>

namespace alcove::spherical {

using roots::AffineRootSystem;

// A polytope in the alcove together with a lattice spanning its direction.
struct IntegralPair {
    std::string name, notes;
    AffineRootSystem ambient;
    Polytope P;
    Lattice lattice;
};

// Throws Error("PairInvalid") naming the first violated condition: P inside
// the alcove (the message cites the wall), P bounded, lattice inside the
// direction of P with full rank, lattice inside the weight lattice.
void validate_pair(const IntegralPair& pair);

// cone intersected with lattice.  The cone has its apex at the origin.
struct WeightMonoid {
    Cone cone;
    Lattice lattice;
    std::optional<QMat> hilbert;  // minimal generators, when computed
};

// Minimal generating set of cone and lattice, sorted; nullopt when the
// enumeration box exceeds budget points.  The cone must be pointed.
std::optional<QMat> hilbert_basis(const Cone& cone, const Lattice& lattice, long budget = 200000);

// The Hilbert basis is attempted when the cone has at most max_rays rays.
// Throws Error("NotVertex").
WeightMonoid weight_monoid_at(const IntegralPair& pair, const QVec& x, int max_rays = 10);
bool monoid_equal(const WeightMonoid& a, const WeightMonoid& b);

// A smooth affine spherical variety for a connected reductive group L,
// recorded through its weight monoid.  Weights are written in coordinates
// (c | z): c_i = <chi, alpha_i^vee> over the simple roots of type, z the
// coordinates of the central part of chi.  Entries are matched up to a
// linear change of z, so any basis of the central characters will do.
struct LocalModelEntry {
    std::string name;
    std::string type;          // "A1", "A1xC2"; "" for a torus
    int central_rank = 0;      // dimension of the center of L, the length of z
    QMat generators;           // monoid generators in (c | z)
    QMat derived;              // basis of c(X(T)); empty means Z^I
    bool roots_known = true;
    QMat spherical_roots;      // nonnegative integer rows over the simple roots
    bool smooth = true;        // false: listed to report that no smooth model exists
    std::string note;
    std::string provenance;

    int semisimple_rank() const;
    QMat cartan() const;
};

struct Catalog {
    std::vector<LocalModelEntry> entries;
};

// Validates every entry.  Throws Error("Parse") with the line number, or
// Error("InvalidEntry") naming the entry.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);
std::string default_catalog_path();
std::string catalog_text(const Catalog& c);
std::string catalog_json(const Catalog& c);
void validate_entry(const LocalModelEntry& e);

// Pair files: `format = 1`, name, notes, one `ambient` line per factor,
// then vertices or constraints, then lattice rows.
IntegralPair parse_pair(const std::string& text);
IntegralPair load_pair(const std::string& path);
std::string pair_text(const IntegralPair& p);
std::string pair_json(const IntegralPair& p);

struct Match {
    std::string entry;
    std::vector<int> alignment;  // local node i -> entry node
    bool smooth = true;
};

struct VertexRecord {
    QVec vertex;
    roots::CentralizerDatum centralizer;
    WeightMonoid monoid;
    QMat rays;                     // primitive ray generators in (c | z)
    QMat lattice;                  // basis of the pair lattice in (c | z)
    bool verified = false;
    std::string witness;
    std::vector<int> alignment;
    std::vector<Match> matches;    // every catalog entry whose monoid matches
    // The witness's spherical roots as ambient functionals, when it lists them.
    std::optional<std::vector<AffineFunctional>> spherical_roots;
    std::string note;
};

struct VerificationReport {
    std::string name;
    std::vector<VertexRecord> vertices;
    bool spherical = false;
    int rank = 0;
    Lattice dual_lattice;
    std::optional<classify::IntegralRootSystem> phi_m;
    std::string phi_m_note;  // why phi_m is missing
};

VertexRecord check_vertex(const IntegralPair& pair, const QVec& x, const Catalog& catalog);
// Throws Error("PairInvalid").
VerificationReport check_pair(const IntegralPair& pair, const Catalog& catalog);
std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);

struct Example {
    std::string name, description;
    IntegralPair pair;
    bool expect_spherical = true;
    std::string expect_type;                  // type of Phi_M; "" skips the check
    std::vector<std::string> expect_witnesses;  // sorted, duplicates kept
    std::string expect_note;                  // substring of some vertex note
    std::string manifold;                     // for display
};
std::vector<Example> builtin_examples();

struct ExampleOutcome {
    bool pass = false;
    std::string detail;
    VerificationReport report;
};
ExampleOutcome run_example(const Example& ex, const Catalog& catalog);

}  // namespace alcove::spherical
