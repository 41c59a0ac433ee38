// Regenerates the bundled fixture files under data/: a set of 3-edge-colorable
// graphs and a sample of snarks of order at most 26. Every emitted snark is
// verified from scratch: connected, cubic, simple, bridgeless, girth >= 5,
// cyclically 4-edge-connected and not 3-edge-colorable. Snarks beyond the
// classical seeds are produced with the Isaacs dot product, which preserves
// uncolorability; the checks above re-establish snarkness per graph anyway.

#include <fstream>
#include <iostream>
#include <set>

#include "cubic/constructions.hpp"
#include "cubic/edge_coloring.hpp"
#include "cubic/factors.hpp"

using namespace cubic;

namespace {

bool verify_snark(const CubicGraph& g) {
    return g.is_connected() && is_bridgeless(g) && girth(g) >= 5 &&
           is_cyclically_4_edge_connected(g) && !is_three_edge_colorable(g);
}

struct Sample {
    std::vector<std::string> lines;
    std::set<std::string> seen;

    bool add(const CubicGraph& g) {
        std::string g6 = write_graph6(g);
        if (!seen.insert(g6).second) return false;
        lines.push_back(g6);
        return true;
    }
};

// Deterministic stream of dot products of two graphs; keeps those that the
// full verification accepts, up to `want` many.
void add_dot_products(Sample& sample, const CubicGraph& g1, const CubicGraph& g2, int want) {
    int kept = 0;
    for (int f1 = 0; f1 < g1.edge_count() && kept < want; ++f1)
        for (int f2 = f1 + 1; f2 < g1.edge_count() && kept < want; ++f2)
            for (int e2 = 0; e2 < g2.edge_count() && kept < want; ++e2)
                for (int twist = 0; twist < 4 && kept < want; ++twist) {
                    try {
                        CubicGraph g = dot_product(g1, f1, f2, g2, e2, twist);
                        if (verify_snark(g) && sample.add(g)) ++kept;
                    } catch (const DomainError&) {
                        // adjacent edge pair or a degenerate attachment; skip
                    }
                }
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    for (const std::string& l : lines) out << l << "\n";
    std::cout << path << ": " << lines.size() << " graphs\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data";

    // --- 3-edge-colorable fixtures ---
    std::vector<CubicGraph> class1 = {
        build_named(NamedGraph::k4),
        build_named(NamedGraph::k3_3),
        moebius_ladder(4),
        moebius_ladder(5),
        moebius_ladder(6),
        generalized_petersen(4, 1),   // cube
        generalized_petersen(5, 1),
        generalized_petersen(6, 1),
        generalized_petersen(7, 1),
        generalized_petersen(8, 1),
        generalized_petersen(6, 2),
        generalized_petersen(7, 2),
        generalized_petersen(8, 3),   // Moebius-Kantor
        generalized_petersen(9, 2),
        generalized_petersen(10, 2),  // dodecahedron
        generalized_petersen(10, 3),  // Desargues
        generalized_petersen(11, 2),
        generalized_petersen(12, 5),  // Nauru
        lcf_graph({5, -5}, 7),        // Heawood
    };
    std::vector<std::string> class1_lines;
    for (const CubicGraph& g : class1) {
        if (!g.is_connected() || !is_bridgeless(g) || !is_three_edge_colorable(g)) {
            std::cerr << "a class-1 fixture failed verification\n";
            return 1;
        }
        class1_lines.push_back(write_graph6(g));
    }
    write_lines(out_dir + "/class1_sample.g6", class1_lines);

    // --- snark sample, order <= 26 ---
    Sample snarks;
    CubicGraph petersen = build_named(NamedGraph::petersen);
    if (!verify_snark(petersen)) {
        std::cerr << "petersen failed snark verification\n";
        return 1;
    }
    snarks.add(petersen);

    CubicGraph j5 = flower_snark(5);
    if (!verify_snark(j5)) {
        std::cerr << "flower snark J5 failed verification\n";
        return 1;
    }
    snarks.add(j5);

    // order 18: Petersen . Petersen (the Blanusa-type graphs)
    std::size_t before18 = snarks.lines.size();
    add_dot_products(snarks, petersen, petersen, 18);
    std::vector<CubicGraph> order18;
    for (std::size_t i = before18; i < snarks.lines.size(); ++i)
        order18.push_back(parse_graph6(snarks.lines[i]));

    // order 26: Petersen . (order-18 snark), spread over several bases
    int per_base = 10;
    for (const CubicGraph& base18 : order18) {
        if (snarks.lines.size() >= 100) break;
        add_dot_products(snarks, base18, petersen, per_base);
    }

    write_lines(out_dir + "/snarks_upto26.g6", snarks.lines);
    return 0;
}
