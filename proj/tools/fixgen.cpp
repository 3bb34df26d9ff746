#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "common.hpp"
#include "homalg.hpp"
#include "rng.hpp"

/* Writes a corpus of random admissible bound quiver algebras as input
 * documents: acyclic quivers on 3..5 vertices with monomial length-two
 * relations, kept only when the global dimension is at most two.  Every
 * document carries the standard module menu (simples, projectives,
 * injectives, the regular module, and the full injective cogenerator). */

using nlohmann::json;

namespace {

json standard_modules(int nv) {
    json mods = json::object();
    for (int v = 0; v < nv; ++v) {
        std::string tag = std::to_string(v + 1);
        mods["S" + tag] = {{"construct", "simple"}, {"vertex", v}};
        mods["P" + tag] = {{"construct", "projective"}, {"vertex", v}};
        mods["I" + tag] = {{"construct", "injective"}, {"vertex", v}};
    }
    mods["A"] = {{"construct", "regular"}};
    mods["regular"] = {{"construct", "regular"}};
    json parts = json::array();
    for (int v = 0; v < nv; ++v) parts.push_back("I" + std::to_string(v + 1));
    mods["DA"] = {{"construct", "direct_sum"}, {"parts", parts}};
    return mods;
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t seed = 20260819;
    int count = 10;
    std::string outdir = "fixtures";
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        std::string val = argv[i + 1];
        if (flag == "--seed") seed = std::stoull(val);
        else if (flag == "--count") count = std::stoi(val);
        else if (flag == "--out") outdir = val;
        else {
            std::fprintf(stderr, "usage: fixgen [--seed N] [--count N] [--out DIR]\n");
            return 2;
        }
    }

    hk::Rng rng(seed);
    std::set<std::string> seen;
    int made = 0;
    for (int attempt = 0; made < count && attempt < 20000; ++attempt) {
        int nv = 3 + static_cast<int>(rng.below(3));
        hk::Quiver q;
        q.vertices = nv;
        char next_name = 'a';
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (rng.chance(2, 5)) q.arrows.push_back({std::string(1, next_name++), i, j});
        if (q.arrows.size() < 2) continue;

        std::vector<hk::Relation> rels;
        json rels_json = json::array();
        hk::Fp field(5);
        for (const hk::Arrow& x : q.arrows)
            for (const hk::Arrow& y : q.arrows) {
                if (x.tgt != y.src) continue;
                if (!rng.chance(1, 2)) continue;
                rels.push_back({{field.from_int(1), {x.name, y.name}}});
                rels_json.push_back(json::array(
                    {{{"coeff", 1}, {"path", json::array({x.name, y.name})}}}));
            }

        hk::AlgebraPtr alg;
        try {
            alg = hk::build_bound_quiver_algebra(field, q, rels);
        } catch (const hk::error&) {
            continue;
        }
        if (alg->dim > 24) continue;
        std::optional<int> gd = hk::global_dimension(alg, 8);
        if (!gd || *gd < 0 || *gd > 2) continue;

        std::string sig = std::to_string(nv) + "|";
        for (const hk::Arrow& a : q.arrows)
            sig += std::to_string(a.src) + ">" + std::to_string(a.tgt) + ";";
        sig += "|" + rels_json.dump();
        if (!seen.insert(sig).second) continue;

        json doc;
        doc["field"] = {{"prime", 5}};
        json arrows = json::array();
        for (const hk::Arrow& a : q.arrows)
            arrows.push_back({{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
        doc["quiver"] = {{"vertices", nv}, {"arrows", arrows}};
        doc["relations"] = rels_json;
        doc["modules"] = standard_modules(nv);

        char fname[64];
        std::snprintf(fname, sizeof fname, "%s/rand_%02d.json", outdir.c_str(), made + 1);
        std::ofstream out(fname);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", fname);
            return 1;
        }
        out << doc.dump(2) << "\n";
        std::printf("%s  vertices=%d arrows=%zu relations=%zu dim=%d gldim=%d\n", fname, nv,
                    q.arrows.size(), rels.size(), alg->dim, *gd);
        ++made;
    }
    if (made < count) {
        std::fprintf(stderr, "only produced %d of %d requested fixtures\n", made, count);
        return 1;
    }
    return 0;
}
