#include "session.hpp"

#include <chrono>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "criteria.hpp"
#include "oracle.hpp"

namespace hk {

namespace {

using nlohmann::json;

int parse_int_token(const std::string& tok, const std::string& what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (...) {
        fail(errc::invalid_argument, what + " must be an integer, got: " + tok);
    }
    require(pos == tok.size(), errc::invalid_argument, what + " must be an integer, got: " + tok);
    return v;
}

Mat mat_from_json(const Fp& f, const json& j, const std::string& where) {
    require(j.is_array(), errc::parse, where + ": matrix must be an array of rows");
    int cols = -1;
    std::vector<Vec> rows;
    for (const json& r : j) {
        require(r.is_array(), errc::parse, where + ": matrix rows must be arrays");
        if (cols < 0) cols = static_cast<int>(r.size());
        require(static_cast<int>(r.size()) == cols, errc::parse, where + ": ragged matrix");
        Vec row;
        for (const json& e : r) {
            require(e.is_number_integer(), errc::parse, where + ": entries must be integers");
            row.push_back(f.from_int(e.get<int64_t>()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Mat(0, 0);
    return Mat::from_rows(rows, cols);
}

/* Input document with lazily constructed modules. */
struct Document {
    json doc;
    AlgebraPtr alg;
    std::map<std::string, ModulePtr> cache;
    std::set<std::string> visiting;

    ModulePtr get(const std::string& name);
    ModulePtr eval(const json& def, const std::string& name);
};

ModulePtr Document::get(const std::string& name) {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    require(doc.contains("modules") && doc.at("modules").is_object() && doc.at("modules").contains(name),
            errc::reference, "unknown module: " + name);
    require(!visiting.count(name), errc::reference, "circular module definition: " + name);
    visiting.insert(name);
    ModulePtr m = eval(doc.at("modules").at(name), name);
    visiting.erase(name);
    cache.emplace(name, m);
    return m;
}

ModulePtr Document::eval(const json& def, const std::string& name) {
    require(def.is_object(), errc::parse, "module " + name + " must be an object");
    if (def.contains("construct")) {
        std::string c = def.at("construct").get<std::string>();
        if (c == "regular") return regular_module(alg);
        if (c == "projective" || c == "injective" || c == "simple") {
            require(def.contains("vertex"), errc::parse, "module " + name + " needs a vertex");
            int v = def.at("vertex").get<int>();
            require(v >= 0 && v < alg->quiver->vertices, errc::invalid_argument,
                    "module " + name + ": vertex out of range");
            if (c == "projective") return projective_module(alg, v);
            if (c == "injective") return injective_module(alg, v);
            return simple_module(alg, v);
        }
        if (c == "dual") {
            require(def.contains("of"), errc::parse, "module " + name + " needs a source to dualize");
            return dual_module(get(def.at("of").get<std::string>()));
        }
        if (c == "direct_sum") {
            require(def.contains("parts") && def.at("parts").is_array() && !def.at("parts").empty(),
                    errc::parse, "module " + name + " needs a nonempty list of parts");
            std::vector<ModulePtr> parts;
            for (const json& pj : def.at("parts")) parts.push_back(get(pj.get<std::string>()));
            for (size_t i = 1; i < parts.size(); ++i)
                require(algebras_match(*parts[0]->alg, *parts[i]->alg), errc::invalid_argument,
                        "module " + name + ": parts live over different algebras");
            return parts.size() == 1 ? parts[0] : direct_sum(parts).mod;
        }
        fail(errc::parse, "module " + name + ": unknown construct " + c);
    }
    require(def.contains("dims") && def.contains("arrows"), errc::parse,
            "module " + name + " needs either a construct or dims with arrow matrices");
    std::vector<int> dims;
    for (const json& e : def.at("dims")) dims.push_back(e.get<int>());
    require(static_cast<int>(dims.size()) == alg->quiver->vertices, errc::parse,
            "module " + name + ": need one dimension per vertex");
    const json& aj = def.at("arrows");
    require(aj.is_object(), errc::parse, "module " + name + ": arrows must map names to matrices");
    for (const auto& item : aj.items()) {
        bool known = false;
        for (const Arrow& a : alg->quiver->arrows) known = known || a.name == item.key();
        require(known, errc::reference, "module " + name + ": unknown arrow " + item.key());
    }
    std::map<std::string, Mat> mats;
    for (const Arrow& a : alg->quiver->arrows) {
        int r = dims[a.src], c = dims[a.tgt];
        if (!aj.contains(a.name)) {
            mats.emplace(a.name, Mat(r, c));  // omitted arrows act by zero
            continue;
        }
        Mat m = mat_from_json(alg->field, aj.at(a.name), "module " + name + " arrow " + a.name);
        if ((m.rows() == 0 || m.cols() == 0) && (r == 0 || c == 0)) m = Mat(r, c);
        mats.emplace(a.name, std::move(m));
    }
    return module_from_representation(alg, dims, mats);
}

Document load_document(const std::string& text, uint32_t override_p) {
    Document d;
    try {
        d.doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(errc::parse, std::string("input document: ") + e.what());
    }
    require(d.doc.is_object(), errc::parse, "input document must be a JSON object");
    uint32_t p = override_p;
    if (p == 0) {
        if (d.doc.contains("field")) {
            const json& fj = d.doc.at("field");
            require(fj.is_object() && fj.contains("prime"), errc::parse,
                    "field must be an object carrying a prime");
            p = fj.at("prime").get<uint32_t>();
        } else {
            p = 5;
        }
    }
    require(is_prime(p), errc::invalid_argument, "field characteristic must be prime");
    require(d.doc.contains("quiver"), errc::parse, "input document needs a quiver");
    const json& qj = d.doc.at("quiver");
    Quiver q;
    q.vertices = qj.at("vertices").get<int>();
    if (qj.contains("arrows"))
        for (const json& aj : qj.at("arrows"))
            q.arrows.push_back(
                {aj.at("name").get<std::string>(), aj.at("src").get<int>(), aj.at("tgt").get<int>()});
    std::vector<Relation> rels;
    Fp field(p);
    if (d.doc.contains("relations")) {
        for (const json& rj : d.doc.at("relations")) {
            require(rj.is_array(), errc::parse, "each relation must be an array of terms");
            Relation rel;
            for (const json& tj : rj) {
                RelationTerm term;
                term.coeff = field.from_int(tj.at("coeff").get<int64_t>());
                for (const json& s : tj.at("path")) term.path.push_back(s.get<std::string>());
                rel.push_back(std::move(term));
            }
            rels.push_back(std::move(rel));
        }
    }
    d.alg = build_bound_quiver_algebra(field, q, rels);
    return d;
}

json mat_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

json evidence_json(const std::vector<Evidence>& ev) {
    json arr = json::array();
    for (const Evidence& e : ev)
        arr.push_back({{"label", e.label}, {"degree", e.degree}, {"dimension", e.dimension}});
    return arr;
}

json term_dims(const std::vector<ModulePtr>& terms) {
    json arr = json::array();
    for (const ModulePtr& t : terms) arr.push_back(t->dim);
    return arr;
}

json maps_json(const std::vector<ModuleMap>& maps) {
    json arr = json::array();
    for (const ModuleMap& m : maps) arr.push_back(mat_json(m.mat));
    return arr;
}

/* Names a direct sum of vertex modules, e.g. {2,0,1} with prefix P reads "P1^2 + P3". */
std::string sum_name(const std::vector<int>& mult, char prefix) {
    std::string out;
    for (size_t v = 0; v < mult.size(); ++v) {
        if (mult[v] == 0) continue;
        if (!out.empty()) out += " + ";
        out += prefix + std::to_string(v + 1);
        if (mult[v] > 1) out += "^" + std::to_string(mult[v]);
    }
    return out.empty() ? "0" : out;
}

json sum_names(const std::vector<std::vector<int>>& mult, char prefix) {
    json arr = json::array();
    for (const std::vector<int>& m : mult) arr.push_back(sum_name(m, prefix));
    return arr;
}

/* The checked candidate is conventionally called T in chain certificates. */
json power_names(const std::vector<int>& copies) {
    json arr = json::array();
    for (int c : copies) arr.push_back(c == 1 ? std::string("T") : "T^" + std::to_string(c));
    return arr;
}

json resolution_json(const Resolution& r) {
    json j;
    j["length"] = r.length();
    j["complete"] = r.complete;
    j["minimal"] = r.minimal;
    j["terms"] = term_dims(r.terms);
    j["term_names"] = sum_names(r.mult, 'P');
    j["multiplicities"] = r.mult;
    j["differentials"] = maps_json(r.diffs);
    j["augment"] = mat_json(r.augment.mat);
    return j;
}

json coresolution_json(const Coresolution& r) {
    json j;
    j["length"] = r.length();
    j["complete"] = r.complete;
    j["minimal"] = r.minimal;
    j["terms"] = term_dims(r.terms);
    j["term_names"] = sum_names(r.mult, 'I');
    j["multiplicities"] = r.mult;
    j["differentials"] = maps_json(r.diffs);
    j["coaugment"] = mat_json(r.coaugment.mat);
    return j;
}

json membership_json(const AddMembership& m) {
    json j;
    j["member"] = m.member;
    j["copies"] = m.copies;
    j["section"] = mat_json(m.section);
    j["retraction"] = mat_json(m.retraction);
    return j;
}

json chain_json(const CoresolveChain& ch) {
    json j;
    j["found"] = ch.found;
    if (!ch.found) {
        j["failure"] = ch.failure;
        j["failed_stage"] = ch.failed_stage;
        return j;
    }
    j["length"] = ch.length();
    j["terms"] = term_dims(ch.terms);
    j["term_names"] = power_names(ch.copies);
    j["copies"] = ch.copies;
    j["first"] = mat_json(ch.first.mat);
    j["maps"] = maps_json(ch.maps);
    j["terminal"] = membership_json(ch.terminal);
    return j;
}

json cochain_json(const ResolveChain& ch) {
    json j;
    j["found"] = ch.found;
    if (!ch.found) {
        j["failure"] = ch.failure;
        j["failed_stage"] = ch.failed_stage;
        return j;
    }
    j["length"] = ch.length();
    j["terms"] = term_dims(ch.terms);
    j["term_names"] = power_names(ch.copies);
    j["copies"] = ch.copies;
    j["last"] = mat_json(ch.last.mat);
    j["maps"] = maps_json(ch.maps);
    j["terminal"] = membership_json(ch.terminal);
    return j;
}

json certificate_json(const TiltingCertificate& c) {
    json j;
    j["resolution"] = c.resolution ? resolution_json(*c.resolution) : json();
    j["coresolution"] = c.coresolution ? coresolution_json(*c.coresolution) : json();
    j["ext_table"] = evidence_json(c.ext_table);
    j["chain"] = c.chain ? chain_json(*c.chain) : json();
    j["cochain"] = c.cochain ? cochain_json(*c.cochain) : json();
    return j;
}

json axiom_json(const AxiomCheck& a) {
    json j;
    j["criterion"] = a.criterion;
    j["verdict"] = verdict_name(a.verdict);
    j["detail"] = a.detail;
    j["evidence"] = evidence_json(a.evidence);
    j["notes"] = a.notes;
    j["certificate"] = certificate_json(a.certificate);
    return j;
}

json criterion_json(const CriterionReport& c) {
    json j;
    j["criterion"] = c.criterion;
    j["verdict"] = verdict_name(c.verdict);
    j["cited_condition"] = c.cited_condition;
    j["evidence"] = evidence_json(c.evidence);
    j["notes"] = c.notes;
    return j;
}

json oracle_json(const OracleResult& r) {
    json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["trials"] = r.trials;
    j["checks"] = r.checks;
    j["seed"] = r.seed;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    return j;
}

std::string run_command_impl(const std::string& input_json, const std::vector<std::string>& args,
                             const SessionOptions& opt) {
    require(!args.empty(), errc::invalid_argument, "no command given");
    auto started = std::chrono::steady_clock::now();
    json rep;
    rep["schema_version"] = 1;
    rep["command"] = args;
    rep["seed"] = opt.seed;

    const std::string& cmd = args[0];
    auto need = [&](size_t n, const char* usage) {
        require(args.size() == n, errc::invalid_argument, std::string("usage: ") + usage);
    };

    if (cmd == "oracle") {
        need(2, "oracle <name>");
        int trials = opt.trials;
        if (trials == 0) trials = args[1] == "duality_swap" ? 100 : 200;
        OracleResult r = run_oracle(args[1], opt.seed, trials);
        rep["oracle"] = oracle_json(r);
        rep["verdict"] = r.passed ? "satisfied" : "violated";
    } else {
        require(!input_json.empty(), errc::invalid_argument,
                "command " + cmd + " needs an input document");
        Document doc = load_document(input_json, opt.field_override);
        rep["field"] = doc.alg->field.p();

        if (cmd == "basis") {
            need(1, "basis");
            rep["dimension"] = doc.alg->dim;
            rep["commutative"] = doc.alg->is_commutative();
            rep["basis"] = doc.alg->basis_names;
            rep["vertices"] = doc.alg->quiver->vertices;
            json arrows = json::array();
            for (const Arrow& a : doc.alg->quiver->arrows)
                arrows.push_back({{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
            rep["arrows"] = arrows;
            json paths = json::array();
            for (const PathInfo& p : doc.alg->paths) {
                json names = json::array();
                for (int ai : p.arrows) names.push_back(doc.alg->quiver->arrows[ai].name);
                paths.push_back({{"src", p.src}, {"tgt", p.tgt}, {"arrows", names}});
            }
            rep["paths"] = paths;
        } else if (cmd == "hom") {
            need(3, "hom <module> <module>");
            ModulePtr m = doc.get(args[1]);
            ModulePtr n = doc.get(args[2]);
            std::vector<Mat> hb = hom_basis(*m, *n);
            rep["dimension"] = static_cast<int>(hb.size());
            json basis = json::array();
            for (const Mat& b : hb) basis.push_back(mat_json(b));
            rep["basis"] = basis;
        } else if (cmd == "ext" || cmd == "tor") {
            need(4, cmd == "ext" ? "ext <degree> <module> <module>" : "tor <degree> <module> <module>");
            int i = parse_int_token(args[1], "degree");
            require(i >= 0, errc::invalid_argument, "degree must be nonnegative");
            ModulePtr m = doc.get(args[2]);
            ModulePtr n = doc.get(args[3]);
            rep["degree"] = i;
            rep["dimension"] = cmd == "ext" ? ext_dim(i, m, n) : tor_dim(i, m, n);
        } else if (cmd == "resolve") {
            need(2, "resolve <module>");
            require(opt.cap >= 0, errc::invalid_argument, "cap must be nonnegative");
            Resolution r = min_proj_resolution(doc.get(args[1]), opt.cap);
            rep["cap"] = opt.cap;
            rep["resolution"] = resolution_json(r);
            rep["verdict"] = r.complete ? "computed" : "inconclusive";
        } else if (cmd == "coresolve") {
            need(2, "coresolve <module>");
            require(opt.cap >= 0, errc::invalid_argument, "cap must be nonnegative");
            Coresolution r = min_inj_coresolution(doc.get(args[1]), opt.cap);
            rep["cap"] = opt.cap;
            rep["coresolution"] = coresolution_json(r);
            rep["verdict"] = r.complete ? "computed" : "inconclusive";
        } else if (cmd == "endo") {
            need(2, "endo <module>");
            EndoAlgebra e = endomorphism_algebra(doc.get(args[1]));
            rep["dimension"] = e.alg->dim;
            rep["commutative"] = e.alg->is_commutative();
            json basis = json::array();
            for (const Mat& b : e.basis) basis.push_back(mat_json(b));
            rep["basis"] = basis;
            json prods = json::array();
            for (int i = 0; i < e.alg->dim; ++i) {
                json row = json::array();
                for (int j = 0; j < e.alg->dim; ++j) row.push_back(e.alg->prod[i][j]);
                prods.push_back(std::move(row));
            }
            rep["structure_constants"] = prods;
        } else if (cmd == "check") {
            require(args.size() >= 2, errc::invalid_argument, "usage: check <what> ...");
            const std::string& what = args[1];
            if (what == "tilting" || what == "ringel") {
                need(4, what == "tilting" ? "check tilting <module> <n>" : "check ringel <module> <n>");
                ModulePtr t = doc.get(args[2]);
                int n = parse_int_token(args[3], "n");
                require(n >= 0, errc::invalid_argument, "n must be nonnegative");
                AxiomCheck ax = what == "tilting" ? check_tilting(t, n) : check_ringel(t, n);
                rep["check"] = axiom_json(ax);
                rep["verdict"] = verdict_name(ax.verdict);
            } else if (what == "cotilting") {
                need(5, "check cotilting <module> <n> <cogenerator>");
                ModulePtr u = doc.get(args[2]);
                int n = parse_int_token(args[3], "n");
                require(n >= 0, errc::invalid_argument, "n must be nonnegative");
                ModulePtr w = doc.get(args[4]);
                AxiomCheck ax = check_cotilting(u, n, w);
                rep["check"] = axiom_json(ax);
                rep["verdict"] = verdict_name(ax.verdict);
            } else if (what == "kernel-tilting") {
                need(4, "check kernel-tilting <module> <n>");
                ModulePtr t = doc.get(args[2]);
                int n = parse_int_token(args[3], "n");
                require(n >= 0, errc::invalid_argument, "n must be nonnegative");
                AxiomCheck ax = check_tilting(t, n);
                rep["axioms"] = axiom_json(ax);
                if (ax.passed()) {
                    CriterionReport cr = kernel_homological_tilting(t, n, &ax);
                    rep["criterion"] = criterion_json(cr);
                    rep["verdict"] = verdict_name(cr.verdict);
                } else {
                    json stub;
                    stub["verdict"] = verdict_name(Verdict::inconclusive);
                    stub["notes"] =
                        json::array({"the tilting axioms failed, so the kernel criterion is undefined here"});
                    rep["criterion"] = stub;
                    rep["verdict"] = verdict_name(Verdict::inconclusive);
                }
            } else if (what == "kernel-cotilting") {
                need(5, "check kernel-cotilting <module> <n> <cogenerator>");
                ModulePtr u = doc.get(args[2]);
                int n = parse_int_token(args[3], "n");
                require(n >= 0, errc::invalid_argument, "n must be nonnegative");
                ModulePtr w = doc.get(args[4]);
                AxiomCheck ax = check_cotilting(u, n, w);
                rep["axioms"] = axiom_json(ax);
                if (ax.passed()) {
                    CriterionReport cr = kernel_homological_cotilting(u, n, w, &ax);
                    rep["criterion"] = criterion_json(cr);
                    rep["verdict"] = verdict_name(cr.verdict);
                } else {
                    json stub;
                    stub["verdict"] = verdict_name(Verdict::inconclusive);
                    stub["notes"] = json::array(
                        {"the cotilting axioms failed, so the kernel criterion is undefined here"});
                    rep["criterion"] = stub;
                    rep["verdict"] = verdict_name(Verdict::inconclusive);
                }
            } else {
                fail(errc::reference, "unknown check: " + what);
            }
        } else if (cmd == "scan") {
            require(args.size() >= 3 && args[1] == "orthogonality", errc::invalid_argument,
                    "usage: scan orthogonality <module>... [--cogenerator <module>]");
            std::vector<ModulePtr> parts;
            ModulePtr w;
            for (size_t i = 2; i < args.size(); ++i) {
                if (args[i] == "--cogenerator") {
                    require(i + 2 == args.size(), errc::invalid_argument,
                            "--cogenerator takes exactly one module name at the end");
                    w = doc.get(args[i + 1]);
                    break;
                }
                parts.push_back(doc.get(args[i]));
            }
            require(!parts.empty(), errc::invalid_argument, "scan orthogonality needs at least one module");
            CriterionReport cr = orthogonality_scan(parts, w);
            rep["criterion"] = criterion_json(cr);
            rep["verdict"] = verdict_name(cr.verdict);
        } else {
            fail(errc::reference, "unknown command: " + cmd);
        }
    }

    if (opt.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        rep["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return opt.pretty ? rep.dump(2) : rep.dump();
}

}  // namespace

std::string run_command(const std::string& input_json, const std::vector<std::string>& args,
                        const SessionOptions& opt) {
    try {
        return run_command_impl(input_json, args, opt);
    } catch (const error&) {
        throw;
    } catch (const json::exception& e) {
        fail(errc::parse, std::string("input document: ") + e.what());
    }
}

}  // namespace hk
