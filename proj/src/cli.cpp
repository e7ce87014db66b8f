#include "drckit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "drckit/biordered.hpp"
#include "drckit/corpus.hpp"
#include "drckit/cpc.hpp"
#include "drckit/error.hpp"
#include "drckit/free_fund.hpp"
#include "drckit/functors.hpp"
#include "drckit/io.hpp"
#include "drckit/model_search.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/semigroup.hpp"
#include "drckit/star_regular.hpp"

namespace drckit {

namespace {

using nlohmann::json;

json report_json(const AxiomReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json e;
        e["law"] = c.law;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(std::move(e));
    }
    json j;
    j["subject"] = r.subject;
    j["ok"] = r.ok();
    j["checks"] = std::move(checks);
    return j;
}

bool all_ok(const std::vector<AxiomReport>& reps) {
    for (const AxiomReport& r : reps)
        if (!r.ok()) return false;
    return true;
}

void emit_reports(const std::vector<AxiomReport>& reps, const std::string& format,
                  std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const AxiomReport& r : reps) arr.push_back(report_json(r));
        out << canonical_dump(arr);
    } else {
        for (const AxiomReport& r : reps) out << r.to_text();
    }
}

int run_check(const std::string& path, std::string kind, const std::string& format,
              std::ostream& out) {
    json j = load_json_file(path);
    if (kind == "auto") {
        if (looks_like_semigroup(j))
            kind = "semigroup";
        else if (looks_like_pa(j))
            kind = "algebra";
        else if (looks_like_cpc(j))
            kind = "cpc";
        else if (looks_like_category(j))
            kind = "category";
        else
            throw Error("cannot tell what kind of structure " + path + " holds");
    }
    std::vector<AxiomReport> reps;
    if (kind == "semigroup") {
        FiniteSemigroup s = semigroup_from_json(j);
        reps.push_back(check_drc_axioms(s));
        reps.push_back(check_drc_derived(s));
        if (all_ok(reps)) reps.push_back(check_pa_axioms(extract_pa(s).pa));
    } else if (kind == "algebra") {
        ProjectionAlgebra pa = pa_from_json(j);
        reps.push_back(check_pa_axioms(pa));
        reps.push_back(check_pa_derived(pa));
    } else if (kind == "category") {
        BiorderedCategory c = category_from_json(j);
        reps.push_back(check_category(c));
        if (reps.back().ok()) reps.push_back(check_biordered(c));
    } else {
        reps.push_back(check_cpc(cpc_from_json(j)));
    }
    emit_reports(reps, format, out);
    return all_ok(reps) ? 0 : 1;
}

int run_functor(const std::string& path, const std::string& out_path, std::ostream& out) {
    json j = load_json_file(path);
    std::string text;
    if (looks_like_semigroup(j)) {
        text = canonical_dump(to_json(c_of(semigroup_from_json(j))));
    } else if (looks_like_cpc(j)) {
        text = canonical_dump(to_json(s_of(cpc_from_json(j))));
    } else {
        throw Error("functor needs a semigroup or a chained category file");
    }
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
        out << "wrote " << out_path << "\n";
    }
    return 0;
}

int run_roundtrip(const std::string& path, std::ostream& out) {
    json j = load_json_file(path);
    bool ok = false;
    std::string line;
    if (looks_like_semigroup(j)) {
        ok = roundtrip_sc(semigroup_from_json(j));
        line = "S(C(S)) = S";
    } else if (looks_like_cpc(j)) {
        ok = roundtrip_cs(cpc_from_json(j));
        line = "C(S(C)) = C";
    } else {
        throw Error("roundtrip needs a semigroup or a chained category file");
    }
    out << line << ": " << (ok ? "OK" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_free(const std::string& path, int max_len, int slack, const std::string& format,
             std::ostream& out) {
    BoundedFreeSemigroup f = build_bounded_free(load_pa(path), max_len, slack);
    AxiomReport rep = check_free_projections(f);
    if (format == "json") {
        json j;
        j["max_len"] = f.max_len;
        j["slack"] = f.slack;
        j["classes"] = f.num_classes;
        j["classes_with_slack"] = f.num_classes_total;
        j["report"] = report_json(rep);
        out << canonical_dump(j);
    } else {
        out << "classes up to length " << f.max_len << ": " << f.num_classes << " ("
            << f.num_classes_total << " including slack words)\n"
            << rep.to_text();
    }
    return rep.ok() ? 0 : 1;
}

int run_mp(const std::string& path, const std::string& out_path, const std::string& format,
           std::ostream& out) {
    ProjectionAlgebra pa = load_pa(path);
    MPSemigroup mp = mp_of(pa);
    bool fund = is_fundamental(mp.sg);
    bool recovers = extract_pa(mp.sg).pa == pa;
    if (format == "json") {
        json j;
        j["size"] = mp.sg.n;
        j["fundamental"] = fund;
        j["projections_recover_algebra"] = recovers;
        out << canonical_dump(j);
    } else {
        out << "size: " << mp.sg.n << "\nfundamental: " << (fund ? "yes" : "no")
            << "\nprojections recover the algebra: " << (recovers ? "yes" : "no") << "\n";
    }
    if (!out_path.empty()) {
        write_text_file(out_path, canonical_dump(to_json(mp.sg)));
        out << "wrote " << out_path << "\n";
    }
    return fund && recovers ? 0 : 1;
}

int run_fundamental(const std::string& path, const std::string& format, std::ostream& out) {
    FiniteSemigroup s = load_semigroup(path);
    std::vector<int> mu = mu_of(s);
    int classes = 0;
    for (int c : mu)
        if (c + 1 > classes) classes = c + 1;
    bool fund = is_fundamental(s);
    bool pgen = is_projection_generated(s);
    if (format == "json") {
        json j;
        j["size"] = s.n;
        j["mu_classes"] = classes;
        j["fundamental"] = fund;
        j["projection_generated"] = pgen;
        out << canonical_dump(j);
    } else {
        out << "size: " << s.n << "\nmu classes: " << classes
            << "\nfundamental: " << (fund ? "yes" : "no")
            << "\nprojection generated: " << (pgen ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_search(const std::vector<std::string>& satisfy_raw, const std::string& violate, int size,
               int limit, const std::string& format, std::ostream& out) {
    std::vector<std::string> satisfy;
    for (const std::string& chunk : satisfy_raw) {
        std::stringstream ss(chunk);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) satisfy.push_back(id);
    }
    SearchResult r = search_models(satisfy, violate, size, limit);
    if (format == "json") {
        json models = json::array();
        for (const ProjectionAlgebra& m : r.models) models.push_back(to_json(m));
        json j;
        j["models"] = std::move(models);
        j["exhausted"] = r.exhausted;
        j["nodes"] = r.nodes;
        out << canonical_dump(j);
    } else {
        out << "models found: " << r.models.size() << " (search "
            << (r.exhausted ? "exhausted" : "stopped at the limit") << ", " << r.nodes
            << " nodes)\n";
        for (const ProjectionAlgebra& m : r.models) out << to_json(m).dump() << "\n";
    }
    return 0;
}

int run_star_counterexamples(const std::string& format, std::ostream& out) {
    AxiomReport rep = reproduce_counterexamples();
    emit_reports({rep}, format, out);
    return rep.ok() ? 0 : 1;
}

int run_star_probe(unsigned seed, int trials, int dim, const std::string& format,
                   std::ostream& out) {
    ProbeResult r = probe_linked_simplifications(seed, trials, dim);
    if (format == "json") {
        json j;
        j["trials"] = r.trials;
        j["linked"] = r.linked;
        j["mismatches"] = {{"e1", r.e1_mismatch},
                           {"e2", r.e2_mismatch},
                           {"f1", r.f1_mismatch},
                           {"f2", r.f2_mismatch}};
        j["report"] = report_json(r.report);
        out << canonical_dump(j);
    } else {
        out << "trials: " << r.trials << ", linked pairs: " << r.linked << "\n"
            << r.report.to_text();
    }
    return 0;
}

// Everything `corpus write` emits, as (file name, canonical content) pairs.
std::vector<std::pair<std::string, std::string>> corpus_files() {
    std::vector<std::pair<std::string, std::string>> files;
    for (const CorpusSemigroup& e : corpus_semigroups())
        files.emplace_back(e.name + ".json", canonical_dump(to_json(e.sg)));
    for (const CorpusAlgebra& a : corpus_algebras())
        files.emplace_back(a.name + ".json", canonical_dump(to_json(a.pa)));
    for (const CorpusAlgebra& a : corpus_algebras())
        files.emplace_back("mp_" + a.name + ".json", canonical_dump(to_json(mp_of(a.pa).sg)));
    files.emplace_back("cpc_b2.json", canonical_dump(to_json(c_of(make_b2()))));
    return files;
}

int run_corpus_list(const std::string& format, std::ostream& out) {
    if (format == "json") {
        json sgs = json::array();
        for (const CorpusSemigroup& e : corpus_semigroups())
            sgs.push_back({{"name", e.name}, {"n", e.sg.n}, {"inverse", e.inverse}});
        json pas = json::array();
        for (const CorpusAlgebra& a : corpus_algebras())
            pas.push_back({{"name", a.name}, {"n", a.pa.n}});
        json mors = json::array();
        for (const BundledMorphism& m : corpus_morphisms())
            mors.push_back({{"algebra", m.algebra}, {"semigroup", m.semigroup}, {"image", m.image}});
        json j;
        j["semigroups"] = std::move(sgs);
        j["algebras"] = std::move(pas);
        j["morphisms"] = std::move(mors);
        out << canonical_dump(j);
    } else {
        for (const CorpusSemigroup& e : corpus_semigroups())
            out << "semigroup  " << e.name << "  n=" << e.sg.n << (e.inverse ? "  inverse" : "")
                << "\n";
        for (const CorpusAlgebra& a : corpus_algebras())
            out << "algebra    " << a.name << "  n=" << a.pa.n << "\n";
        for (const BundledMorphism& m : corpus_morphisms())
            out << "morphism   " << m.algebra << " -> " << m.semigroup << "\n";
    }
    return 0;
}

int run_corpus_write(const std::string& dir, std::ostream& out) {
    for (const auto& [name, content] : corpus_files()) {
        std::string path = dir + "/" + name;
        write_text_file(path, content);
        out << "wrote " << path << "\n";
    }
    return 0;
}

int run_corpus_check(const std::string& dir, std::ostream& out) {
    bool all = true;
    for (const auto& [name, content] : corpus_files()) {
        std::string path = dir + "/" + name;
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            out << name << ": MISSING\n";
            all = false;
            continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() == content) {
            out << name << ": OK\n";
        } else {
            out << name << ": DRIFT\n";
            all = false;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite DRC semigroup and projection category toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string check_file, check_kind = "auto";
    CLI::App* check = app.add_subcommand("check", "run the axiom battery for a structure file");
    check->add_option("file", check_file, "JSON structure file")->required();
    check->add_option("--kind", check_kind, "structure kind (default: sniff the fields)")
        ->check(CLI::IsMember({"auto", "semigroup", "algebra", "category", "cpc"}));

    std::string functor_file, functor_out;
    CLI::App* functor = app.add_subcommand(
        "functor", "convert a semigroup to its chained category or back");
    functor->add_option("file", functor_file, "JSON structure file")->required();
    functor->add_option("-o,--out", functor_out, "write the result here instead of stdout");

    std::string rt_file;
    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "convert there and back and compare with the input");
    roundtrip->add_option("file", rt_file, "semigroup or chained category file")->required();

    std::string free_file;
    int free_len = 4, free_slack = 2;
    CLI::App* freecmd = app.add_subcommand(
        "free", "materialize the word classes of an algebra up to a length bound");
    freecmd->add_option("file", free_file, "projection algebra file")->required();
    freecmd->add_option("--max-len", free_len, "length bound for class ids")
        ->check(CLI::PositiveNumber);
    freecmd->add_option("--slack", free_slack, "extra length closed over")
        ->check(CLI::NonNegativeNumber);

    std::string mp_file, mp_out;
    CLI::App* mpcmd = app.add_subcommand(
        "mp", "close the projection actions of an algebra into a semigroup");
    mpcmd->add_option("file", mp_file, "projection algebra file")->required();
    mpcmd->add_option("-o,--out", mp_out, "write the semigroup here");

    std::string fund_file;
    CLI::App* fund = app.add_subcommand(
        "fundamental", "report the projection separating quotient of a semigroup");
    fund->add_option("file", fund_file, "semigroup file")->required();

    std::vector<std::string> search_satisfy;
    std::string search_violate;
    int search_size = 0, search_limit = 16;
    CLI::App* search =
        app.add_subcommand("search", "look for tables satisfying some laws and breaking one");
    search->add_option("--satisfy", search_satisfy,
                       "comma separated law ids to hold (p1..p10, lp1..lp4, rp1..rp4, "
                       "pa1, pa2, p1'..p5', symmetry)");
    search->add_option("--violate", search_violate, "law id that must fail")->required();
    search->add_option("--size", search_size, "carrier size")->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--limit", search_limit, "stop after this many models")
        ->check(CLI::PositiveNumber);

    CLI::App* star = app.add_subcommand("star", "exact rational matrix examples");
    star->require_subcommand(1);
    CLI::App* star_cx = star->add_subcommand(
        "counterexamples", "recompute the bundled matrix counterexamples");
    unsigned probe_seed = 12345;
    int probe_trials = 60, probe_dim = 3;
    CLI::App* star_probe =
        star->add_subcommand("probe", "random search for linked pair shortcut failures");
    star_probe->add_option("--seed", probe_seed, "RNG seed");
    star_probe->add_option("--trials", probe_trials, "number of sampled triples")
        ->check(CLI::PositiveNumber);
    star_probe->add_option("--dim", probe_dim, "matrix dimension")->check(CLI::Range(2, 6));

    CLI::App* corpus = app.add_subcommand("corpus", "bundled example structures");
    corpus->require_subcommand(1);
    CLI::App* corpus_list = corpus->add_subcommand("list", "print every bundled structure");
    std::string corpus_dir_w, corpus_dir_c;
    CLI::App* corpus_write =
        corpus->add_subcommand("write", "serialize the bundled structures into a directory");
    corpus_write->add_option("dir", corpus_dir_w, "target directory")->required();
    CLI::App* corpus_check = corpus->add_subcommand(
        "check", "compare a directory against freshly serialized structures");
    corpus_check->add_option("dir", corpus_dir_c, "directory to compare")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return run_check(check_file, check_kind, format, out);
        if (app.got_subcommand(functor)) return run_functor(functor_file, functor_out, out);
        if (app.got_subcommand(roundtrip)) return run_roundtrip(rt_file, out);
        if (app.got_subcommand(freecmd))
            return run_free(free_file, free_len, free_slack, format, out);
        if (app.got_subcommand(mpcmd)) return run_mp(mp_file, mp_out, format, out);
        if (app.got_subcommand(fund)) return run_fundamental(fund_file, format, out);
        if (app.got_subcommand(search))
            return run_search(search_satisfy, search_violate, search_size, search_limit, format,
                              out);
        if (app.got_subcommand(star)) {
            if (star->got_subcommand(star_cx)) return run_star_counterexamples(format, out);
            return run_star_probe(probe_seed, probe_trials, probe_dim, format, out);
        }
        if (app.got_subcommand(corpus)) {
            if (corpus->got_subcommand(corpus_list)) return run_corpus_list(format, out);
            if (corpus->got_subcommand(corpus_write)) return run_corpus_write(corpus_dir_w, out);
            return run_corpus_check(corpus_dir_c, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace drckit
