#include "drckit/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <vector>

#include "drckit/error.hpp"

namespace drckit {

namespace {

using nlohmann::json;

std::vector<int> int_vector(const json& j, const std::string& key) {
    if (!j.is_array()) throw Error("expected an array at " + key);
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& x : j) {
        if (!x.is_number_integer()) throw Error("expected integers at " + key);
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& key) {
    if (!j.is_array()) throw Error("expected an array of rows at " + key);
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (const json& row : j) out.push_back(int_vector(row, key));
    return out;
}

const json& field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw Error("missing field: " + key);
    return *it;
}

json sorted_triples(const std::unordered_map<long long, int>& m, long long stride) {
    std::vector<std::array<long long, 3>> rows;
    rows.reserve(m.size());
    for (const auto& [key, val] : m) rows.push_back({key / stride, key % stride, val});
    std::sort(rows.begin(), rows.end());
    json out = json::array();
    for (const auto& r : rows) out.push_back({r[0], r[1], r[2]});
    return out;
}

void load_triples(const json& j, const std::string& key, long long stride,
                  std::unordered_map<long long, int>& out) {
    if (!j.is_array()) throw Error("expected an array of triples at " + key);
    for (const json& row : j) {
        std::vector<int> t = int_vector(row, key);
        if (t.size() != 3) throw Error("expected triples at " + key);
        if (t[0] < 0 || t[1] < 0 || t[0] >= stride || t[1] >= stride)
            throw Error("triple index out of range at " + key);
        long long k = static_cast<long long>(t[0]) * stride + t[1];
        if (out.count(k)) throw Error("duplicate triple at " + key);
        out[k] = t[2];
    }
}

}  // namespace

json to_json(const FiniteSemigroup& s) {
    return json{{"n", s.n}, {"mul", s.mul}, {"D", s.d_op}, {"R", s.r_op}};
}

json to_json(const ProjectionAlgebra& pa) {
    return json{{"n", pa.n}, {"theta", pa.theta}, {"delta", pa.delta}};
}

json to_json(const BiorderedCategory& c) {
    json leq = json::array();
    for (const auto& [p, q] : c.obj_leq_pairs) leq.push_back({p, q});
    return json{{"m", c.m},
                {"objects", c.objects},
                {"dom", c.dom},
                {"cod", c.cod},
                {"comp", sorted_triples(c.comp, c.m)},
                {"obj_leq", leq},
                {"lres", sorted_triples(c.lres, c.m)},
                {"rres", sorted_triples(c.rres, c.m)},
                {"trunc_bound", c.trunc_bound}};
}

json to_json(const ChainedProjectionCategory& c) {
    json j = to_json(c.cat);
    j["pa"] = to_json(c.pa);
    json ev = json::array();
    {
        std::vector<std::array<long long, 3>> rows;
        rows.reserve(c.eval.size());
        for (const auto& [key, val] : c.eval)
            rows.push_back({key / c.pa.n, key % c.pa.n, val});
        std::sort(rows.begin(), rows.end());
        for (const auto& r : rows) ev.push_back({r[0], r[1], r[2]});
    }
    j["eval"] = ev;
    return j;
}

FiniteSemigroup semigroup_from_json(const json& j) {
    if (!j.is_object()) throw Error("expected a JSON object");
    FiniteSemigroup s;
    if (!field(j, "n").is_number_integer()) throw Error("field n must be an integer");
    s.n = field(j, "n").get<int>();
    s.mul = int_table(field(j, "mul"), "mul");
    s.d_op = int_vector(field(j, "D"), "D");
    s.r_op = int_vector(field(j, "R"), "R");
    s.validate_shape();
    return s;
}

ProjectionAlgebra pa_from_json(const json& j) {
    if (!j.is_object()) throw Error("expected a JSON object");
    ProjectionAlgebra pa;
    if (!field(j, "n").is_number_integer()) throw Error("field n must be an integer");
    pa.n = field(j, "n").get<int>();
    pa.theta = int_table(field(j, "theta"), "theta");
    pa.delta = int_table(field(j, "delta"), "delta");
    pa.validate_shape();
    return pa;
}

BiorderedCategory category_from_json(const json& j) {
    if (!j.is_object()) throw Error("expected a JSON object");
    BiorderedCategory c;
    if (!field(j, "m").is_number_integer()) throw Error("field m must be an integer");
    c.m = field(j, "m").get<long long>();
    if (c.m < 0) throw Error("negative morphism count");
    c.objects = int_vector(field(j, "objects"), "objects");
    c.dom = int_vector(field(j, "dom"), "dom");
    c.cod = int_vector(field(j, "cod"), "cod");
    load_triples(field(j, "comp"), "comp", c.m, c.comp);
    load_triples(field(j, "lres"), "lres", c.m, c.lres);
    load_triples(field(j, "rres"), "rres", c.m, c.rres);
    const json& leqj = field(j, "obj_leq");
    if (!leqj.is_array()) throw Error("expected an array of pairs at obj_leq");
    for (const json& row : leqj) {
        std::vector<int> pr = int_vector(row, "obj_leq");
        if (pr.size() != 2) throw Error("expected pairs at obj_leq");
        c.obj_leq_pairs.emplace_back(pr[0], pr[1]);
    }
    if (j.contains("trunc_bound")) {
        if (!j["trunc_bound"].is_number_integer()) throw Error("trunc_bound must be an integer");
        c.trunc_bound = j["trunc_bound"].get<long long>();
        if (c.trunc_bound < 0) throw Error("negative truncation bound");
    }
    c.finalize();
    return c;
}

ChainedProjectionCategory cpc_from_json(const json& j) {
    ChainedProjectionCategory c;
    c.cat = category_from_json(j);
    c.pa = pa_from_json(field(j, "pa"));
    load_triples(field(j, "eval"), "eval", c.pa.n, c.eval);
    // The evaluation fixes objects, so the diagonal recovers the object map.
    c.objs.assign(c.pa.n, -1);
    for (int p = 0; p < c.pa.n; ++p) {
        auto it = c.eval.find(static_cast<long long>(p) * c.pa.n + p);
        if (it == c.eval.end()) throw Error("evaluation misses the diagonal pair of " + std::to_string(p));
        c.objs[p] = it->second;
    }
    c.finalize();
    return c;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error("malformed JSON in " + path);
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("short write to " + path);
}

FiniteSemigroup load_semigroup(const std::string& path) {
    return semigroup_from_json(load_json_file(path));
}

ProjectionAlgebra load_pa(const std::string& path) { return pa_from_json(load_json_file(path)); }

BiorderedCategory load_category(const std::string& path) {
    return category_from_json(load_json_file(path));
}

ChainedProjectionCategory load_cpc(const std::string& path) {
    return cpc_from_json(load_json_file(path));
}

void save_semigroup(const std::string& path, const FiniteSemigroup& s) {
    write_text_file(path, canonical_dump(to_json(s)));
}

void save_pa(const std::string& path, const ProjectionAlgebra& pa) {
    write_text_file(path, canonical_dump(to_json(pa)));
}

void save_category(const std::string& path, const BiorderedCategory& c) {
    write_text_file(path, canonical_dump(to_json(c)));
}

void save_cpc(const std::string& path, const ChainedProjectionCategory& c) {
    write_text_file(path, canonical_dump(to_json(c)));
}

bool looks_like_semigroup(const json& j) { return j.is_object() && j.contains("mul"); }
bool looks_like_pa(const json& j) {
    return j.is_object() && j.contains("theta") && !j.contains("m");
}
bool looks_like_cpc(const json& j) { return j.is_object() && j.contains("eval"); }
bool looks_like_category(const json& j) {
    return j.is_object() && j.contains("m") && !j.contains("eval");
}

}  // namespace drckit
