#include "ncforms/json_io.hpp"

#include "ncforms/parser.hpp"

#include <json.hpp>

namespace ncforms {

using ordered_json = nlohmann::ordered_json;

namespace {

ParamTablePtr params_from_json(const ordered_json &j) {
    auto t = std::make_shared<ParamTable>();
    if (j.contains("params"))
        for (const auto &p : j.at("params"))
            t->add(p.at("name").get<std::string>(),
                   p.value("inverse", std::string()));
    return t;
}

} // namespace

RewriteSystem load_presentation(const std::string &json_text) {
    ordered_json j = ordered_json::parse(json_text);
    ParamTablePtr params = params_from_json(j);
    std::vector<GeneratorInfo> gens;
    std::map<std::string, int> index;
    for (const auto &g : j.at("generators")) {
        GeneratorInfo info;
        info.name = g.at("name").get<std::string>();
        info.py = g.value("py", 0);
        info.z2 = g.value("z2", info.py & 1);
        index[info.name] = static_cast<int>(gens.size());
        gens.push_back(info);
    }
    for (const auto &g : j.at("generators")) {
        if (!g.contains("dx_of")) continue;
        std::string self = g.at("name").get<std::string>();
        std::string base = g.at("dx_of").get<std::string>();
        if (!index.count(base)) throw RewriteError("dx_of references unknown " + base);
        gens[index[self]].dx_of = index[base];
        gens[index[base]].d_partner = index[self];
    }
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, j.value("name", std::string("config")));
    if (j.contains("rules"))
        for (const auto &r : j.at("rules")) {
            const auto &left = r.at("left");
            uint32_t a = sig->require_slot(left.at(0).get<std::string>());
            uint32_t b = sig->require_slot(left.at(1).get<std::string>());
            Form rhs = parse_form(r.at("right").get<std::string>(), sig);
            sys.add_rule(a, b, rhs);
        }
    if (j.contains("d_images"))
        for (const auto &[name, expr] : j.at("d_images").items())
            sys.set_d_image(sig->require_slot(name),
                            parse_form(expr.get<std::string>(), sig));
    return sys;
}

std::string export_presentation(const RewriteSystem &sys, bool pretty) {
    const auto &sig = *sys.sig();
    ordered_json j;
    j["name"] = sys.name();
    j["params"] = ordered_json::array();
    for (const auto &e : sig.params()->entries()) {
        ordered_json p;
        p["name"] = e.name;
        if (!e.inverse_name.empty()) p["inverse"] = e.inverse_name;
        j["params"].push_back(p);
    }
    j["generators"] = ordered_json::array();
    for (int s = 0; s < sig.size(); ++s) {
        const auto &g = sig.gen(s);
        ordered_json e;
        e["name"] = g.name;
        e["py"] = g.py;
        e["z2"] = g.z2;
        if (g.dx_of >= 0) e["dx_of"] = sig.gen(g.dx_of).name;
        j["generators"].push_back(e);
    }
    j["rules"] = ordered_json::array();
    for (const auto &[pair, rhs] : sys.rules()) {
        ordered_json r;
        r["left"] = {sig.gen(pair.first).name, sig.gen(pair.second).name};
        r["right"] = rhs.str();
        j["rules"].push_back(r);
    }
    j["d_images"] = ordered_json::object();
    for (int s = 0; s < sig.size(); ++s)
        j["d_images"][sig.gen(s).name] = sys.d_image(s).str();
    return pretty ? j.dump(2) : j.dump();
}

LieData load_liedata(const std::string &json_text) {
    ordered_json j = ordered_json::parse(json_text);
    ParamTablePtr params =
        j.contains("params") ? params_from_json(j) : lie_param_table();
    LieData d(j.at("dim").get<int>(), j.at("repdim").get<int>(), params);
    if (j.contains("c"))
        for (const auto &e : j.at("c")) {
            int i = e.at(0).get<int>() - 1, jj = e.at(1).get<int>() - 1,
                k = e.at(2).get<int>() - 1;
            d.set_c(i, jj, k, parse_scalar(e.at(3).get<std::string>(), params));
        }
    if (j.contains("A"))
        for (const auto &e : j.at("A")) {
            int i = e.at(0).get<int>() - 1, b = e.at(1).get<int>() - 1,
                a = e.at(2).get<int>() - 1;
            d.set_A(i, b, a, parse_scalar(e.at(3).get<std::string>(), params));
        }
    if (j.contains("parities")) d.set_parities(j.at("parities").get<std::vector<int>>());
    d.validate();
    return d;
}

bool qmatrix_json_has_group(const std::string &json_text) {
    ordered_json j = ordered_json::parse(json_text);
    return j.contains("group");
}

QMatrix load_qmatrix(const std::string &json_text) {
    ordered_json j = ordered_json::parse(json_text);
    int n = j.at("n").get<int>();
    if (!j.contains("entries")) return QMatrix::symbolic(n);
    // collect the declared parameters first, then parse entries over them
    QMatrix sym = QMatrix::symbolic(n);
    QMatrix m(n, sym.params());
    for (const auto &e : j.at("entries")) {
        int i = e.at(0).get<int>() - 1, jj = e.at(1).get<int>() - 1;
        m.set(i, jj, parse_scalar(e.at(2).get<std::string>(), sym.params()));
    }
    return m;
}

GroupQMatrix load_group_qmatrix(const std::string &json_text) {
    ordered_json j = ordered_json::parse(json_text);
    int n = j.at("n").get<int>();
    GroupIndex G(j.at("group").get<std::vector<int>>());
    GroupQMatrix sym = GroupQMatrix::symbolic(n, G);
    if (!j.contains("entries")) return sym;
    GroupQMatrix m(n, G, sym.params());
    for (const auto &e : j.at("entries")) {
        int i = e.at(0).get<int>() - 1, jj = e.at(1).get<int>() - 1;
        GroupIndex::Elem g = e.at(2).get<std::vector<int>>();
        m.set(i, jj, g, parse_scalar(e.at(3).get<std::string>(), sym.params()));
    }
    return m;
}

std::vector<std::vector<Scalar>> load_matrix(const std::string &json_text) {
    ordered_json j = ordered_json::parse(json_text);
    ParamTablePtr params = empty_params();
    ordered_json rows;
    if (j.is_array()) {
        rows = j;
    } else {
        params = params_from_json(j);
        rows = j.at("A");
    }
    std::vector<std::vector<Scalar>> A;
    for (const auto &row : rows) {
        std::vector<Scalar> r;
        for (const auto &e : row)
            r.push_back(parse_scalar(e.get<std::string>(), params));
        A.push_back(std::move(r));
    }
    for (const auto &row : A)
        if (row.size() != A.size())
            throw RewriteError("matrix must be square");
    return A;
}

std::string suite_result_json(const SuiteResult &r) {
    ordered_json j;
    j["ok"] = r.ok();
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases"] = r.cases;
    j["max_deg"] = r.max_deg;
    j["checks"] = ordered_json::array();
    for (const auto &c : r.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["cases"] = c.cases;
        e["ok"] = c.ok();
        if (!c.ok()) e["counterexample"] = c.failures.front();
        j["checks"].push_back(e);
    }
    if (!r.ok()) {
        for (const auto &c : r.checks)
            if (!c.ok()) {
                j["counterexample"] = {{"check", c.name}, {"detail", c.failures.front()}};
                break;
            }
    }
    return j.dump(2);
}

} // namespace ncforms
