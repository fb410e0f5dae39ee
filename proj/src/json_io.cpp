#include "ydn/json_io.hpp"

namespace ydn {

using nlohmann::json;

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["coeff"] = rational_to_string(c);
        t["u"] = m.u_exp;
        t["z"] = m.z_exp;
        json xs = json::object();
        for (const auto& [k, e] : m.x_exps) xs[std::to_string(k)] = e;
        t["x"] = xs;
        terms.push_back(std::move(t));
    }
    return terms;
}

Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& t : j) {
        Monomial m;
        m.u_exp = t.value("u", 0);
        m.z_exp = t.value("z", 0);
        if (t.contains("x"))
            for (const auto& [k, e] : t.at("x").items())
                if (e.get<int>() != 0) m.x_exps[std::stoi(k)] = e.get<int>();
        p += Poly::term(m, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

json element_to_json(const AlgebraElement& a) {
    json out;
    out["d"] = a.d();
    out["n"] = a.n();
    json terms = json::array();
    for (const auto& [w, c] : a.terms()) {
        json levels = json::array();
        for (const auto& lvl : w.levels) {
            if (lvl.tail_from == 0)
                levels.push_back(json{{"F", lvl.exp}});
            else
                levels.push_back(json{{"G", json::array({lvl.tail_from, lvl.exp})}});
        }
        terms.push_back(json{{"levels", std::move(levels)}, {"coeff", poly_to_json(c)}});
    }
    out["terms"] = std::move(terms);
    return out;
}

AlgebraElement element_from_json(const json& j) {
    AlgebraElement a(j.at("d").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        BasisWord w;
        for (const auto& lvl : t.at("levels")) {
            if (lvl.contains("F"))
                w.levels.push_back(Level{0, lvl.at("F").get<int>()});
            else {
                const auto& g = lvl.at("G");
                w.levels.push_back(Level{g.at(0).get<int>(), g.at(1).get<int>()});
            }
        }
        a.add_term(w, poly_from_json(t.at("coeff")));
    }
    return a;
}

json solution_to_json(const ESolution& s) {
    json out;
    out["d"] = s.d;
    out["support"] = s.support;
    json vals = json::array();
    for (const auto& v : s.values.values) vals.push_back(json::array({v.real(), v.imag()}));
    out["values"] = std::move(vals);
    out["residual"] = s.residual;
    return out;
}

json report_to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& e : r.entries) {
        json c;
        c["name"] = e.name;
        c["pass"] = e.pass;
        if (!e.detail.empty()) c["detail"] = e.detail;
        checks.push_back(std::move(c));
    }
    return json{{"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

} // namespace ydn
