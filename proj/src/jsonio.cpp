#include "qharm/jsonio.hpp"

#include "qharm/parse.hpp"

namespace qharm {

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["nu"] = m.nu;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    json j;
    j["N"] = p.N();
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const json& j) {
    if (!j.contains("N") || !j.contains("terms")) throw Error("poly JSON: missing N or terms");
    const int N = j.at("N").get<int>();
    Poly p(N);
    for (const auto& t : j.at("terms")) {
        Monomial m(N);
        const auto& nu = t.at("nu");
        if (static_cast<int>(nu.size()) != N) throw Error("poly JSON: nu length differs from N");
        for (int i = 0; i < N; ++i) {
            m.nu[static_cast<std::size_t>(i)] = nu.at(static_cast<std::size_t>(i)).get<int>();
            if (m.nu[static_cast<std::size_t>(i)] < 0) throw Error("poly JSON: negative exponent");
        }
        p.add_term(m, parse_scalar(t.at("coeff").get<std::string>()));
    }
    return p;
}

json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    json j;
    j["rows"] = std::move(rows);
    return j;
}

json report_to_json(const Report& r) {
    json cells = json::array();
    for (const Cell& c : r.cells) {
        json jc;
        jc["id"] = c.id;
        jc["ok"] = c.ok;
        jc["detail"] = c.detail;
        cells.push_back(std::move(jc));
    }
    json j;
    j["suite"] = r.suite;
    j["cells"] = std::move(cells);
    return j;
}

json label_to_json(const HarmonicLabel& l) {
    json j;
    j["m"] = l.m;
    j["mp"] = l.mp;
    j["tail"] = l.tail;
    return j;
}

} // namespace qharm
