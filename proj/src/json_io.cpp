#include <jetmoduli/json_io.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetmoduli {

namespace {

std::string component_key(int l, int i, int j) {
    return std::to_string(l + 1) + "," + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::string monomial_key(const MultiIndex& m) {
    std::string s;
    for (int v = 0; v < m.vars(); ++v) {
        if (v) s += ',';
        s += std::to_string(m[v]);
    }
    return s;
}

std::vector<int> parse_ints(const std::string& key) {
    std::vector<int> out;
    std::istringstream in(key);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

template <class Tag>
Json components_to_json(const ComponentJet<Tag>& g) {
    Json comps = Json::object();
    const int n = g.vars();
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& p = g.component(l, i, j);
                if (p.is_zero()) continue;
                Json entry = Json::object();
                for (const auto& [m, c] : p.terms()) entry[monomial_key(m)] = c.fraction_string();
                comps[component_key(l, i, j)] = std::move(entry);
            }
    Json out = Json::object();
    out["n"] = g.vars();
    out["order"] = g.order();
    out["components"] = std::move(comps);
    return out;
}

}  // namespace

Json jet_to_json(const ConnectionJet& g) { return components_to_json(g); }
Json jet_to_json(const TensorJet& t) { return components_to_json(t); }

ConnectionJet connection_jet_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const int order = j.at("order").get<int>();
    ConnectionJet g(n, order);
    for (const auto& [key, entry] : j.at("components").items()) {
        const auto lij = parse_ints(key);
        if (lij.size() != 3) throw std::invalid_argument("jet json: bad component key '" + key + "'");
        for (const auto& [mkey, val] : entry.items()) {
            const auto exps = parse_ints(mkey);
            if (static_cast<int>(exps.size()) != n)
                throw std::invalid_argument("jet json: bad monomial key '" + mkey + "'");
            g.component(lij[0] - 1, lij[1] - 1, lij[2] - 1)
                .set_coeff(MultiIndex(exps), Rational::parse(val.get<std::string>()));
        }
    }
    return g;
}

Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).fraction_string());
        rows.push_back(std::move(row));
    }
    Json out = Json::object();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

}  // namespace jetmoduli
