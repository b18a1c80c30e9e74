#include "superorbit/json_io.hpp"
#include "superorbit/parser.hpp"

namespace superorbit::io {

json poly_to_json(const SuperPolynomial& p) {
    json out = json::array();
    for (auto& [m, c] : p.terms()) {
        json term;
        term["even"] = m.even_exp;
        json odd = json::array();
        for (int i : m.odd_idx) odd.push_back(i + 1);
        term["odd"] = std::move(odd);
        term["coeff"] = rat_to_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

SuperPolynomial poly_from_json(const json& j, const SigPtr& sig) {
    if (!j.is_array()) throw Error("polynomial JSON must be a term list");
    SuperPolynomial p(sig);
    for (auto& term : j) {
        Monomial m;
        m.even_exp = term.at("even").get<std::vector<int>>();
        if ((int)m.even_exp.size() != sig->even_count())
            throw SignatureMismatch("even exponent list length mismatch");
        for (auto& idx : term.at("odd")) m.odd_idx.push_back(idx.get<int>() - 1);
        p.add_term(m, rat_from_string(term.at("coeff").get<std::string>()));
    }
    return p;
}

json hpoly_to_json(const HPolynomial& p) {
    json out = json::array();
    for (auto& [m, c] : p.terms()) {
        json term;
        term["even"] = m.even_exp;
        json odd = json::array();
        for (int i : m.odd_idx) odd.push_back(i + 1);
        term["odd"] = std::move(odd);
        json coeff = json::array();
        for (int k = 0; k <= c.order(); ++k) coeff.push_back(rat_to_string(c.at(k)));
        term["coeff"] = std::move(coeff);
        out.push_back(std::move(term));
    }
    return out;
}

json matrix_to_json(const SuperMatrix& a) {
    json out;
    out["m"] = a.shape().m;
    out["n"] = a.shape().n;
    json entries = json::array();
    for (int i = 0; i < a.shape().total(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.shape().total(); ++j) row.push_back(to_text(a.at(i, j)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

SuperMatrix matrix_from_json(const json& j, const SigPtr& ring, MatParity declared) {
    BlockShape sh{j.at("m").get<int>(), j.at("n").get<int>()};
    const json& entries = j.at("entries");
    if ((int)entries.size() != sh.total()) throw Error("matrix entry grid size mismatch");
    SuperMatrix a(sh, ring, declared);
    for (int r = 0; r < sh.total(); ++r) {
        if ((int)entries[r].size() != sh.total()) throw Error("matrix entry grid size mismatch");
        for (int c = 0; c < sh.total(); ++c)
            a.set(r, c, parse_poly(entries[r][c].get<std::string>(), ring));
    }
    return a;
}

json algebra_to_json(const LieSuperAlgebra& L) {
    json out;
    out["dim"] = L.dim();
    out["parity"] = L.parities();
    json table = json::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            for (auto& [k, v] : L.bracket(i, j)) {
                json entry;
                entry["i"] = i + 1;
                entry["j"] = j + 1;
                entry["k"] = k + 1;
                entry["v"] = rat_to_string(v);
                table.push_back(std::move(entry));
            }
    out["c"] = std::move(table);
    return out;
}

std::shared_ptr<LieSuperAlgebra> algebra_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<int> parity = j.at("parity").get<std::vector<int>>();
    if ((int)parity.size() != dim) throw Error("parity list length mismatch");
    std::vector<std::vector<BracketRow>> table(dim, std::vector<BracketRow>(dim));
    for (auto& entry : j.at("c")) {
        int i = entry.at("i").get<int>() - 1;
        int jj = entry.at("j").get<int>() - 1;
        int k = entry.at("k").get<int>() - 1;
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw Error("structure constant index out of range");
        table[i][jj].emplace_back(k, rat_from_string(entry.at("v").get<std::string>()));
    }
    return std::make_shared<LieSuperAlgebra>(std::move(parity), std::move(table));
}

json orbit_to_json(const OrbitSpec& spec) {
    json out;
    out["kind"] = kind_to_string(spec.kind());
    out["m"] = spec.shape().m;
    out["n"] = spec.shape().n;
    json lambda = json::array();
    for (auto& l : spec.lambda()) lambda.push_back(rat_to_string(l));
    out["lambda"] = std::move(lambda);
    return out;
}

OrbitSpec orbit_from_json(const json& j) {
    QVector lambda;
    for (auto& l : j.at("lambda")) lambda.push_back(rat_from_string(l.get<std::string>()));
    return OrbitSpec(kind_from_string(j.at("kind").get<std::string>()),
                     j.at("m").get<int>(), j.at("n").get<int>(), std::move(lambda));
}

json env_to_json(const EnvElement& e) {
    json out = json::array();
    for (auto& [w, c] : e.terms()) {
        json term;
        json word = json::array();
        for (int i : w.idx) word.push_back(i + 1);
        term["word"] = std::move(word);
        json coeff = json::array();
        for (int k = 0; k <= c.order(); ++k) coeff.push_back(rat_to_string(c.at(k)));
        term["coeff"] = std::move(coeff);
        out.push_back(std::move(term));
    }
    return out;
}

EnvElement env_from_json(const json& j, const AlgebraPtr& L, int h_order) {
    EnvElement e(L, h_order);
    for (auto& term : j) {
        NormalWord w;
        for (auto& idx : term.at("word")) w.idx.push_back(idx.get<int>() - 1);
        HSeries c(h_order);
        const json& coeff = term.at("coeff");
        for (size_t k = 0; k < coeff.size(); ++k) {
            if ((int)k > h_order) break;
            c.set((int)k, rat_from_string(coeff[k].get<std::string>()));
        }
        e.add(w, c);
    }
    return e;
}

SigPtr infer_ring_from_matrix_json(const json& j) {
    int max_even = 0, max_odd = 0;
    auto scan = [&](const std::string& text) {
        for (size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if ((c == 'x' || c == 't') && i + 1 < text.size() && isdigit((unsigned char)text[i + 1])) {
                int v = 0;
                size_t k = i + 1;
                while (k < text.size() && isdigit((unsigned char)text[k])) v = v * 10 + (text[k++] - '0');
                if (c == 'x') max_even = std::max(max_even, v);
                else max_odd = std::max(max_odd, v);
                i = k - 1;
            }
        }
    };
    for (auto& row : j.at("entries"))
        for (auto& cell : row) scan(cell.get<std::string>());
    return make_signature(max_even, max_odd);
}

} // namespace superorbit::io
