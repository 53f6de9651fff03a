#include "qea/json_io.hpp"

#include "qea/error.hpp"

namespace qea {

namespace {

Json laurent_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.to_map()) arr.push_back(Json::array({e, c.get_str()}));
    return arr;
}

LaurentPoly laurent_from_json(const Json& j) {
    std::map<int, Rat> m;
    for (const auto& item : j) {
        int e = item.at(0).get<int>();
        Rat c(item.at(1).get<std::string>());
        c.canonicalize();
        m[e] = c;
    }
    return LaurentPoly::from_map(m);
}

Json ratfunc_to_json(const RatFunc& f) {
    return Json{{"num", laurent_to_json(f.num())}, {"den", laurent_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    return Json{{"a", ratfunc_to_json(s.a())}, {"b", ratfunc_to_json(s.b())}};
}

Scalar scalar_from_json(const ScalarSpecPtr& spec, const Json& j) {
    return Scalar::of(spec, ratfunc_from_json(j.at("a")), ratfunc_from_json(j.at("b")));
}

Json ncexpr_to_json(const NcExpr& x) {
    Json arr = Json::array();
    for (const auto& t : x.terms()) {
        Json word = Json::array();
        for (const Gen& g : t.mono.word)
            word.push_back(std::string(g.f ? "f" : "e") + std::to_string(g.idx + 1));
        Json texp = Json::array();
        for (const Rat& r : t.mono.texp) texp.push_back(r.get_str());
        arr.push_back(Json{{"coeff", scalar_to_json(t.coeff)}, {"word", word}, {"texp", texp}});
    }
    return arr;
}

NcExpr ncexpr_from_json(const AlgebraSpecPtr& spec, const Json& j) {
    std::vector<NcTerm> terms;
    for (const auto& item : j) {
        NcTerm t;
        t.coeff = scalar_from_json(spec->scalar, item.at("coeff"));
        for (const auto& w : item.at("word")) {
            std::string sym = w.get<std::string>();
            if (sym.size() < 2 || (sym[0] != 'e' && sym[0] != 'f'))
                throw Error("ncexpr_from_json: bad generator symbol " + sym);
            t.mono.word.push_back(Gen{sym[0] == 'f', std::stoi(sym.substr(1)) - 1});
        }
        for (const auto& e : item.at("texp")) t.mono.texp.push_back(rat_from_string(e.get<std::string>()));
        if (static_cast<int>(t.mono.texp.size()) != spec->rank)
            throw Error("ncexpr_from_json: t-exponent size mismatch");
        terms.push_back(std::move(t));
    }
    return NcExpr(spec, std::move(terms));
}

namespace {

Json spmat_triplets(const SpMat& m) {
    Json arr = Json::array();
    for (int r = 0; r < m.dim(); ++r)
        for (const auto& [c, v] : m.row(r)) arr.push_back(Json::array({r + 1, c + 1, scalar_to_json(v)}));
    return arr;
}

}  // namespace

Json rep_to_json(const Representation& rep) {
    Json tw = Json::array();
    for (const auto& row : rep.t_weights) {
        Json jr = Json::array();
        for (const Rat& r : row) jr.push_back(r.get_str());
        tw.push_back(jr);
    }
    Json e = Json::array(), f = Json::array();
    for (const auto& m : rep.e_mats) e.push_back(spmat_triplets(m));
    for (const auto& m : rep.f_mats) f.push_back(spmat_triplets(m));
    return Json{{"algebra", rep.spec->name},
                {"label", rep.label},
                {"dim", rep.dim},
                {"t_weights", tw},
                {"e", e},
                {"f", f}};
}

Json rmatrix_to_json(const RMatrix& R) {
    Json arr = Json::array();
    for (int row = 0; row < R.n * R.n; ++row)
        for (const auto& [col, v] : R.mat.row(row)) {
            int c = row / R.n + 1, a = row % R.n + 1, d = col / R.n + 1, b = col % R.n + 1;
            arr.push_back(Json::array({c, a, d, b, scalar_to_json(v)}));
        }
    return Json{{"algebra", R.spec->name}, {"dim", R.n}, {"entries", arr}};
}

Json dual_pair_set_to_json(const AlgebraSpecPtr& spec, const DualPairSet& dps) {
    auto words_json = [](const std::vector<Word>& ws, bool f_kind) {
        Json arr = Json::array();
        for (const Word& w : ws) {
            Json jw = Json::array();
            for (const Gen& g : w)
                jw.push_back(std::string(f_kind ? "f" : "e") + std::to_string(g.idx + 1));
            arr.push_back(jw);
        }
        return arr;
    };
    Json gram = Json::array();
    for (const auto& row : dps.gram) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(scalar_to_json(v));
        gram.push_back(jr);
    }
    Json terms = Json::array();
    for (const auto& [u, v] : dps.terms)
        terms.push_back(Json{{"u", ncexpr_to_json(u)}, {"v", ncexpr_to_json(v)}});
    return Json{{"beta", dps.beta},
                {"e_words", words_json(dps.e_words, false)},
                {"f_words", words_json(dps.f_words, true)},
                {"gram", gram},
                {"rank", dps.rank},
                {"terms", terms}};
}

Json lmatrix_to_json(const LMatrix& L) {
    Json rows = Json::array();
    for (int a = 0; a < L.n; ++a) {
        Json row = Json::array();
        for (int b = 0; b < L.n; ++b) row.push_back(ncexpr_to_json(L.at[a][b]));
        rows.push_back(row);
    }
    return Json{{"algebra", L.spec->name},
                {"kind", L.kind == LMatrix::Kind::minus ? "minus" : "plus"},
                {"source", L.source == LMatrix::Source::slice ? "slice" : "catalog"},
                {"dim", L.n},
                {"entries", rows}};
}

}  // namespace qea
