#include "parastat/json_io.hpp"

namespace parastat {

using nlohmann::json;

json to_json(const Rational &r) { return r.str(); }

json to_json(const QSqrt2 &q) { return json{{"a", q.a.str()}, {"b", q.b.str()}}; }

json to_json(const WeightVector &w, int n) { return w.str(n); }

json to_json(const AlgebraElement &x) {
    json entries = json::array();
    for (const auto &[pos, v] : x.entries())
        entries.push_back(
            json{{"row", pos.first}, {"col", pos.second}, {"value", to_json(v)}});
    json out{{"entries", entries}};
    if (x.grade())
        out["grade"] = json::array({x.grade()->a1, x.grade()->a2});
    return out;
}

json to_json(const CreationWord &w) { return json(w); }

json to_json(const FockVector &v) {
    json out = json::array();
    for (const auto &[w, c] : v.terms())
        out.push_back(json{{"word", to_json(w)}, {"coeff", c.str()}});
    return out;
}

json to_json(const GZPattern &p) {
    json rows = json::array();
    for (int r = 1; r <= 2 * p.n; ++r) {
        json row = json::array();
        for (int v : p.row(r).neg)
            row.push_back(v);
        for (int v : p.row(r).pos)
            row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const InfiniteGZPattern &p) {
    return json{{"stability", p.stability()}, {"nu", json(p.nu)}, {"body", to_json(p.body)}};
}

json block_summary(const LevelBlock &b) {
    return json{{"weight", b.weight.str(b.n)},
                {"words", b.words.size()},
                {"rank", b.rank},
                {"radicalDim", b.words.size() - b.rank}};
}

} // namespace parastat
