#include "gapsmith/serialize.hpp"

namespace gapsmith {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

bool flag(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) fail(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

Json encode_gap_kind(GapKind k) { return to_string(k); }

}  // namespace

Json encode(const Rational& r) { return r.str(); }

Rational decode_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) fail("rational must be a string like \"3/5\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        fail(e.what());
    }
}

Json encode(const Component& c) {
    if (c.is_point()) return Json{{"kind", "point"}, {"at", encode(c.lo)}};
    return Json{{"kind", "interval"},
                {"lo", encode(c.lo)},
                {"hi", encode(c.hi)},
                {"lo_closed", c.lo_closed},
                {"hi_closed", c.hi_closed}};
}

Component decode_component(const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind == "point") return Component::point(decode_rational(field(j, "at")));
    if (kind == "interval")
        return Component::interval(decode_rational(field(j, "lo")), decode_rational(field(j, "hi")),
                                   flag(j, "lo_closed"), flag(j, "hi_closed"));
    fail("component kind must be 'point' or 'interval'");
}

Json encode(const PointSet& s) {
    Json comps = Json::array();
    for (const auto& c : s.components()) comps.push_back(encode(c));
    return Json{{"components", comps}};
}

PointSet decode_pointset(const Json& j) {
    const Json& comps = field(j, "components");
    if (!comps.is_array()) fail("'components' must be an array");
    std::vector<Component> raw;
    for (const auto& c : comps) raw.push_back(decode_component(c));
    try {
        return PointSet::normalize(raw);
    } catch (const Error& e) {
        fail(e.what());
    }
}

Json encode(const Gap& g) {
    return Json{{"lo", encode(g.lo)}, {"hi", encode(g.hi)}, {"kind", encode_gap_kind(g.kind)},
                {"length", encode(g.length())}};
}

Json encode(const std::vector<Gap>& gs) {
    Json out = Json::array();
    for (const auto& g : gs) out.push_back(encode(g));
    return out;
}

Json encode(const PLMap& m) {
    Json pieces = Json::array();
    for (const auto& p : m.pieces())
        pieces.push_back(Json{{"lo", encode(p.domain.lo)},
                              {"hi", encode(p.domain.hi)},
                              {"lo_closed", p.domain.lo_closed},
                              {"hi_closed", p.domain.hi_closed},
                              {"slope", encode(p.slope)},
                              {"intercept", encode(p.intercept)},
                              {"tag", to_string(p.tag)}});
    return Json{{"pieces", pieces}, {"domain", encode(m.domain_hint())}};
}

PLMap decode_plmap(const Json& j) {
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array()) fail("'pieces' must be an array");
    std::vector<AffinePiece> out;
    std::vector<Component> doms;
    for (const auto& p : pieces) {
        AffinePiece a;
        a.domain = Component::interval(decode_rational(field(p, "lo")), decode_rational(field(p, "hi")),
                                       flag(p, "lo_closed"), flag(p, "hi_closed"));
        a.slope = decode_rational(field(p, "slope"));
        a.intercept = decode_rational(field(p, "intercept"));
        if (p.contains("tag")) {
            try {
                a.tag = piece_tag_from_string(p.at("tag").get<std::string>());
            } catch (const Error& e) {
                fail(e.what());
            }
        }
        doms.push_back(a.domain);
        out.push_back(a);
    }
    try {
        PointSet hint = j.contains("domain") ? decode_pointset(j.at("domain")) : PointSet::normalize(doms);
        return PLMap(std::move(out), std::move(hint));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        fail(e.what());
    }
}

Json encode(const Semiorder& r) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < r.size(); ++j) row.push_back(r.prec(i, j));
        rows.push_back(row);
    }
    return Json{{"n", r.size()}, {"strict", rows}};
}

Semiorder decode_semiorder(const Json& j) {
    const Json& n = field(j, "n");
    if (!n.is_number_unsigned()) fail("'n' must be a non-negative integer");
    const auto size = n.get<std::size_t>();
    const Json& rows = field(j, "strict");
    if (!rows.is_array() || rows.size() != size) fail("'strict' must have n rows");
    std::vector<std::vector<bool>> m;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != size) fail("every row of 'strict' must have n entries");
        std::vector<bool> r;
        for (const auto& v : row) {
            if (!v.is_boolean()) fail("relation entries must be booleans");
            r.push_back(v.get<bool>());
        }
        m.push_back(std::move(r));
    }
    return Semiorder(m);
}

Json encode(const SSRep& u) {
    Json vals = Json::array();
    for (const auto& v : u.values) vals.push_back(encode(v));
    return Json{{"values", vals}};
}

SSRep decode_ssrep(const Json& j) {
    const Json& vals = field(j, "values");
    if (!vals.is_array()) fail("'values' must be an array");
    SSRep u;
    for (const auto& v : vals) u.values.push_back(decode_rational(v));
    return u;
}

Json encode(const AxiomVerdict& v) {
    Json out{{"verdict", to_string(v.kind)}};
    if (!v.valid()) out["witness"] = v.witness;
    return out;
}

Json encode(const StepReport& s) {
    Json out{{"n", s.n}, {"case", to_string(s.case_tag)}};
    if (s.singleton) out["singleton"] = encode(*s.singleton);
    out["gamma_l"] = encode(s.gamma_l);
    out["gamma_r"] = encode(s.gamma_r);
    if (s.restart) out["restart"] = true;
    return out;
}

Json encode(const GapContext& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps)
        if (s.in_span) steps.push_back(encode(s));
    Json out{{"direction", to_string(c.direction)}, {"r", encode(c.r)}, {"ua", encode(c.ua)}, {"steps", steps}};
    if (c.failure) out["failure"] = Json{{"step", c.failure->n}, {"reason", c.failure->reason}};
    return out;
}

Json encode(const StructureReport& r) {
    Json out{{"verdict", r.pass() ? "Pass" : "Fail"}};
    if (r.failure)
        out["failure"] = Json{{"gap", encode(r.failure->gap)},
                              {"direction", to_string(r.failure->direction)},
                              {"step", r.failure->step},
                              {"reason", r.failure->reason}};
    Json gaps = Json::array();
    for (const auto& a : r.per_gap)
        gaps.push_back(Json{{"gap", encode(a.right.gap)}, {"right", encode(a.right)}, {"left", encode(a.left)}});
    out["gaps"] = gaps;
    return out;
}

Json encode(const RemovalStep& s) {
    return Json{{"n", s.index},
                {"gap", encode(s.gap_before)},
                {"delta", encode(s.delta)},
                {"l", encode(s.l)},
                {"map", encode(s.map)}};
}

Json encode(const ThresholdStep& s) {
    Json out{{"gap", encode(s.gap)}};
    if (s.interval) out["interval"] = *s.interval;
    out["orientation"] = to_string(s.plan.orientation);
    out["m"] = s.plan.m;
    out["m_prime"] = s.plan.m_prime;
    out["restarts"] = s.plan.restarts;
    out["right"] = encode(s.plan.structure.right);
    out["left"] = encode(s.plan.structure.left);
    out["sup_norm"] = encode(s.sup_norm);
    out["max_slope"] = encode(s.max_slope);
    out["expansion_bound"] = encode(s.expansion_bound);
    Json pieces = Json::array();
    for (const auto& p : s.plan.pieces)
        pieces.push_back(Json{{"lo", encode(p.domain.lo)},
                              {"hi", encode(p.domain.hi)},
                              {"slope", encode(p.slope)},
                              {"intercept", encode(p.intercept)},
                              {"tag", to_string(p.tag)}});
    out["pieces"] = pieces;
    return out;
}

Json encode(const ScheduleTrace& t) {
    Json deltas = Json::array();
    for (const auto& ds : t.per_interval_deltas) {
        Json row = Json::array();
        for (const auto& d : ds) row.push_back(encode(d));
        deltas.push_back(row);
    }
    Json ledger = Json::array();
    for (const auto& v : t.sup_norm_ledger) ledger.push_back(encode(v));
    return Json{{"interval_order", t.interval_order},
                {"per_interval_deltas", deltas},
                {"excluded_intervals", t.excluded_intervals},
                {"eps0", encode(t.eps0)},
                {"eps1", encode(t.eps1)},
                {"fallback", t.fallback},
                {"sup_norm_ledger", ledger},
                {"steps", t.steps.size()}};
}

}  // namespace gapsmith
