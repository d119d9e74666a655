#include "ckgraph/report_json.hpp"

namespace ckgraph {

Json to_json_value(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json_value(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json_value(x));
    return out;
}

Json to_json_value(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json_value(m.row(r)));
    return out;
}

Json to_json_value(const IntPolynomial& p) { return to_json_value(p.coefficients()); }

Json to_json_value(const AbelianGroup& g) {
    Json out;
    out["rank"] = g.free_rank;
    out["torsion"] = to_json_value(g.torsion);
    return out;
}

Json to_json_value(const SimplicityFlags& f) {
    Json out;
    out["irreducible"] = f.irreducible;
    out["permutation"] = f.permutation;
    out["simple"] = f.simple();
    return out;
}

Json to_json_value(const KTheoryReport& r) {
    Json out;
    out["g"] = r.genus;
    out["vertices"] = r.vertex_count;
    out["edges"] = r.edge_count;
    out["k0"] = to_json_value(r.k0);
    out["k1_rank"] = r.k1_rank;
    out["unit_order"] = r.unit.order ? to_json_value(*r.unit.order) : Json(nullptr);
    out["unit_order_closed_form"] =
        r.unit.closed_form ? to_json_value(*r.unit.closed_form) : Json(nullptr);
    Json witnesses;
    witnesses["unit"] = r.unit.order ? to_json_value(r.unit.witness) : Json(nullptr);
    witnesses["k1_basis"] = to_json_value(r.k1_basis);
    out["witnesses"] = std::move(witnesses);
    out["simplicity"] = to_json_value(r.simplicity);
    return out;
}

namespace {

Json evidence_json(const GraphEvidence& ev, bool with_unit) {
    Json out;
    out["g"] = ev.genus;
    out["k0"] = to_json_value(ev.k0);
    if (with_unit) {
        out["unit_order"] = ev.unit_order ? to_json_value(*ev.unit_order) : Json(nullptr);
        out["unit_witness"] = to_json_value(ev.unit_witness);
    }
    out["simplicity"] = to_json_value(ev.simplicity);
    return out;
}

}  // namespace

Json to_json_value(const Classification& c) {
    const bool strict = c.verdict == Verdict::Isomorphic || c.verdict == Verdict::NotIsomorphic ||
                        c.verdict == Verdict::Indeterminate;
    Json out;
    out["mode"] = strict ? "strict" : "stable";
    out["verdict"] = to_string(c.verdict);
    out["reason"] = c.reason;
    out["simplicity_caveat"] = c.simplicity_caveat;
    out["first"] = evidence_json(c.first, strict);
    out["second"] = evidence_json(c.second, strict);
    return out;
}

Json to_json_value(const ZetaReport& r) {
    Json out;
    out["g"] = r.genus;
    out["edge_poly"] = to_json_value(r.edge_poly);
    out["vertex_poly"] = to_json_value(r.vertex_poly);
    out["identity_holds"] = r.identity_holds;
    out["ord_at_one"] = r.ord_at_one;
    return out;
}

Json to_json_value(const ReductionTranscript& t) {
    Json out;
    out["g"] = t.genus;
    out["vertices"] = t.vertex_count;
    out["contraction_order"] = t.contraction_order;
    Json ops = Json::array();
    for (const auto& op : t.ops) ops.push_back(to_string(op));
    out["ops"] = std::move(ops);
    out["pivot_order"] = t.pivot_order;
    out["final_diagonal"] = to_json_value(t.final_diagonal);
    out["unit_image"] = to_json_value(t.unit_image);
    return out;
}

}  // namespace ckgraph
