#include "gq/io.hpp"

#include <json.hpp>

namespace gq {

namespace {

using nlohmann::json;

json rat_j(const Rat& r) { return r.to_string(); }

json germ_j(const PuiseuxGerm& g) {
    json terms = json::array();
    for (const auto& t : g.terms()) {
        json tj;
        tj["exp"] = rat_j(t.exp);
        if (t.coeff.is_approx()) {
            tj["approx"] = t.coeff.to_double();
        } else {
            tj["num"] = t.coeff.exact().num().str();
            tj["den"] = t.coeff.exact().den().str();
        }
        terms.push_back(std::move(tj));
    }
    json j;
    j["terms"] = std::move(terms);
    j["precision"] = g.order() ? rat_j(*g.order()) : json("exact");
    return j;
}

json scalar_j(const GenScalar& x) {
    json branches = json::array();
    for (const auto& b : x.branches()) {
        json bj = germ_j(b.germ);
        bj["set"] = b.set.to_string();
        branches.push_back(std::move(bj));
    }
    json j;
    j["branches"] = std::move(branches);
    return j;
}

json quat_j(const GenQuaternion& q) {
    json j;
    j["x0"] = scalar_j(q.x0());
    j["x1"] = scalar_j(q.x1());
    j["x2"] = scalar_j(q.x2());
    j["x3"] = scalar_j(q.x3());
    return j;
}

json sample_j(const Sample& s) { return json{{"eps", s.eps}, {"value", s.value}}; }

json report_j(const OracleReport& r) {
    json j;
    j["decision"] = r.decision;
    j["samples"] = json::array();
    for (const auto& s : r.samples) j["samples"].push_back(sample_j(s));
    j["verdict"] = verdict_name(r.verdict);
    j["margin"] = r.margin;
    if (r.counterexample) j["counterexample"] = sample_j(*r.counterexample);
    return j;
}

json ideal_j(const FgIdeal& i) {
    json j;
    j["ring"] = i.ring() == RingTag::scalar ? "scalar" : "quaternion";
    j["generators"] = json::array();
    for (const auto& g : i.generators()) j["generators"].push_back(quat_j(g));
    j["normal_form"] = {{"g", scalar_j(i.principal())}, {"supp", i.support().to_string()}};
    json certs = json::array();
    for (const auto& w : i.bezout_witnesses()) certs.push_back(quat_j(w));
    j["bezout_witnesses"] = std::move(certs);
    return j;
}

json value_j(const Value& v) {
    struct V {
        json operator()(const GenScalar& s) const {
            json j = scalar_j(s);
            j["type"] = "scalar";
            j["text"] = s.to_string();
            return j;
        }
        json operator()(const GenQuaternion& q) const {
            json j = quat_j(q);
            j["type"] = "quaternion";
            j["text"] = q.to_string();
            return j;
        }
        json operator()(bool b) const { return json{{"type", "bool"}, {"value", b}}; }
        json operator()(double d) const { return json{{"type", "real"}, {"value", d}}; }
        json operator()(const ValuationResult& r) const {
            // A(x) is the open interval below the valuation.
            json a = r.v ? json("(-inf, " + r.v->to_string() + ")") : json("(-inf, +inf)");
            return json{{"type", "valuation"},
                        {"value", r.v ? json(r.v->to_string()) : json("+inf")},
                        {"A", std::move(a)}};
        }
        json operator()(const BlockSet& s) const {
            return json{{"type", "blockset"}, {"value", s.to_string()}};
        }
        json operator()(const FgIdeal& i) const {
            json j = ideal_j(i);
            j["type"] = "ideal";
            return j;
        }
        json operator()(const PolarValue& p) const {
            return json{{"type", "polar"}, {"theta", quat_j(p.theta)}, {"n", scalar_j(p.n)}};
        }
        json operator()(const ShadowResult& s) const {
            if (!s.a) return json{{"type", "shadow"}, {"value", nullptr}};
            json a = json::array();
            for (const auto& c : *s.a) a.push_back(rat_j(c));
            return json{{"type", "shadow"}, {"value", std::move(a)}};
        }
        json operator()(const IdemResult& r) const {
            return json{{"type", "idempotent"},
                        {"value", r.set ? json(r.set->to_string()) : json(nullptr)}};
        }
        json operator()(const OracleReport& r) const {
            json j = report_j(r);
            j["type"] = "oracle-report";
            return j;
        }
    };
    return std::visit(V{}, v);
}

}  // namespace

std::string scalar_json(const GenScalar& x) { return scalar_j(x).dump(); }
std::string quaternion_json(const GenQuaternion& x) { return quat_j(x).dump(); }
std::string report_json(const OracleReport& r) { return report_j(r).dump(); }

std::string summary_json(const SuiteSummary& s) {
    json j;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["checks_run"] = s.checks_run;
    j["mismatches"] = json::array();
    for (const auto& m : s.mismatches)
        j["mismatches"].push_back(
            json{{"trial", m.trial}, {"decision", m.decision}, {"report", report_j(m.report)}});
    return j.dump();
}

std::string ideal_json(const FgIdeal& i) { return ideal_j(i).dump(); }
std::string value_json(const Value& v) { return value_j(v).dump(); }

}  // namespace gq
