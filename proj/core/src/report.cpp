#include "cosetcurv/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cosetcurv {

namespace {

using nlohmann::ordered_json;

ordered_json opt_int(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

ordered_json opt_rat(const std::optional<Rat>& v) {
    if (v) return v->to_string();
    return nullptr;
}

ordered_json measured_json(const MeasuredQuantities& m) {
    ordered_json j;
    j["n"] = m.n;
    j["dim"] = m.dim;
    j["diameter"] = opt_int(m.diameter);
    j["covering_radius"] = opt_int(m.covering_radius);
    j["kappa_graph"] = opt_rat(m.kappa_graph);
    j["K"] = m.k;
    j["sigma"] = m.sigma;
    j["p"] = m.p;
    j["t"] = m.t;
    j["regular"] = m.regular;
    j["sphere_profile"] = m.sphere_profile;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string report_to_json(const AnalysisReport& rep) {
    ordered_json j;
    j["code"] = ordered_json{{"source", rep.source}};
    j["measured"] = measured_json(rep.measured);
    ordered_json bounds = ordered_json::array();
    for (const auto& b : rep.bounds) {
        ordered_json e;
        e["id"] = b.id;
        e["anchor"] = b.anchor;
        e["value"] = b.value;
        e["compares_to"] = b.compares_to;
        e["measured"] = b.measured;
        e["status"] = to_string(b.status);
        e["note"] = b.note;
        bounds.push_back(std::move(e));
    }
    j["bounds"] = std::move(bounds);
    if (rep.stage_ms.empty()) {
        j["timing"] = nullptr;
    } else {
        ordered_json t;
        for (const auto& [name, ms] : rep.stage_ms) t[name] = ms;
        j["timing"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

std::string report_to_csv(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "id,anchor,value,compares_to,measured,status,note\n";
    for (const auto& b : rep.bounds)
        out << csv_field(b.id) << ',' << csv_field(b.anchor) << ',' << csv_field(b.value)
            << ',' << csv_field(b.compares_to) << ',' << csv_field(b.measured) << ','
            << to_string(b.status) << ',' << csv_field(b.note) << '\n';
    return out.str();
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    const auto& m = rep.measured;
    out << "source: " << rep.source << '\n';
    out << "n: " << m.n << "\ndim: " << m.dim << '\n';
    out << "diameter: " << (m.diameter ? std::to_string(*m.diameter) : "not measured")
        << '\n';
    out << "covering_radius: "
        << (m.covering_radius ? std::to_string(*m.covering_radius) : "not measured") << '\n';
    out << "kappa_graph: " << (m.kappa_graph ? m.kappa_graph->to_string() : "not measured")
        << '\n';
    out << "K: " << m.k << "\nsigma: " << m.sigma << "\np: " << m.p << "\nt: " << m.t
        << "\nregular: " << (m.regular ? "true" : "false") << '\n';
    out << "sphere_profile:";
    if (m.sphere_profile.empty()) {
        out << " not measured";
    } else {
        for (auto s : m.sphere_profile) out << ' ' << s;
    }
    out << '\n';
    out << "bounds:\n";
    for (const auto& b : rep.bounds) {
        out << "  [" << to_string(b.status) << "] " << b.id << ": " << b.anchor;
        if (!b.value.empty()) out << "  value=" << b.value;
        if (!b.measured.empty()) out << "  " << b.compares_to << "=" << b.measured;
        if (!b.note.empty()) out << "  (" << b.note << ")";
        out << '\n';
    }
    if (!rep.stage_ms.empty()) {
        out << "timing_ms:";
        for (const auto& [name, ms] : rep.stage_ms) out << ' ' << name << '=' << ms;
        out << '\n';
    }
    out << "certifying: " << (rep.all_certifying_pass() ? "pass" : "fail") << '\n';
    return out.str();
}

std::string curvature_to_json(const CurvatureReport& rep, const std::string& source) {
    ordered_json j;
    j["code"] = ordered_json{{"source", source}};
    ordered_json dirs = ordered_json::array();
    for (const auto& d : rep.per_direction) dirs.push_back(opt_rat(d));
    j["per_direction"] = std::move(dirs);
    j["kappa_graph"] = rep.kappa_graph.to_string();
    j["max_jump"] = rep.max_jump.to_string();
    j["bonnet_myers_bound"] = opt_rat(rep.bonnet_myers_bound);
    return j.dump(2) + "\n";
}

std::string curvature_to_text(const CurvatureReport& rep, const std::string& source) {
    std::ostringstream out;
    out << "source: " << source << '\n';
    for (std::size_t i = 0; i < rep.per_direction.size(); ++i) {
        out << "direction " << i << ": ";
        if (rep.per_direction[i])
            out << rep.per_direction[i]->to_string();
        else
            out << "loop";
        out << '\n';
    }
    out << "kappa_graph: " << rep.kappa_graph.to_string() << '\n';
    out << "max_jump: " << rep.max_jump.to_string() << '\n';
    if (rep.bonnet_myers_bound)
        out << "bonnet_myers_bound: " << rep.bonnet_myers_bound->to_string() << '\n';
    return out.str();
}

namespace {

ordered_json ensemble_json(const SubsetEnsemble& e, const EnsembleContext& ctx) {
    ordered_json j;
    j["code"] = ordered_json{{"source", ctx.source}};
    j["q"] = ctx.q;
    j["a"] = ctx.a.to_string();
    j["seed"] = ctx.seed;
    j["trials"] = e.trials;
    j["delta"] = e.delta.to_string();
    j["b_sizes"] = e.b_sizes;
    j["bullet1_count"] = e.bullet1_count;
    j["bullet2_all"] = e.bullet2_all;
    if (e.mean_within_5_over_4)
        j["mean_within_5_over_4"] = *e.mean_within_5_over_4;
    else
        j["mean_within_5_over_4"] = nullptr;
    return j;
}

} // namespace

std::string ensemble_to_json(const SubsetEnsemble& e, const EnsembleContext& ctx) {
    return ensemble_json(e, ctx).dump(2) + "\n";
}

std::string ensemble_to_text(const SubsetEnsemble& e, const EnsembleContext& ctx) {
    std::ostringstream out;
    out << "source: " << ctx.source << '\n';
    out << "q: " << ctx.q << "  a: " << ctx.a.to_string() << "  seed: " << ctx.seed
        << "  trials: " << e.trials << '\n';
    out << "delta: " << e.delta.to_string() << '\n';
    long long total = 0;
    for (auto s : e.b_sizes) total += s;
    out << "mean |B|: " << (e.trials ? static_cast<double>(total) / e.trials : 0.0) << '\n';
    out << "bullet1 (size bound) held in " << e.bullet1_count << "/" << e.trials
        << " trials\n";
    out << "bullet2 (coverage) held in all trials: " << (e.bullet2_all ? "true" : "false")
        << '\n';
    if (e.mean_within_5_over_4)
        out << "mean within 5/4 of the size bound: "
            << (*e.mean_within_5_over_4 ? "true" : "false") << '\n';
    else
        out << "mean within 5/4 of the size bound: not applicable (delta = 0)\n";
    return out.str();
}

} // namespace cosetcurv
