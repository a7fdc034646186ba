#include "pwcenter/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pwcenter {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument(std::string(what) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

json edge_or_null(double v) {
    if (std::isinf(v)) return nullptr;
    return finite_or_clamp(v);
}

}  // namespace

double finite_or_clamp(double v) {
    if (std::isnan(v)) return 0.0;
    if (std::isinf(v)) return v > 0.0 ? 1e308 : -1e308;
    if (v == 0.0) return 0.0;  // canonicalize -0.0
    return v;
}

json to_json(const TrigPoly& p) {
    json j;
    j["a0"] = finite_or_clamp(p.a0());
    json jc = json::array(), js = json::array();
    for (int k = 1; k <= p.degree(); ++k) {
        jc.push_back(finite_or_clamp(p.cos_coeff(k)));
        js.push_back(finite_or_clamp(p.sin_coeff(k)));
    }
    j["cos"] = std::move(jc);
    j["sin"] = std::move(js);
    return j;
}

json to_json(const RealPoly& p) {
    json j = json::array();
    for (double c : p.coeffs()) j.push_back(finite_or_clamp(c));
    return j;
}

json to_json(const BandStructure& bs) {
    json j;
    json edges = json::array();
    for (double e : bs.edges) edges.push_back(finite_or_clamp(e));
    j["edges"] = std::move(edges);
    json bands = json::array();
    for (const Band& b : bs.bands) {
        json jb;
        jb["lo"] = edge_or_null(b.lo);
        jb["hi"] = edge_or_null(b.hi);
        jb["zero_count"] = b.zero_count;
        jb["profile"] = profile_name(b.profile);
        bands.push_back(std::move(jb));
    }
    j["bands"] = std::move(bands);
    return j;
}

json to_json(const HypothesisReport& rep) {
    json j;
    j["holds"] = rep.holds;
    j["band_lo"] = finite_or_clamp(rep.band_lo);
    j["band_hi"] = finite_or_clamp(rep.band_hi);
    j["merge_edge"] = rep.merge_edge > 0 ? "max" : (rep.merge_edge < 0 ? "min" : "none");
    j["t_merge"] = finite_or_clamp(rep.t_merge);
    j["b_at_merge"] = finite_or_clamp(rep.b_at_merge);
    json ev = json::array();
    for (const HypothesisSample& s : rep.evidence) {
        json je;
        je["x"] = finite_or_clamp(s.x);
        je["t1"] = finite_or_clamp(s.t1);
        je["t2"] = finite_or_clamp(s.t2);
        ev.push_back(std::move(je));
    }
    j["samples"] = std::move(ev);
    return j;
}

json to_json(const DecompositionOutcome& out) {
    json j;
    j["kind"] = outcome_kind_name(out.kind);
    j["frequency_factor"] = out.frequency_factor;
    j["residual"] = finite_or_clamp(out.residual);
    if (out.witness) {
        json w;
        w["p"] = to_json(out.witness->p);
        w["q"] = to_json(out.witness->q);
        w["h"] = to_json(out.witness->h);
        if (out.witness->integrated) {
            w["P"] = to_json(out.witness->integrated->first);
            w["Q"] = to_json(out.witness->integrated->second);
        }
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const ClassificationReport& rep) {
    json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["tau0"] = finite_or_clamp(rep.tau0);
    j["bands"] = to_json(rep.bands);
    j["hypothesis"] = rep.hypothesis ? to_json(*rep.hypothesis) : json(nullptr);
    j["decomposition"] = to_json(rep.outcome);
    json num;
    num["outer_positive"] = {{"slope", finite_or_clamp(rep.numeric.outer_positive.slope)},
                             {"offset", finite_or_clamp(rep.numeric.outer_positive.offset)}};
    num["outer_negative"] = {{"slope", finite_or_clamp(rep.numeric.outer_negative.slope)},
                             {"offset", finite_or_clamp(rep.numeric.outer_negative.offset)}};
    num["outer_ok"] = rep.numeric.outer_ok;
    num["max_abs_displacement"] = finite_or_clamp(rep.numeric.max_abs_displacement);
    json lc = json::array();
    for (double x : rep.numeric.limit_cycles) lc.push_back(finite_or_clamp(x));
    num["limit_cycles"] = std::move(lc);
    json scan = json::array();
    for (const DisplacementSample& s : rep.numeric.scan) {
        json js;
        js["x"] = finite_or_clamp(s.x);
        js["delta"] = finite_or_clamp(s.delta);
        scan.push_back(std::move(js));
    }
    num["scan"] = std::move(scan);
    j["numeric"] = std::move(num);
    j["consistency"] = rep.consistency;
    return j;
}

TrigPoly trigpoly_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("trig polynomial must be an object");
    double a0 = 0.0;
    if (j.contains("a0")) {
        if (!j["a0"].is_number()) throw std::invalid_argument("a0 must be a number");
        a0 = j["a0"].get<double>();
    }
    std::vector<double> cs, ss;
    if (j.contains("cos")) cs = number_array(j["cos"], "cos");
    if (j.contains("sin")) ss = number_array(j["sin"], "sin");
    cs.resize(std::max(cs.size(), ss.size()), 0.0);
    ss.resize(cs.size(), 0.0);
    return TrigPoly(a0, std::move(cs), std::move(ss));
}

RealPoly realpoly_from_json(const json& j) { return RealPoly(number_array(j, "polynomial")); }

PairInput pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("pair document needs fields \"a\" and \"b\"");
    return PairInput{trigpoly_from_json(j["a"]), trigpoly_from_json(j["b"])};
}

PairInput load_pair(const std::string& path) { return pair_from_json(load_json(path)); }

CompositionWitness witness_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("h"))
        throw std::invalid_argument("witness document needs fields \"p\", \"q\", \"h\"");
    CompositionWitness w;
    w.p = realpoly_from_json(j["p"]);
    w.q = realpoly_from_json(j["q"]);
    w.h = trigpoly_from_json(j["h"]);
    return w;
}

CompositionWitness load_witness(const std::string& path) {
    return witness_from_json(load_json(path));
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string displacement_csv(const std::vector<DisplacementSample>& scan) {
    std::ostringstream os;
    os << "x,delta\n";
    for (const DisplacementSample& s : scan) os << fmt17(s.x) << "," << fmt17(s.delta) << "\n";
    return os.str();
}

std::string trace_csv(const Trace& tr) {
    std::ostringstream os;
    os << "t,x,sign\n";
    for (const TracePoint& p : tr.samples)
        os << fmt17(p.t) << "," << fmt17(p.x) << "," << p.sign << "\n";
    return os.str();
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::global_center: return "global_center";
        case Verdict::not_global_center: return "not_global_center";
        default: return "inconclusive";
    }
}

const char* outcome_kind_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::witness: return "witness";
        case OutcomeKind::frequency_factor: return "frequency_factor";
        default: return "none";
    }
}

const char* profile_name(SignProfile p) {
    switch (p) {
        case SignProfile::positive: return "positive";
        case SignProfile::negative: return "negative";
        default: return "mixed";
    }
}

}  // namespace pwcenter
