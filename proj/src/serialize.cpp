#include "levyhull/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levyhull {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

const ojson& field(const ojson& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

double num_field(const ojson& j, const char* key, const char* what) {
    const ojson& v = field(j, key, what);
    if (!v.is_number())
        throw std::invalid_argument(std::string(what) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

std::vector<double> vec_field(const ojson& j, const char* key, const char* what) {
    const ojson& v = field(j, key, what);
    if (!v.is_array())
        throw std::invalid_argument(std::string(what) + ": field '" + key + "' must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw std::invalid_argument(std::string(what) + ": field '" + key +
                                        "' must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

} // namespace

ojson path_to_json(const JumpPath& path) {
    ojson j;
    j["kind"] = "jump";
    j["horizon"] = {path.horizon().lo, path.horizon().hi};
    j["initial"] = path.initial();
    j["times"] = path.times();
    j["sizes"] = path.sizes();
    return j;
}

ojson path_to_json(const GridPath& path) {
    ojson j;
    j["kind"] = "grid";
    j["t0"] = path.t0();
    j["h"] = path.h();
    j["values"] = path.values();
    return j;
}

AnyPath path_from_json(const ojson& j) {
    const ojson& kind = field(j, "kind", "path");
    if (kind == "jump") {
        std::vector<double> hz = vec_field(j, "horizon", "path");
        if (hz.size() != 2)
            throw std::invalid_argument("path: field 'horizon' must be a pair");
        return JumpPath(Horizon{hz[0], hz[1]}, num_field(j, "initial", "path"),
                        vec_field(j, "times", "path"), vec_field(j, "sizes", "path"));
    }
    if (kind == "grid") {
        return GridPath(num_field(j, "t0", "path"), num_field(j, "h", "path"),
                        vec_field(j, "values", "path"));
    }
    throw std::invalid_argument("path: field 'kind' must be 'jump' or 'grid'");
}

ojson measure_to_json(const LevyMeasure& spec) {
    ojson j;
    switch (spec.family()) {
        case LevyMeasure::Family::CompoundPoisson: {
            j["family"] = "compound_poisson";
            j["rate"] = spec.rate();
            ojson law;
            switch (spec.law().kind) {
                case JumpLaw::Kind::PointMass:
                    law["kind"] = "point";
                    law["value"] = spec.law().a;
                    break;
                case JumpLaw::Kind::Normal:
                    law["kind"] = "normal";
                    law["mean"] = spec.law().a;
                    law["sd"] = spec.law().b;
                    break;
                case JumpLaw::Kind::Uniform:
                    law["kind"] = "uniform";
                    law["lo"] = spec.law().a;
                    law["hi"] = spec.law().b;
                    break;
            }
            j["law"] = law;
            break;
        }
        case LevyMeasure::Family::StableLike:
            j["family"] = "stable";
            j["c_plus"] = spec.c_plus();
            j["c_minus"] = spec.c_minus();
            j["alpha"] = spec.alpha();
            j["cap"] = spec.cap();
            j["floor_plus"] = spec.floor_plus();
            j["floor_minus"] = spec.floor_minus();
            break;
        case LevyMeasure::Family::Table: {
            j["family"] = "table";
            ojson atoms = ojson::array();
            for (const auto& [size, rate] : spec.atoms())
                atoms.push_back({size, rate});
            j["atoms"] = atoms;
            break;
        }
    }
    j["drift"] = spec.drift();
    return j;
}

LevyMeasure measure_from_json(const ojson& j) {
    const ojson& fam = field(j, "family", "measure");
    double drift = j.contains("drift") ? num_field(j, "drift", "measure") : 0.0;
    if (fam == "compound_poisson") {
        const ojson& law = field(j, "law", "measure");
        const ojson& kind = field(law, "kind", "measure.law");
        JumpLaw l = JumpLaw::point_mass(1.0);
        if (kind == "point")
            l = JumpLaw::point_mass(num_field(law, "value", "measure.law"));
        else if (kind == "normal")
            l = JumpLaw::normal(num_field(law, "mean", "measure.law"),
                                num_field(law, "sd", "measure.law"));
        else if (kind == "uniform")
            l = JumpLaw::uniform(num_field(law, "lo", "measure.law"),
                                 num_field(law, "hi", "measure.law"));
        else
            throw std::invalid_argument("measure.law: field 'kind' must be point, normal, or uniform");
        return LevyMeasure::compound_poisson(num_field(j, "rate", "measure"), l, drift);
    }
    if (fam == "stable") {
        double fp = j.contains("floor_plus") ? num_field(j, "floor_plus", "measure") : 0.0;
        double fm = j.contains("floor_minus") ? num_field(j, "floor_minus", "measure") : 0.0;
        return LevyMeasure::stable_like(num_field(j, "c_plus", "measure"),
                                        num_field(j, "c_minus", "measure"),
                                        num_field(j, "alpha", "measure"),
                                        num_field(j, "cap", "measure"), fp, fm, drift);
    }
    if (fam == "table") {
        const ojson& atoms = field(j, "atoms", "measure");
        if (!atoms.is_array())
            throw std::invalid_argument("measure: field 'atoms' must be an array");
        std::vector<std::pair<double, double>> out;
        for (const auto& a : atoms) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
                throw std::invalid_argument("measure: field 'atoms' must hold [size, rate] pairs");
            out.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
        return LevyMeasure::table(std::move(out), drift);
    }
    throw std::invalid_argument("measure: field 'family' must be compound_poisson, stable, or table");
}

ojson drift_to_json(const Drift& f) {
    ojson j;
    switch (f.kind) {
        case Drift::Kind::Zero:
            j["kind"] = "zero";
            break;
        case Drift::Kind::Linear:
            j["kind"] = "linear";
            j["beta"] = f.beta;
            break;
        case Drift::Kind::Quadratic:
            j["kind"] = "quadratic";
            j["gamma"] = f.gamma;
            break;
        case Drift::Kind::Parabolic:
            j["kind"] = "parabolic";
            j["t"] = f.t;
            break;
        case Drift::Kind::Sampled:
            j["kind"] = "sampled";
            j["xs"] = f.xs;
            j["values"] = f.fs;
            j["slopes"] = f.slopes;
            break;
    }
    return j;
}

Drift drift_from_json(const ojson& j) {
    const ojson& kind = field(j, "kind", "drift");
    if (kind == "zero")
        return Drift::zero();
    if (kind == "linear")
        return Drift::linear(num_field(j, "beta", "drift"));
    if (kind == "quadratic")
        return Drift::quadratic(num_field(j, "gamma", "drift"));
    if (kind == "parabolic")
        return Drift::parabolic(num_field(j, "t", "drift"));
    if (kind == "sampled")
        return Drift::sampled(vec_field(j, "xs", "drift"), vec_field(j, "values", "drift"),
                              vec_field(j, "slopes", "drift"));
    throw std::invalid_argument("drift: field 'kind' is not one of the known shapes");
}

ojson majorant_to_json(const Majorant& m) {
    ojson j = ojson::array();
    for (std::size_t i = 0; i < m.vertex_count(); ++i)
        j.push_back({m.xs[i], m.ys[i]});
    return j;
}

ojson extremal_to_json(const ExtremalSet& e) {
    ojson j = ojson::array();
    for (std::size_t i = 0; i < e.size(); ++i) {
        ojson flags;
        flags["is_jump"] = e.flags[i].is_jump;
        flags["jump_sign"] = e.flags[i].jump_sign;
        flags["is_T"] = e.flags[i].is_argmax;
        j.push_back({e.times[i], flags});
    }
    return j;
}

ojson partition_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
    ojson j = ojson::array();
    for (const auto& [lo, hi] : blocks)
        j.push_back({lo, hi});
    return j;
}

std::string majorant_csv(const Majorant& m) {
    std::string out = "t,value\n";
    for (std::size_t i = 0; i < m.vertex_count(); ++i)
        out += num(m.xs[i]) + "," + num(m.ys[i]) + "\n";
    return out;
}

std::string extremal_csv(const ExtremalSet& e) {
    std::string out = "t,is_jump,jump_sign,is_T\n";
    for (std::size_t i = 0; i < e.size(); ++i)
        out += num(e.times[i]) + "," + (e.flags[i].is_jump ? "1" : "0") + "," +
               std::to_string(e.flags[i].jump_sign) + "," + (e.flags[i].is_argmax ? "1" : "0") +
               "\n";
    return out;
}

std::string events_csv(const std::vector<MergeRecord>& log) {
    std::string out = "t,left_index,x,mass_new,v_new\n";
    for (const auto& r : log)
        out += num(r.time) + "," + std::to_string(r.left) + "," + num(r.position) + "," +
               num(r.mass) + "," + num(r.velocity) + "\n";
    return out;
}

std::string shocks_csv(const ShockStructure& s) {
    std::string out = "a_left,a_right,x,mass\n";
    for (const auto& sh : s.shocks)
        out += num(sh.a_left) + "," + num(sh.a_right) + "," + num(sh.x) + "," + num(sh.mass) +
               "\n";
    return out;
}

std::string potential_csv(const std::vector<double>& xs, const std::vector<double>& psi) {
    if (xs.size() != psi.size())
        throw std::invalid_argument("potential_csv: column length mismatch");
    std::string out = "x,psi\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += num(xs[i]) + "," + num(psi[i]) + "\n";
    return out;
}

std::string lagrangian_csv(const std::vector<double>& as, const std::vector<double>& xs) {
    if (as.size() != xs.size())
        throw std::invalid_argument("lagrangian_csv: column length mismatch");
    std::string out = "a,x\n";
    for (std::size_t i = 0; i < as.size(); ++i)
        out += num(as[i]) + "," + num(xs[i]) + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("could not open for writing: " + path);
    f << content;
    if (!f)
        throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("could not open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ojson read_json_file(const std::string& path) {
    try {
        return ojson::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("could not parse JSON in " + path + ": " + e.what());
    }
}

} // namespace levyhull
