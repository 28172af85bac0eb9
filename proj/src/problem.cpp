#include <greyrank/problem.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

namespace greyrank {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw validation_error(path + ": " + msg);
}

const json& require(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.contains(key)) fail(path, "missing required field '" + key + "'");
    return obj.at(key);
}

double read_number(const json& v, const std::string& path)
{
    if (!v.is_number()) fail(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(path, "expected a finite number");
    return d;
}

const json& read_array(const json& v, const std::string& path)
{
    if (!v.is_array()) fail(path, "expected an array");
    return v;
}

GreyInterval<double> read_interval(const json& v, const std::string& path)
{
    if (!v.is_array() || v.size() != 2) fail(path, "expected an interval [lo, hi]");
    const double lo = read_number(v[0], path + "[0]");
    const double hi = read_number(v[1], path + "[1]");
    if (lo > hi) fail(path, "lower bound exceeds upper bound");
    return {lo, hi};
}

template <class Enum, std::size_t N>
Enum read_enum(const json& v, const std::string& path, const std::array<std::pair<const char*, Enum>, N>& table)
{
    if (!v.is_string()) fail(path, "expected a string");
    const auto s = v.get<std::string>();
    for (const auto& [name, e] : table) {
        if (s == name) return e;
    }
    std::string allowed;
    for (const auto& [name, e] : table) allowed += std::string(allowed.empty() ? "" : ", ") + name;
    fail(path, "unknown value '" + s + "' (expected one of: " + allowed + ")");
}

constexpr std::array<std::pair<const char*, AttributeKind>, 2> kind_table = {{
    {"cost", AttributeKind::cost}, {"effect", AttributeKind::effect},
}};
constexpr std::array<std::pair<const char*, GammaMode>, 2> gamma_table = {{
    {"equal", GammaMode::equal}, {"lp", GammaMode::lp},
}};
constexpr std::array<std::pair<const char*, PreferenceScaling>, 2> scaling_table = {{
    {"max", PreferenceScaling::max}, {"none", PreferenceScaling::none},
}};

Params read_params(const json& v, const std::string& path)
{
    Params p;
    if (!v.is_object()) fail(path, "expected an object");
    for (const auto& [key, val] : v.items()) {
        const auto at = path + "." + key;
        if (key == "rho") p.rho = read_number(val, at);
        else if (key == "theta_pos") p.theta_pos = read_number(val, at);
        else if (key == "theta_neg") p.theta_neg = read_number(val, at);
        else if (key == "lambda") p.lambda = read_number(val, at);
        else if (key == "gamma_mode") p.gamma_mode = read_enum(val, at, gamma_table);
        else if (key == "preference_scaling") p.preference_scaling = read_enum(val, at, scaling_table);
        else if (key == "method_weights") {
            if (!val.is_array() || val.size() != 3) fail(at, "expected 3 method weights");
            for (std::size_t k = 0; k < 3; ++k) p.method_weights[k] = read_number(val[k], at + "[" + std::to_string(k) + "]");
        } else {
            fail(at, "unknown parameter");
        }
    }
    if (!(p.rho > 0 && p.rho < 1)) fail(path + ".rho", "must lie in (0, 1)");
    if (!(p.lambda >= 0 && p.lambda <= 1)) fail(path + ".lambda", "must lie in [0, 1]");
    const bool special_theta = p.theta_pos == 1 && p.theta_neg == 0;
    if (!special_theta) {
        if (!(p.theta_pos > 0)) fail(path + ".theta_pos", "must be positive");
        if (!(p.theta_neg > 0)) fail(path + ".theta_neg", "must be positive");
    }
    double wsum = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        if (p.method_weights[k] < 0) fail(path + ".method_weights[" + std::to_string(k) + "]", "must be non-negative");
        wsum += p.method_weights[k];
    }
    if (std::abs(wsum - 1) > simplex_tol) fail(path + ".method_weights", "must sum to 1");
    return p;
}

} // namespace

const char* to_string(GammaMode m) { return m == GammaMode::lp ? "lp" : "equal"; }
const char* to_string(PreferenceScaling s) { return s == PreferenceScaling::none ? "none" : "max"; }
const char* to_string(AttributeKind k) { return k == AttributeKind::cost ? "cost" : "effect"; }

ProblemFile problem_from_json(const json& doc)
{
    const std::string root = "$";
    if (!doc.is_object()) fail(root, "expected a JSON object");
    const auto& schema = require(doc, "schema", root);
    if (!schema.is_number_integer() || schema.get<int>() != schema_version) {
        fail(root + ".schema", "unsupported schema version (expected 1)");
    }

    ProblemFile p;
    auto& dm = p.decision;

    const auto& attrs = read_array(require(doc, "attributes", root), root + ".attributes");
    if (attrs.empty()) fail(root + ".attributes", "at least one attribute is required");
    for (std::size_t j = 0; j < attrs.size(); ++j) {
        const auto at = root + ".attributes[" + std::to_string(j) + "]";
        const auto& a = attrs[j];
        if (!a.is_object()) fail(at, "expected an object");
        const auto& name = require(a, "name", at);
        if (!name.is_string()) fail(at + ".name", "expected a string");
        AttributeSpec spec{name.get<std::string>(), AttributeKind::effect};
        spec.kind = read_enum(require(a, "kind", at), at + ".kind", kind_table);
        for (const auto& prev : dm.attributes) {
            if (prev.name == spec.name) fail(at + ".name", "duplicate attribute name '" + spec.name + "'");
        }
        dm.attributes.push_back(std::move(spec));
    }
    const auto m = static_cast<index_t>(attrs.size());

    const auto& plans = read_array(require(doc, "plans", root), root + ".plans");
    if (plans.size() < 2) fail(root + ".plans", "at least 2 plans are required");
    const auto n = static_cast<index_t>(plans.size());
    dm.cells = IntervalMatrix<double>(n, m);
    for (index_t i = 0; i < n; ++i) {
        const auto at = root + ".plans[" + std::to_string(i) + "]";
        const auto& pl = plans[i];
        if (!pl.is_object()) fail(at, "expected an object");
        const auto& name = require(pl, "name", at);
        if (!name.is_string()) fail(at + ".name", "expected a string");
        dm.plans.push_back(name.get<std::string>());
        const auto& vals = read_array(require(pl, "values", at), at + ".values");
        if (static_cast<index_t>(vals.size()) != m) {
            fail(at + ".values", "expected " + std::to_string(m) + " intervals, got " + std::to_string(vals.size()));
        }
        for (index_t j = 0; j < m; ++j) {
            const auto cat = at + ".values[" + std::to_string(j) + "]";
            const auto cell = read_interval(vals[j], cat);
            if (cell.lo() < 0) fail(cat, "values must be non-negative");
            if (dm.attributes[j].kind == AttributeKind::cost && !(cell.lo() > 0)) {
                fail(cat, "zero lower bound in cost attribute '" + dm.attributes[j].name + "'");
            }
            dm.cells.set(i, j, cell);
        }
    }

    const auto& experts = read_array(require(doc, "experts", root), root + ".experts");
    if (experts.empty()) fail(root + ".experts", "at least one judgment matrix is required");
    for (std::size_t l = 0; l < experts.size(); ++l) {
        const auto at = root + ".experts[" + std::to_string(l) + "]";
        const auto& rows = read_array(experts[l], at);
        if (static_cast<index_t>(rows.size()) != m) fail(at, "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
        matrix_type<double> a(m, m);
        for (index_t r = 0; r < m; ++r) {
            const auto rat = at + "[" + std::to_string(r) + "]";
            const auto& row = read_array(rows[r], rat);
            if (static_cast<index_t>(row.size()) != m) fail(rat, "expected " + std::to_string(m) + " entries");
            for (index_t c = 0; c < m; ++c) a(r, c) = read_number(row[c], rat + "[" + std::to_string(c) + "]");
        }
        try {
            p.experts.emplace_back(std::move(a));
        } catch (const validation_error& e) {
            fail(at, e.what());
        }
    }

    if (doc.contains("preference") && !doc.at("preference").is_null()) {
        const auto at = root + ".preference";
        const auto& pref = read_array(doc.at("preference"), at);
        if (static_cast<index_t>(pref.size()) != n) {
            fail(at, "expected " + std::to_string(n) + " intervals, got " + std::to_string(pref.size()));
        }
        IntervalVector<double> q(n, 1);
        for (index_t i = 0; i < n; ++i) {
            const auto cat = at + "[" + std::to_string(i) + "]";
            const auto v = read_interval(pref[i], cat);
            if (v.lo() < 0) fail(cat, "preference must be non-negative");
            q.set(i, v);
        }
        p.preference = std::move(q);
    }

    if (doc.contains("params")) p.params = read_params(doc.at("params"), root + ".params");

    for (const auto& [key, val] : doc.items()) {
        if (key != "schema" && key != "attributes" && key != "plans" && key != "experts" &&
            key != "preference" && key != "params") {
            fail(root + "." + key, "unknown field");
        }
    }
    return p;
}

ProblemFile parse_problem_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
    return problem_from_json(doc);
}

ProblemFile parse_problem(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open problem file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

namespace {

json interval_json(double lo, double hi) { return json::array({lo, hi}); }

} // namespace

json problem_to_json(const ProblemFile& p)
{
    const auto& dm = p.decision;
    json doc;
    doc["schema"] = schema_version;

    json attrs = json::array();
    for (const auto& a : dm.attributes) attrs.push_back({{"name", a.name}, {"kind", to_string(a.kind)}});
    doc["attributes"] = std::move(attrs);

    json plans = json::array();
    for (index_t i = 0; i < dm.cells.rows(); ++i) {
        json vals = json::array();
        for (index_t j = 0; j < dm.cells.cols(); ++j) vals.push_back(interval_json(dm.cells.lo(i, j), dm.cells.hi(i, j)));
        plans.push_back({{"name", dm.plans[i]}, {"values", std::move(vals)}});
    }
    doc["plans"] = std::move(plans);

    json experts = json::array();
    for (const auto& e : p.experts) {
        json rows = json::array();
        for (index_t r = 0; r < e.order(); ++r) {
            json row = json::array();
            for (index_t c = 0; c < e.order(); ++c) row.push_back(e.entries()(r, c));
            rows.push_back(std::move(row));
        }
        experts.push_back(std::move(rows));
    }
    doc["experts"] = std::move(experts);

    if (p.preference) {
        json pref = json::array();
        for (index_t i = 0; i < p.preference->size(); ++i) pref.push_back(interval_json(p.preference->lo(i), p.preference->hi(i)));
        doc["preference"] = std::move(pref);
    } else {
        doc["preference"] = nullptr;
    }

    const auto& pp = p.params;
    doc["params"] = {
        {"rho", pp.rho},
        {"theta_pos", pp.theta_pos},
        {"theta_neg", pp.theta_neg},
        {"lambda", pp.lambda},
        {"gamma_mode", to_string(pp.gamma_mode)},
        {"method_weights", pp.method_weights},
        {"preference_scaling", to_string(pp.preference_scaling)},
    };
    return doc;
}

bool equivalent(const ProblemFile& a, const ProblemFile& b)
{
    const auto& da = a.decision;
    const auto& db = b.decision;
    if (da.plans != db.plans || da.attributes != db.attributes) return false;
    if (!(da.cells.lo == db.cells.lo).all() || !(da.cells.hi == db.cells.hi).all()) return false;
    if (a.experts.size() != b.experts.size()) return false;
    for (std::size_t l = 0; l < a.experts.size(); ++l) {
        if (a.experts[l].entries() != b.experts[l].entries()) return false;
    }
    if (a.preference.has_value() != b.preference.has_value()) return false;
    if (a.preference) {
        if (a.preference->size() != b.preference->size()) return false;
        if (!(a.preference->lo == b.preference->lo).all() || !(a.preference->hi == b.preference->hi).all()) return false;
    }
    return a.params == b.params;
}

} // namespace greyrank
