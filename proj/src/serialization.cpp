#include "padelab/serialization.hpp"

#include "padelab/errors.hpp"
#include "padelab/roots.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>

namespace padelab {

namespace {

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

// Strict view of a JSON object: every key must be listed, required keys must be present.
class Fields {
public:
    Fields(const Json& j, std::string path, std::initializer_list<std::string_view> allowed)
        : j_(j), path_(std::move(path)) {
        if (!j.is_object()) fail(path_, "expected an object");
        for (const auto& [key, value] : j.items()) {
            bool known = false;
            for (auto a : allowed) known = known || a == key;
            if (!known) fail(join(path_, key), "unknown field");
        }
    }

    bool has(std::string_view key) const { return j_.contains(std::string(key)); }

    const Json& get(std::string_view key) const {
        auto it = j_.find(std::string(key));
        if (it == j_.end()) fail(join(path_, key), "missing field");
        return *it;
    }

    std::string at(std::string_view key) const { return join(path_, key); }

private:
    const Json& j_;
    std::string path_;
};

const Json& array_of(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
}

Json rational_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational as a string such as \"3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

std::vector<GaussianRational> points_from_json(const Json& j, const std::string& path) {
    std::vector<GaussianRational> out;
    std::size_t i = 0;
    for (const auto& x : array_of(j, path)) {
        out.push_back(gaussian_from_json(x, index_path(path, i)));
        ++i;
    }
    return out;
}

Json points_json(std::span<const GaussianRational> pts) {
    Json a = Json::array();
    for (const auto& z : pts) a.push_back(to_json(z));
    return a;
}

std::vector<std::size_t> sizes_from_json(const Json& j, const std::string& path) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    for (const auto& x : array_of(j, path)) out.push_back(size_from_json(x, index_path(path, i++)));
    return out;
}

PadeStatus status_from_json(const Json& j, const std::string& path) {
    if (j.is_string()) {
        for (auto s : {PadeStatus::Normal, PadeStatus::ExistsNonNormal, PadeStatus::DegenerateExists,
                       PadeStatus::NotExists})
            if (j.get<std::string>() == to_string(s)) return s;
    }
    fail(path, "expected one of Normal, ExistsNonNormal, DegenerateExists, NotExists");
}

Json optional_rational_json(const std::optional<Rational>& q) { return q ? rational_json(*q) : Json(nullptr); }

std::optional<Rational> optional_rational_from_json(const Json& j, const std::string& path) {
    if (j.is_null()) return std::nullopt;
    return rational_from_json(j, path);
}

std::string decimal(const Rational& q) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", q.get_d());
    return buf;
}

std::string decimal(double x) {
    if (x == 0) x = 0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Json to_json(const GaussianRational& z) { return z.to_string(); }

Json to_json(const Polynomial& p) { return points_json(p.coeffs()); }

Json to_json(const PowerSeries& s) { return Json{{"coefficients", points_json(s.coeffs())}}; }

Json to_json(const RationalFunction& r) {
    return Json{{"numerator", to_json(r.numerator)}, {"denominator", to_json(r.denominator)}};
}

Json to_json(const CompactSetSpec& k) {
    return Json{{"samples", points_json(k.samples)}, {"margin", rational_json(k.margin)},
                {"excluded", points_json(k.excluded)}};
}

Json to_json(const DiskSampleSpec& l) {
    return Json{{"samples", points_json(l.samples)}, {"radius", rational_json(l.radius)}};
}

Json to_json(const DenominatorSpec& d) { return Json{{"roots", points_json(d.roots)}, {"Q", to_json(d.Q)}}; }

Json to_json(const UniversalTask& t) {
    return Json{{"target", to_json(t.target)}, {"K", to_json(t.K)}, {"epsilon", rational_json(t.epsilon)}};
}

Json to_json(const GapSchedule& s) {
    Json w = Json::array();
    for (auto [p, q] : s.windows) w.push_back(Json::array({p, q}));
    return Json{{"windows", w}, {"phi", s.phi}};
}

Json to_json(const PadeResult& r) {
    return Json{{"m", r.m},
                {"n", r.n},
                {"status", std::string(to_string(r.status))},
                {"numerator", to_json(r.numerator)},
                {"denominator", to_json(r.denominator)},
                {"C_mn", to_json(r.hankel_mn)},
                {"C_m1n", to_json(r.hankel_m1n)},
                {"degenerate_factor", to_json(r.degenerate_factor)}};
}

Json to_json(const PolePlacementWitness& w) {
    return Json{{"base", to_json(w.base)},       {"m", w.m},
                {"n", w.n},                      {"c1", to_json(w.c1)},
                {"c2", to_json(w.c2)},           {"target", to_json(w.target)},
                {"auxiliary", to_json(w.auxiliary)}, {"sign", to_json(w.sign)},
                {"witness", to_json(w.witness)}, {"approximant", to_json(w.approximant)}};
}

Json to_json(const BuildTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(Json{{"j", s.j},
                             {"task", s.task},
                             {"increment", to_json(s.increment)},
                             {"valuation_floor", s.valuation_floor},
                             {"checkpoint", s.checkpoint},
                             {"step_epsilon", rational_json(s.step_epsilon)},
                             {"perturbation", optional_rational_json(s.perturbation)}});
    Json certs = Json::array();
    for (const auto& c : t.certificates)
        certs.push_back(Json{{"task", c.task},
                             {"step", c.step},
                             {"p", c.p},
                             {"error_K", rational_json(c.error_K)},
                             {"error_L", rational_json(c.error_L)},
                             {"denominator", to_json(c.denominator)},
                             {"within_epsilon", c.within_epsilon}});
    return Json{{"mu", t.mu},
                {"q", t.q},
                {"T", to_json(t.T)},
                {"initial", to_json(t.initial)},
                {"checkpoint0", t.checkpoint0},
                {"steps", steps},
                {"f_tilde", to_json(t.f_tilde)},
                {"f", to_json(t.f)},
                {"certificates", certs}};
}

Json to_json(const GapSeries& g) { return Json{{"g", to_json(g.g)}, {"schedule", to_json(g.schedule)}}; }

Json to_json(const GapBuild& g) {
    Json steps = Json::array();
    for (const auto& s : g.steps)
        steps.push_back(Json{{"j", s.j},
                             {"task", s.task},
                             {"block_start", s.block_start},
                             {"block_end", s.block_end},
                             {"increment", to_json(s.increment)},
                             {"step_epsilon", rational_json(s.step_epsilon)},
                             {"pin", optional_rational_json(s.pin)}});
    Json certs = Json::array();
    for (const auto& c : g.certificates)
        certs.push_back(Json{{"task", c.task},
                             {"m", c.m},
                             {"p", c.p},
                             {"error_K", rational_json(c.error_K)},
                             {"error_L", rational_json(c.error_L)},
                             {"within_epsilon", c.within_epsilon}});
    return Json{{"series", to_json(g.series)}, {"steps", steps}, {"certificates", certs}};
}

GaussianRational gaussian_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
    if (!j.is_string()) fail(path, "expected a Gaussian rational as a string such as \"1/2+3*i\"");
    try {
        return GaussianRational::parse(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
    return Polynomial(points_from_json(j, path));
}

PowerSeries series_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"coefficients"});
    return PowerSeries(points_from_json(f.get("coefficients"), f.at("coefficients")));
}

RationalFunction rational_function_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"numerator", "denominator"});
    Polynomial num = polynomial_from_json(f.get("numerator"), f.at("numerator"));
    Polynomial den = f.has("denominator") ? polynomial_from_json(f.get("denominator"), f.at("denominator"))
                                          : Polynomial::constant(1);
    try {
        return RationalFunction(std::move(num), std::move(den));
    } catch (const PreconditionError& e) {
        fail(f.at("denominator"), e.what());
    }
}

CompactSetSpec compact_set_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"samples", "circle", "margin", "excluded"});
    CompactSetSpec k;
    if (f.has("samples") == f.has("circle")) fail(path, "give exactly one of \"samples\" and \"circle\"");
    if (f.has("samples")) {
        k.samples = points_from_json(f.get("samples"), f.at("samples"));
    } else {
        std::string cp = f.at("circle");
        Fields c(f.get("circle"), cp, {"center", "radius", "count"});
        GaussianRational center = gaussian_from_json(c.get("center"), c.at("center"));
        Rational radius = rational_from_json(c.get("radius"), c.at("radius"));
        std::size_t count = size_from_json(c.get("count"), c.at("count"));
        try {
            k.samples = circle_samples(center, radius, count);
        } catch (const PreconditionError& e) {
            fail(cp, e.what());
        }
    }
    k.margin = rational_from_json(f.get("margin"), f.at("margin"));
    if (f.has("excluded")) k.excluded = points_from_json(f.get("excluded"), f.at("excluded"));
    return k;
}

DiskSampleSpec disk_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"samples", "radius", "rings", "per_ring"});
    DiskSampleSpec l;
    l.radius = rational_from_json(f.get("radius"), f.at("radius"));
    if (f.has("samples")) {
        if (f.has("rings") || f.has("per_ring")) fail(path, "\"samples\" excludes \"rings\"/\"per_ring\"");
        l.samples = points_from_json(f.get("samples"), f.at("samples"));
    } else {
        std::size_t rings = size_from_json(f.get("rings"), f.at("rings"));
        std::size_t per_ring = size_from_json(f.get("per_ring"), f.at("per_ring"));
        try {
            l.samples = disk_samples(l.radius, rings, per_ring);
        } catch (const PreconditionError& e) {
            fail(path, e.what());
        }
    }
    return l;
}

DenominatorSpec denominator_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"roots", "Q"});
    try {
        DenominatorSpec d = DenominatorSpec::from_roots(points_from_json(f.get("roots"), f.at("roots")));
        if (f.has("Q") && polynomial_from_json(f.get("Q"), f.at("Q")) != d.Q) fail(f.at("Q"), "does not match the roots");
        return d;
    } catch (const PreconditionError& e) {
        fail(f.at("roots"), e.what());
    }
}

UniversalTask task_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"target", "K", "epsilon"});
    UniversalTask t;
    t.target = rational_function_from_json(f.get("target"), f.at("target"));
    t.K = compact_set_from_json(f.get("K"), f.at("K"));
    t.epsilon = rational_from_json(f.get("epsilon"), f.at("epsilon"));
    return t;
}

GapSchedule schedule_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"windows", "phi"});
    std::vector<std::pair<std::size_t, std::size_t>> windows;
    std::string wp = f.at("windows");
    std::size_t i = 0;
    for (const auto& w : array_of(f.get("windows"), wp)) {
        std::string ip = index_path(wp, i++);
        if (!w.is_array() || w.size() != 2) fail(ip, "expected [p, q]");
        windows.emplace_back(size_from_json(w[0], ip + "[0]"), size_from_json(w[1], ip + "[1]"));
    }
    GapSchedule s;
    if (f.has("phi")) {
        s.windows = std::move(windows);
        s.phi = sizes_from_json(f.get("phi"), f.at("phi"));
    } else {
        s = GapSchedule::with_minimal_weight(std::move(windows));
    }
    return s;
}

PadeResult pade_result_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"m", "n", "status", "numerator", "denominator", "C_mn", "C_m1n", "degenerate_factor"});
    PadeResult r;
    r.m = size_from_json(f.get("m"), f.at("m"));
    r.n = size_from_json(f.get("n"), f.at("n"));
    r.status = status_from_json(f.get("status"), f.at("status"));
    r.numerator = polynomial_from_json(f.get("numerator"), f.at("numerator"));
    r.denominator = polynomial_from_json(f.get("denominator"), f.at("denominator"));
    r.hankel_mn = gaussian_from_json(f.get("C_mn"), f.at("C_mn"));
    r.hankel_m1n = gaussian_from_json(f.get("C_m1n"), f.at("C_m1n"));
    r.degenerate_factor = polynomial_from_json(f.get("degenerate_factor"), f.at("degenerate_factor"));
    return r;
}

BuildTrace trace_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"mu", "q", "T", "initial", "checkpoint0", "steps", "f_tilde", "f", "certificates"});
    BuildTrace t;
    t.mu = sizes_from_json(f.get("mu"), f.at("mu"));
    t.q = size_from_json(f.get("q"), f.at("q"));
    t.T = polynomial_from_json(f.get("T"), f.at("T"));
    t.initial = polynomial_from_json(f.get("initial"), f.at("initial"));
    t.checkpoint0 = size_from_json(f.get("checkpoint0"), f.at("checkpoint0"));
    std::string sp = f.at("steps");
    std::size_t i = 0;
    for (const auto& s : array_of(f.get("steps"), sp)) {
        Fields g(s, index_path(sp, i++),
                 {"j", "task", "increment", "valuation_floor", "checkpoint", "step_epsilon", "perturbation"});
        BuildStep step;
        step.j = size_from_json(g.get("j"), g.at("j"));
        step.task = size_from_json(g.get("task"), g.at("task"));
        step.increment = polynomial_from_json(g.get("increment"), g.at("increment"));
        step.valuation_floor = size_from_json(g.get("valuation_floor"), g.at("valuation_floor"));
        step.checkpoint = size_from_json(g.get("checkpoint"), g.at("checkpoint"));
        step.step_epsilon = rational_from_json(g.get("step_epsilon"), g.at("step_epsilon"));
        if (g.has("perturbation"))
            step.perturbation = optional_rational_from_json(g.get("perturbation"), g.at("perturbation"));
        t.steps.push_back(std::move(step));
    }
    t.f_tilde = polynomial_from_json(f.get("f_tilde"), f.at("f_tilde"));
    t.f = series_from_json(f.get("f"), f.at("f"));
    std::string cp = f.at("certificates");
    i = 0;
    for (const auto& c : array_of(f.get("certificates"), cp)) {
        Fields g(c, index_path(cp, i++), {"task", "step", "p", "error_K", "error_L", "denominator", "within_epsilon"});
        Certificate cert;
        cert.task = size_from_json(g.get("task"), g.at("task"));
        cert.step = size_from_json(g.get("step"), g.at("step"));
        cert.p = size_from_json(g.get("p"), g.at("p"));
        cert.error_K = rational_from_json(g.get("error_K"), g.at("error_K"));
        cert.error_L = rational_from_json(g.get("error_L"), g.at("error_L"));
        cert.denominator = polynomial_from_json(g.get("denominator"), g.at("denominator"));
        cert.within_epsilon = bool_from_json(g.get("within_epsilon"), g.at("within_epsilon"));
        t.certificates.push_back(std::move(cert));
    }
    if (t.steps.size() != t.certificates.size()) fail(path, "steps and certificates differ in length");
    return t;
}

GapSeries gap_series_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"g", "schedule"});
    GapSeries g;
    g.g = series_from_json(f.get("g"), f.at("g"));
    g.schedule = schedule_from_json(f.get("schedule"), f.at("schedule"));
    return g;
}

GapBuild gap_build_from_json(const Json& j, const std::string& path) {
    Fields f(j, path, {"series", "steps", "certificates"});
    GapBuild b;
    b.series = gap_series_from_json(f.get("series"), f.at("series"));
    std::string sp = f.at("steps");
    std::size_t i = 0;
    for (const auto& s : array_of(f.get("steps"), sp)) {
        Fields g(s, index_path(sp, i++), {"j", "task", "block_start", "block_end", "increment", "step_epsilon", "pin"});
        GapStep step;
        step.j = size_from_json(g.get("j"), g.at("j"));
        step.task = size_from_json(g.get("task"), g.at("task"));
        step.block_start = size_from_json(g.get("block_start"), g.at("block_start"));
        step.block_end = size_from_json(g.get("block_end"), g.at("block_end"));
        step.increment = polynomial_from_json(g.get("increment"), g.at("increment"));
        step.step_epsilon = rational_from_json(g.get("step_epsilon"), g.at("step_epsilon"));
        if (g.has("pin")) step.pin = optional_rational_from_json(g.get("pin"), g.at("pin"));
        b.steps.push_back(std::move(step));
    }
    std::string cp = f.at("certificates");
    i = 0;
    for (const auto& c : array_of(f.get("certificates"), cp)) {
        Fields g(c, index_path(cp, i++), {"task", "m", "p", "error_K", "error_L", "within_epsilon"});
        GapCertificate cert;
        cert.task = size_from_json(g.get("task"), g.at("task"));
        cert.m = size_from_json(g.get("m"), g.at("m"));
        cert.p = size_from_json(g.get("p"), g.at("p"));
        cert.error_K = rational_from_json(g.get("error_K"), g.at("error_K"));
        cert.error_L = rational_from_json(g.get("error_L"), g.at("error_L"));
        cert.within_epsilon = bool_from_json(g.get("within_epsilon"), g.at("within_epsilon"));
        b.certificates.push_back(std::move(cert));
    }
    return b;
}

Json make_document(std::string_view kind, Json body) {
    Json doc{{"schema_version", kSchemaVersion}, {"kind", std::string(kind)}};
    for (auto& [key, value] : body.items()) doc[key] = std::move(value);
    return doc;
}

Json open_document(const Json& doc, std::string_view kind) {
    if (!doc.is_object()) fail("", "expected a JSON object");
    auto v = doc.find("schema_version");
    if (v == doc.end()) fail("schema_version", "missing field");
    if (!v->is_number_integer() || v->get<long long>() != kSchemaVersion)
        fail("schema_version", "unsupported version " + v->dump() + " (expected " + std::to_string(kSchemaVersion) + ")");
    auto k = doc.find("kind");
    if (k == doc.end()) fail("kind", "missing field");
    if (!k->is_string() || k->get<std::string>() != kind) fail("kind", "expected \"" + std::string(kind) + "\", got " + k->dump());
    Json body = doc;
    body.erase("schema_version");
    body.erase("kind");
    return body;
}

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string denominator_hash(const Polynomial& p) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : p.to_string()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_poles_csv(std::ostream& os, const std::vector<PadeResult>& results, unsigned precision_bits) {
    os << "m,n,pole_index,re,im,residual\n";
    for (const auto& r : results) {
        if (!r.exists() || r.denominator.degree_or_zero() == 0) continue;
        std::size_t idx = 0;
        for (const auto& rt : poly_roots_numeric(r.denominator, precision_bits))
            os << r.m << ',' << r.n << ',' << idx++ << ',' << decimal(rt.value.real()) << ','
               << decimal(rt.value.imag()) << ',' << decimal(rt.residual) << '\n';
    }
}

void write_certificates_csv(std::ostream& os, const BuildTrace& trace) {
    os << "task,step,p,sampled_error_K,sampled_error_L,denominator_hash\n";
    for (const auto& c : trace.certificates)
        os << c.task << ',' << c.step << ',' << c.p << ',' << decimal(c.error_K) << ',' << decimal(c.error_L) << ','
           << denominator_hash(c.denominator) << '\n';
}

void write_gap_certificates_csv(std::ostream& os, const GapBuild& build) {
    os << "task,step,p,sampled_error_K,sampled_error_L,denominator_hash\n";
    std::string one = denominator_hash(Polynomial::constant(1));
    for (const auto& c : build.certificates)
        os << c.task << ',' << c.m << ',' << c.p << ',' << decimal(c.error_K) << ',' << decimal(c.error_L) << ','
           << one << '\n';
}

void write_transfer_csv(std::ostream& os, const Transfer& transfer) {
    os << "checkpoint,p,q,exact_match,denominator_hash\n";
    for (const auto& c : transfer.certificates)
        os << c.m << ',' << c.p << ',' << c.q << ',' << (c.exact_match ? "yes" : "no") << ','
           << denominator_hash(c.denominator) << '\n';
}

}  // namespace padelab
