#include "padelab/errors.hpp"
#include "padelab/gap_transfer.hpp"
#include "padelab/pade.hpp"
#include "padelab/pole_lab.hpp"
#include "padelab/serialization.hpp"
#include "padelab/universal_builder.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace padelab;

namespace {

enum Exit { kOk = 0, kVerification = 2, kConfig = 3, kEscalation = 4 };

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << text;
}

template <class Writer>
void write_csv(const std::string& path, Writer&& w) {
    std::ostringstream ss;
    w(ss);
    write_text(path, ss.str());
}

// Config documents name their own kind and list their fields; any other key is an error.
class Config {
public:
    Config(const Json& doc, std::string_view kind, std::initializer_list<std::string_view> allowed)
        : body_(open_document(doc, kind)) {
        for (const auto& [key, value] : body_.items()) {
            bool known = false;
            for (auto a : allowed) known = known || a == key;
            if (!known) throw ParseError(key + ": unknown field");
        }
    }
    bool has(const std::string& key) const { return body_.contains(key); }
    const Json& get(const std::string& key) const {
        if (!body_.contains(key)) throw ParseError(key + ": missing field");
        return body_.at(key);
    }
    std::size_t size(const std::string& key) const {
        const Json& j = get(key);
        if (!j.is_number_unsigned()) throw ParseError(key + ": expected a nonnegative integer");
        return j.get<std::size_t>();
    }
    std::size_t size_or(const std::string& key, std::size_t fallback) const { return has(key) ? size(key) : fallback; }
    Rational rational(const std::string& key) const {
        const Json& j = get(key);
        if (!j.is_string()) throw ParseError(key + ": expected a rational as a string");
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(key + ": " + e.what());
        }
    }
    std::vector<std::size_t> sizes(const std::string& key) const {
        std::vector<std::size_t> out;
        const Json& j = get(key);
        if (!j.is_array()) throw ParseError(key + ": expected an array");
        for (const auto& x : j) {
            if (!x.is_number_unsigned()) throw ParseError(key + ": expected nonnegative integers");
            out.push_back(x.get<std::size_t>());
        }
        return out;
    }
    std::vector<UniversalTask> tasks() const {
        std::vector<UniversalTask> out;
        const Json& j = get("tasks");
        if (!j.is_array()) throw ParseError("tasks: expected an array");
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(task_from_json(j[i], "tasks[" + std::to_string(i) + "]"));
        return out;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs(const std::string& key) const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        const Json& j = get(key);
        if (!j.is_array()) throw ParseError(key + ": expected an array of [p, q] pairs");
        for (const auto& x : j) {
            if (!x.is_array() || x.size() != 2 || !x[0].is_number_unsigned() || !x[1].is_number_unsigned())
                throw ParseError(key + ": expected an array of [p, q] pairs");
            out.emplace_back(x[0].get<std::size_t>(), x[1].get<std::size_t>());
        }
        return out;
    }
    BuildOptions options() const {
        BuildOptions o;
        o.degree_cap = size_or("degree_cap", o.degree_cap);
        o.extra_terms = size_or("extra_terms", o.extra_terms);
        return o;
    }

private:
    Json body_;
};

PowerSeries random_series(std::uint64_t seed, std::size_t len) {
    static const char* pool[] = {"-2", "-1", "-1/2", "0", "1/3", "1/2", "1", "2", "3"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, 8);
    std::vector<GaussianRational> c;
    for (std::size_t k = 0; k < len; ++k) c.push_back(GaussianRational::parse(pool[pick(rng)]));
    return PowerSeries(std::move(c));
}

PowerSeries load_series(const std::string& path, std::size_t random_len, std::uint64_t seed) {
    if (random_len > 0) return random_series(seed, random_len);
    if (path.empty()) throw ParseError("give --series or --random");
    return series_from_json(open_document(read_json_file(path), "series"), "");
}

void print_result(const PadeResult& r) {
    std::cout << "[f; " << r.m << "/" << r.n << "] = " << r.as_function().to_string() << "\n";
    std::cout << "status: " << to_string(r.status) << "\n";
    std::cout << "C_{m,n} = " << r.hankel_mn.to_string() << "\n";
    std::cout << "C_{m+1,n} = " << r.hankel_m1n.to_string() << "\n";
    if (r.status == PadeStatus::DegenerateExists) std::cout << "T = " << r.degenerate_factor.to_string() << "\n";
}

struct Common {
    std::uint64_t seed = 0;
};

int run_pade(const std::string& series, std::size_t random_len, std::size_t m, std::size_t n, const std::string& route,
             const std::string& out, const Common& c) {
    PowerSeries s = load_series(series, random_len, c.seed);
    PadeResult r = route == "jacobi" ? pade_via_jacobi(s, m, n) : pade_via_system(s, m, n);
    print_result(r);
    if (r.exists() && !satisfies_order_condition(s, r)) {
        std::cerr << "order condition failed\n";
        return kVerification;
    }
    if (!out.empty()) write_text(out, dump_json(make_document("pade_result", to_json(r))));
    return kOk;
}

int run_table(const std::string& series, std::size_t random_len, std::size_t max_m, std::size_t max_n,
              const std::string& csv, const std::string& poles, unsigned bits, const Common& c) {
    PowerSeries s = load_series(series, random_len, c.seed);
    std::vector<PadeResult> results;
    std::ostringstream rows;
    rows << "m,n,status,C_mn,C_m1n,approximant\n";
    bool ok = true;
    for (std::size_t m = 0; m <= max_m; ++m) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            PadeResult r = pade_via_system(s, m, n);
            if (r.exists() && !satisfies_order_condition(s, r)) ok = false;
            std::string f = r.exists() ? r.as_function().to_string() : "-";
            std::cout << "(" << m << "," << n << ") " << to_string(r.status) << " C=" << r.hankel_mn.to_string() << " "
                      << f << "\n";
            rows << m << ',' << n << ',' << to_string(r.status) << ',' << r.hankel_mn.to_string() << ','
                 << r.hankel_m1n.to_string() << ",\"" << f << "\"\n";
            results.push_back(std::move(r));
        }
    }
    if (!csv.empty()) write_text(csv, rows.str());
    if (!poles.empty()) write_csv(poles, [&](std::ostream& os) { write_poles_csv(os, results, bits); });
    return ok ? kOk : kVerification;
}

int run_place(bool zero, const std::string& config, const std::string& out, const std::string& poles) {
    Config cfg(read_json_file(config), zero ? "place_zero" : "place_pole",
               {"base", "m", "n", "target", "c1", "precision"});
    Polynomial base = polynomial_from_json(cfg.get("base"), "base");
    std::size_t m = cfg.size("m"), n = cfg.size("n");
    GaussianRational target = gaussian_from_json(cfg.get("target"), "target");
    GaussianRational c1 = gaussian_from_json(cfg.get("c1"), "c1");
    PolePlacementWitness w = zero ? place_zero(base, m, n, target, c1) : place_pole(base, m, n, target, c1);
    std::cout << "c2 = " << w.c2.to_string() << "\n";
    print_result(w.approximant);
    const Polynomial& checked = zero ? w.approximant.numerator : w.approximant.denominator;
    bool hit = checked(target).is_zero();
    std::cout << (zero ? "numerator" : "denominator") << "(target) = " << checked(target).to_string() << "\n";
    if (!out.empty()) write_text(out, dump_json(make_document(zero ? "zero_witness" : "pole_witness", to_json(w))));
    if (!poles.empty()) {
        unsigned bits = static_cast<unsigned>(cfg.size_or("precision", 256));
        write_csv(poles, [&](std::ostream& os) { write_poles_csv(os, {w.approximant}, bits); });
    }
    return hit ? kOk : kVerification;
}

int run_poles_away(const std::string& config, const std::string& out, const std::string& poles) {
    Config cfg(read_json_file(config), "poles_away", {"base", "m", "n", "mu", "truncation", "precision"});
    Polynomial base = polynomial_from_json(cfg.get("base"), "base");
    std::size_t m = cfg.size("m"), n = cfg.size("n");
    GaussianRational mu = gaussian_from_json(cfg.get("mu"), "mu");
    std::size_t trunc = cfg.size_or("truncation", m + n + 1);
    PowerSeries f = poles_outside_disk_witness(base, m, n, mu, trunc);
    PadeResult r = pade_via_system(f, m, n);
    print_result(r);
    RationalFunction expected = RationalFunction(base, power_of_linear_factor(mu, n)).reduced();
    bool ok = r.exists() && r.numerator == expected.numerator && r.denominator == expected.denominator;
    std::cout << "matches P/(1-z/mu)^n: " << (ok ? "yes" : "no") << "\n";
    if (!out.empty()) write_text(out, dump_json(make_document("series", to_json(f))));
    if (!poles.empty()) {
        unsigned bits = static_cast<unsigned>(cfg.size_or("precision", 256));
        write_csv(poles, [&](std::ostream& os) { write_poles_csv(os, {r}, bits); });
    }
    return ok ? kOk : kVerification;
}

bool verify_trace(const BuildTrace& trace, const DenominatorSpec& spec) {
    bool ok = true;
    for (std::size_t j = 0; j <= trace.steps.size(); ++j) {
        try {
            CheckpointCertificate c = verify_checkpoint(trace, spec, j);
            std::cout << "checkpoint " << j << " p=" << c.p << " " << to_string(c.status) << " ok\n";
        } catch (const VerificationError& e) {
            std::cout << "checkpoint " << j << " FAILED: " << e.what() << "\n";
            ok = false;
        }
    }
    return ok;
}

int run_build(const std::string& config, const std::string& out, const std::string& certs) {
    Config cfg(read_json_file(config), "build_universal",
               {"denominator", "tasks", "mu", "T", "L", "epsilon0", "rounds", "degree_cap", "extra_terms"});
    DenominatorSpec spec = denominator_from_json(cfg.get("denominator"), "denominator");
    std::vector<UniversalTask> tasks = cfg.tasks();
    std::vector<std::size_t> mu = cfg.sizes("mu");
    Polynomial T = cfg.has("T") ? polynomial_from_json(cfg.get("T"), "T") : Polynomial();
    DiskSampleSpec L = disk_from_json(cfg.get("L"), "L");
    BuildTrace trace = build_universal(spec, tasks, mu, T, L, cfg.rational("epsilon0"), cfg.size("rounds"), cfg.options());
    for (const auto& c : trace.certificates)
        std::cout << "step " << c.step << " task " << c.task << " p=" << c.p << " error_K<=" << c.error_K.get_d()
                  << " error_L<=" << c.error_L.get_d() << " denominator " << c.denominator.to_string() << "\n";
    if (!out.empty())
        write_text(out, dump_json(make_document("build_trace", Json{{"denominator", to_json(spec)}, {"trace", to_json(trace)}})));
    if (!certs.empty()) write_csv(certs, [&](std::ostream& os) { write_certificates_csv(os, trace); });
    return verify_trace(trace, spec) ? kOk : kVerification;
}

int run_verify(const std::string& path) {
    Json body = open_document(read_json_file(path), "build_trace");
    for (const auto& [key, value] : body.items())
        if (key != "denominator" && key != "trace") throw ParseError(key + ": unknown field");
    if (!body.contains("denominator") || !body.contains("trace")) throw ParseError("needs denominator and trace");
    DenominatorSpec spec = denominator_from_json(body.at("denominator"), "denominator");
    BuildTrace trace = trace_from_json(body.at("trace"), "trace");
    bool ok = verify_trace(trace, spec);
    for (const auto& c : trace.certificates) {
        RationalFunction reduced = RationalFunction(trace.partial(c.step), spec.Q).reduced();
        if (reduced.denominator != c.denominator) {
            std::cout << "certificate for step " << c.step << " records the wrong denominator\n";
            ok = false;
        }
    }
    return ok ? kOk : kVerification;
}

int run_gap_build(const std::string& config, const std::string& out, const std::string& certs) {
    Config cfg(read_json_file(config), "gap_build",
               {"mu", "schedule", "S", "horizon", "tasks", "T", "L", "epsilon0", "rounds", "degree_cap"});
    std::vector<std::size_t> mu;
    GapSchedule schedule;
    if (cfg.has("S")) {
        if (cfg.has("schedule") || cfg.has("mu")) throw ParseError("S: excludes schedule and mu");
        SSchedule ss = schedule_for_S(cfg.pairs("S"), cfg.size("horizon"));
        bool rows_ok = true;
        for (const auto& row : ss.rows) rows_ok = rows_ok && row.ok;
        std::cout << "weight rows: " << ss.rows.size() << (rows_ok ? " all satisfied" : " VIOLATED") << "\n";
        if (!rows_ok) return kVerification;
        mu = ss.mu;
        schedule = ss.schedule;
    } else {
        schedule = schedule_from_json(cfg.get("schedule"), "schedule");
        if (cfg.has("mu")) {
            mu = cfg.sizes("mu");
        } else {
            for (auto [p, q] : schedule.windows) mu.push_back(p);
        }
    }
    std::vector<UniversalTask> tasks = cfg.tasks();
    Polynomial T = cfg.has("T") ? polynomial_from_json(cfg.get("T"), "T") : Polynomial();
    DiskSampleSpec L = disk_from_json(cfg.get("L"), "L");
    GapBuild b = build_gap_series(mu, schedule, tasks, T, L, cfg.rational("epsilon0"), cfg.size("rounds"), cfg.options());
    for (const auto& c : b.certificates)
        std::cout << "window " << c.m << " task " << c.task << " p=" << c.p << " error_K<=" << c.error_K.get_d()
                  << " error_L<=" << c.error_L.get_d() << "\n";
    std::cout << "gaps are zero: " << (b.series.gaps_are_zero() ? "yes" : "no") << "\n";
    if (!out.empty()) write_text(out, dump_json(make_document("gap_build", to_json(b))));
    if (!certs.empty()) write_csv(certs, [&](std::ostream& os) { write_gap_certificates_csv(os, b); });
    if (cfg.has("S")) {
        bool ok = true;
        for (const auto& s : generalized_s_check(b.series, cfg.pairs("S"))) {
            std::cout << "[g; " << s.p << "/" << s.q << "] = S_" << s.p << "(g): " << (s.exact ? "yes" : "no") << "\n";
            ok = ok && s.exact;
        }
        if (!ok) return kVerification;
    }
    return kOk;
}

int run_gap_transfer(const std::string& gap, const std::string& denominator, const std::string& csv) {
    GapBuild b = gap_build_from_json(open_document(read_json_file(gap), "gap_build"), "");
    DenominatorSpec spec = denominator_from_json(open_document(read_json_file(denominator), "denominator"), "");
    Transfer t = transfer_to_pade(b.series, spec);
    bool ok = !t.certificates.empty();
    for (const auto& c : t.certificates) {
        std::cout << "checkpoint " << c.m << " p=" << c.p << " q=" << c.q << " coprime=" << (c.coprime ? "yes" : "no")
                  << " exact=" << (c.exact_match ? "yes" : "no") << "\n";
        ok = ok && c.exact_match;
    }
    if (!csv.empty()) write_csv(csv, [&](std::ostream& os) { write_transfer_csv(os, t); });
    return ok ? kOk : kVerification;
}

int run_span(const std::string& config) {
    Config cfg(read_json_file(config), "span_check", {"members", "m", "q"});
    std::vector<SpanMember> members;
    const Json& j = cfg.get("members");
    if (!j.is_array()) throw ParseError("members: expected an array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string path = "members[" + std::to_string(i) + "]";
        if (!j[i].is_object()) throw ParseError(path + ": expected an object");
        for (const auto& [key, value] : j[i].items())
            if (key != "series" && key != "coefficient") throw ParseError(path + "." + key + ": unknown field");
        if (!j[i].contains("series") || !j[i].contains("coefficient")) throw ParseError(path + ": needs series and coefficient");
        members.push_back({series_from_json(j[i].at("series"), path + ".series"),
                           gaussian_from_json(j[i].at("coefficient"), path + ".coefficient")});
    }
    SpanCertificate c = span_pade_check(members, cfg.size("m"), cfg.size("q"));
    std::cout << "sum of approximants = " << c.sum.to_string() << "\n";
    std::cout << "approximant of sum = " << c.combined.as_function().to_string() << "\n";
    std::cout << "linear: " << (c.linear ? "yes" : "no") << ", reduced degree " << c.reduced_degree << "\n";
    return c.linear ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pade approximation lab"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--seed", common.seed, "Seed for randomized drivers (default 0)");

    std::string series, out, csv, poles, config, route = "system", gap, denominator, certs;
    std::size_t m = 0, n = 0, max_m = 4, max_n = 4, random_len = 0;
    unsigned bits = 256;
    int code = kOk;

    auto* pade = app.add_subcommand("pade", "One Pade approximant of a series");
    pade->add_option("--series", series, "Series document");
    pade->add_option("--random", random_len, "Use a random series of this length instead (see --seed)");
    pade->add_option("--m", m)->required();
    pade->add_option("--n", n)->required();
    pade->add_option("--route", route)->check(CLI::IsMember({"system", "jacobi"}));
    pade->add_option("--out", out, "Write the result document here");
    pade->callback([&] { code = run_pade(series, random_len, m, n, route, out, common); });

    auto* table = app.add_subcommand("table", "Pade table of a series");
    table->add_option("--series", series, "Series document");
    table->add_option("--random", random_len, "Use a random series of this length instead (see --seed)");
    table->add_option("--max-m", max_m);
    table->add_option("--max-n", max_n);
    table->add_option("--csv", csv, "m,n,status,C_mn,C_m1n,approximant");
    table->add_option("--poles", poles, "m,n,pole_index,re,im,residual");
    table->add_option("--precision", bits, "Root finding precision in bits");
    table->callback([&] { code = run_table(series, random_len, max_m, max_n, csv, poles, bits, common); });

    for (bool zero : {false, true}) {
        auto* sub = app.add_subcommand(zero ? "place-zero" : "place-pole",
                                       zero ? "Perturb a polynomial so [f; m/n] has a zero at a target"
                                            : "Perturb a polynomial so [f; m/n] has a pole at a target");
        sub->add_option("--config", config)->required();
        sub->add_option("--out", out, "Witness document");
        sub->add_option("--poles", poles, "m,n,pole_index,re,im,residual");
        sub->callback([&, zero] { code = run_place(zero, config, out, poles); });
    }

    auto* away = app.add_subcommand("poles-away", "Witness with every pole of [f; m/n] at mu");
    away->add_option("--config", config)->required();
    away->add_option("--out", out, "Series document");
    away->add_option("--poles", poles, "m,n,pole_index,re,im,residual");
    away->callback([&] { code = run_poles_away(config, out, poles); });

    auto* build = app.add_subcommand("build-universal", "Series with prescribed checkpoint denominators");
    build->add_option("--config", config)->required();
    build->add_option("--out", out, "Trace document");
    build->add_option("--certificates", certs, "task,step,p,sampled_error_K,sampled_error_L,denominator_hash");
    build->callback([&] { code = run_build(config, out, certs); });

    auto* verify = app.add_subcommand("verify", "Re-check every checkpoint of a trace document");
    verify->add_option("--trace", config)->required();
    verify->callback([&] { code = run_verify(config); });

    auto* gbuild = app.add_subcommand("gap-build", "Series with zero gap windows");
    gbuild->add_option("--config", config)->required();
    gbuild->add_option("--out", out, "Gap build document");
    gbuild->add_option("--certificates", certs, "task,step,p,sampled_error_K,sampled_error_L,denominator_hash");
    gbuild->callback([&] { code = run_gap_build(config, out, certs); });

    auto* transfer = app.add_subcommand("gap-transfer", "Divide a gap series by Q and check its checkpoints");
    transfer->add_option("--gap", gap)->required();
    transfer->add_option("--denominator", denominator)->required();
    transfer->add_option("--csv", csv, "checkpoint,p,q,exact_match,denominator_hash");
    transfer->callback([&] { code = run_gap_transfer(gap, denominator, csv); });

    auto* span = app.add_subcommand("span-check", "Linearity of [.; m/q] on a shared denominator");
    span->add_option("--config", config)->required();
    span->callback([&] { code = run_span(config); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kConfig;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const EscalationError& e) {
        std::cerr << "oracle escalation failed: " << e.what() << "\n";
        return kEscalation;
    } catch (const RetryableError& e) {
        std::cerr << "retryable: " << e.what() << "\n";
        return kConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return code;
}
