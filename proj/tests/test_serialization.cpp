#include "oracles.hpp"

#include "padelab/errors.hpp"
#include "padelab/serialization.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

using namespace padelab;
using oracle::G;
using oracle::P;

namespace {

Json reparse(const Json& j) { return parse_json_text(dump_json(j), "test"); }

DiskSampleSpec small_disk() {
    DiskSampleSpec l;
    l.radius = Rational(1, 2);
    l.samples = disk_samples(l.radius, 2, 8);
    return l;
}

UniversalTask task() {
    UniversalTask t;
    t.target = RationalFunction(Polynomial::constant(1));
    t.K.samples = circle_samples(2, Rational(1, 4), 24);
    t.K.margin = Rational(1, 2);
    t.K.excluded = {1};
    t.epsilon = Rational(1, 10);
    return t;
}

}  // namespace

TEST(Serialization, ValuesRoundTrip) {
    Polynomial p = P({"1/3", "-2+i", "0", "7/9*i"});
    EXPECT_EQ(polynomial_from_json(reparse(to_json(p)), ""), p);
    PowerSeries s({G("1"), G("0"), G("-1/2-1/3*i")});
    EXPECT_EQ(series_from_json(reparse(to_json(s)), ""), s);
    RationalFunction r(P({"1", "2"}), P({"1", "-1/5"}));
    EXPECT_EQ(rational_function_from_json(reparse(to_json(r)), ""), r);
    UniversalTask t = task();
    EXPECT_EQ(task_from_json(reparse(to_json(t)), ""), t);
    DiskSampleSpec l = small_disk();
    EXPECT_EQ(disk_from_json(reparse(to_json(l)), ""), l);
    DenominatorSpec d = DenominatorSpec::from_roots({2, G("3+i")});
    EXPECT_EQ(denominator_from_json(reparse(to_json(d)), ""), d);
    GapSchedule gs = GapSchedule::with_minimal_weight({{2, 5}, {24, 60}});
    EXPECT_EQ(schedule_from_json(reparse(to_json(gs)), ""), gs);
    PadeResult pr = pade_via_system(PowerSeries({1, 0, 0, 1, 0}), 1, 1);
    EXPECT_EQ(pade_result_from_json(reparse(to_json(pr)), ""), pr);
}

TEST(Serialization, TraceRoundTripIsByteIdentical) {
    std::vector<std::size_t> mu(200);
    std::iota(mu.begin(), mu.end(), 1);
    DenominatorSpec spec = DenominatorSpec::from_roots({1});
    BuildTrace tr = build_universal(spec, {task()}, mu, Polynomial(), small_disk(), Rational(1, 10), 2);
    std::string text = dump_json(make_document("build_trace", to_json(tr)));
    BuildTrace back = trace_from_json(open_document(parse_json_text(text, "t"), "build_trace"), "");
    EXPECT_EQ(back, tr);
    EXPECT_EQ(dump_json(make_document("build_trace", to_json(back))), text);
}

TEST(Serialization, GapBuildRoundTrip) {
    GapSchedule s = GapSchedule::with_minimal_weight({{2, 5}, {24, 60}});
    UniversalTask t = task();
    t.K.samples = circle_samples(-2, Rational(1, 2), 24);
    t.K.excluded = {};
    t.epsilon = Rational(1, 100);
    GapBuild b = build_gap_series({2, 24}, s, {t}, P({"1", "1", "1"}), small_disk(), Rational(1, 10), 1);
    EXPECT_EQ(gap_build_from_json(reparse(to_json(b)), ""), b);
}

TEST(Serialization, UnknownFieldsAreRejectedWithAPath) {
    Json j = to_json(task());
    j["K"]["colour"] = "red";
    try {
        task_from_json(j, "tasks[0]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("tasks[0].K.colour"), std::string::npos) << e.what();
    }
}

TEST(Serialization, BadValuesReportTheirPath) {
    Json j = to_json(task());
    j["epsilon"] = "1/0";
    EXPECT_THROW(task_from_json(j, ""), ParseError);
    j = to_json(task());
    j["target"]["numerator"][0] = 0.5;
    try {
        task_from_json(j, "");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("target.numerator[0]"), std::string::npos) << e.what();
    }
}

TEST(Serialization, DocumentEnvelope) {
    Json doc = make_document("series", to_json(PowerSeries({1, 2})));
    EXPECT_EQ(doc["schema_version"], 1);
    EXPECT_NO_THROW(open_document(doc, "series"));
    EXPECT_THROW(open_document(doc, "build_trace"), ParseError);
    doc["schema_version"] = 2;
    EXPECT_THROW(open_document(doc, "series"), ParseError);
    EXPECT_THROW(parse_json_text("{\"a\": ", "broken"), ParseError);
}

TEST(Serialization, GeneratorsExpand) {
    Json k = parse_json_text(R"({"circle": {"center": "2", "radius": "1/4", "count": 12}, "margin": "1/2"})", "k");
    CompactSetSpec spec = compact_set_from_json(k, "");
    EXPECT_EQ(spec.samples, circle_samples(2, Rational(1, 4), 12));
    Json both = parse_json_text(R"({"circle": {"center": "2", "radius": "1/4", "count": 12}, "samples": [], "margin": "1"})", "k");
    EXPECT_THROW(compact_set_from_json(both, ""), ParseError);
}

TEST(Serialization, Fnv1aHash) {
    // "1" hashes to the FNV-1a 64 of the single byte '1'.
    EXPECT_EQ(denominator_hash(Polynomial::constant(1)), "af63ac4c86019afc");
    EXPECT_NE(denominator_hash(P({"1", "-1"})), denominator_hash(P({"1", "1"})));
}

TEST(Serialization, CsvHeaders) {
    std::ostringstream a, b;
    write_poles_csv(a, {pade_via_system(PowerSeries({1, 1, 1, 1}), 1, 1)}, 128);
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "m,n,pole_index,re,im,residual");
    EXPECT_NE(a.str().find("1,1,0,1,0,"), std::string::npos);
    Transfer t;
    t.certificates.push_back({0, 2, 2, true, true, PadeStatus::Normal, P({"1", "-1"})});
    write_transfer_csv(b, t);
    EXPECT_EQ(b.str(), "checkpoint,p,q,exact_match,denominator_hash\n0,2,2,yes," + denominator_hash(P({"1", "-1"})) + "\n");
}
