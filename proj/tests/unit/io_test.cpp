#include <gtest/gtest.h>

#include <sstream>

#include "qspace/constructions.hpp"
#include "qspace/io.hpp"

using namespace qspace;

TEST(Io, BoundaryFunctionRoundTrip) {
    FourierCoefficients c(2, {cplx(0.1, 0.2), 0.0, 1.0, cplx(0.0, -0.5), 0.25});
    for (const BoundaryFunction& f :
         {BoundaryFunction::fourier(c), BoundaryFunction::constant(cplx(1.5, -0.5)), closed::exp_mode(3),
          closed::sign_step(), closed::cos_mode(2, 0.5), closed::two_valued_step(1.0, cplx(0.0, 1.0)),
          closed::log_test(DiskPoint(cplx(0.3, 0.4))), closed::sin_mode(1).scaled(2.0)}) {
        const BoundaryFunction g = boundary_function_from_json(json::parse(to_json(f).dump()));
        for (double th : {0.1, 1.7, 4.4}) EXPECT_EQ(f(th), g(th)) << to_json(f).dump();
    }
    const BoundaryFunction s = BoundaryFunction::samples(closed::cos_mode(1).sample(32));
    EXPECT_EQ(boundary_function_from_json(to_json(s)).sample(32), s.sample(32));
}

TEST(Io, AnalyticRoundTrip) {
    BlaschkeProduct B{{DiskPoint(cplx(0.5, 0.1)), DiskPoint::polar(1e-20, 1.0)}};
    for (const AnalyticFunction& h :
         {AnalyticFunction(TaylorSeries{{1.0, cplx(0.0, 2.0)}}), AnalyticFunction(lacunary_h(4.0, 2.0, 0.5, 6)),
          AnalyticFunction(B), log_test_function(DiskPoint(cplx(0.2, -0.7)))}) {
        const AnalyticFunction g = analytic_function_from_json(json::parse(to_json(h).dump()));
        EXPECT_NEAR(std::abs(h.value(cplx(0.3, 0.2)) - g.value(cplx(0.3, 0.2))), 0.0, 1e-14);
    }
    const AnalyticFunction read = analytic_function_from_json(
        json::parse(R"({"kind": "blaschke", "zeros": [[0.5, 0.0], {"depth": 0.25, "angle": 1.0}]})"));
    ASSERT_NE(read.blaschke(), nullptr);
    EXPECT_NEAR(read.blaschke()->zeros[1].modulus(), 0.75, 1e-15);
}

TEST(Io, MeasureKeepsDeepAtoms) {
    DiscretePointMeasure mu;
    mu.atoms.push_back({DiskPoint(cplx(0.5, 0.0)), 2.0});
    mu.atoms.push_back({DiskPoint::polar(1e-30, 0.5), 0.25});
    mu.accumulation_angle = 0.5;
    const json j = to_json(mu);
    EXPECT_EQ(j["atoms"][0].size(), 3u);
    EXPECT_EQ(j["atoms"][1].size(), 4u);
    const DiscretePointMeasure back = measure_from_json(json::parse(j.dump()));
    ASSERT_EQ(back.atoms.size(), 2u);
    EXPECT_EQ(back.atoms[1].z.depth(), 1e-30);
    EXPECT_EQ(back.atoms[1].mass, 0.25);
    EXPECT_EQ(*back.accumulation_angle, 0.5);
}

TEST(Io, MalformedDocuments) {
    EXPECT_THROW(boundary_function_from_json(json::parse(R"({"repr": "wavelet"})")), FormatError);
    EXPECT_THROW(boundary_function_from_json(json::parse(R"({"values": []})")), FormatError);
    EXPECT_THROW(boundary_function_from_json(json::parse(R"({"repr": "closed", "name": "nope"})")), FormatError);
    EXPECT_THROW(measure_from_json(json::parse(R"({"atoms": [[2.0, 0.0, 1.0]]})")), std::invalid_argument);
    EXPECT_THROW(measure_from_json(json::parse(R"({"atoms": [[0.1, 0.0, -1.0]]})")), std::invalid_argument);
    EXPECT_THROW(params_from_json(json::parse(R"({"p": 2, "q": 3})")), FormatError);
    EXPECT_THROW(params_from_json(json::parse(R"({"p": 0.5})")), FormatError);
    EXPECT_THROW(quadrature_from_json(json::parse(R"({"M": 100})")), FormatError);
    EXPECT_THROW(search_from_json(json::parse(R"({"J_max": "deep"})")), FormatError);
    EXPECT_THROW(read_json_file("/nonexistent/file.json"), std::invalid_argument);
}

TEST(Io, Overrides) {
    const SpaceParams P = params_from_json(json::parse(R"({"s": 0.25})"));
    EXPECT_EQ(P.p, 2.0);
    EXPECT_EQ(P.s, 0.25);
    const QuadratureSpec q = quadrature_from_json(json::parse(R"({"M": 512, "tolerance": 0.001})"));
    EXPECT_EQ(q.M, 512u);
    EXPECT_EQ(q.tolerance, 0.001);
    EXPECT_EQ(search_from_json(json::object()).J_max, SupSearchSpec{}.J_max);
}

TEST(Io, ReportsAndCsv) {
    SeminormReport r;
    r.value = 2.0;
    r.profile = {1.0, 2.0};
    r.witness.arc = Arc(0.5, 1.0);
    const json j = to_json(r);
    EXPECT_EQ(j["value"], 2.0);
    EXPECT_EQ(j["profile"].size(), 2u);
    EXPECT_TRUE(j.contains("witness"));

    CarlesonReport c;
    c.slope = std::nan("");
    EXPECT_TRUE(to_json(c)["slope"].is_null());

    HarnessResult h;
    h.ratio = std::numeric_limits<double>::infinity();
    EXPECT_EQ(to_json(h)["ratio"], "inf");

    std::ostringstream a, b, d;
    write_profile_csv(a, {0.5, 0.25});
    EXPECT_EQ(a.str(), "level,value\n0,0.5\n1,0.25\n");
    write_lacunary_csv(b, LacunarySeries{1, {cplx(1.0, -1.0)}});
    EXPECT_EQ(b.str(), "k,re,im\n1,1.0,-1.0\n");
    write_cells_csv(d, {cplx(0.025, 1.025)});
    EXPECT_EQ(d.str(), "re,im\n0.025,1.025\n");
}
