#include <doctest.h>

#include <set>

#include <json.hpp>

#include "helpers.hpp"

#include "cosetcurv/bounds.hpp"
#include "cosetcurv/report.hpp"

using namespace cosetcurv;

namespace {

const BoundEntry* find_entry(const AnalysisReport& rep, const std::string& id) {
    for (const auto& b : rep.bounds)
        if (b.id == id) return &b;
    return nullptr;
}

} // namespace

TEST_CASE("pair-based bound formulas on pinned values") {
    CHECK(diameter_bound_from_pairs(3, 1) == Rat(3, 2));
    CHECK(diameter_bound_from_pairs(6, 1) == Rat(3));
    CHECK(diameter_bound_from_pairs(10, 0) == Rat(10));
    CHECK(curvature_bound_from_pairs(7, 3) == Rat(1));
    CHECK(curvature_bound_from_pairs(5, 0) == Rat(1, 3));
}

TEST_CASE("ball dimension bound counts exactly") {
    BallDimensionBound b = dimension_bound_from_ball(6, 3, 4);
    CHECK(b.ball_size == "42");
    CHECK(format_real(b.log2_ball) == format_real(std::log2(42.0)));
    CHECK(b.dim_within); // 2^4 = 16 <= 42
    CHECK(!dimension_bound_from_ball(6, 3, 6).dim_within); // 2^6 = 64 > 42

    CHECK(dimension_bound_from_ball(8, 8, 8).log2_ball == doctest::Approx(8.0));
    CHECK(dimension_bound_from_ball(8, 0, 0).ball_size == "1");
    CHECK(dimension_bound_from_ball(8, 0, 0).log2_ball == doctest::Approx(0.0));
    // Big-integer path: the full ball at n = 200 is 2^200.
    BallDimensionBound big = dimension_bound_from_ball(200, 200, 200);
    CHECK(big.log2_ball == doctest::Approx(200.0));
    CHECK(big.dim_within);
    CHECK_THROWS(dimension_bound_from_ball(4, 5, 1));
}

TEST_CASE("entropy helpers") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.2) == doctest::Approx(binary_entropy(0.8)));
    CHECK_THROWS(binary_entropy(-0.1));
    // Closed form dominates the exact log for the pinned small case.
    double closed = entropy_ball_closed_form(6, 1);
    CHECK(closed >= dimension_bound_from_ball(6, 3, 1).log2_ball);
}

TEST_CASE("regular dimension bound and its exact form") {
    CHECK(dimension_bound_regular(40, 20) == doctest::Approx(80.0 / std::sqrt(20.0)));
    CHECK(dimension_bound_regular(7, 3) == doctest::Approx(14.0 / std::sqrt(3.0)));
    CHECK(regular_dimension_within(4, 4, 4));   // 64 = 64 boundary holds
    CHECK(!regular_dimension_within(4, 4, 5));  // 100 > 64
    CHECK(regular_dimension_within(40, 19, 5));
}

TEST_CASE("asymptotic formula values") {
    CHECK(lcc_covering_radius_scale(100, 3) == doctest::Approx(10.0));
    CHECK(lcc_dimension_scale(100, 3) ==
          doctest::Approx(10.0 * std::sqrt(std::log2(100.0))));
    CHECK(perfect3_dimension_scale(64) == doctest::Approx(8.0));
    // log2(4)/4 * 40 = 20, exactly representable.
    CHECK(format_real(repetition_dimension_scale(40, 4)) == "20.000000000");
    CHECK_THROWS(repetition_dimension_scale(10, 1));
    CHECK_THROWS(lcc_covering_radius_scale(10, 2));
}

TEST_CASE("real formatting is fixed-point with nine decimals") {
    CHECK(format_real(1.0) == "1.000000000");
    CHECK(format_real(0.5) == "0.500000000");
    CHECK(format_real(-2.25) == "-2.250000000");
}

TEST_CASE("registry ids are unique and statuses have names") {
    std::set<std::string> ids;
    for (const auto& a : bound_registry()) {
        CHECK(ids.insert(a.id).second);
        CHECK(a.anchor[0] != '\0');
    }
    CHECK(bound_registry().size() == 14);
    CHECK(std::string(to_string(BoundStatus::pass)) == "pass");
    CHECK(std::string(to_string(BoundStatus::info)) == "info");
}

TEST_CASE("full analysis of the simplex instance") {
    AnalyzeOptions opts;
    opts.source = "construct hadamard:3";
    AnalysisReport rep = analyze_code(hadamard(3), opts);
    CHECK(rep.measured.n == 7);
    CHECK(rep.measured.dim == 3);
    REQUIRE(rep.measured.diameter.has_value());
    CHECK(*rep.measured.diameter == 1);
    REQUIRE(rep.measured.covering_radius.has_value());
    CHECK(*rep.measured.covering_radius == 1);
    REQUIRE(rep.measured.kappa_graph.has_value());
    CHECK(*rep.measured.kappa_graph == Rat(1));
    CHECK(rep.measured.k == 3);
    CHECK(rep.measured.sigma == 3);
    CHECK(rep.measured.p == 1);
    CHECK(rep.measured.t == 7);
    CHECK(rep.measured.regular);
    CHECK(rep.measured.sphere_profile == std::vector<std::uint64_t>{1, 7});
    CHECK(rep.all_certifying_pass());

    const BoundEntry* diam = find_entry(rep, "diameter-vs-disjoint-pairs");
    REQUIRE(diam);
    CHECK(diam->value == "7/4");
    CHECK(diam->status == BoundStatus::pass);
    const BoundEntry* curv = find_entry(rep, "curvature-vs-disjoint-pairs");
    REQUIRE(curv);
    CHECK(curv->value == "1/1");
    CHECK(curv->status == BoundStatus::pass);
    const BoundEntry* cov = find_entry(rep, "diameter-equals-dual-covering-radius");
    REQUIRE(cov);
    CHECK(cov->status == BoundStatus::pass);
    const BoundEntry* reg = find_entry(rep, "regular-ltc-dimension");
    REQUIRE(reg);
    CHECK(reg->status == BoundStatus::pass);
    const BoundEntry* rat = find_entry(rep, "sigma-over-p-pairs");
    REQUIRE(rat);
    CHECK(rat->value == "3");
    CHECK(rat->status == BoundStatus::pass);
    CHECK(!find_entry(rep, "block-construction-dimension"));
    CHECK(!find_entry(rep, "perfect-3lcc-dimension-formula"));
    CHECK(!find_entry(rep, "lcc-dimension-formula"));
    const BoundEntry* pd = find_entry(rep, "pair-density-diameter");
    REQUIRE(pd);
    CHECK(pd->status == BoundStatus::info);
    CHECK(pd->value == "7/3");
    // Every emitted entry carries its registry anchor.
    for (const auto& b : rep.bounds) {
        bool found = false;
        for (const auto& a : bound_registry())
            if (b.id == a.id && b.anchor == a.anchor) found = true;
        CHECK(found);
    }
}

TEST_CASE("analysis marks pair-hypothesis bounds not applicable when K = 0") {
    AnalyzeOptions opts;
    opts.source = "construct simplexcube:2";
    AnalysisReport rep = analyze_code(simplex_hypercube_product(2), opts);
    CHECK(rep.measured.k == 0);
    const BoundEntry* diam = find_entry(rep, "diameter-vs-disjoint-pairs");
    REQUIRE(diam);
    CHECK(diam->status == BoundStatus::na);
    const BoundEntry* ball = find_entry(rep, "dimension-vs-ball");
    REQUIRE(ball);
    CHECK(ball->status == BoundStatus::na);
    // The curvature floor is unconditional: kappa = 1/3 = 2(0+1)/6 exactly.
    const BoundEntry* curv = find_entry(rep, "curvature-vs-disjoint-pairs");
    REQUIRE(curv);
    CHECK(curv->status == BoundStatus::pass);
    CHECK(curv->value == "1/3");
    CHECK(!find_entry(rep, "pair-density-diameter"));
    CHECK(rep.all_certifying_pass());
}

TEST_CASE("block identity entry appears only with block metadata") {
    AnalyzeOptions opts;
    opts.source = "construct pairedblocks:2,2";
    opts.block_m = 2;
    AnalysisReport rep =
        analyze_code(paired_block_code(2, 2, paired_block_witness(2, 2)), opts);
    const BoundEntry* blk = find_entry(rep, "block-construction-dimension");
    REQUIRE(blk);
    CHECK(blk->value == "2/1");
    CHECK(blk->status == BoundStatus::pass);
    CHECK(rep.all_certifying_pass());
}

TEST_CASE("planted instance earns the perfect-partition formula entry") {
    // Greedy packing strands points at most coordinates of this instance, so
    // the certificate needs the explicit partition witness.
    AnalyzeOptions opts;
    opts.source = "construct planted3:6";
    opts.partition_witness = planted_3lcc_families(6);
    AnalysisReport rep = analyze_code(planted_3lcc(6), opts);
    const BoundEntry* pf = find_entry(rep, "perfect-3lcc-dimension-formula");
    REQUIRE(pf);
    CHECK(pf->value == "8.000000000");
    CHECK(pf->status == BoundStatus::info);
    CHECK(rep.all_certifying_pass());
    REQUIRE(rep.measured.diameter.has_value());
    CHECK(*rep.measured.diameter == 1);
    // n = 64 is beyond the covering radius oracle.
    CHECK(!rep.measured.covering_radius.has_value());
    const BoundEntry* cov = find_entry(rep, "diameter-equals-dual-covering-radius");
    REQUIRE(cov);
    CHECK(cov->status == BoundStatus::na);
}

TEST_CASE("partition witness is revalidated, not trusted") {
    AnalyzeOptions opts;
    opts.source = "construct planted3:6";
    opts.partition_witness = planted_3lcc_families(6);
    // Wrong length.
    opts.partition_witness.pop_back();
    CHECK_THROWS_AS(analyze_code(planted_3lcc(6), opts), std::invalid_argument);
    // Well-shaped witness whose first tuple touches its own coordinate.
    opts.partition_witness = planted_3lcc_families(6);
    opts.partition_witness[0].tuples[0][0] = 0;
    CHECK_THROWS_AS(analyze_code(planted_3lcc(6), opts), std::invalid_argument);
}

TEST_CASE("higher-arity formula entries appear when q is set") {
    AnalyzeOptions opts;
    opts.source = "construct planted3:4";
    opts.q = 3;
    AnalysisReport rep = analyze_code(planted_3lcc(4), opts);
    const BoundEntry* cr = find_entry(rep, "lcc-covering-radius-formula");
    REQUIRE(cr);
    CHECK(cr->value == "4.000000000"); // 16^(1/2)
    CHECK(cr->status == BoundStatus::info);
    CHECK(find_entry(rep, "lcc-dimension-formula"));
}

TEST_CASE("analysis rejects degenerate inputs") {
    AnalyzeOptions opts;
    CHECK_THROWS(analyze_code(parse_code("00\n"), opts));
}

TEST_CASE("JSON report shape and byte stability") {
    AnalyzeOptions opts;
    opts.source = "construct hadamard:3";
    AnalysisReport rep = analyze_code(hadamard(3), opts);
    std::string one = report_to_json(rep);
    std::string two = report_to_json(analyze_code(hadamard(3), opts));
    CHECK(one == two);

    nlohmann::json j = nlohmann::json::parse(one);
    REQUIRE(j.contains("code"));
    REQUIRE(j.contains("measured"));
    REQUIRE(j.contains("bounds"));
    REQUIRE(j.contains("timing"));
    CHECK(j["timing"].is_null());
    CHECK(j["code"]["source"] == "construct hadamard:3");
    CHECK(j["measured"]["n"] == 7);
    CHECK(j["measured"]["K"] == 3);
    CHECK(j["measured"]["kappa_graph"] == "1/1");
    CHECK(j["measured"]["regular"] == true);
    CHECK(j["bounds"].is_array());
    CHECK(j["bounds"].size() == rep.bounds.size());
    for (const auto& b : j["bounds"]) {
        CHECK(b.contains("id"));
        CHECK(b.contains("anchor"));
        CHECK(b.contains("value"));
        CHECK(b.contains("compares_to"));
        CHECK(b.contains("measured"));
        CHECK(b.contains("status"));
        CHECK(b.contains("note"));
    }
}

TEST_CASE("timings flag populates the timing object and nothing else") {
    AnalyzeOptions opts;
    opts.source = "construct hadamard:2";
    opts.timings = true;
    AnalysisReport rep = analyze_code(hadamard(2), opts);
    CHECK(!rep.stage_ms.empty());
    nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j["timing"].is_object());
}

TEST_CASE("CSV has a header and one row per bound") {
    AnalyzeOptions opts;
    opts.source = "construct hadamard:3";
    AnalysisReport rep = analyze_code(hadamard(3), opts);
    std::string csv = report_to_csv(rep);
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == rep.bounds.size() + 1);
    CHECK(csv.rfind("id,anchor,value,", 0) == 0);
    // Anchors with commas are quoted, so the parse stays unambiguous.
    CHECK(csv.find("\"2^dim <= sum_{j<=D} C(n,j), D = floor(n/(K+1))\"") != std::string::npos);
}

TEST_CASE("text report names the verdict") {
    AnalyzeOptions opts;
    opts.source = "construct hadamard:3";
    std::string text = report_to_text(analyze_code(hadamard(3), opts));
    CHECK(text.find("source: construct hadamard:3") != std::string::npos);
    CHECK(text.find("certifying: pass") != std::string::npos);
    CHECK(text.find("[pass] diameter-vs-disjoint-pairs") != std::string::npos);
}

TEST_CASE("curvature and ensemble serializers emit valid JSON") {
    CurvatureReport cr = curvature_graph(CosetGraph(identity_code(3)));
    nlohmann::json cj = nlohmann::json::parse(curvature_to_json(cr, "construct hypercube:3"));
    CHECK(cj["kappa_graph"] == "1/2");
    CHECK(cj["per_direction"].size() == 3);
    std::string ct = curvature_to_text(cr, "construct hypercube:3");
    CHECK(ct.find("kappa_graph: 1/2") != std::string::npos);

    LinearCode pc = planted_3lcc(4);
    SubsetEnsemble e = run_subset_ensemble(pc, 3, Rat(1), 3, 5, planted_3lcc_families(4));
    EnsembleContext ctx{"construct planted3:4", 3, Rat(1), 3};
    nlohmann::json ej = nlohmann::json::parse(ensemble_to_json(e, ctx));
    CHECK(ej["trials"] == 5);
    CHECK(ej["delta"] == "5/16");
    CHECK(ej["bullet2_all"] == true);
    std::string et = ensemble_to_text(e, ctx);
    CHECK(et.find("bullet2") != std::string::npos);
}
