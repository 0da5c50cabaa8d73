#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gradedk {
namespace {

using testing::pt;

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_of(const std::string& text) {
    try {
        parse_job(text);
    } catch (const std::exception& ex) {
        return ex.what();
    }
    return {};
}

TEST(Job, PresetDocument) {
    auto job = parse_job(R"({"example": "R2", "base": "fp:7", "params": {"seed": 3, "bound": 4}})");
    EXPECT_EQ(job.example, "R2");
    EXPECT_EQ(job.base, "fp:7");
    ASSERT_TRUE(job.params);
    EXPECT_EQ(job.params->seed, 3u);
    EXPECT_EQ(job.params->bound, 4);
}

TEST(Job, CustomConeAndModule) {
    auto job = parse_job(R"({
      "scalars": "quadratic:2",
      "cone": [[1, 0], [1, "√2"]],
      "module": {"shifts": [[0, 0], [1, 1]]}
    })");
    auto d = resolve_ring(job);
    EXPECT_EQ(d.scalars, "quadratic:2");
    auto ring = build_ring(d, Rational(1));
    EXPECT_TRUE(ring.cone().is_quadratic());
    auto p = build_module(*job.module, ring);
    EXPECT_EQ(graded_rank(p).to_string(ring.order()), "t^(0,0) + t^(1,1)");
}

TEST(Job, RoundTripIsCanonical) {
    const std::filesystem::path dir = GRADEDK_SAMPLE_JOBS_DIR;
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        auto job = parse_job(slurp(entry.path()));
        auto text = serialize_job(job);
        auto again = parse_job(text);
        EXPECT_EQ(again, job) << entry.path();
        EXPECT_EQ(serialize_job(again), text) << entry.path();
    }
    EXPECT_GE(seen, 5);
}

TEST(Job, GeneratedModulesRoundTrip) {
    auto ring = testing::preset_ring("R2", testing::f7());
    Rng rng(12);
    auto pool = support_pool(ring, 4);
    for (int i = 0; i < 10; ++i) {
        auto p = random_presentation(ring, random_shifts(pool, 3, rng), rng);
        JobSpec job;
        job.example = "R2";
        job.base = "fp:7";
        job.module = module_spec(p);
        auto back = parse_job(serialize_job(job));
        EXPECT_EQ(build_module(*back.module, ring), p);
    }
}

TEST(Job, UnknownFieldsAreRejectedWithPath) {
    EXPECT_THROW(parse_job(R"({"example": "R1", "colour": 1})"), ParseError);
    EXPECT_NE(error_of(R"({"example": "R1", "module": {"shifts": [], "x": 1}})").find("$.module.x"), std::string::npos);
    EXPECT_NE(error_of(R"({"example": "R1", "params": {"seed": -1}})").find("$.params.seed"), std::string::npos);
}

TEST(Job, SyntaxErrorsReportLineAndColumn) {
    try {
        parse_job("{\n  \"example\": \"R1\",\n  ]\n}");
        FAIL() << "expected a parse error";
    } catch (const ParseError& ex) {
        EXPECT_NE(std::string(ex.what()).find("line 3"), std::string::npos) << ex.what();
    }
}

TEST(Job, SemanticErrors) {
    EXPECT_THROW(parse_job(R"({"example": "R4"})"), ValidationError);
    EXPECT_THROW(parse_job(R"({"example": "R1", "cone": [[1, 0], [0, 1]]})"), ValidationError);
    EXPECT_THROW(parse_job(R"({"cone": [[1, 0], [-1, 0], [0, 1]]})"), ValidationError);
    EXPECT_THROW(parse_job(R"({"cone": [[1, 0], [1, 1]], "order": [0, 1]})"), ValidationError);
    EXPECT_THROW(parse_job(R"({"example": "R1", "base": "fp:8"})"), ValidationError);
    EXPECT_THROW(parse_job(R"({"example": "R1", "base": "complex"})"), ValidationError);
    EXPECT_THROW(parse_job(R"({"scalars": "quadratic:4", "cone": [[1, 0], [1, 1]]})"), ValidationError);
    auto non_idem = R"({"example": "R1", "module": {"shifts": [[0, 0]], "idempotent": [[[{"exp": [0, 0], "coef": 2}]]]}})";
    EXPECT_THROW(parse_job(non_idem), ValidationError);
    auto bad_degree = R"({"example": "R1", "module": {"shifts": [[0, 0], [1, 0]],
        "idempotent": [[[], [{"exp": [0, 1], "coef": 1}]], [[], []]]}})";
    EXPECT_NE(error_of(bad_degree).find("module.idempotent[0][1]"), std::string::npos);
}

TEST(Base, Descriptors) {
    EXPECT_TRUE(std::holds_alternative<Rational>(parse_base("rational")));
    EXPECT_TRUE(std::holds_alternative<PrimeFieldElem>(parse_base("fp:7")));
    EXPECT_TRUE(std::holds_alternative<Product<Rational>>(parse_base("rational^2")));
    auto fp = parse_base("fp:5^3");
    ASSERT_TRUE(std::holds_alternative<Product<PrimeFieldElem>>(fp));
    EXPECT_EQ(std::get<Product<PrimeFieldElem>>(fp).size(), 3u);
    EXPECT_THROW(parse_base("rational^0"), ValidationError);
}

TEST(Json, Encoders) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    auto x = r1.generator("X") - r1.constant(Rational::parse("1/2"));
    EXPECT_EQ(encode_elem(x).dump(), R"([{"coef":"-1/2","exp":[0,0]},{"coef":"1","exp":[1,0]}])");
    GradedRankClass c = GradedRankClass::monomial(pt(1, 0), K0Class({2}));
    EXPECT_EQ(encode_class(c, r1.order()).dump(), R"([{"class":[2],"exp":[1,0]}])");
    auto report = verify_theorem_k0(IdempotentPresentation<Rational>::free(r1, {pt(0, 0)}));
    auto j = encode_report(report, r1.order());
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("checks").size(), 4u);
}

}  // namespace
}  // namespace gradedk
