#include "orderone/serialize.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "orderone/cache.hpp"
#include "orderone/errors.hpp"

namespace orderone {
namespace {

template <typename T>
T roundtrip(const T& value) {
  return Json::parse(Json(value).dump()).template get<T>();
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("orderone-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(Serialize, IntPolyWithHugeCoefficients) {
  Integer big("1" + std::string(199, '7'));
  const IntPoly p(std::vector<Integer>{-big, 3, 0, big * big, 1});
  EXPECT_EQ(roundtrip(p), p);
  const Json j = p;
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(j[1], 3);
  EXPECT_EQ(Json(IntPoly{-2, 0, 1}).dump(), "[-2,0,1]");
}

TEST(Serialize, RootsAndRelations) {
  const RootOfUnity r(5, 6);
  EXPECT_EQ(Json(r).dump(), "\"5/6\"");
  EXPECT_EQ(roundtrip(r), r);
  for (const auto& c : enumerate_indecomposable(6)) {
    EXPECT_EQ(roundtrip(c.representative), c.representative);
    EXPECT_EQ(roundtrip(c), c);
  }
  const Json j = Relation{{{RootOfUnity(0, 1), 1}, {RootOfUnity(1, 2), 1}}};
  EXPECT_EQ(j.dump(), R"({"entries":[{"root":"0/1","sign":1},{"root":"1/2","sign":1}]})");
}

TEST(Serialize, CycInt) {
  const CycInt c(12, {1, -3, 0, 0, Integer("123456789012345678901234567890"), 0, 0, 0, 0, 0, 0, 2});
  const CycInt back = roundtrip(c);
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.level(), 12);
  EXPECT_EQ(back.coeffs(), c.coeffs());
}

TEST(Serialize, MadanPalRecord) {
  for (std::uint64_t n : {1u, 2u, 7u, 8u, 30u}) {
    const auto rec = build_record(n);
    EXPECT_EQ(roundtrip(rec), rec) << n;
  }
}

TEST(Serialize, SolutionSetsAndPatterns) {
  SolveOptions opt;
  opt.max_order_12 = 12;
  opt.max_order_3 = 12;
  opt.max_level = 24;
  opt.workers = 1;
  const auto sols = solve_bounded(opt);
  ASSERT_FALSE(sols.empty());
  EXPECT_EQ(roundtrip(sols), sols);
  const std::set<SolutionTriple> as_set(sols.begin(), sols.end());
  EXPECT_EQ(roundtrip(as_set), as_set);
  const auto patterns = classify_solutions(sols);
  EXPECT_EQ(roundtrip(patterns), patterns);
  EXPECT_EQ(roundtrip(published_sporadic_patterns()), published_sporadic_patterns());
}

TEST(Serialize, DecompositionReport) {
  for (const auto& r : decompose(7)) EXPECT_EQ(roundtrip(r), r);
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW(Json::parse(R"("3-5")").get<RootOfUnity>(), std::exception);
  EXPECT_THROW(Json::parse(R"(["1x"])").get<IntPoly>(), InvalidInput);
  EXPECT_THROW(Json::parse(R"({"root":"1/3","sign":2})").get<RelationEntry>(), InvalidInput);
  EXPECT_THROW(Json::parse(R"(["1/3","1/3"])").get<SolutionTriple>(), InvalidInput);
}

TEST(Cache, EnvelopeChecks) {
  const Json payload = IntPoly{1, 2, 3};
  const Json body = cache_envelope("k", payload);
  EXPECT_EQ(body["schema"], 1);
  EXPECT_EQ(open_envelope("k", body), payload);
  EXPECT_FALSE(open_envelope("other", body).has_value());
  Json tampered = body;
  tampered["payload"][1] = 5;
  EXPECT_FALSE(open_envelope("k", tampered).has_value());
  Json old_schema = body;
  old_schema["schema"] = 0;
  EXPECT_FALSE(open_envelope("k", old_schema).has_value());
}

TEST(Cache, StoresLoadsAndRecomputesCorruptFiles) {
  TempDir tmp;
  const ResultCache cache(tmp.path());
  int calls = 0;
  const std::function<MadanPalRecord()> compute = [&] {
    ++calls;
    return build_record(7);
  };
  EXPECT_EQ(cache.get_or_compute<MadanPalRecord>("madan-pal-7", compute), build_record(7));
  EXPECT_EQ(cache.get_or_compute<MadanPalRecord>("madan-pal-7", compute), build_record(7));
  EXPECT_EQ(calls, 1);

  // Valid JSON with a wrong payload: only the checksum catches it.
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path())) {
    std::string text;
    {
      std::ifstream in(entry.path());
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    const auto pos = text.find("\"ordinary\":true");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 15, "\"ordinary\":false");
    std::ofstream(entry.path(), std::ios::trunc) << text;
    ASSERT_FALSE(cache.load("madan-pal-7").has_value());
  }
  EXPECT_EQ(cache.get_or_compute<MadanPalRecord>("madan-pal-7", compute), build_record(7));
  EXPECT_EQ(calls, 2);
}

TEST(Cache, DisabledCacheNeverStores) {
  const ResultCache cache = ResultCache::disabled();
  cache.store("x", Json(1));
  EXPECT_FALSE(cache.load("x").has_value());
}

TEST(Cache, Fnv1a) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace orderone
