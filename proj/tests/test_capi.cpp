#include <gtest/gtest.h>

#include <string>

#include "pfrac/pfrac.h"

namespace {

constexpr const char* kLinePair =
    R"({"dimension": 1, "forms": [{"vector": ["1"], "mu": "0"}, {"vector": ["1"], "mu": "1"}]})";

std::string take(char* s) {
  std::string out = s ? s : "";
  pfrac_string_free(s);
  return out;
}

TEST(CApi, DecomposeVerifyRender) {
  pfrac_input* in = nullptr;
  ASSERT_EQ(pfrac_input_parse(kLinePair, &in), PFRAC_OK);
  EXPECT_EQ(pfrac_input_dimension(in), 1u);
  EXPECT_EQ(pfrac_input_form_count(in), 2u);
  size_t count = 0;
  ASSERT_EQ(pfrac_points_count(in, &count), PFRAC_OK);
  EXPECT_EQ(count, 2u);

  pfrac_decomposition* d = nullptr;
  ASSERT_EQ(pfrac_decompose(in, PFRAC_STRATEGY_LAST_REMOVABLE, &d), PFRAC_OK);
  ASSERT_EQ(pfrac_decomposition_term_count(d), 2u);
  EXPECT_EQ(pfrac_decomposition_point_count(d), 2u);
  size_t point = 99;
  char* coeff = nullptr;
  ASSERT_EQ(pfrac_decomposition_term(d, 1, &point, &coeff), PFRAC_OK);
  EXPECT_EQ(point, 0u);
  EXPECT_EQ(take(coeff), "-1");
  EXPECT_EQ(pfrac_decomposition_term(d, 5, &point, &coeff), PFRAC_ERR_INVALID_ARGUMENT);

  pfrac_report* report = nullptr;
  ASSERT_EQ(pfrac_verify(d, 25, 7, &report), PFRAC_OK);
  EXPECT_EQ(pfrac_report_passed(report), 1);

  char* text = nullptr;
  ASSERT_EQ(pfrac_decomposition_render(d, PFRAC_FORMAT_TEXT, report, 20, &text), PFRAC_OK);
  const std::string t = take(text);
  EXPECT_NE(t.find("1/(x0) - 1/(x0 + 1)"), std::string::npos) << t;
  EXPECT_NE(t.find("identity: pass"), std::string::npos) << t;

  char* json = nullptr;
  ASSERT_EQ(pfrac_decomposition_render(d, PFRAC_FORMAT_JSON, nullptr, 20, &json), PFRAC_OK);
  const std::string j = take(json);

  pfrac_decomposition* reloaded = nullptr;
  ASSERT_EQ(pfrac_decomposition_parse(in, j.c_str(), &reloaded), PFRAC_OK);
  pfrac_report* report2 = nullptr;
  ASSERT_EQ(pfrac_verify(reloaded, 5, 1, &report2), PFRAC_OK);
  EXPECT_EQ(pfrac_report_passed(report2), 1);
  char* rj = nullptr;
  ASSERT_EQ(pfrac_report_render(report2, PFRAC_FORMAT_JSON, &rj), PFRAC_OK);
  EXPECT_NE(take(rj).find("\"identity\": true"), std::string::npos);

  pfrac_report_free(report2);
  pfrac_decomposition_free(reloaded);
  pfrac_report_free(report);
  pfrac_decomposition_free(d);
  pfrac_input_free(in);
}

TEST(CApi, TamperedCoefficientFailsVerification) {
  pfrac_input* in = nullptr;
  ASSERT_EQ(pfrac_input_parse(kLinePair, &in), PFRAC_OK);
  const char* tampered = R"({"strategy": "last-removable",
    "points": [{"coords": ["-1"], "xp": [1]}, {"coords": ["0"], "xp": [0]}],
    "terms": [{"point": 1, "ell": [0], "coeff": "1"}, {"point": 0, "ell": [1], "coeff": "-2"}]})";
  pfrac_decomposition* d = nullptr;
  ASSERT_EQ(pfrac_decomposition_parse(in, tampered, &d), PFRAC_OK);
  pfrac_report* r = nullptr;
  ASSERT_EQ(pfrac_verify(d, 10, 1, &r), PFRAC_OK);
  EXPECT_EQ(pfrac_report_passed(r), 0);
  pfrac_report_free(r);
  pfrac_decomposition_free(d);
  pfrac_input_free(in);
}

TEST(CApi, ErrorCodesAndMessages) {
  pfrac_input* in = nullptr;
  EXPECT_EQ(pfrac_input_parse("{", &in), PFRAC_ERR_PARSE);
  EXPECT_EQ(in, nullptr);
  EXPECT_NE(std::string(pfrac_last_error()), "");

  EXPECT_EQ(pfrac_input_parse(R"({"dimension": 2, "forms": [
      {"vector": ["1", "0"], "mu": "0"}, {"vector": ["2", "0"], "mu": "1"}]})", &in),
            PFRAC_ERR_NOT_SPANNING);
  EXPECT_NE(std::string(pfrac_last_error()).find("forms do not span"), std::string::npos);

  EXPECT_EQ(pfrac_input_parse(R"({"dimension": 1, "forms": [{"vector": ["0"], "mu": "1"}]})", &in),
            PFRAC_ERR_ZERO_VECTOR_FORM);
  EXPECT_NE(std::string(pfrac_last_error()).find("form 0"), std::string::npos);

  EXPECT_EQ(pfrac_input_parse(nullptr, &in), PFRAC_ERR_INVALID_ARGUMENT);

  pfrac_strategy s{};
  EXPECT_EQ(pfrac_strategy_from_name("first-removable", &s), PFRAC_OK);
  EXPECT_EQ(s, PFRAC_STRATEGY_FIRST_REMOVABLE);
  EXPECT_EQ(pfrac_strategy_from_name("bogus", &s), PFRAC_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(pfrac_status_name(PFRAC_ERR_NU_ZERO), "nu is zero");
}

TEST(CApi, GenericAndPoints) {
  pfrac_input* in = nullptr;
  ASSERT_EQ(pfrac_input_parse(R"({"dimension": 2, "forms": [
      {"vector": ["1", "0"], "mu": "0"}, {"vector": ["0", "1"], "mu": "0"},
      {"vector": ["1", "1"], "mu": "0"}]})", &in),
            PFRAC_OK);
  int generic = -1;
  char* out = nullptr;
  ASSERT_EQ(pfrac_generic_render(in, PFRAC_FORMAT_TEXT, &generic, &out), PFRAC_OK);
  EXPECT_EQ(generic, 0);
  EXPECT_EQ(take(out).rfind("generic=false", 0), 0u);

  ASSERT_EQ(pfrac_points_render(in, PFRAC_FORMAT_TEXT, 2, &out), PFRAC_ERR_SUBSET_EXPLOSION);
  ASSERT_EQ(pfrac_points_render(in, PFRAC_FORMAT_JSON, 2, &out), PFRAC_OK);
  EXPECT_NE(take(out).find("\"xp\""), std::string::npos);
  pfrac_input_free(in);
}

}  // namespace
