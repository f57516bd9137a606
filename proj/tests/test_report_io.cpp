#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cclab/errors.hpp"
#include "cclab/report_io.hpp"

using namespace cclab;

TEST(ReportIo, FormatValue) {
  EXPECT_EQ(format_value(kInfinity), "inf");
  EXPECT_EQ(format_value(0.0), "0");
  EXPECT_EQ(format_value(3.0), "3");
  EXPECT_EQ(format_value(std::log2(3.0)), "1.58496");
}

TEST(ReportIo, ProfileCsv) {
  ComplexityProfile p = structure_function_profile(Bits::from_string("00"), 6);
  std::istringstream in(profile_csv(p));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, std::string("# schema=") + kProfileSchema + " measure=h_y code=sdl target=00");
  std::getline(in, line);
  EXPECT_EQ(line, "alpha,value,witness_hex");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "0,inf,");
  EXPECT_EQ(rows[5].substr(0, 4), "5,0,");
}

TEST(ReportIo, ProfileJson) {
  ComplexityProfile p = structure_function_profile(Bits::from_string("01"), 5);
  nlohmann::json j = to_json(p);
  EXPECT_EQ(j["schema"], kProfileSchema);
  EXPECT_EQ(j["target"], "01");
  ASSERT_EQ(j["entries"].size(), 6u);
  EXPECT_EQ(j["entries"][0]["value"], "inf");
  EXPECT_TRUE(j["entries"][0]["witness_hex"].is_null());
  EXPECT_EQ(j["entries"][5]["value"], "0");
}

TEST(ReportIo, WriteTextFile) {
  auto path = (std::filesystem::temp_directory_path() / "cclab_test_report.txt").string();
  write_text_file(path, "a,b\n");
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(s, "a,b\n");
  std::filesystem::remove(path);
  EXPECT_THROW(write_text_file("/nonexistent-dir/x.txt", "x"), UsageError);
}
