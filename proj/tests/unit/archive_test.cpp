#include <gtest/gtest.h>

#include "clima/archive.hpp"
#include "fixtures.hpp"

using namespace clima::service;
using clima::testing::data_path;
using clima::testing::read_text;

TEST(Archive, ExtractsTheWeatherFile) {
  const auto zip = read_text(data_path("NLD_Amsterdam062400_IWEC.zip"));
  EXPECT_TRUE(looks_like_zip(zip));
  const auto entries = read_zip(zip);
  EXPECT_GE(entries.size(), 2u);
  const auto epw = extract_epw(zip);
  ASSERT_TRUE(epw);
  EXPECT_EQ(*epw, read_text(data_path("NLD_Amsterdam062400_IWEC.epw")));
}

TEST(Archive, DetectsDamage) {
  auto zip = read_text(data_path("NLD_Amsterdam062400_IWEC.zip"));
  for (std::size_t i = 2000; i < 2400; ++i) zip[i] = static_cast<char>(zip[i] ^ 0x5a);
  EXPECT_THROW((void)read_zip(zip), ArchiveError);
  const auto whole = read_text(data_path("NLD_Amsterdam062400_IWEC.zip"));
  EXPECT_THROW((void)read_zip(whole.substr(0, whole.size() / 2)), ArchiveError);
  EXPECT_FALSE(looks_like_zip("LOCATION,Amsterdam"));
  EXPECT_THROW((void)read_zip("PK\x03\x04garbage"), ArchiveError);
}
