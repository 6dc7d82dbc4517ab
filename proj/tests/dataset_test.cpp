#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cyscan/dataset.hpp"
#include "cyscan/fixtures.hpp"

using namespace cyscan;

namespace {

std::vector<InvariantRecord> table_records() {
  std::vector<WeightSystem> ws;
  for (const auto& row : kTable1) ws.push_back(WeightSystem::make(row.weights));
  auto recs = compute_records(ws);
  sort_canonical(recs);
  return recs;
}

const std::string kQuinticRow = "1,1,1,1,1,5,1,5,5,50,3,-200";

std::string with_header(const std::string& body) { return std::string(kDatasetHeader) + "\n" + body; }

}  // namespace

TEST(Dataset, QuinticRowIsExact) {
  const std::vector<InvariantRecord> q = {compute_record(WeightSystem::make(kQuinticWeights))};
  EXPECT_EQ(serialize_dataset(q), with_header(kQuinticRow + "\n"));
}

TEST(Dataset, EmptyDatasetIsHeaderOnly) {
  EXPECT_EQ(serialize_dataset({}), with_header(""));
  EXPECT_TRUE(parse_dataset(with_header("")).empty());
}

TEST(Dataset, WriterSortsAndRejectsDuplicates) {
  auto recs = table_records();
  auto shuffled = recs;
  std::mt19937 rng(5);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_EQ(serialize_dataset(shuffled), serialize_dataset(recs));
  recs.push_back(recs.front());
  EXPECT_THROW(serialize_dataset(recs), DatasetError);
}

TEST(Dataset, RoundTripIsLosslessAndByteStable) {
  const auto recs = table_records();
  const auto text = serialize_dataset(recs);
  const auto back = parse_dataset(text);
  EXPECT_EQ(back, recs);
  EXPECT_EQ(serialize_dataset(back), text);
}

TEST(Dataset, RoundTripRandomSubsets) {
  auto recs = table_records();
  recs.push_back(compute_record(WeightSystem::make(kQuinticWeights)));
  recs.push_back(compute_record(WeightSystem::make({11, 13, 107, 142, 166})));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<InvariantRecord> subset;
    for (const auto& r : recs)
      if (rng() % 2) subset.push_back(r);
    const auto text = serialize_dataset(subset);
    EXPECT_EQ(serialize_dataset(parse_dataset(text)), text);
  }
}

TEST(Dataset, LargeValuesSurvive) {
  const std::vector<InvariantRecord> big = {compute_record(WeightSystem::make({11, 13, 107, 142, 166}))};
  EXPECT_EQ(big[0].L3, BigInt("7138501060885473422"));
  EXPECT_EQ(parse_dataset(serialize_dataset(big)), big);
}

TEST(Dataset, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "cyscan_dataset_test.csv";
  const auto recs = table_records();
  write_dataset_file(path, recs);
  EXPECT_EQ(read_dataset_file(path), recs);
  std::filesystem::remove(path);
  EXPECT_THROW(read_dataset_file(path), IoError);
}

TEST(DatasetParse, RejectsMalformedText) {
  const std::vector<std::string> bad = {
      "",                                                               // no header
      "k1,k2\n",                                                        // wrong header
      with_header("1,1,1,1,1,5,1,5,5,50,3\n"),                          // 11 fields
      with_header("1,1,1,1,1,5,1,5,5,50,3,-200,0\n"),                   // 13 fields
      with_header("1,1,1,1,1,5,1,5,5,50,3,x\n"),                        // not a number
      with_header("1,1,1,1,1,5,1,05,5,50,3,-200\n"),                    // leading zero
      with_header("1,1,1,1,1,5,1,5,5,50,-0,-200\n"),                    // negative zero
      with_header("1,1,1,1,1,6,1,5,5,50,3,-200\n"),                     // degree != sum
      with_header("1,1,1,1,2,6,1,3,4,42,2,-204\n1,1,1,1,1,5,1,5,5,50,3,-200\n"),  // unordered
      with_header(kQuinticRow + "\n" + kQuinticRow + "\n"),            // duplicate
      with_header("2,2,2,2,2,10,1,5,5,50,3,-200\n"),                    // not canonical
      with_header("1,1,1,1,1,5,0,5,5,50,3,-200\n"),                     // k < 1
      with_header(kQuinticRow + "\r\n"),                                // CRLF
  };
  for (const auto& text : bad) EXPECT_THROW(parse_dataset(text), DatasetError) << text;
}

TEST(DatasetParse, ErrorsCarryLineNumber) {
  try {
    parse_dataset(with_header(kQuinticRow + "\n1,1,1,1,2,6,1,3,4,42,2,oops\n"));
    FAIL();
  } catch (const DatasetError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Format, Rationals) {
  EXPECT_EQ(format_rational(Rational(9, 5)), "9/5");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
  EXPECT_EQ(format_decimal(1.8), "1.8");
  EXPECT_EQ(format_decimal(1.0 / 3.0), "0.333333333333333");
}

TEST(Figure, FileLayout) {
  const auto recs = table_records();
  std::ostringstream os;
  write_figure(os, figure_series(recs, Figure::kChern), Figure::kChern);
  const auto text = os.str();
  EXPECT_EQ(text.rfind("# figure 3: Lc2 versus L3\n# wilson_line y=10x from 1,10 to 9,90\nx,y\n", 0), 0u);
  EXPECT_NE(text.find("\n1,34\n"), std::string::npos);

  std::ostringstream q;
  const std::vector<InvariantRecord> quintic = {compute_record(WeightSystem::make(kQuinticWeights))};
  write_figure(q, figure_series(quintic, Figure::kDistance), Figure::kDistance);
  EXPECT_EQ(q.str(), "# figure 2: D versus hL\nx,y\n5,9/5\n");
}
