#include "symseq/core.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "symseq/error.hpp"

namespace {

using symseq::Alphabet;
using symseq::Signal;
using symseq::TimeSeriesDataset;
using symseq::ValidationError;
using symseq::validate_dataset;

TEST(Alphabet, LatinDefaultIsUppercaseAToZ) {
  const Alphabet alphabet = Alphabet::latin();
  EXPECT_EQ(alphabet.size(), 26);
  EXPECT_EQ(alphabet.symbols(), "ABCDEFGHIJKLMNOPQRSTUVWXYZ");
  EXPECT_EQ(alphabet.symbol(0), 'A');
  EXPECT_EQ(alphabet.symbol(25), 'Z');
  EXPECT_EQ(alphabet.position('A'), 0);
  EXPECT_EQ(alphabet.position('Z'), 25);
}

TEST(Alphabet, LatinPrefixTakesTheFirstLetters) {
  EXPECT_EQ(Alphabet::latin(4).symbols(), "ABCD");
  EXPECT_EQ(Alphabet::latin(2).symbols(), "AB");
}

TEST(Alphabet, LatinRejectsSizesOutsideTwoToTwentySix) {
  EXPECT_THROW(Alphabet::latin(1), ValidationError);
  EXPECT_THROW(Alphabet::latin(0), ValidationError);
  EXPECT_THROW(Alphabet::latin(27), ValidationError);
}

TEST(Alphabet, CustomSymbolsKeepOrderAndPositions) {
  const Alphabet alphabet("XYZ");
  EXPECT_EQ(alphabet.size(), 3);
  EXPECT_EQ(alphabet.position('X'), 0);
  EXPECT_EQ(alphabet.position('Z'), 2);
  EXPECT_TRUE(alphabet.contains('Y'));
  EXPECT_FALSE(alphabet.contains('A'));
  EXPECT_EQ(alphabet.position('A'), -1);
}

TEST(Alphabet, RejectsDuplicatesAndTooFewSymbols) {
  EXPECT_THROW(Alphabet("ABA"), ValidationError);
  EXPECT_THROW(Alphabet("A"), ValidationError);
  EXPECT_THROW(Alphabet(""), ValidationError);
}

TimeSeriesDataset two_signal_dataset() {
  TimeSeriesDataset dataset;
  dataset.signals.push_back(Signal{"s1", {0.0, 1.0}});
  dataset.signals.push_back(Signal{"s2", {2.0, 3.0}});
  dataset.labels = {"a", "b"};
  return dataset;
}

TEST(ValidateDataset, AcceptsLabeledFiniteSignals) {
  const TimeSeriesDataset dataset = two_signal_dataset();
  const TimeSeriesDataset& validated = validate_dataset(dataset);
  EXPECT_EQ(&validated, &dataset);  // identity: returned unchanged
}

TEST(ValidateDataset, IsIdempotent) {
  const TimeSeriesDataset dataset = two_signal_dataset();
  validate_dataset(validate_dataset(dataset));
}

TEST(ValidateDataset, UnlabeledDatasetIsValid) {
  TimeSeriesDataset dataset = two_signal_dataset();
  dataset.labels.clear();
  EXPECT_FALSE(dataset.labeled());
  validate_dataset(dataset);
}

TEST(ValidateDataset, NamesTheNaNIndex) {
  TimeSeriesDataset dataset = two_signal_dataset();
  dataset.signals[1].values = {0.0, 1.0, 2.0,
                               std::numeric_limits<double>::quiet_NaN()};
  try {
    validate_dataset(dataset);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& error) {
    EXPECT_NE(std::string(error.what()).find("index 3"), std::string::npos)
        << error.what();
    EXPECT_NE(std::string(error.what()).find("s2"), std::string::npos)
        << error.what();
  }
}

TEST(ValidateDataset, RejectsInfinity) {
  TimeSeriesDataset dataset = two_signal_dataset();
  dataset.signals[0].values[1] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(validate_dataset(dataset), ValidationError);
}

TEST(ValidateDataset, RejectsLabelCountMismatch) {
  TimeSeriesDataset dataset = two_signal_dataset();
  dataset.signals.push_back(Signal{"s3", {4.0}});
  EXPECT_THROW(validate_dataset(dataset), ValidationError);  // 3 signals, 2 labels
}

TEST(ValidateDataset, RejectsEmptySignal) {
  TimeSeriesDataset dataset = two_signal_dataset();
  dataset.signals[0].values.clear();
  EXPECT_THROW(validate_dataset(dataset), ValidationError);
}

TEST(ValidateDataset, RejectsEmptyDataset) {
  TimeSeriesDataset dataset;
  EXPECT_THROW(validate_dataset(dataset), ValidationError);
}

TEST(ValidateDataset, RejectsDuplicateIds) {
  TimeSeriesDataset dataset = two_signal_dataset();
  dataset.signals[1].id = "s1";
  EXPECT_THROW(validate_dataset(dataset), ValidationError);
}

}  // namespace
