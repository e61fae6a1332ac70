// End-to-end tests that drive the installed command line binary the way a
// user would: through a shell, checking exit codes, stdout, stderr, and the
// files left behind.
#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

#ifndef SYMSEQ_CLI_PATH
#error "SYMSEQ_CLI_PATH must point at the built binary"
#endif

namespace {

using testutil::TempDir;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args, const TempDir& dir) {
  const std::string out_path = dir.file("stdout.txt");
  const std::string err_path = dir.file("stderr.txt");
  const std::string command = std::string(SYMSEQ_CLI_PATH) + " " + args +
                              " >" + out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = testutil::read_file(out_path);
  result.err = testutil::read_file(err_path);
  return result;
}

TEST(Cli, HelpAndVersionSucceed) {
  TempDir dir;
  EXPECT_EQ(run_cli("--help", dir).exit_code, 0);
  EXPECT_EQ(run_cli("encode --help", dir).exit_code, 0);
  EXPECT_EQ(run_cli("evaluate --help", dir).exit_code, 0);
  const CliResult version = run_cli("--version", dir);
  EXPECT_EQ(version.exit_code, 0);
  EXPECT_NE(version.out.find("0.1.0"), std::string::npos);
}

TEST(Cli, MissingSubcommandFails) {
  TempDir dir;
  EXPECT_NE(run_cli("", dir).exit_code, 0);
}

TEST(Cli, FullPipelineRunsCleanly) {
  TempDir dir;
  const std::string data = dir.file("data.csv");

  CliResult synth = run_cli("synth --output " + data +
                                " --classes 2 --per-class 8 --length 60 "
                                "--seed 7",
                            dir);
  ASSERT_EQ(synth.exit_code, 0) << synth.err;
  EXPECT_NE(synth.out.find("wrote " + data), std::string::npos);

  CliResult encode = run_cli(
      "encode --input " + data + " --output " + dir.file("enc"), dir);
  ASSERT_EQ(encode.exit_code, 0) << encode.err;
  EXPECT_NE(encode.out.find("enc.sequences.csv"), std::string::npos);
  EXPECT_NE(encode.out.find("enc.bounds.json"), std::string::npos);

  CliResult embed = run_cli(
      "embed --input " + data + " --output " + dir.file("emb") + " --ksize 2",
      dir);
  ASSERT_EQ(embed.exit_code, 0) << embed.err;

  CliResult evaluate = run_cli(
      "evaluate --input " + data + " --output " + dir.file("ev") +
          " --repetitions 3 --classifiers knn,gnb --knn-k 3",
      dir);
  ASSERT_EQ(evaluate.exit_code, 0) << evaluate.err;

  CliResult ttest = run_cli("ttest --input " + dir.file("ev.runs.csv") +
                                " --classifier knn --classifier-b gnb",
                            dir);
  ASSERT_EQ(ttest.exit_code, 0) << ttest.err;
  EXPECT_NE(ttest.out.find("p = "), std::string::npos);
  EXPECT_NE(ttest.out.find("t = "), std::string::npos);
}

TEST(Cli, EncodeIsDeterministicAcrossInvocations) {
  TempDir dir;
  const std::string data = dir.file("data.csv");
  ASSERT_EQ(run_cli("synth --output " + data + " --per-class 4 --length 30",
                    dir)
                .exit_code,
            0);
  ASSERT_EQ(run_cli("encode --input " + data + " --output " + dir.file("a"),
                    dir)
                .exit_code,
            0);
  ASSERT_EQ(run_cli("encode --input " + data + " --output " + dir.file("b"),
                    dir)
                .exit_code,
            0);
  EXPECT_EQ(testutil::read_file(dir.file("a.sequences.csv")),
            testutil::read_file(dir.file("b.sequences.csv")));
  EXPECT_EQ(testutil::read_file(dir.file("a.bounds.json")),
            testutil::read_file(dir.file("b.bounds.json")));
}

TEST(Cli, ConstantInputExitsWithTheDegenerateCode) {
  TempDir dir;
  const std::string data = dir.file("flat.csv");
  testutil::write_file(data, "s1,x,3.0,3.0,3.0\ns2,y,3.0,3.0\n");
  const CliResult result =
      run_cli("encode --input " + data + " --output " + dir.file("out"), dir);
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("error:"), std::string::npos) << result.err;
}

TEST(Cli, ParseProblemsExitWithTheValidationCode) {
  TempDir dir;
  const std::string data = dir.file("bad.csv");
  testutil::write_file(data, "s1,x,1.0,2.0\ns2,y,1.0,zap\n");
  const CliResult bad_cell =
      run_cli("encode --input " + data + " --output " + dir.file("out"), dir);
  EXPECT_EQ(bad_cell.exit_code, 1);
  EXPECT_NE(bad_cell.err.find("line 2"), std::string::npos) << bad_cell.err;

  const CliResult missing = run_cli(
      "encode --input " + dir.file("nope.csv") + " --output " +
          dir.file("out"),
      dir);
  EXPECT_EQ(missing.exit_code, 1);
}

TEST(Cli, UnknownClassifierIsRejected) {
  TempDir dir;
  const std::string data = dir.file("data.csv");
  ASSERT_EQ(run_cli("synth --output " + data + " --per-class 4 --length 30",
                    dir)
                .exit_code,
            0);
  const CliResult result = run_cli(
      "evaluate --input " + data + " --output " + dir.file("ev") +
          " --classifiers knn,mlp --repetitions 1",
      dir);
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("mlp"), std::string::npos) << result.err;
}

TEST(Cli, ShortSignalsWarnOnStderrButStillSucceed) {
  TempDir dir;
  const std::string data = dir.file("data.csv");
  testutil::write_file(data, "s1,x,0.0,1.0,2.0,3.0\nshorty,y,9.0\n");
  const CliResult result = run_cli(
      "embed --input " + data + " --output " + dir.file("emb"), dir);
  EXPECT_EQ(result.exit_code, 0) << result.err;
  EXPECT_NE(result.err.find("shorty"), std::string::npos) << result.err;
}

}  // namespace
