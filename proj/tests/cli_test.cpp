#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "testutil.hpp"

namespace {

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("FPK_DATA_DIR");
    if (dir == nullptr) {
        throw std::runtime_error("FPK_DATA_DIR not set; run via ctest");
    }
    return std::string(dir) + "/" + name;
}

testutil::ProcResult fpknot(const std::string& args) {
    return testutil::run_cmd("'" + testutil::fpknot_path() + "' " + args);
}

}  // namespace

TEST(CliLens, ClassesPrintsTheResidues) {
    testutil::ProcResult res = fpknot("lens classes -p 5 -q 1");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output, "1 4\n");
}

TEST(CliLens, ClassesLargerOrbit) {
    testutil::ProcResult res = fpknot("lens classes -p 7 -q 2");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output, "1 3 4 6\n");
}

TEST(CliLens, ClassesRejectsNonCoprimeParameters) {
    EXPECT_EQ(fpknot("lens classes -p 4 -q 2").exit_code, 2);
}

TEST(CliLens, HomeoExamples) {
    testutil::ProcResult no = fpknot("lens homeo -p 7 -q 1 --q2 2");
    EXPECT_EQ(no.exit_code, 0);
    EXPECT_EQ(no.output, "false\n");

    testutil::ProcResult yes = fpknot("lens homeo -p 3 -q 1 --q2 2");
    EXPECT_EQ(yes.exit_code, 0);
    EXPECT_EQ(yes.output, "true\n");
}

TEST(CliDiagram, IdentityFileBounds) {
    testutil::ProcResult res =
        fpknot("diagram check '" + data_file("identity.fpd") + "'");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.output.find("equivariant_boundary: true\n"),
              std::string::npos);
}

TEST(CliDiagram, NonboundingFileReportsEveryFact) {
    testutil::ProcResult res =
        fpknot("diagram check '" + data_file("transposition_p5.fpd") + "'");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output,
              "knot: true\n"
              "m: 2\n"
              "class: 2\n"
              "simple: false\n"
              "equivariant_boundary: false\n");
}

TEST(CliDiagram, CommentsDoNotChangeTheVerdict) {
    testutil::ProcResult res =
        fpknot("diagram check '" + data_file("commented.fpd") + "'");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.output.find("equivariant_boundary: false\n"),
              std::string::npos);
}

TEST(CliDiagram, MultiComponentClosureExitsOne) {
    testutil::ProcResult res =
        fpknot("diagram check '" + data_file("twocomp.fpd") + "'");
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_EQ(res.output, "knot: false\nm: 2\n");
}

TEST(CliDiagram, BrokenFilesExitTwo) {
    EXPECT_EQ(
        fpknot("diagram check '" + data_file("bad_syntax.fpd") + "'").exit_code,
        2);
    EXPECT_EQ(
        fpknot("diagram check '" + data_file("bad_tangle.fpd") + "'").exit_code,
        2);
    EXPECT_EQ(fpknot("diagram check '" + data_file("not_coprime.fpd") + "'")
                  .exit_code,
              2);
    EXPECT_EQ(fpknot("diagram check /nonexistent.fpd").exit_code, 2);
}

TEST(CliTorus, BoundsExamples) {
    testutil::ProcResult yes = fpknot("torus bounds -r 2 -s 7 -p 3");
    EXPECT_EQ(yes.exit_code, 0);
    EXPECT_EQ(yes.output, "true\n");

    testutil::ProcResult no = fpknot("torus bounds -r 2 -s 3 -p 5");
    EXPECT_EQ(no.exit_code, 0);
    EXPECT_EQ(no.output, "false\n");
}

TEST(CliTorus, MissingFreePeriodExitsOne) {
    EXPECT_EQ(fpknot("torus bounds -r 2 -s 7 -p 14").exit_code, 1);
    EXPECT_EQ(fpknot("torus genus -r 2 -s 7 -p 14 --g4 3").exit_code, 1);
}

TEST(CliTorus, UnknotParametersExitTwo) {
    EXPECT_EQ(fpknot("torus bounds -r 1 -s 5 -p 3").exit_code, 2);
}

TEST(CliTorus, GenusRoundsUp) {
    testutil::ProcResult exact = fpknot("torus genus -r 2 -s 7 -p 3 --g4 3");
    EXPECT_EQ(exact.exit_code, 0);
    EXPECT_EQ(exact.output, "3\n");

    EXPECT_EQ(fpknot("torus genus -r 2 -s 7 -p 3 --g4 1").output, "3\n");
    EXPECT_EQ(fpknot("torus genus -r 2 -s 7 -p 3 --g4 0").output, "0\n");
}

TEST(CliTorus, PeriodsListsEveryAdmissibleOrder) {
    testutil::ProcResult res = fpknot("torus periods -r 2 -s 7 --max-p 10");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output,
              "3 1 true\n"
              "5 1 false\n"
              "9 1 false\n");
}

TEST(CliTorus, PeriodsOfTheTrefoilNeverBound) {
    testutil::ProcResult res = fpknot("torus periods -r 2 -s 3 --max-p 30");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_FALSE(res.output.empty());
    std::size_t pos = 0, rows = 0;
    while (pos < res.output.size()) {
        std::size_t eol = res.output.find('\n', pos);
        ASSERT_NE(eol, std::string::npos);
        std::string line = res.output.substr(pos, eol - pos);
        EXPECT_EQ(line.substr(line.rfind(' ') + 1), "false") << line;
        ++rows;
        pos = eol + 1;
    }
    EXPECT_EQ(rows, 9u);  // p in {5,7,11,13,17,19,23,25,29}
}

TEST(CliCensus, KnownBoundingRowAppears) {
    testutil::ProcResult res =
        fpknot("census --max-rs 7 --max-p 10 --only-bounding");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output.find("r,s,p,q_canonical,bounds,witness_divisor\n"),
              0u);
    EXPECT_NE(res.output.find("2,7,3,1,true,3\n"), std::string::npos);
}

TEST(CliCensus, EmptyCensusIsHeaderOnly) {
    testutil::ProcResult res = fpknot("census --max-rs 2 --max-p 2");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output, "r,s,p,q_canonical,bounds,witness_divisor\n");
}

TEST(CliCensus, ByteIdenticalAcrossRuns) {
    std::string cmd = "census --max-rs 15 --max-p 40";
    testutil::ProcResult first = fpknot(cmd);
    testutil::ProcResult second = fpknot(cmd);
    EXPECT_EQ(first.exit_code, 0);
    EXPECT_EQ(first.output, second.output);
}

TEST(CliCensus, DegenerateBoundsExitTwo) {
    EXPECT_EQ(fpknot("census --max-rs 1 --max-p 5").exit_code, 2);
}

TEST(CliUsage, HelpExitsZero) {
    EXPECT_EQ(fpknot("--help").exit_code, 0);
    EXPECT_EQ(fpknot("lens --help").exit_code, 0);
    EXPECT_EQ(fpknot("torus periods --help").exit_code, 0);
}

TEST(CliUsage, BadInvocationsExitSixtyFour) {
    EXPECT_EQ(fpknot("").exit_code, 64);
    EXPECT_EQ(fpknot("lens").exit_code, 64);
    EXPECT_EQ(fpknot("lens classes -p 5").exit_code, 64);
    EXPECT_EQ(fpknot("torus bounds -r 2 -s 7 -p 3 --bogus").exit_code, 64);
    EXPECT_EQ(fpknot("frobnicate").exit_code, 64);
}
