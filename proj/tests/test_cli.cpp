#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("cd ") + FIXTURE_DIR + " && " + WEAKORDER_CLI + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) {
  std::string path = std::string(FIXTURE_DIR) + "/" + name;
  FILE* f = fopen(path.c_str(), "r");
  std::string s;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) s.append(buf.data(), n);
  fclose(f);
  return s;
}

}  // namespace

TEST(Cli, JoinMeet) {
  auto r = run("join arc_0_90.json arc_45_180.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, fixture("top2.json"));
  r = run("join bottom2.json arc_45_180.json");
  EXPECT_EQ(r.out, run("canon arc_45_180.json").out);
  r = run("meet arc_0_90.json arc_90_180.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, fixture("bottom2.json"));
}

TEST(Cli, Predicates) {
  EXPECT_EQ(run("leq arc_0_45.json arc_0_90.json").code, 0);
  auto r = run("leq arc_0_90.json arc_45_180.json");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
  r = run("member --ray 1,0 arc_0_90.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(run("member --ray -1,0 arc_0_90.json").code, 1);
  EXPECT_EQ(run("member --ray -1,0 top2.json").code, 1);
  EXPECT_EQ(run("is-bottom bottom2.json").code, 0);
  EXPECT_EQ(run("is-bottom arc_0_90.json").code, 1);
}

TEST(Cli, CanonComplementRandom) {
  auto once = run("canon arc_0_90.json").out;
  EXPECT_EQ(once, fixture("arc_0_90.json"));
  EXPECT_EQ(run("complement arc_0_90.json").out, fixture("arc_90_180.json"));
  auto a = run("random --dim 3 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("random --dim 3 --seed 7").out);
  EXPECT_NE(a.out, run("random --dim 3 --seed 8").out);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("canon nonorthogonal.json").code, 2);
  EXPECT_EQ(run("canon nonprimitive.json").code, 2);
  EXPECT_EQ(run("canon malformed.json").code, 2);
  EXPECT_EQ(run("canon missing.json").code, 2);
  EXPECT_EQ(run("member --ray 0,0 arc_0_90.json").code, 2);
  EXPECT_EQ(run("member --ray 1,0,0 arc_0_90.json").code, 2);
  EXPECT_EQ(run("member --ray x arc_0_90.json").code, 2);
  EXPECT_EQ(run("random --dim 3").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("bench --dim 1").code, 2);
  EXPECT_EQ(run("bench --dim 3 --backend quad").code, 2);
  EXPECT_EQ(run("check --dims 5..2").code, 2);
}

TEST(Cli, Mismatch) {
  EXPECT_EQ(run("join arc_0_90.json other_reference.json").code, 3);
  EXPECT_EQ(run("meet arc_0_90.json bottom3.json").code, 3);
}

TEST(Cli, Check) {
  auto r = run("check --dims 2..3 --iters 5 --rays 100 --arc-bound 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("lattice-axioms"), std::string::npos);
  r = run("check --iters 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("pass"), std::string::npos);
  EXPECT_NE(r.out.find("skip"), std::string::npos);
  r = run("check --dims 2..3 --iters 5 --rays 100 --break-join");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, Bench) {
  auto r = run("bench --dim 4 --iters 100 --backend exact");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("median_ms"), std::string::npos);
  EXPECT_NE(r.out.find("p95_ms"), std::string::npos);
  r = run("bench --dim 4 --iters 50 --backend float");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("disagreement_rate 0."), std::string::npos) << r.out;
}
