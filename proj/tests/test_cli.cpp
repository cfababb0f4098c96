#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// stdout only; stderr is merged when `merge` is set
Result run(const std::string& args, bool merge = false) {
  std::string cmd = std::string(FLOPWIN_BIN) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

bool well_formed_svg(const std::string& s) {
  // balanced open/close tags, self-closing tags ignored
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '<') continue;
    std::size_t j = s.find('>', i);
    if (j == std::string::npos) return false;
    std::string tag = s.substr(i, j - i + 1);
    if (tag.rfind("<?", 0) == 0) continue;
    if (tag.rfind("</", 0) == 0)
      --depth;
    else if (tag[tag.size() - 2] != '/')
      ++depth;
    if (depth < 0) return false;
    i = j;
  }
  return depth == 0 && s.find("<svg") != std::string::npos;
}

fs::path temp_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("flopwin_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, Skms) {
  auto r = run("skms --input " + fixture("universal_flop_length2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"N\": 2"), std::string::npos);
  EXPECT_NE(r.out.find("\"1/2\""), std::string::npos);
  auto c = run("skms --input " + fixture("conifold.json"));
  EXPECT_NE(c.out.find("\"N\": 1"), std::string::npos);
}

TEST(Cli, Windows) {
  auto r = run("windows --face C:0 --input " + fixture("universal_flop_length2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "⟨O, V⟩\n");
  auto t = run("windows");
  EXPECT_NE(t.out.find("D:-1  ⟨V(−1), Sym²V(−1), O, V⟩"), std::string::npos);
  EXPECT_EQ(run("windows --face X:0").code, 2);
}

TEST(Cli, Kappa) {
  auto r = run("kappa --wall D:-2 --chamber C:-2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("O_S0(O)"), std::string::npos);
  EXPECT_EQ(run("kappa --wall D:-2 --chamber C:4").code, 2);
}

TEST(Cli, Quiver) {
  auto r = run("quiver check --rep " + fixture("rep_chart.json") + " --stability theta1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"base_equation\": \"0\""), std::string::npos);
  auto s = run("quiver check --rep " + fixture("rep_scalar.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("\"semistable\": false"), std::string::npos);
  EXPECT_EQ(run("quiver check --rep " + fixture("rep_chart.json") + " --stability theta9").code, 2);
}

TEST(Cli, Ncalg) {
  auto h = run("ncalg hilbert --algebra acon --max-degree 6");
  EXPECT_EQ(h.code, 0);
  std::string compact;
  for (char c : h.out)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  EXPECT_NE(compact.find("\"dims\":[1,3,7,12,19,27,37]"), std::string::npos) << h.out;
  auto nf = run("ncalg normal-form --algebra acon --expr \"t*(beta*gamma - gamma*beta)\"");
  EXPECT_EQ(nf.code, 0);
  EXPECT_NE(nf.out.find("\"normal_form\": \"0\""), std::string::npos);
  EXPECT_EQ(run("ncalg normal-form --algebra acon --expr \"t +\"").code, 2);
  EXPECT_EQ(run("ncalg hilbert --algebra nope").code, 2);
}

TEST(Cli, Coh) {
  auto r = run("coh multiplicity --irrep \"0,-1\" --sym \"V,S2Vm1,S2Vm1\" --max-degree 15");
  EXPECT_EQ(r.code, 0);
  std::string compact;
  for (char c : r.out)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  EXPECT_NE(compact.find("\"dims\":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]"), std::string::npos) << r.out;
}

TEST(Cli, MalformedJson) {
  auto r = run("skms --input " + fixture("malformed.json"), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("malformed.json:2:"), std::string::npos) << r.out;
  EXPECT_EQ(run("skms --input /nonexistent.json").code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyDeterministicJson) {
  auto a = run("verify --suite polyhedral --json");
  auto b = run("verify --suite polyhedral --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"status\": \"pass\""), std::string::npos);
}

TEST(Cli, VerifyAll) {
  auto r = run("verify --suite all");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ALL PASS"), std::string::npos);
}

TEST(Cli, Figures) {
  auto dir = temp_dir("paper");
  auto r = run("figures --out-dir " + dir.string());
  EXPECT_EQ(r.code, 0);
  int n = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path());
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_TRUE(well_formed_svg(ss.str())) << e.path();
    ++n;
  }
  EXPECT_EQ(n, 3);

  auto cdir = temp_dir("conifold");
  EXPECT_EQ(run("figures --input " + fixture("conifold.json") + " --out-dir " + cdir.string()).code, 0);
  EXPECT_TRUE(fs::exists(cdir / "polytope.svg"));

  auto edir = temp_dir("empty");
  std::ofstream(edir / "empty.json") << R"({"rank": 0, "weights": []})";
  EXPECT_EQ(run("figures --input " + (edir / "empty.json").string() + " --out-dir " + edir.string()).code, 0);
  std::ifstream in(edir / "polytope.svg");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("nothing to draw"), std::string::npos);

  EXPECT_EQ(run("figures --out-dir /proc/forbidden/dir").code, 2);
  fs::remove_all(dir);
  fs::remove_all(cdir);
  fs::remove_all(edir);
}
