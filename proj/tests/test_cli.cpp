#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

const std::string kScenes = CECHKIT_SCENES;
const std::string kTmp = CECHKIT_TMP;

Run cli(const std::string& args) {
  const std::string err_path = kTmp + "/stderr.txt";
  const std::string command = std::string(CECHKIT_CLI) + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  r.err.assign(std::istreambuf_iterator<char>(in), {});
  return r;
}

std::string scene(const std::string& name) { return kScenes + "/" + name; }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli("cohomology " + scene("single_open.json") + " --sheaf Z --degree 1").code == 0);
  CHECK(cli("nerve " + scene("mobius.json")).code == 0);
  CHECK(cli("validate " + scene("mobius.json")).code == 0);
  CHECK(cli("connect " + scene("mobius.json") + " --seq mobius --cocycle one").code == 0);
  CHECK(cli("staged-connect " + scene("yoneda.json") + " --ext yoneda --cocycle unit").code == 0);
  CHECK(cli("descent-check " + scene("descent.json") + " --datum gerbe").code == 0);
  CHECK(cli("lci " + scene("lci.json") + " --data global").code == 0);
  CHECK(cli("lci " + scene("lci.json") + " --data chartwise").code == 0);

  Run broken = cli("validate " + scene("broken.json"));
  CHECK(broken.code == 1);
  CHECK(broken.out.find("ill-defined") != std::string::npos);

  Run mismatch = cli("lci " + scene("lci.json") + " --data mismatch");
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.find("U1 and U2") != std::string::npos);

  CHECK(cli("cohomology " + scene("single_open.json") + " --sheaf Q --degree 1").code == 2);
  CHECK(cli("connect " + scene("mobius.json") + " --seq mobius --cocycle none").code == 2);
  CHECK(cli("cohomology /nonexistent.json --sheaf Z --degree 1").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("").code == 2);
}

TEST_CASE("single open cohomology is zero") {
  Run r = cli("cohomology " + scene("single_open.json") + " --sheaf Z --degree 1");
  CHECK(r.out.find("\"text\": \"0\"") != std::string::npos);
}

TEST_CASE("malformed scenes report their location") {
  const std::string path = kTmp + "/bad_scene.json";
  write(path, R"({"format_version": "1", "cover": {"opens": ["A"]}, "sheaves": {"F": {"constant": {"generators": "x"}}}})");
  Run r = cli("nerve " + path);
  CHECK(r.code == 2);
  CHECK(r.err.find("sheaves.F.constant.generators") != std::string::npos);

  write(path, R"({"format_version": "1", "cover": )");
  CHECK(cli("nerve " + path).code == 2);
}

TEST_CASE("a cocycle that is not closed is refuted") {
  const std::string path = kTmp + "/open_cochain.json";
  std::ifstream in(scene("mobius.json"));
  std::string text((std::istreambuf_iterator<char>(in)), {});
  // value on A only: its coboundary is nonzero on the edges at A
  const std::string from = R"("values": [)";
  auto pos = text.find("\"cochains\"");
  REQUIRE(pos != std::string::npos);
  auto start = text.find(from, pos);
  auto end = text.find("]\n    }", start);
  text.replace(start, end - start + 1,
               R"("values": [{"simplex": ["A"], "value": ["1"]}, {"simplex": ["B"], "value": ["0"]}, {"simplex": ["C"], "value": ["0"]}])");
  write(path, text);
  Run r = cli("connect " + path + " --seq mobius --cocycle one");
  CHECK(r.code == 1);
  CHECK(r.out.find("is not a cocycle") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::string& args :
       {std::string("p2-demo"), "connect " + scene("mobius.json") + " --seq mobius --cocycle one",
        "descent-check " + scene("descent.json") + " --datum gerbe", "lci " + scene("lci.json") + " --data chartwise"}) {
    CAPTURE(args);
    Run a = cli(args), b = cli(args);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("p2 demo certificates re-verify") {
  Run demo = cli("p2-demo");
  CHECK(demo.code == 1);
  const std::string path = kTmp + "/p2.json";
  write(path, demo.out);
  Run v = cli("verify " + path);
  CHECK(v.code == 0);
  CHECK(v.out.find("\"verified\": false") == std::string::npos);
}

TEST_CASE("scene certificates need their scene") {
  const std::string path = kTmp + "/connect.json";
  CHECK(cli("-o " + path + " connect " + scene("mobius.json") + " --seq mobius --cocycle one").code == 0);
  CHECK(cli("verify " + path + " --scene " + scene("mobius.json")).code == 0);
  CHECK(cli("verify " + path).code == 2);
  Run wrong = cli("verify " + path + " --scene " + scene("yoneda.json"));
  CHECK(wrong.code == 2);
  CHECK(wrong.err.find("digest") != std::string::npos);
}
