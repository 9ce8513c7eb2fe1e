#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "cechkit/cechkit.h"

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(CECHKIT_SCENES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Owned {
  char* p = nullptr;
  ~Owned() { cech_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("scene handles") {
  cech_scene* scene = nullptr;
  REQUIRE(cech_scene_parse(read("mobius.json").c_str(), &scene) == CECH_OK);
  CHECK(std::string(cech_last_error()).empty());

  Owned dump;
  CHECK(cech_scene_dump(scene, &dump.p) == CECH_OK);
  cech_scene* again = nullptr;
  REQUIRE(cech_scene_parse(dump.p, &again) == CECH_OK);
  Owned dump2;
  CHECK(cech_scene_dump(again, &dump2.p) == CECH_OK);
  CHECK(dump.str() == dump2.str());
  cech_scene_free(again);

  Owned out;
  CHECK(cech_connect(scene, "mobius", "one", &out.p) == CECH_OK);
  CHECK(out.str().find("\"certificates\"") != std::string::npos);

  Owned missing;
  CHECK(cech_connect(scene, "mobius", "nope", &missing.p) == CECH_INPUT_ERROR);
  CHECK(missing.p == nullptr);
  CHECK(std::string(cech_last_error()).find("nope") != std::string::npos);

  Owned h;
  CHECK(cech_cohomology(scene, "L", 1, &h.p) == CECH_OK);
  CHECK(h.str().find("\"torsion\": [\n      \"2\"") != std::string::npos);
  cech_scene_free(scene);
}

TEST_CASE("null and malformed arguments") {
  cech_scene* scene = nullptr;
  CHECK(cech_scene_parse(nullptr, &scene) == CECH_INPUT_ERROR);
  CHECK(cech_scene_parse("{}", nullptr) == CECH_INPUT_ERROR);
  CHECK(cech_scene_parse("[1, 2", &scene) == CECH_INPUT_ERROR);
  CHECK(scene == nullptr);
  CHECK(std::string(cech_last_error()).find("malformed JSON") != std::string::npos);
  Owned out;
  CHECK(cech_nerve(nullptr, &out.p) == CECH_INPUT_ERROR);
  CHECK(cech_p2_demo(nullptr) == CECH_INPUT_ERROR);
  CHECK(cech_verify("{}", nullptr, &out.p) == CECH_INPUT_ERROR);
  cech_scene_free(nullptr);
  cech_string_free(nullptr);
}

TEST_CASE("refuted claims still return their report") {
  cech_scene* scene = nullptr;
  REQUIRE(cech_scene_parse(read("broken.json").c_str(), &scene) == CECH_OK);
  Owned out;
  CHECK(cech_validate(scene, nullptr, &out.p) == CECH_REFUTED);
  CHECK(out.str().find("\"ok\": false") != std::string::npos);
  cech_scene_free(scene);

  Owned demo;
  CHECK(cech_p2_demo(&demo.p) == CECH_REFUTED);
  CHECK(demo.str().find("\"claims\"") != std::string::npos);
}
