// cechkit command-line front end. Talks to the library only through the C
// interface.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cechkit/cechkit.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using SceneHandle = std::unique_ptr<cech_scene, decltype(&cech_scene_free)>;

SceneHandle load_scene(const std::string& path) {
  cech_scene* scene = nullptr;
  if (cech_scene_parse(read_file(path).c_str(), &scene) != CECH_OK)
    throw InputError(path + ": " + cech_last_error());
  return SceneHandle(scene, cech_scene_free);
}

class Printer {
 public:
  explicit Printer(std::string path) : path_(std::move(path)) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw InputError("cannot write " + path_);
    out << text;
  }

 private:
  std::string path_;
};

// Maps a C status to the exit code, printing the document when there is one.
int finish(cech_status status, char* out, const Printer& printer) {
  std::unique_ptr<char, decltype(&cech_string_free)> owned(out, cech_string_free);
  if (out) printer.write(out);
  switch (status) {
    case CECH_OK:
      return 0;
    case CECH_REFUTED:
      if (*cech_last_error()) std::cerr << "refuted: " << cech_last_error() << "\n";
      return 1;
    case CECH_INPUT_ERROR:
      std::cerr << "error: " << cech_last_error() << "\n";
      return kInputError;
    default:
      std::cerr << "internal error: " << cech_last_error() << "\n";
      return 3;
  }
}

// A certificate file, or any document with a "certificates" array.
int verify(const std::string& path, const std::string& scene_path, const Printer& printer) {
  const std::string text = read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  SceneHandle scene(nullptr, cech_scene_free);
  if (!scene_path.empty()) scene = load_scene(scene_path);

  std::vector<Json> certs;
  if (doc.is_object() && doc.contains("certificates") && doc["certificates"].is_array())
    certs.assign(doc["certificates"].begin(), doc["certificates"].end());
  else
    certs.push_back(doc);

  Json results = Json::array();
  int code = 0;
  for (const auto& cert : certs) {
    char* out = nullptr;
    cech_status status = cech_verify(cert.dump().c_str(), scene.get(), &out);
    std::unique_ptr<char, decltype(&cech_string_free)> owned(out, cech_string_free);
    if (status == CECH_INPUT_ERROR || status == CECH_INTERNAL_ERROR)
      throw InputError(path + ": " + cech_last_error());
    results.push_back(Json::parse(out));
    if (status == CECH_REFUTED) code = 1;
  }
  printer.write((certs.size() == 1 ? results[0] : Json{{"results", results}}).dump(2) + "\n");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cech cohomology, connecting maps and descent with exact integer arithmetic"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result document to a file instead of stdout");
  app.set_version_flag("--version", std::string(cech_version()));

  std::string scene_path, name, cocycle, target, cert_path;
  std::size_t degree = 0;

  auto* nerve = app.add_subcommand("nerve", "Print the nerve of the scene's cover");
  nerve->add_option("scene", scene_path, "Scene document")->required();

  auto* validate = app.add_subcommand("validate", "Validate sheaves, sequences and extensions");
  validate->add_option("scene", scene_path, "Scene document")->required();
  validate->add_option("--target", target, "Only validate this sheaf, sequence or extension");

  auto* cohomology = app.add_subcommand("cohomology", "Compute H^p of a sheaf");
  cohomology->add_option("scene", scene_path, "Scene document")->required();
  cohomology->add_option("--sheaf", name, "Sheaf name")->required();
  cohomology->add_option("--degree", degree, "Degree p")->required();

  auto* connect = app.add_subcommand("connect", "Connecting map of a short exact sequence on a cocycle");
  connect->add_option("scene", scene_path, "Scene document")->required();
  connect->add_option("--seq", name, "Sequence name")->required();
  connect->add_option("--cocycle", cocycle, "Cochain name (in the quotient sheaf)")->required();

  auto* staged = app.add_subcommand("staged-connect", "Two-stage connecting map of a four-term extension");
  staged->add_option("scene", scene_path, "Scene document")->required();
  staged->add_option("--ext", name, "Extension name")->required();
  staged->add_option("--cocycle", cocycle, "Cochain name (in the last sheaf)")->required();

  auto* descent = app.add_subcommand("descent-check", "Cocycles of gerbe descent data");
  descent->add_option("scene", scene_path, "Scene document")->required();
  descent->add_option("--datum", name, "Descent datum name")->required();

  auto* lci = app.add_subcommand("lci", "Cocycle of local complete intersection data");
  lci->add_option("scene", scene_path, "Scene document")->required();
  lci->add_option("--data", name, "LCI data name")->required();

  auto* p2 = app.add_subcommand("p2-demo", "The Z(2)-gerbe example on P2 with all certificates");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check certificates");
  verify_cmd->add_option("certificate", cert_path, "Certificate, or a document holding a certificates array")
      ->required();
  verify_cmd->add_option("--scene", scene_path, "Scene the certificates were computed from");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const Printer printer(output);
  try {
    char* out = nullptr;
    if (*verify_cmd) return verify(cert_path, scene_path, printer);
    if (*p2) {
      const cech_status status = cech_p2_demo(&out);
      return finish(status, out, printer);
    }

    SceneHandle scene = load_scene(scene_path);
    cech_status status = CECH_INTERNAL_ERROR;
    if (*nerve) status = cech_nerve(scene.get(), &out);
    else if (*validate) status = cech_validate(scene.get(), target.c_str(), &out);
    else if (*cohomology) status = cech_cohomology(scene.get(), name.c_str(), degree, &out);
    else if (*connect) status = cech_connect(scene.get(), name.c_str(), cocycle.c_str(), &out);
    else if (*staged) status = cech_staged_connect(scene.get(), name.c_str(), cocycle.c_str(), &out);
    else if (*descent) status = cech_descent_check(scene.get(), name.c_str(), &out);
    else if (*lci) status = cech_lci(scene.get(), name.c_str(), &out);
    return finish(status, out, printer);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
