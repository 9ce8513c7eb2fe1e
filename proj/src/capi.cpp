#include "cechkit/cechkit.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "cechkit/commands.hpp"

struct cech_scene {
  cechkit::doc::Scene scene;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cech_status fail(cech_status status, const std::string& message) {
  last_error = message;
  return status;
}

std::string text(const char* s) { return s ? s : ""; }

// Runs a command, converting exceptions into status codes. A failed
// precondition (for example a cochain that is not a cocycle) refutes the
// claim rather than the input.
cech_status run(char** out, const std::function<cechkit::cmd::Outcome()>& body) {
  if (!out) return fail(CECH_INPUT_ERROR, "output pointer is null");
  *out = nullptr;
  last_error.clear();
  try {
    cechkit::cmd::Outcome o = body();
    *out = duplicate(cechkit::doc::dump(o.document));
    return o.status == cechkit::cmd::Status::Verified ? CECH_OK : CECH_REFUTED;
  } catch (const cechkit::PreconditionFailed& e) {
    last_error = e.what();
    *out = duplicate(cechkit::doc::dump(cechkit::doc::Json{{"refuted", e.what()}}));
    return CECH_REFUTED;
  } catch (const cechkit::InvalidInput& e) {
    return fail(CECH_INPUT_ERROR, e.what());
  } catch (const cechkit::DimensionMismatch& e) {
    return fail(CECH_INPUT_ERROR, e.what());
  } catch (const cechkit::IllDefinedMorphism& e) {
    return fail(CECH_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(CECH_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(CECH_INTERNAL_ERROR, "unknown error");
  }
}

cech_status need_scene(const cech_scene* scene) {
  return scene ? CECH_OK : fail(CECH_INPUT_ERROR, "scene handle is null");
}

}  // namespace

extern "C" {

const char* cech_version(void) { return "0.1.0"; }

const char* cech_last_error(void) { return last_error.c_str(); }

void cech_string_free(char* s) { std::free(s); }

cech_status cech_scene_parse(const char* json, cech_scene** out) {
  if (!out) return fail(CECH_INPUT_ERROR, "output pointer is null");
  *out = nullptr;
  if (!json) return fail(CECH_INPUT_ERROR, "scene text is null");
  last_error.clear();
  try {
    *out = new cech_scene{cechkit::doc::parse_scene(std::string(json))};
    return CECH_OK;
  } catch (const cechkit::Error& e) {
    return fail(CECH_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(CECH_INTERNAL_ERROR, e.what());
  }
}

void cech_scene_free(cech_scene* scene) { delete scene; }

cech_status cech_scene_dump(const cech_scene* scene, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] {
    return cechkit::cmd::Outcome{cechkit::cmd::Status::Verified, cechkit::doc::scene_to_json(scene->scene)};
  });
}

cech_status cech_nerve(const cech_scene* scene, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::nerve(scene->scene); });
}

cech_status cech_validate(const cech_scene* scene, const char* target, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::validate(scene->scene, text(target)); });
}

cech_status cech_cohomology(const cech_scene* scene, const char* sheaf, size_t degree, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::cohomology(scene->scene, text(sheaf), degree); });
}

cech_status cech_connect(const cech_scene* scene, const char* sequence, const char* cocycle, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::connect(scene->scene, text(sequence), text(cocycle)); });
}

cech_status cech_staged_connect(const cech_scene* scene, const char* extension, const char* cocycle, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::staged_connect(scene->scene, text(extension), text(cocycle)); });
}

cech_status cech_descent_check(const cech_scene* scene, const char* datum, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::descent_check(scene->scene, text(datum)); });
}

cech_status cech_lci(const cech_scene* scene, const char* data, char** out) {
  if (need_scene(scene) != CECH_OK) return CECH_INPUT_ERROR;
  return run(out, [&] { return cechkit::cmd::lci(scene->scene, text(data)); });
}

cech_status cech_p2_demo(char** out) {
  return run(out, [] { return cechkit::cmd::p2_demo(); });
}

cech_status cech_verify(const char* certificate_json, const cech_scene* scene, char** out) {
  return run(out, [&] {
    auto cert = cechkit::doc::parse_json(text(certificate_json), "certificate");
    return cechkit::cmd::verify(cert, scene ? &scene->scene : nullptr);
  });
}

}  // extern "C"
