// The operations behind the command-line subcommands. Each returns a
// status and the JSON document to print. Certificates carry the digest of
// the scene they were computed from and are re-checked by verify().
#ifndef CECHKIT_COMMANDS_HPP
#define CECHKIT_COMMANDS_HPP

#include "cechkit/document.hpp"

namespace cechkit::cmd {

enum class Status { Verified = 0, Refuted = 1 };

struct Outcome {
  Status status = Status::Verified;
  doc::Json document;
};

/// Name under which built-in scenes are referenced from certificates.
inline constexpr const char* kP2Scene = "builtin:p2-standard-window/l=2";

Outcome nerve(const doc::Scene& scene);
/// All sheaves, sequences and extensions, or the one named by `target`.
Outcome validate(const doc::Scene& scene, const std::string& target = "");
Outcome cohomology(const doc::Scene& scene, const std::string& sheaf, std::size_t degree);
Outcome connect(const doc::Scene& scene, const std::string& sequence, const std::string& cocycle);
Outcome staged_connect(const doc::Scene& scene, const std::string& extension, const std::string& cocycle);
Outcome descent_check(const doc::Scene& scene, const std::string& datum);
Outcome lci(const doc::Scene& scene, const std::string& data);
Outcome p2_demo();

/// Re-checks a certificate. `scene` may be null for certificates that name
/// a built-in scene. Throws InvalidInput when the scene digest does not
/// match or the certificate is malformed.
Outcome verify(const doc::Json& certificate, const doc::Scene* scene);

/// The built-in scene a certificate refers to, if any.
std::optional<doc::Scene> builtin_scene(const std::string& name);

}  // namespace cechkit::cmd

#endif  // CECHKIT_COMMANDS_HPP
