// Scene documents: JSON in, typed objects out, and back. Integers are
// decimal strings, simplices are lists of open labels, and emission uses a
// fixed key order so identical scenes give identical bytes.
#ifndef CECHKIT_DOCUMENT_HPP
#define CECHKIT_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "cechkit/descent.hpp"
#include "cechkit/projective.hpp"

namespace cechkit::doc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

struct NamedCochain {
  std::string sheaf;
  Cochain cochain;
};

struct SequenceEntry {
  std::string L, M, N;
  ShortExactSequence seq;
};

struct ExtensionEntry {
  std::optional<std::pair<std::string, std::string>> splice;  // names of two sequences
  std::string L, A, B, N;                                     // sheaf names when given explicitly
  TwoStepExtension ext;
};

struct DescentEntry {
  std::string band;
  GerbeDescentDatum datum;
  std::optional<AutomorphismDatum> automorphism;
  std::optional<std::string> extension;  // sequence whose quotient is the band
};

struct LciEntry {
  std::string window;  // "p2-standard", "p1" or "spec-k"
  std::size_t l = 2;
  std::vector<LocalEquations> charts;
};

struct Scene {
  std::optional<Nerve> nerve;
  std::map<std::string, AbelianSheaf> sheaves;
  std::map<std::string, NamedCochain> cochains;
  std::map<std::string, SequenceEntry> sequences;
  std::map<std::string, ExtensionEntry> extensions;
  std::map<std::string, DescentEntry> descent;
  std::map<std::string, LciEntry> lci;
};

/// Throws InvalidInput with a located message ("sheaves.F.groups[2]: ...")
/// on malformed JSON, unknown keys, dangling names or inconsistent shapes.
Scene parse_scene(const std::string& text);
Scene parse_scene(const Json& j);
Json scene_to_json(const Scene& scene);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
/// Lower-case hex SHA-256 of dump(scene_to_json(scene)).
std::string digest(const Scene& scene);

/// Parses text as JSON, throwing InvalidInput with the parser's position.
Json parse_json(const std::string& text, const std::string& what);

Window window_by_name(const std::string& name);

/// The sequence Z(l) -> M^l -> CH^l of a window as a scene with sheaves
/// "Z", "M", "CH" and the sequence "window".
Scene window_scene(const WindowSequence& w);

// Emission helpers shared with the command layer.
Json to_json(const Integer& x);
Json to_json(std::span<const Integer> v);
Json to_json(const IntMatrix& m);
Json to_json(const Nerve& nerve, const Simplex& s);
Json to_json(const Nerve& nerve, const Cochain& c);
Json to_json(const GroupStructure& g);
Json to_json(const Nerve& nerve, const ValidationReport& report);
Json to_json(const IntegerInfeasibility& cert);
Json to_json(const RationalFunction& f);
Json to_json(const LocalEquations& eq);
Json to_json(const Divisor& d);

Cochain cochain_from_json(const AbelianSheaf& sheaf, const Json& j, const std::string& path);
IntegerInfeasibility infeasibility_from_json(const Json& j, const std::string& path);

}  // namespace cechkit::doc

#endif  // CECHKIT_DOCUMENT_HPP
