#include "cechkit/commands.hpp"

namespace cechkit::cmd {

using doc::Json;
using doc::to_json;

namespace {

constexpr const char* kWindowScope =
    "window-relative: only the listed forms and points generate the sheaves; the statement is not claimed for the "
    "full sheaves";

const AbelianSheaf& sheaf_named(const doc::Scene& scene, const std::string& name) {
  auto it = scene.sheaves.find(name);
  if (it == scene.sheaves.end()) throw InvalidInput("unknown sheaf \"" + name + "\"");
  return it->second;
}

const doc::NamedCochain& cochain_named(const doc::Scene& scene, const std::string& name) {
  auto it = scene.cochains.find(name);
  if (it == scene.cochains.end()) throw InvalidInput("unknown cochain \"" + name + "\"");
  return it->second;
}

template <class Map>
const typename Map::mapped_type& entry_named(const Map& m, const std::string& name, const std::string& what) {
  auto it = m.find(name);
  if (it == m.end()) throw InvalidInput("unknown " + what + " \"" + name + "\"");
  return it->second;
}

// The name under which a scene is referenced from certificates.
struct SceneRef {
  std::string name;
  std::string digest;
  std::optional<std::string> window;
};

SceneRef file_scene(const doc::Scene& scene) { return SceneRef{"file", doc::digest(scene), std::nullopt}; }

std::string window_scene_name(const std::string& window, std::size_t l) {
  return "builtin:" + window + "-window/l=" + std::to_string(l);
}

std::string window_stamp(const Window& w) {
  std::string s = w.name + ": forms";
  for (const auto& f : w.forms) s += " " + to_string(f) + ",";
  if (!w.forms.empty()) s.pop_back();
  if (!w.points.empty()) {
    s += "; points";
    for (const auto& p : w.points) s += " " + to_string(p);
  }
  if (!w.constants.empty()) {
    s += "; constants";
    for (const auto& c : w.constants) s += " " + c;
  }
  return s;
}

Json certificate(const SceneRef& ref, const std::string& kind, const std::string& claim, Json subject) {
  Json c;
  c["certificate"] = "cechkit/1";
  c["kind"] = kind;
  c["claim"] = claim;
  c["scene"] = ref.name;
  c["inputs_digest"] = ref.digest;
  if (ref.window) {
    c["window"] = *ref.window;
    c["scope"] = kWindowScope;
  }
  c["subject"] = std::move(subject);
  return c;
}

Json cochain_subject(const std::string& sheaf, const AbelianSheaf& f, const Cochain& c) {
  return Json{{"sheaf", sheaf}, {"cochain", to_json(f.nerve(), c)}};
}

Json cocycle_certificate(const SceneRef& ref, const std::string& sheaf, const AbelianSheaf& f, const Cochain& c,
                         const std::string& what) {
  Json cert = certificate(ref, "cocycle", what + " is a cocycle", cochain_subject(sheaf, f, c));
  cert["witness"] = Json{{"coboundary", to_json(f.nerve(), coboundary(f, c))}};
  return cert;
}

// A class-trivial or class-nontrivial-in-window certificate for a cocycle.
Json class_certificate(const SceneRef& ref, const std::string& sheaf, const AbelianSheaf& f, const Cochain& c,
                       const WitnessResult& w, const std::string& what) {
  if (w.witness) {
    Json cert = certificate(ref, "class-trivial", what + " is a coboundary", cochain_subject(sheaf, f, c));
    cert["witness"] = to_json(f.nerve(), *w.witness);
    return cert;
  }
  Json cert = certificate(ref, "class-nontrivial-in-window", what + " is not a coboundary",
                          cochain_subject(sheaf, f, c));
  cert["infeasibility"] = to_json(*w.certificate);
  return cert;
}

Json exactness_certificate(const SceneRef& ref, const std::string& sequence, const ValidationReport& report,
                           const Nerve& nerve) {
  Json cert = certificate(ref, "exactness", "sequence " + sequence + " is short exact", Json{{"sequence", sequence}});
  cert["report"] = to_json(nerve, report);
  return cert;
}

Json independence_certificate(const SceneRef& ref, const std::string& sequence, const ShortExactSequence& seq,
                              const Cochain& c, const ConnectingResult& a, const ConnectingResult& b,
                              const Cochain& u) {
  const Nerve& n = seq.N.nerve();
  Json subject{{"sequence", sequence},
               {"cocycle", to_json(n, c)},
               {"lifts", Json::array({to_json(n, a.lift), to_json(n, b.lift)})},
               {"outputs", Json::array({to_json(n, a.output), to_json(n, b.output)})}};
  Json cert = certificate(ref, "independence", "two lifts give cohomologous connecting outputs", std::move(subject));
  cert["witness"] = to_json(n, u);
  return cert;
}

// The deterministic lift and a second lift shifted by iota of an all-ones
// cochain; their outputs differ by the coboundary of that cochain.
std::pair<ConnectingResult, Cochain> shifted_connecting(const ShortExactSequence& seq, const Cochain& c,
                                                        const ConnectingResult& a) {
  Cochain u = zero_cochain(seq.L, c.degree);
  for (auto& v : u.values) std::fill(v.begin(), v.end(), Integer(1));
  Cochain shift = seq.iota.apply(u);
  LiftingChoice choice;
  for (std::size_t i = 0; i < shift.values.size(); ++i) choice[i] = add(a.lift.values[i], shift.values[i]);
  return {connecting_map(seq, c, choice), u};
}

Json connecting_json(const Nerve& n, const ConnectingResult& r) {
  return Json{{"lift", to_json(n, r.lift)},
              {"lift_boundary", to_json(n, r.lift_boundary)},
              {"output", to_json(n, r.output)},
              {"output_is_cocycle", r.output_is_cocycle}};
}

Cochain subject_cochain(const AbelianSheaf& f, const Json& subject, const std::string& key) {
  if (!subject.contains(key)) throw InvalidInput("certificate subject lacks \"" + key + "\"");
  Json c = subject.at(key);
  return doc::cochain_from_json(f, c, "subject." + key);
}

bool cochains_match(const AbelianSheaf& f, const Cochain& a, const Cochain& b) {
  return a.degree == b.degree && cochains_equal(f, a, b);
}

}  // namespace

std::optional<doc::Scene> builtin_scene(const std::string& name) {
  for (const char* w : {"p2-standard", "p1", "spec-k"})
    for (std::size_t l : {1u, 2u})
      if (name == window_scene_name(w, l))
        return doc::window_scene(symmetric_power_window(doc::window_by_name(w), l));
  return std::nullopt;
}

Outcome nerve(const doc::Scene& scene) {
  if (!scene.nerve) throw InvalidInput("the scene has no cover");
  const Nerve& n = *scene.nerve;
  Json by_dim = Json::array();
  for (std::size_t p = 0; p <= n.dimension_cap() && n.count(p) > 0; ++p) {
    Json list = Json::array();
    for (const auto& s : n.simplices(p)) list.push_back(to_json(n, s));
    by_dim.push_back(Json{{"dimension", std::to_string(p)}, {"simplices", list}});
  }
  return Outcome{Status::Verified, Json{{"opens", n.labels()},
                                        {"dimension_cap", std::to_string(n.dimension_cap())},
                                        {"top_dimension", std::to_string(n.top_dimension())},
                                        {"nerve", by_dim}}};
}

Outcome validate(const doc::Scene& scene, const std::string& target) {
  Json reports = Json::array();
  Status status = Status::Verified;
  auto record = [&](const std::string& kind, const std::string& name, const ValidationReport& r, const Nerve& n) {
    reports.push_back(Json{{"target", kind + " " + name}, {"report", to_json(n, r)}});
    if (!r.ok()) status = Status::Refuted;
  };
  bool found = target.empty();
  for (const auto& [name, f] : scene.sheaves)
    if (target.empty() || target == name) found = true, record("sheaf", name, validate_sheaf(f), f.nerve());
  for (const auto& [name, e] : scene.sequences)
    if (target.empty() || target == name) found = true, record("sequence", name, validate_exact(e.seq), e.seq.M.nerve());
  for (const auto& [name, e] : scene.extensions)
    if (target.empty() || target == name)
      found = true, record("extension", name, validate_extension(e.ext), e.ext.A.nerve());
  if (!found) throw InvalidInput("nothing named \"" + target + "\" to validate");
  return Outcome{status, Json{{"reports", reports}}};
}

Outcome cohomology(const doc::Scene& scene, const std::string& sheaf, std::size_t degree) {
  const AbelianSheaf& f = sheaf_named(scene, sheaf);
  ValidationReport report = validate_sheaf(f);
  if (!report.ok())
    return Outcome{Status::Refuted, Json{{"sheaf", sheaf}, {"report", to_json(f.nerve(), report)}}};
  CohomologyGroup h = cohomology(f, degree);
  Json reps = Json::array();
  for (const auto& r : h.representatives()) reps.push_back(to_json(f.nerve(), r));
  return Outcome{Status::Verified, Json{{"sheaf", sheaf},
                                        {"degree", std::to_string(degree)},
                                        {"group", to_json(h.structure())},
                                        {"representatives", reps}}};
}

Outcome connect(const doc::Scene& scene, const std::string& sequence, const std::string& cocycle) {
  const doc::SequenceEntry& e = entry_named(scene.sequences, sequence, "sequence");
  const doc::NamedCochain& c = cochain_named(scene, cocycle);
  if (c.sheaf != e.N) throw InvalidInput("cochain " + cocycle + " lives in " + c.sheaf + ", not in " + e.N);
  const ShortExactSequence& seq = e.seq;
  const Nerve& n = seq.N.nerve();
  const SceneRef ref = file_scene(scene);
  ValidationReport exact = validate_exact(seq);
  if (!exact.ok())
    return Outcome{Status::Refuted, Json{{"sequence", sequence}, {"exactness", exactness_certificate(ref, sequence, exact, n)}}};
  if (!is_cocycle(seq.N, c.cochain))
    return Outcome{Status::Refuted, Json{{"sequence", sequence},
                                         {"cocycle", cocycle},
                                         {"refuted", cocycle + " is not a cocycle"},
                                         {"coboundary", to_json(n, coboundary(seq.N, c.cochain))}}};
  ConnectingResult a = connecting_map(seq, c.cochain);
  auto [b, u] = shifted_connecting(seq, c.cochain, a);
  Json certs = Json::array({exactness_certificate(ref, sequence, exact, n),
                            cocycle_certificate(ref, e.L, seq.L, a.output, "the connecting output"),
                            independence_certificate(ref, sequence, seq, c.cochain, a, b, u)});
  Json out{{"sequence", sequence}, {"cocycle", cocycle}, {"result", connecting_json(n, a)}, {"certificates", certs}};
  return Outcome{a.output_is_cocycle ? Status::Verified : Status::Refuted, std::move(out)};
}

Outcome staged_connect(const doc::Scene& scene, const std::string& extension, const std::string& cocycle) {
  const doc::ExtensionEntry& e = entry_named(scene.extensions, extension, "extension");
  const doc::NamedCochain& c = cochain_named(scene, cocycle);
  if (c.sheaf != e.N) throw InvalidInput("cochain " + cocycle + " lives in " + c.sheaf + ", not in " + e.N);
  const TwoStepExtension& ext = e.ext;
  const Nerve& n = ext.N.nerve();
  ValidationReport report = validate_extension(ext);
  if (!report.ok()) return Outcome{Status::Refuted, Json{{"extension", extension}, {"report", to_json(n, report)}}};
  if (!is_cocycle(ext.N, c.cochain))
    return Outcome{Status::Refuted, Json{{"extension", extension}, {"cocycle", cocycle}, {"refuted", cocycle + " is not a cocycle"}}};
  const SceneRef ref = file_scene(scene);
  StagedResult r = staged_connecting(ext, c.cochain);
  Json out{{"extension", extension},
           {"cocycle", cocycle},
           {"result",
            Json{{"lift_b", to_json(n, r.lift_b)},
                 {"boundary_b", to_json(n, r.boundary_b)},
                 {"preimage_a", to_json(n, r.preimage_a)},
                 {"boundary_a", to_json(n, r.boundary_a)},
                 {"output", to_json(n, r.output)},
                 {"output_is_cocycle", r.output_is_cocycle}}}};
  Json certs = Json::array({cocycle_certificate(ref, e.L, ext.L, r.output, "the staged output")});
  Status status = r.output_is_cocycle ? Status::Verified : Status::Refuted;
  if (e.splice) {
    const doc::SequenceEntry& first = scene.sequences.at(e.splice->first);
    const doc::SequenceEntry& second = scene.sequences.at(e.splice->second);
    ConnectingResult outer = connecting_map(second.seq, c.cochain);
    ConnectingResult inner = connecting_map(first.seq, outer.output);
    out["composite"] = to_json(n, inner.output);
    WitnessResult w = coboundary_witness(ext.L, r.output - inner.output);
    certs.push_back(class_certificate(ref, e.L, ext.L, r.output - inner.output, w,
                                      "staged output minus the composite of the two connecting maps"));
    out["agrees_with_composite"] = w.trivial();
    if (!w.trivial()) status = Status::Refuted;
  }
  out["certificates"] = certs;
  return Outcome{status, std::move(out)};
}

Outcome descent_check(const doc::Scene& scene, const std::string& datum) {
  const doc::DescentEntry& e = entry_named(scene.descent, datum, "descent datum");
  const GerbeDescentDatum& d = e.datum;
  const Nerve& n = d.band.nerve();
  const SceneRef ref = file_scene(scene);
  Status status = Status::Verified;
  Json out{{"datum", datum}};
  Json certs = Json::array();

  CocycleVerdict c = transition_cocycle(d);
  out["transition_cocycle"] = to_json(n, c.cochain);
  out["transition_cocycle_closed"] = c.is_cocycle;
  out["torsor_relation_holds"] = torsor_relation_holds(d);
  if (c.is_cocycle) certs.push_back(cocycle_certificate(ref, e.band, d.band, c.cochain, "the transition cocycle"));
  else status = Status::Refuted;

  if (e.automorphism) {
    try {
      CocycleVerdict h = automorphism_to_cocycle(d, *e.automorphism);
      out["automorphism_cocycle"] = to_json(n, h.cochain);
      out["automorphism_cocycle_closed"] = h.is_cocycle;
      if (h.is_cocycle) certs.push_back(cocycle_certificate(ref, e.band, d.band, h.cochain, "the automorphism cocycle"));
      else status = Status::Refuted;
    } catch (const PreconditionFailed& err) {
      out["automorphism_refused"] = err.what();
      status = Status::Refuted;
    }
  }
  if (e.extension && c.is_cocycle) {
    const doc::SequenceEntry& seq = scene.sequences.at(*e.extension);
    Gerbe21Result g = gerbe21_classifying(d, seq.seq);
    out["gerbe21"] = Json{{"lifted", to_json(n, g.lifted)},
                          {"boundary", to_json(n, g.boundary)},
                          {"output", to_json(n, g.output)},
                          {"output_is_cocycle", g.is_cocycle}};
    ConnectingResult ref_map = connecting_map(seq.seq, c.cochain);
    WitnessResult w = coboundary_witness(seq.seq.L, g.output - ref_map.output);
    out["agrees_with_connecting_map"] = w.trivial();
    if (g.is_cocycle) certs.push_back(cocycle_certificate(ref, seq.L, seq.seq.L, g.output, "the (2,1)-gerbe cocycle"));
    certs.push_back(class_certificate(ref, seq.L, seq.seq.L, g.output - ref_map.output, w,
                                      "the (2,1)-gerbe cocycle minus the connecting image of the transition cocycle"));
    if (!g.is_cocycle || !w.trivial()) status = Status::Refuted;
  }
  out["certificates"] = certs;
  return Outcome{status, std::move(out)};
}

Outcome lci(const doc::Scene& scene, const std::string& data) {
  const doc::LciEntry& e = entry_named(scene.lci, data, "lci data");
  WindowSequence w = symmetric_power_window(doc::window_by_name(e.window), e.l);
  const Nerve& n = w.seq.L.nerve();
  LciResult r = lci_cocycle(w, e.charts);
  const std::string scene_name = window_scene_name(e.window, e.l);
  const SceneRef ref{scene_name, doc::digest(doc::window_scene(w)), window_stamp(w.window)};

  Json locals = Json::array();
  for (std::size_t i = 0; i < r.local_sections.size(); ++i)
    locals.push_back(Json{{"chart", n.labels()[i]}, {"section", to_json(r.local_sections[i])}, {"cuts_out", to_json(r.cut_out[i])}});
  Json out{{"data", data}, {"window", window_stamp(w.window)}, {"charts", locals}, {"h", to_json(n, r.h)},
           {"h_is_cocycle", r.is_cocycle}, {"global", r.global_section.has_value()}};
  if (r.global_section) {
    out["global_section"] = to_json(*r.global_section);
    out["global_equations"] = to_json(*r.global_equations);
  }
  Json certs = Json::array({cocycle_certificate(ref, "Z", w.seq.L, r.h, "h")});
  if (r.is_cocycle) certs.push_back(class_certificate(ref, "Z", w.seq.L, r.h, r.witness, "h"));
  out["certificates"] = certs;
  return Outcome{r.is_cocycle ? Status::Verified : Status::Refuted, std::move(out)};
}

Outcome p2_demo() {
  P2GerbeExample ex = p2_gerbe_example();
  const WindowSequence& w = ex.window;
  const ShortExactSequence& seq = w.seq;
  const Nerve& n = seq.N.nerve();
  const SceneRef ref{kP2Scene, doc::digest(doc::window_scene(w)), window_stamp(w.window)};
  Json certs = Json::array();
  Json claims = Json::array();
  auto claim = [&](const std::string& id, const std::string& statement, bool verified, Json detail) {
    claims.push_back(Json{{"id", id}, {"statement", statement}, {"verified", verified}, {"detail", std::move(detail)}});
  };

  // (a) the points
  const std::vector<ProjPoint> expected{ProjPoint(IntVector{1, 1, 0}), ProjPoint(IntVector{1, 0, 1}),
                                        ProjPoint(IntVector{0, 1, 1})};
  Json points = Json::array();
  for (std::size_t e = 0; e < ex.points.size(); ++e)
    points.push_back(Json{{"edge", to_json(n, n.simplex(1, e))},
                          {"lines", Json::array({to_string(ex.lines[e].first), to_string(ex.lines[e].second)})},
                          {"point", to_json(ex.points[e].coordinates)}});
  claim("a", "c_ij is the intersection of X_i - X_j and X_k: [1,1,0], [1,0,1], [0,1,1]", ex.points == expected, points);

  // (b) restrictions to the triple intersection and the cocycle condition
  bool restrictions_vanish = true;
  for (const auto& d : ex.on_triple) restrictions_vanish = restrictions_vanish && d.is_zero();
  certs.push_back(cocycle_certificate(ref, "CH", seq.N, ex.c, "c"));
  claim("b", "every c_ij restricts to 0 on U123 and c is a 1-cocycle", restrictions_vanish && ex.c_is_cocycle,
        Json{{"c", to_json(n, ex.c)}, {"restrictions_vanish", restrictions_vanish}, {"is_cocycle", ex.c_is_cocycle}});

  // (c) no coboundary witness over the window
  certs.push_back(class_certificate(ref, "CH", seq.N, ex.c, ex.witness, "c"));
  Json witness_detail{{"witness_exists", ex.witness.trivial()}};
  if (ex.witness.witness) witness_detail["witness"] = to_json(n, *ex.witness.witness);
  claim("c", "c is not a coboundary over the 7-point window", ex.nontrivial_in_window(), witness_detail);

  // (d) the connecting image
  certs.push_back(cocycle_certificate(ref, "Z", seq.L, ex.connecting.output, "the connecting image of c"));
  claim("d", "the connecting map sends c to a 2-cocycle in Z(2)", ex.connecting.output_is_cocycle,
        connecting_json(n, ex.connecting));

  // (e) the obstruction quotient
  Json quotient{{"quotient", to_json(ex.obstruction.quotient.group.structure())},
                {"class", to_json(ex.class_in_quotient)}};
  claim("e", "the class of c in H^1(CH^2) / im H^1(M^2) is nonzero on the window", ex.survives_quotient(), quotient);

  bool all = true;
  for (const auto& c : claims) all = all && c["verified"].get<bool>();
  Json out{{"example", "nontrivial Z(2)-gerbe on P2"},
           {"cover", n.labels()},
           {"window", window_stamp(w.window)},
           {"scope", kWindowScope},
           {"claims", claims},
           {"certificates", certs}};
  return Outcome{all ? Status::Verified : Status::Refuted, std::move(out)};
}

namespace {

Outcome verify_impl(const Json& cert, const doc::Scene* scene) {
  auto field = [&](const char* key) -> const Json& {
    if (!cert.is_object() || !cert.contains(key)) throw InvalidInput(std::string("certificate lacks \"") + key + "\"");
    return cert.at(key);
  };
  if (field("certificate") != "cechkit/1") throw InvalidInput("not a cechkit certificate");
  const std::string kind = field("kind").get<std::string>();
  const std::string scene_name = field("scene").get<std::string>();
  std::optional<doc::Scene> builtin;
  if (scene_name != "file") {
    builtin = builtin_scene(scene_name);
    if (!builtin) throw InvalidInput("unknown built-in scene \"" + scene_name + "\"");
    scene = &*builtin;
  } else if (!scene) {
    throw InvalidInput("this certificate needs the scene it was computed from (--scene)");
  }
  if (doc::digest(*scene) != field("inputs_digest").get<std::string>())
    throw InvalidInput("the scene digest does not match the certificate");
  const Json& subject = field("subject");

  bool ok = false;
  std::string detail;
  if (kind == "cocycle" || kind == "class-trivial" || kind == "class-nontrivial-in-window") {
    const AbelianSheaf& f = sheaf_named(*scene, subject.at("sheaf").get<std::string>());
    Cochain c = subject_cochain(f, subject, "cochain");
    if (kind == "cocycle") {
      ok = is_cocycle(f, c);
      detail = ok ? "coboundary vanishes" : "coboundary is nonzero";
    } else if (kind == "class-trivial") {
      if (c.degree == 0) throw InvalidInput("degree-0 classes have no witness");
      Cochain w = doc::cochain_from_json(f, field("witness"), "witness");
      if (w.degree + 1 != c.degree) throw InvalidInput("witness has the wrong degree");
      ok = is_cocycle(f, c) && cochains_match(f, coboundary(f, w), c);
      detail = ok ? "the witness has coboundary equal to the cocycle" : "the witness does not bound the cocycle";
    } else {
      IntegerInfeasibility inf = doc::infeasibility_from_json(field("infeasibility"), "infeasibility");
      WitnessSystem sys = witness_system(f, c);
      if (inf.multiplier.size() != sys.matrix.rows()) throw InvalidInput("multiplier has the wrong length");
      ok = is_cocycle(f, c) && inf.verify(sys.matrix, sys.rhs);
      detail = ok ? "the multiplier certifies that the witness system has no integer solution"
                  : "the multiplier does not certify infeasibility";
    }
  } else if (kind == "exactness") {
    const auto& e = entry_named(scene->sequences, subject.at("sequence").get<std::string>(), "sequence");
    ValidationReport r = validate_exact(e.seq);
    ok = r.ok();
    detail = ok ? "exactness recomputed" : to_string(r.issues.front());
  } else if (kind == "independence") {
    const auto& e = entry_named(scene->sequences, subject.at("sequence").get<std::string>(), "sequence");
    const ShortExactSequence& seq = e.seq;
    Cochain c = subject_cochain(seq.N, subject, "cocycle");
    const Json& lifts = subject.at("lifts");
    const Json& outputs = subject.at("outputs");
    if (!lifts.is_array() || lifts.size() != 2 || !outputs.is_array() || outputs.size() != 2)
      throw InvalidInput("independence certificates carry two lifts and two outputs");
    Cochain u = doc::cochain_from_json(seq.L, field("witness"), "witness");
    ok = is_cocycle(seq.N, c);
    std::vector<Cochain> outs;
    for (std::size_t k = 0; k < 2; ++k) {
      Cochain lift = doc::cochain_from_json(seq.M, lifts[k], "subject.lifts");
      Cochain output = doc::cochain_from_json(seq.L, outputs[k], "subject.outputs");
      ok = ok && cochains_match(seq.N, seq.pi.apply(lift), c) &&
           cochains_match(seq.M, coboundary(seq.M, lift), seq.iota.apply(output)) && is_cocycle(seq.L, output);
      outs.push_back(std::move(output));
    }
    ok = ok && cochains_match(seq.L, coboundary(seq.L, u), outs[1] - outs[0]);
    detail = ok ? "both lifts map onto the cocycle and the outputs differ by the coboundary of the witness"
                : "the lifts, outputs or witness do not check out";
  } else {
    throw InvalidInput("unknown certificate kind \"" + kind + "\"");
  }
  return Outcome{ok ? Status::Verified : Status::Refuted,
                 Json{{"kind", kind}, {"claim", field("claim")}, {"verified", ok}, {"detail", detail}}};
}

}  // namespace

Outcome verify(const Json& certificate, const doc::Scene* scene) {
  try {
    return verify_impl(certificate, scene);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace cechkit::cmd
