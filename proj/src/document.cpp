#include "cechkit/document.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <set>

namespace cechkit::doc {

namespace {

// Read access to a JSON value that remembers where it sits in the document.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& raw() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw InvalidInput((path_.empty() ? std::string("document") : path_) + ": " + message);
  }

  void require_object(std::initializer_list<const char*> allowed) const {
    if (!j_.is_object()) fail("expected an object");
    for (const auto& [key, value] : j_.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
        fail("unknown key \"" + key + "\"");
    }
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }
  Node at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail("missing key \"" + key + "\"");
    return Node(*it, child(key));
  }
  std::optional<Node> find(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return at(key);
  }
  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  Node operator[](std::size_t i) const { return Node(j_[i], path_ + "[" + std::to_string(i) + "]"); }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  Integer integer() const {
    std::string s;
    if (j_.is_string()) s = j_.get<std::string>();
    else if (j_.is_number_integer()) s = j_.dump();
    else fail("expected an integer written as a decimal string");
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), ::isdigit))
      fail("\"" + s + "\" is not a decimal integer");
    return Integer(s);
  }
  std::size_t count(std::size_t max = 1u << 20) const {
    Integer v = integer();
    if (v < 0 || v > static_cast<unsigned long>(max)) fail("count out of range");
    return v.get_ui();
  }
  IntVector vector(std::optional<std::size_t> length = std::nullopt) const {
    IntVector out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].integer());
    if (length && out.size() != *length)
      fail("expected " + std::to_string(*length) + " entries, got " + std::to_string(out.size()));
    return out;
  }
  IntMatrix matrix(std::size_t rows, std::size_t cols) const {
    if (size() != rows) fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(size()));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      IntVector row = (*this)[r].vector(cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  }

 private:
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json& j_;
  std::string path_;
};

std::size_t open_index(const Node& n, const std::vector<std::string>& labels) {
  const std::string label = n.str();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) n.fail("unknown open \"" + label + "\"");
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<std::size_t> open_set(const Node& n, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(open_index(n[i], labels));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) n.fail("repeated open");
  if (out.empty()) n.fail("empty simplex");
  return out;
}

Simplex simplex_of(const Node& n, const Nerve& nerve) {
  Simplex s(open_set(n, nerve.labels()));
  if (!nerve.contains(s)) n.fail(to_string(s) + " is not a simplex of the nerve");
  return s;
}

Nerve parse_cover(const Node& n) {
  n.require_object({"opens", "nonempty", "dimension_cap"});
  Cover cover;
  Node opens = n.at("opens");
  for (std::size_t i = 0; i < opens.size(); ++i) cover.opens.push_back(opens[i].str());
  {
    auto sorted = cover.opens;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) opens.fail("repeated open label");
  }
  std::size_t cap = kDefaultDimensionCap;
  if (auto c = n.find("dimension_cap")) cap = c->count(64);
  if (auto ne = n.find("nonempty")) {
    if (ne->raw().is_string()) {
      if (ne->str() != "all") ne->fail("expected \"all\" or a list of open sets");
      cover = Cover::full(cover.opens);
    } else {
      for (std::size_t i = 0; i < ne->size(); ++i) cover.nonempty.push_back(open_set((*ne)[i], cover.opens));
    }
  }
  try {
    return build_nerve(cover, cap);
  } catch (const InvalidInput& e) {
    n.fail(e.what());
  }
}

AbelianGroup parse_group(const Node& n) {
  n.require_object({"generators", "relations"});
  const std::size_t gens = n.at("generators").count();
  std::vector<IntVector> relations;
  if (auto r = n.find("relations"))
    for (std::size_t i = 0; i < r->size(); ++i) relations.push_back((*r)[i].vector(gens));
  return AbelianGroup(gens, IntMatrix::from_columns(gens, relations));
}

Json group_to_json(const AbelianGroup& g) {
  Json relations = Json::array();
  for (std::size_t c = 0; c < g.relations().cols(); ++c) relations.push_back(to_json(g.relations().column(c)));
  return Json{{"generators", to_json(Integer(static_cast<unsigned long>(g.generator_count())))},
              {"relations", relations}};
}

AbelianSheaf parse_sheaf(const Node& n, const Nerve& nerve) {
  if (n.has("constant")) {
    n.require_object({"constant"});
    return constant_sheaf(nerve, parse_group(n.at("constant")));
  }
  n.require_object({"groups", "restrictions"});
  AbelianSheaf f(nerve);
  std::set<Simplex> seen;
  Node groups = n.at("groups");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Node g = groups[i];
    g.require_object({"simplex", "group"});
    Simplex s = simplex_of(g.at("simplex"), nerve);
    if (!seen.insert(s).second) g.fail("group given twice for " + to_string(s));
    f.set_group(s, parse_group(g.at("group")));
  }
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i)
      if (!seen.count(nerve.simplex(p, i))) groups.fail("no group for " + to_string(nerve.simplex(p, i)));
  if (auto rs = n.find("restrictions")) {
    for (std::size_t i = 0; i < rs->size(); ++i) {
      Node r = (*rs)[i];
      r.require_object({"simplex", "face", "matrix"});
      Simplex s = simplex_of(r.at("simplex"), nerve);
      Simplex face = simplex_of(r.at("face"), nerve);
      std::optional<std::size_t> pos;
      for (const auto& fc : faces(s))
        if (fc.face == face) pos = fc.omitted_position;
      if (!pos) r.fail(to_string(face) + " is not a codimension-one face of " + to_string(s));
      f.set_restriction(s, *pos, r.at("matrix").matrix(f.group(s).generator_count(), f.group(face).generator_count()));
    }
  }
  return f;
}

Json sheaf_to_json(const AbelianSheaf& f) {
  const Nerve& nerve = f.nerve();
  Json groups = Json::array(), restrictions = Json::array();
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      groups.push_back(Json{{"simplex", to_json(nerve, s)}, {"group", group_to_json(f.group(p, i))}});
      if (p == 0) continue;
      for (const auto& fc : faces(s)) {
        const auto& m = f.restriction_matrix(s, fc.omitted_position);
        if (!m) continue;
        restrictions.push_back(
            Json{{"simplex", to_json(nerve, s)}, {"face", to_json(nerve, fc.face)}, {"matrix", to_json(*m)}});
      }
    }
  return Json{{"groups", groups}, {"restrictions", restrictions}};
}

SheafMorphism parse_morphism(const Node& n, const AbelianSheaf& from, const AbelianSheaf& to) {
  const Nerve& nerve = from.nerve();
  SheafMorphism m;
  m.matrices.resize(nerve.dimension_cap() + 1);
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) m.matrices[p].resize(nerve.count(p));
  auto shape = [&](std::size_t p, std::size_t i) {
    return std::pair{to.group(p, i).generator_count(), from.group(p, i).generator_count()};
  };
  if (n.has("constant")) {
    n.require_object({"constant"});
    for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
      for (std::size_t i = 0; i < nerve.count(p); ++i) {
        auto [r, c] = shape(p, i);
        m.matrices[p][i] = n.at("constant").matrix(r, c);
      }
    return m;
  }
  n.require_object({"per_simplex"});
  Node list = n.at("per_simplex");
  std::set<Simplex> seen;
  for (std::size_t k = 0; k < list.size(); ++k) {
    Node e = list[k];
    e.require_object({"simplex", "matrix"});
    Simplex s = simplex_of(e.at("simplex"), nerve);
    if (!seen.insert(s).second) e.fail("matrix given twice for " + to_string(s));
    const std::size_t p = s.dimension(), i = nerve.require_index(s);
    auto [r, c] = shape(p, i);
    m.matrices[p][i] = e.at("matrix").matrix(r, c);
  }
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i)
      if (!seen.count(nerve.simplex(p, i))) list.fail("no matrix for " + to_string(nerve.simplex(p, i)));
  return m;
}

Json morphism_to_json(const Nerve& nerve, const SheafMorphism& m) {
  Json list = Json::array();
  for (std::size_t p = 0; p < m.matrices.size(); ++p)
    for (std::size_t i = 0; i < m.matrices[p].size(); ++i)
      list.push_back(Json{{"simplex", to_json(nerve, nerve.simplex(p, i))}, {"matrix", to_json(m.matrices[p][i])}});
  return Json{{"per_simplex", list}};
}

const AbelianSheaf& sheaf_ref(const Node& n, const Scene& scene) {
  const std::string name = n.str();
  auto it = scene.sheaves.find(name);
  if (it == scene.sheaves.end()) n.fail("unknown sheaf \"" + name + "\"");
  return it->second;
}

TorsorMorphism parse_torsor(const Node& n, const AbelianSheaf& band) {
  n.require_object({"simplex", "source", "target", "offset"});
  Simplex s = simplex_of(n.at("simplex"), band.nerve());
  return TorsorMorphism{n.at("source").str(), n.at("target").str(), s,
                        n.at("offset").vector(band.group(s).generator_count())};
}

Json torsor_to_json(const Nerve& nerve, const TorsorMorphism& f) {
  return Json{{"simplex", to_json(nerve, f.simplex)}, {"source", f.source}, {"target", f.target}, {"offset", to_json(f.offset)}};
}

std::vector<TorsorMorphism> parse_torsors(const Node& n, const AbelianSheaf& band) {
  std::vector<TorsorMorphism> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(parse_torsor(n[i], band));
  return out;
}

Json torsors_to_json(const Nerve& nerve, const std::vector<TorsorMorphism>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(torsor_to_json(nerve, f));
  return out;
}

// Orders edge-attached morphisms like the edges of the nerve.
std::vector<TorsorMorphism> by_simplex(const Node& n, std::vector<TorsorMorphism> fs, const Nerve& nerve,
                                       std::size_t p) {
  std::vector<std::optional<TorsorMorphism>> slots(nerve.count(p));
  for (auto& f : fs) {
    if (f.simplex.dimension() != p) n.fail("morphism on " + to_string(f.simplex) + " has the wrong dimension");
    auto& slot = slots[nerve.require_index(f.simplex)];
    if (slot) n.fail("two morphisms on " + to_string(f.simplex));
    slot = std::move(f);
  }
  std::vector<TorsorMorphism> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) n.fail("no morphism on " + to_string(nerve.simplex(p, i)));
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

LinearForm parse_form(const Node& n) {
  try {
    return LinearForm(n.vector());
  } catch (const InvalidInput& e) {
    n.fail(e.what());
  }
}

RationalFunction parse_function(const Node& n) {
  n.require_object({"factors", "constants"});
  RationalFunction f;
  if (auto fs = n.find("factors"))
    for (std::size_t i = 0; i < fs->size(); ++i) {
      Node e = (*fs)[i];
      e.require_object({"form", "exponent"});
      RationalFunction factor;
      factor.exponents[parse_form(e.at("form"))] = e.at("exponent").integer();
      f *= factor;
    }
  if (auto cs = n.find("constants"))
    for (std::size_t i = 0; i < cs->size(); ++i) {
      Node e = (*cs)[i];
      e.require_object({"name", "exponent"});
      RationalFunction factor;
      factor.constants[e.at("name").str()] = e.at("exponent").integer();
      f *= factor;
    }
  if (f.degree() != 0) n.fail("rational function " + to_string(f) + " does not have degree zero");
  return f;
}

LocalEquations parse_equations(const Node& n, std::size_t l) {
  LocalEquations eq;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Node t = n[i];
    t.require_object({"coefficient", "functions"});
    WeightedTuple w;
    if (auto c = t.find("coefficient")) w.coefficient = c->integer();
    Node fs = t.at("functions");
    if (fs.size() != l) fs.fail("expected " + std::to_string(l) + " functions");
    for (std::size_t k = 0; k < fs.size(); ++k) w.functions.push_back(parse_function(fs[k]));
    eq.push_back(std::move(w));
  }
  return eq;
}

void require_same_nerve(const Node& n, std::initializer_list<const AbelianSheaf*> sheaves) {
  for (const auto* s : sheaves)
    if (!(s->nerve() == (*sheaves.begin())->nerve())) n.fail("sheaves live on different nerves");
}

}  // namespace

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Nerve& nerve, const Simplex& s) {
  Json out = Json::array();
  for (std::size_t i : s.indices()) out.push_back(nerve.labels().at(i));
  return out;
}

Json to_json(const Nerve& nerve, const Cochain& c) {
  Json values = Json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i)
    values.push_back(Json{{"simplex", to_json(nerve, nerve.simplex(c.degree, i))}, {"value", to_json(c.values[i])}});
  return Json{{"degree", std::to_string(c.degree)}, {"values", values}};
}

Json to_json(const GroupStructure& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_str());
  return Json{{"free_rank", std::to_string(g.free_rank)}, {"torsion", torsion}, {"text", to_string(g)}};
}

Json to_json(const Nerve& nerve, const ValidationReport& report) {
  Json issues = Json::array();
  for (const auto& issue : report.issues) {
    Json where = Json::array();
    for (const auto& s : issue.location) where.push_back(to_json(nerve, s));
    issues.push_back(Json{{"kind", to_string(issue.kind)}, {"location", where}, {"message", issue.message}});
  }
  return Json{{"ok", report.ok()}, {"issues", issues}};
}

Json to_json(const IntegerInfeasibility& cert) {
  return Json{{"multiplier", to_json(cert.multiplier)}, {"modulus", to_json(cert.modulus)}};
}

Json to_json(const RationalFunction& f) {
  Json factors = Json::array(), constants = Json::array();
  for (const auto& [g, e] : f.exponents) factors.push_back(Json{{"form", to_json(g.coefficients)}, {"exponent", to_json(e)}});
  for (const auto& [c, e] : f.constants) constants.push_back(Json{{"name", c}, {"exponent", to_json(e)}});
  return Json{{"factors", factors}, {"constants", constants}};
}

Json to_json(const LocalEquations& eq) {
  Json out = Json::array();
  for (const auto& t : eq) {
    Json fs = Json::array();
    for (const auto& f : t.functions) fs.push_back(to_json(f));
    out.push_back(Json{{"coefficient", to_json(t.coefficient)}, {"functions", fs}});
  }
  return out;
}

Json to_json(const Divisor& d) {
  Json terms = Json::array();
  for (const auto& [k, c] : d.terms)
    terms.push_back(Json{{d.codimension == 2 ? "point" : "form", to_json(k)}, {"coefficient", to_json(c)}});
  return Json{{"codimension", std::to_string(d.codimension)}, {"terms", terms}, {"text", to_string(d)}};
}

Cochain cochain_from_json(const AbelianSheaf& sheaf, const Json& j, const std::string& path) {
  Node n(j, path);
  n.require_object({"sheaf", "degree", "values"});
  const Nerve& nerve = sheaf.nerve();
  const std::size_t degree = n.at("degree").count(64);
  Cochain c = zero_cochain(sheaf, degree);
  std::set<Simplex> seen;
  Node values = n.at("values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    Node v = values[i];
    v.require_object({"simplex", "value"});
    Simplex s = simplex_of(v.at("simplex"), nerve);
    if (s.dimension() != degree) v.fail(to_string(s) + " is not a " + std::to_string(degree) + "-simplex");
    if (!seen.insert(s).second) v.fail("value given twice for " + to_string(s));
    c.values[nerve.require_index(s)] = v.at("value").vector(sheaf.group(s).generator_count());
  }
  return c;
}

IntegerInfeasibility infeasibility_from_json(const Json& j, const std::string& path) {
  Node n(j, path);
  n.require_object({"multiplier", "modulus"});
  return IntegerInfeasibility{n.at("multiplier").vector(), n.at("modulus").integer()};
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(what + ": malformed JSON: " + e.what());
  }
}

Scene parse_scene(const std::string& text) { return parse_scene(parse_json(text, "scene")); }

Scene parse_scene(const Json& j) {
  Node root(j, "");
  root.require_object({"format_version", "cover", "sheaves", "cochains", "sequences", "extensions", "descent", "lci"});
  if (root.at("format_version").str() != kFormatVersion)
    root.at("format_version").fail("unsupported format version");
  Scene scene;
  if (auto c = root.find("cover")) scene.nerve = parse_cover(*c);
  auto need_cover = [&](const Node& n) -> const Nerve& {
    if (!scene.nerve) n.fail("a cover section is required");
    return *scene.nerve;
  };

  if (auto ss = root.find("sheaves")) {
    if (!ss->raw().is_object()) ss->fail("expected an object");
    for (const auto& [name, value] : ss->raw().items())
      scene.sheaves.emplace(name, parse_sheaf(ss->at(name), need_cover(*ss)));
  }
  if (auto cs = root.find("cochains")) {
    if (!cs->raw().is_object()) cs->fail("expected an object");
    for (const auto& [name, value] : cs->raw().items()) {
      Node c = cs->at(name);
      c.require_object({"sheaf", "degree", "values"});
      const AbelianSheaf& f = sheaf_ref(c.at("sheaf"), scene);
      scene.cochains.emplace(name, NamedCochain{c.at("sheaf").str(), cochain_from_json(f, c.raw(), c.path())});
    }
  }
  if (auto qs = root.find("sequences")) {
    if (!qs->raw().is_object()) qs->fail("expected an object");
    for (const auto& [name, value] : qs->raw().items()) {
      Node q = qs->at(name);
      q.require_object({"L", "M", "N", "iota", "pi"});
      const AbelianSheaf& L = sheaf_ref(q.at("L"), scene);
      const AbelianSheaf& M = sheaf_ref(q.at("M"), scene);
      const AbelianSheaf& N = sheaf_ref(q.at("N"), scene);
      require_same_nerve(q, {&L, &M, &N});
      SequenceEntry e{q.at("L").str(), q.at("M").str(), q.at("N").str(), {}};
      e.seq = ShortExactSequence{L, M, N, parse_morphism(q.at("iota"), L, M), parse_morphism(q.at("pi"), M, N)};
      scene.sequences.emplace(name, std::move(e));
    }
  }
  if (auto es = root.find("extensions")) {
    if (!es->raw().is_object()) es->fail("expected an object");
    for (const auto& [name, value] : es->raw().items()) {
      Node x = es->at(name);
      ExtensionEntry e;
      if (x.has("splice")) {
        x.require_object({"splice"});
        Node sp = x.at("splice");
        if (sp.size() != 2) sp.fail("expected two sequence names");
        auto seq = [&](const Node& s) -> const SequenceEntry& {
          auto it = scene.sequences.find(s.str());
          if (it == scene.sequences.end()) s.fail("unknown sequence \"" + s.str() + "\"");
          return it->second;
        };
        const SequenceEntry& first = seq(sp[0]);
        const SequenceEntry& second = seq(sp[1]);
        e.splice = std::pair{sp[0].str(), sp[1].str()};
        e.L = first.L, e.A = first.M, e.B = second.M, e.N = second.N;
        try {
          e.ext = splice(first.seq, second.seq);
        } catch (const InvalidInput& err) {
          sp.fail(err.what());
        }
      } else {
        x.require_object({"L", "A", "B", "N", "alpha", "beta", "gamma"});
        const AbelianSheaf& L = sheaf_ref(x.at("L"), scene);
        const AbelianSheaf& A = sheaf_ref(x.at("A"), scene);
        const AbelianSheaf& B = sheaf_ref(x.at("B"), scene);
        const AbelianSheaf& N = sheaf_ref(x.at("N"), scene);
        require_same_nerve(x, {&L, &A, &B, &N});
        e.L = x.at("L").str(), e.A = x.at("A").str(), e.B = x.at("B").str(), e.N = x.at("N").str();
        e.ext = TwoStepExtension{L, A, B, N, parse_morphism(x.at("alpha"), L, A), parse_morphism(x.at("beta"), A, B),
                                 parse_morphism(x.at("gamma"), B, N)};
      }
      scene.extensions.emplace(name, std::move(e));
    }
  }
  if (auto ds = root.find("descent")) {
    if (!ds->raw().is_object()) ds->fail("expected an object");
    for (const auto& [name, value] : ds->raw().items()) {
      Node d = ds->at(name);
      d.require_object({"band", "objects", "transitions", "basepoint_defect", "automorphism", "extension"});
      DescentEntry e;
      e.band = d.at("band").str();
      const AbelianSheaf& band = sheaf_ref(d.at("band"), scene);
      const Nerve& nerve = band.nerve();
      e.datum.band = band;
      Node objects = d.at("objects");
      for (std::size_t i = 0; i < objects.size(); ++i) e.datum.objects.push_back(objects[i].str());
      Node tr = d.at("transitions");
      e.datum.transitions = by_simplex(tr, parse_torsors(tr, band), nerve, 1);
      e.datum.basepoint_defect = zero_cochain(band, 2);
      if (auto bd = d.find("basepoint_defect")) {
        Json wrapped{{"degree", "2"}, {"values", bd->raw()}};
        e.datum.basepoint_defect = cochain_from_json(band, wrapped, bd->path());
      }
      if (auto a = d.find("automorphism")) {
        a->require_object({"connecting", "images"});
        AutomorphismDatum ad;
        ad.connecting = by_simplex(a->at("connecting"), parse_torsors(a->at("connecting"), band), nerve, 0);
        ad.images = by_simplex(a->at("images"), parse_torsors(a->at("images"), band), nerve, 1);
        e.automorphism = std::move(ad);
      }
      if (auto x = d.find("extension")) {
        if (!scene.sequences.count(x->str())) x->fail("unknown sequence \"" + x->str() + "\"");
        e.extension = x->str();
      }
      try {
        check_datum(e.datum);
      } catch (const InvalidInput& err) {
        d.fail(err.what());
      }
      scene.descent.emplace(name, std::move(e));
    }
  }
  if (auto ls = root.find("lci")) {
    if (!ls->raw().is_object()) ls->fail("expected an object");
    for (const auto& [name, value] : ls->raw().items()) {
      Node x = ls->at(name);
      x.require_object({"window", "l", "charts"});
      LciEntry e;
      e.window = x.at("window").str();
      try {
        window_by_name(e.window);
      } catch (const InvalidInput& err) {
        x.at("window").fail(err.what());
      }
      e.l = x.at("l").count(2);
      if (e.l == 0) x.at("l").fail("l must be 1 or 2");
      Node charts = x.at("charts");
      for (std::size_t i = 0; i < charts.size(); ++i) e.charts.push_back(parse_equations(charts[i], e.l));
      scene.lci.emplace(name, std::move(e));
    }
  }
  return scene;
}

Json scene_to_json(const Scene& scene) {
  Json out;
  out["format_version"] = kFormatVersion;
  if (scene.nerve) {
    const Nerve& n = *scene.nerve;
    Json opens = Json::array(), nonempty = Json::array();
    for (const auto& l : n.labels()) opens.push_back(l);
    for (std::size_t p = 1; p <= n.dimension_cap(); ++p)
      for (std::size_t i = 0; i < n.count(p); ++i) nonempty.push_back(to_json(n, n.simplex(p, i)));
    out["cover"] = Json{{"opens", opens}, {"nonempty", nonempty}, {"dimension_cap", std::to_string(n.dimension_cap())}};
  }
  Json sheaves = Json::object();
  for (const auto& [name, f] : scene.sheaves) sheaves[name] = sheaf_to_json(f);
  out["sheaves"] = sheaves;
  Json cochains = Json::object();
  for (const auto& [name, c] : scene.cochains) {
    Json body = to_json(scene.sheaves.at(c.sheaf).nerve(), c.cochain);
    cochains[name] = Json{{"sheaf", c.sheaf}, {"degree", body["degree"]}, {"values", body["values"]}};
  }
  out["cochains"] = cochains;
  Json sequences = Json::object();
  for (const auto& [name, e] : scene.sequences) {
    const Nerve& n = e.seq.M.nerve();
    sequences[name] = Json{{"L", e.L}, {"M", e.M}, {"N", e.N}, {"iota", morphism_to_json(n, e.seq.iota)},
                           {"pi", morphism_to_json(n, e.seq.pi)}};
  }
  out["sequences"] = sequences;
  Json extensions = Json::object();
  for (const auto& [name, e] : scene.extensions) {
    if (e.splice) {
      extensions[name] = Json{{"splice", Json::array({e.splice->first, e.splice->second})}};
      continue;
    }
    const Nerve& n = e.ext.A.nerve();
    extensions[name] = Json{{"L", e.L},
                            {"A", e.A},
                            {"B", e.B},
                            {"N", e.N},
                            {"alpha", morphism_to_json(n, e.ext.alpha)},
                            {"beta", morphism_to_json(n, e.ext.beta)},
                            {"gamma", morphism_to_json(n, e.ext.gamma)}};
  }
  out["extensions"] = extensions;
  Json descent = Json::object();
  for (const auto& [name, e] : scene.descent) {
    const Nerve& n = e.datum.band.nerve();
    Json body;
    body["band"] = e.band;
    body["objects"] = e.datum.objects;
    body["transitions"] = torsors_to_json(n, e.datum.transitions);
    body["basepoint_defect"] = to_json(n, e.datum.basepoint_defect)["values"];
    if (e.automorphism)
      body["automorphism"] = Json{{"connecting", torsors_to_json(n, e.automorphism->connecting)},
                                  {"images", torsors_to_json(n, e.automorphism->images)}};
    if (e.extension) body["extension"] = *e.extension;
    descent[name] = body;
  }
  out["descent"] = descent;
  Json lci = Json::object();
  for (const auto& [name, e] : scene.lci) {
    Json charts = Json::array();
    for (const auto& eq : e.charts) charts.push_back(to_json(eq));
    lci[name] = Json{{"window", e.window}, {"l", std::to_string(e.l)}, {"charts", charts}};
  }
  out["lci"] = lci;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string digest(const Scene& scene) {
  const std::string text = dump(scene_to_json(scene));
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", hash[i]);
    hex += buf;
  }
  return hex;
}

Window window_by_name(const std::string& name) {
  if (name == "p2-standard") return p2_standard_window();
  if (name == "p1") return p1_window();
  if (name == "spec-k") return spec_k_window();
  throw InvalidInput("unknown window \"" + name + "\" (expected p2-standard, p1 or spec-k)");
}

Scene window_scene(const WindowSequence& w) {
  Scene s;
  s.nerve = w.seq.M.nerve();
  s.sheaves.emplace("Z", w.seq.L);
  s.sheaves.emplace("M", w.seq.M);
  s.sheaves.emplace("CH", w.seq.N);
  s.sequences.emplace("window", SequenceEntry{"Z", "M", "CH", w.seq});
  return s;
}

}  // namespace cechkit::doc
