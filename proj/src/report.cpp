#include "pcx/report.hpp"

#include "pcx/compress.hpp"
#include "pcx/error.hpp"
#include "pcx/flags.hpp"
#include "pcx/nongrad.hpp"

#include <functional>
#include <map>

namespace pcx {

namespace {

struct Store {
  AlgebraPtr A;
  SearchCaps caps;
  std::map<std::string, Graded> objects;
  std::map<std::string, ProjMap> maps;
  std::map<std::string, Representation> modules;
  std::map<std::string, RepComplex> dmodules;
  std::map<std::string, std::vector<RepMap>> repmaps;
};

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  const auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::Semantic, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

const Graded& obj(const Store& s, const json& c, const char* key) {
  return lookup(s.objects, c.at(key).get<std::string>(), "object");
}

ProjMap factor(const Store& s, const std::string& t) {
  if (t.rfind("1:", 0) == 0) return ProjMap::identity(s.A, lookup(s.objects, t.substr(2), "object").module);
  if (t.rfind("d:", 0) == 0) return lookup(s.objects, t.substr(2), "object").d;
  return lookup(s.maps, t, "map");
}

ProjMap expression(const Store& s, const json& e) {
  std::optional<ProjMap> sum;
  for (const auto& term : e) {
    const auto& p = term.at("p");
    if (p.empty()) throw Error(ErrorCode::Semantic, "empty product in expression");
    ProjMap m = factor(s, p[0].get<std::string>());
    for (std::size_t i = 1; i < p.size(); ++i) m = m * factor(s, p[i].get<std::string>());
    m = m.scaled(scalar_from_json(s.A->field(), term.at("c")));
    sum = sum ? *sum + m : m;
  }
  if (!sum) throw Error(ErrorCode::Semantic, "empty expression");
  return *sum;
}

json term(std::int64_t c, std::vector<std::string> p) { return {{"c", c}, {"p", p}}; }
json expr(std::initializer_list<json> terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(t);
  return out;
}

std::size_t end_dim(const Graded& X) { return X.period == 0 ? hom_kb(X, X, 0).dim : hom_kn(X, X).dim; }

json homology_table(const RepComplex& X) {
  json out = json::array();
  const auto H = homology_periodic(X);
  for (std::size_t i = 0; i < H.size(); ++i) out.push_back({{"position", i}, {"dims", H[i].rep.dims}});
  return out;
}

json homology_table(const Graded& X) {
  if (X.period > 0) return homology_table(evaluate(X));
  json out = json::array();
  const auto range = degree_range(X);
  if (!range) return out;
  const int N = range->second - range->first + 2;
  const auto H = homology_periodic(evaluate(compress(X, N)));
  for (int k = range->first; k <= range->second; ++k)
    out.push_back({{"degree", k}, {"dims", H[normalize_degree(N, k)].rep.dims}});
  return out;
}

bool same_graded(const Graded& X, const Graded& Y) {
  return X.period == Y.period && X.module == Y.module && X.degree == Y.degree && X.d == Y.d;
}

bool resolves(const Graded& P, const Representation& M, const RepMap& aug) {
  if (P.period != 0) return false;
  const auto range = degree_range(P);
  if (!range) return M.is_zero();
  if (range->second != 0) return false;
  for (const auto& row : homology_table(P)) {
    const auto dims = row.at("dims").get<std::vector<std::size_t>>();
    if (row.at("degree").get<int>() == 0) {
      if (dims != M.dims) return false;
    } else {
      for (auto d : dims)
        if (d != 0) return false;
    }
  }
  const Representation P0 = eval_proj(P.A, term(P, 0));
  if (aug.comp.size() != M.dims.size()) return false;
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    if (aug.comp[v].rows() != M.dims[v] || aug.comp[v].cols() != P0.dims[v]) return false;
    if (rank(aug.comp[v]) != M.dims[v]) return false;
  }
  if (!aug.is_homomorphism(P0, M)) return false;
  if (range->first < 0 && !(aug * eval_projmap(differential(P, -1))).is_zero()) return false;
  return true;
}

bool holds(const json& c, const Store& s) {
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "all") {
    for (const auto& sub : c.at("of"))
      if (!holds(sub, s)) return false;
    return true;
  }
  if (kind == "square_zero") {
    const Graded& X = obj(s, c, "object");
    try {
      validate(X);
    } catch (const Error&) {
      return false;
    }
    return (X.d * X.d).is_zero();
  }
  if (kind == "minimal") return is_minimal(obj(s, c, "object"));
  if (kind == "chain_map")
    return is_chain_map(obj(s, c, "source"), obj(s, c, "target"), lookup(s.maps, c.at("map").get<std::string>(), "map"));
  if (kind == "homotopy")
    return homotopy_defect(obj(s, c, "source"), obj(s, c, "target"), expression(s, c.at("lhs")),
                           lookup(s.maps, c.at("s").get<std::string>(), "map"))
        .is_zero();
  if (kind == "equal") return expression(s, c.at("lhs")) == expression(s, c.at("rhs"));
  if (kind == "invertible") return lookup(s.maps, c.at("map").get<std::string>(), "map").is_invertible();
  if (kind == "strictly_lower") return strictly_lower(obj(s, c, "object"), c.at("blocks").get<std::vector<std::size_t>>());
  if (kind == "quasi_iso") {
    const RepComplex& M = lookup(s.dmodules, c.at("dmodule").get<std::string>(), "differential module");
    const RepComplex E = evaluate(obj(s, c, "object"));
    const auto& f = lookup(s.repmaps, c.at("map").get<std::string>(), "module map");
    return is_chain_map(E, M, f) && quasi_iso(E, M, f);
  }
  if (kind == "resolution") {
    const auto& aug = lookup(s.repmaps, c.at("map").get<std::string>(), "module map");
    return aug.size() == 1 &&
           resolves(obj(s, c, "object"), lookup(s.modules, c.at("module").get<std::string>(), "module"), aug[0]);
  }
  if (kind == "degrees_occupied") {
    const Graded& X = obj(s, c, "object");
    if (X.period <= 0) return false;
    for (int k = 0; k < X.period; ++k)
      if (X.at_degree(k).empty()) return false;
    return true;
  }
  if (kind == "no_gradable_shape") return !gradable_shape(obj(s, c, "object"));
  if (kind == "end_dim") return end_dim(obj(s, c, "object")) == c.at("value").get<std::size_t>();
  if (kind == "local_end") return indecomposable(obj(s, c, "object"), s.caps).verdict == IndecVerdict::Indecomposable;
  if (kind == "nontrivial_idempotent") {
    const Graded& X = obj(s, c, "object");
    const ProjMap& e = lookup(s.maps, c.at("map").get<std::string>(), "map");
    const ProjMap one = ProjMap::identity(s.A, X.module);
    return is_chain_map(X, X, e) && null_homotopy(X, X, e * e - e).has_value() && !null_homotopy(X, X, e) &&
           !null_homotopy(X, X, one - e);
  }
  if (kind == "no_invertible_map") {
    SearchCaps caps = s.caps;
    caps.random = 0;
    const IsoSearch r = find_isomorphism(obj(s, c, "source"), obj(s, c, "target"), caps);
    return r.verdict == Verdict::No && (r.exhaustive || r.reason == "dimension");
  }
  if (kind == "naturality_unsolvable") {
    SearchCaps caps = s.caps;
    caps.random = 0;
    const Naturality n =
        naturality_square(obj(s, c, "q1"), obj(s, c, "q2"), lookup(s.maps, c.at("map").get<std::string>(), "map"), caps);
    return n.verdict == Verdict::No && n.search.exhaustive;
  }
  if (kind == "orbit_hom") {
    const OrbitHom o = orbit_hom_check(obj(s, c, "left"), obj(s, c, "right"), c.at("n").get<int>());
    return o.equal && o.lhs == c.at("lhs").get<std::size_t>() && o.rhs == c.at("rhs").get<std::size_t>();
  }
  if (kind == "homology") {
    const json table = c.contains("dmodule")
                           ? homology_table(lookup(s.dmodules, c.at("dmodule").get<std::string>(), "differential module"))
                           : homology_table(obj(s, c, "object"));
    return table == c.at("table");
  }
  if (kind == "hom_dim")
    return hom_kb(obj(s, c, "source"), obj(s, c, "target"), c.at("shift").get<int>()).dim == c.at("value").get<std::size_t>();
  if (kind == "is_compression")
    return same_graded(compress(obj(s, c, "bounded"), c.at("n").get<int>()), obj(s, c, "periodic"));
  if (kind == "is_wrap") return same_graded(wrap(obj(s, c, "pattern"), c.at("n").get<int>()), obj(s, c, "wrapped"));
  throw Error(ErrorCode::Semantic, "unknown claim kind '" + kind + "'");
}

bool holds_noexcept(const json& c, const Store& s, std::string* why = nullptr) {
  try {
    return holds(c, s);
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
}

json claim_all(std::vector<json> of) { return {{"kind", "all"}, {"of", of}}; }
json on(const char* kind, const std::string& object) { return {{"kind", kind}, {"object", object}}; }
json chain(const std::string& src, const std::string& tgt, const std::string& map) {
  return {{"kind", "chain_map"}, {"source", src}, {"target", tgt}, {"map", map}};
}
json equal(json lhs, json rhs) { return {{"kind", "equal"}, {"lhs", lhs}, {"rhs", rhs}}; }

std::string status_string(bool ok) { return ok ? "PASS" : "FAIL"; }

class Builder {
 public:
  Builder(std::string command, const Job& job, const RunOptions& opt) : command_(std::move(command)), job_(job), opt_(opt) {
    store.A = job.A;
    store.caps = opt.caps;
  }

  Store store;
  json data = json::object();
  json results = json::object();
  std::string verdict = "OK";
  std::string justification;
  std::vector<std::string> requires_pass;

  void object(const std::string& n, const Graded& X) { store.objects.insert_or_assign(n, X); }
  void map(const std::string& n, const ProjMap& f) { store.maps.insert_or_assign(n, f); }
  void module(const std::string& n, const Representation& M) { store.modules.insert_or_assign(n, M); }
  void dmodule(const std::string& n, const RepComplex& M) { store.dmodules.insert_or_assign(n, M); }
  void repmaps(const std::string& n, std::vector<RepMap> f) { store.repmaps.insert_or_assign(n, std::move(f)); }

  bool claim(const std::string& name, json c, std::string detail = {}) {
    std::string why;
    const bool ok = holds_noexcept(c, store, &why);
    if (!why.empty()) detail += (detail.empty() ? "" : "; ") + why;
    checks_.push_back({{"name", name}, {"status", status_string(ok)}, {"detail", detail}, {"claim", c}});
    return ok;
  }
  void info(const std::string& name, const std::string& status, const std::string& detail) {
    checks_.push_back({{"name", name}, {"status", status}, {"detail", detail}, {"claim", nullptr}});
  }

  json finish() const {
    json w = json::object();
    json objects = json::object(), maps = json::object(), modules = json::object(), dmods = json::object(),
         reps = json::object();
    for (const auto& [n, X] : store.objects) objects[n] = graded_json(X);
    for (const auto& [n, f] : store.maps) maps[n] = projmap_json(f);
    for (const auto& [n, M] : store.modules) modules[n] = rep_json(M);
    for (const auto& [n, M] : store.dmodules) dmods[n] = rep_complex_json(M);
    for (const auto& [n, fs] : store.repmaps) {
      json list = json::array();
      for (const auto& f : fs) {
        json shape = json::array();
        for (const auto& m : f.comp) shape.push_back({m.rows(), m.cols()});
        list.push_back({{"shape", shape}, {"comp", repmap_json(f)}});
      }
      reps[n] = list;
    }
    w["objects"] = objects;
    w["maps"] = maps;
    w["modules"] = modules;
    w["dmodules"] = dmods;
    w["module_maps"] = reps;
    w["data"] = data;

    json out = json::object();
    out["command"] = command_;
    out["verdict"] = verdict;
    out["justification"] = justification;
    if (!results.empty()) out["results"] = results;
    out["checks"] = checks_;
    out["verdict_requires"] = requires_pass;
    out["witnesses"] = w;
    out["params"] = params(job_, opt_);
    return out;
  }

  static json params(const Job& job, const RunOptions& opt) {
    return {{"seed", opt.caps.seed},
            {"caps", {{"enumerate", opt.caps.enumerate}, {"random", opt.caps.random}}},
            {"field", job.A->field().name()},
            {"resolution_bound", opt.resolution_bound ? json(*opt.resolution_bound) : json(nullptr)},
            {"algebra", job.algebra},
            {"args", job.args}};
  }

 private:
  std::string command_;
  const Job& job_;
  const RunOptions& opt_;
  json checks_ = json::array();
};

// ---- arguments

std::optional<std::string> arg_string(const Job& job, const std::string& key) {
  if (!job.args.contains(key)) return std::nullopt;
  const json& v = job.args[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw Error(ErrorCode::Semantic, "argument '" + key + "' must be a string");
}

int arg_int(const Job& job, const std::string& key, std::optional<int> def = std::nullopt) {
  if (!job.args.contains(key)) {
    if (def) return *def;
    throw Error(ErrorCode::Semantic, "missing argument '" + key + "'");
  }
  if (!job.args[key].is_number_integer()) throw Error(ErrorCode::Semantic, "argument '" + key + "' must be an integer");
  return job.args[key].get<int>();
}

template <class M>
const typename M::mapped_type& named(const Job& job, const M& m, const std::string& key, const char* what) {
  if (const auto n = arg_string(job, key)) return lookup(m, *n, what);
  if (m.size() == 1) return m.begin()->second;
  throw Error(ErrorCode::Semantic, "argument '" + key + "' must name a " + std::string(what));
}

const Graded& object_arg(const Job& job, const std::string& key) { return named(job, job.objects, key, "object"); }
const ProjMap& map_arg(const Job& job, const std::string& key) { return named(job, job.maps, key, "map"); }

Representation module_arg(const Job& job, const std::string& key) {
  if (const auto n = arg_string(job, key)) {
    if (const auto it = job.modules.find(*n); it != job.modules.end()) return it->second;
    if (const auto v = job.A->quiver().find_vertex(*n)) return Representation::simple(job.A, *v);
    throw Error(ErrorCode::Semantic, "argument '" + key + "' names neither a module nor a vertex: '" + *n + "'");
  }
  if (job.modules.size() == 1) return job.modules.begin()->second;
  throw Error(ErrorCode::Semantic, "argument '" + key + "' must name a module or a vertex");
}

int vertex_arg(const Job& job, const std::string& key) {
  const auto n = arg_string(job, key);
  if (!n) throw Error(ErrorCode::Semantic, "missing argument '" + key + "'");
  const auto v = job.A->quiver().find_vertex(*n);
  if (!v) throw Error(ErrorCode::Semantic, "unknown vertex '" + *n + "'");
  return *v;
}

std::vector<int> cycle_arg(const Job& job) {
  if (!job.args.contains("cycle") || !job.args["cycle"].is_array())
    throw Error(ErrorCode::Semantic, "argument 'cycle' must list arrow names");
  std::vector<int> out;
  for (const auto& a : job.args["cycle"]) {
    const auto idx = job.A->quiver().find_arrow(a.get<std::string>());
    if (!idx) throw Error(ErrorCode::Semantic, "unknown arrow '" + a.get<std::string>() + "' in cycle");
    out.push_back(*idx);
  }
  return out;
}

bool wants_dmodule(const Job& job) {
  if (job.args.contains("dmodule")) return true;
  return !job.args.contains("object") && job.objects.empty() && !job.dmodules.empty();
}

// ---- shared emitters

std::string summand_names(const PathAlgebra& A, const ProjModule& P) {
  if (P.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < P.size(); ++i) s += (i ? "+" : "") + std::string("P") + A.quiver().vertex_name(P[i]);
  return s;
}

std::string map_words(const ProjMap& f) {
  const auto w = f.words();
  if (w.size() == 1 && w[0].size() == 1) return w[0][0];
  std::string s = "[";
  for (std::size_t r = 0; r < w.size(); ++r) {
    s += r ? "; " : "";
    for (std::size_t c = 0; c < w[r].size(); ++c) s += (c ? ", " : "") + w[r][c];
  }
  return s + "]";
}

// Terms and differentials position by position.
json sequence(const Graded& X) {
  json terms = json::array();
  std::string display;
  std::vector<int> positions;
  if (X.period > 0) {
    for (int k = 0; k < X.period; ++k) positions.push_back(k);
  } else if (const auto r = degree_range(X)) {
    for (int k = r->first; k <= r->second; ++k) positions.push_back(k);
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int k = positions[i];
    const ProjModule P = term(X, k);
    json t = {{"position", k}, {"term", projmodule_json(*X.A, P)}};
    display += summand_names(*X.A, P);
    const bool last = i + 1 == positions.size();
    if (!last || X.period > 0) {
      const ProjMap d = differential(X, k);
      t["d"] = d.words();
      display += " -" + map_words(d) + "-> ";
      if (last) display += summand_names(*X.A, term(X, positions[0]));
    }
    terms.push_back(t);
  }
  return {{"terms", terms}, {"display", display}};
}

void emit_minimization(Builder& b, const std::string& src, const Minimization& m, const std::string& p) {
  b.object(p + "min", m.min);
  b.map(p + "f", m.f);
  b.map(p + "g", m.g);
  b.map(p + "s", m.s);
  b.claim(p + "min_square_zero", on("square_zero", p + "min"));
  b.claim(p + "min_minimal", on("minimal", p + "min"));
  b.claim(p + "equivalence_maps", claim_all({chain(src, p + "min", p + "f"), chain(p + "min", src, p + "g")}));
  b.claim(p + "retraction", equal(expr({term(1, {p + "f", p + "g"})}), expr({term(1, {"1:" + p + "min"})})),
          "f g = 1");
  b.claim(p + "homotopy", {{"kind", "homotopy"},
                           {"source", src},
                           {"target", src},
                           {"lhs", expr({term(1, {p + "g", p + "f"}), term(-1, {"1:" + src})})},
                           {"s", p + "s"}},
          "g f - 1 = s d + d s");
}

json search_json(const IsoSearch& s) {
  return {{"verdict", to_string(s.verdict)}, {"reason", s.reason},         {"hom_dim", s.hom_dim},
          {"top_rank", s.top_rank},          {"field_size", s.field_size}, {"searched", s.searched},
          {"enumerated", s.enumerated},      {"exhaustive", s.exhaustive}};
}

// Records an isomorphism search between x and y; returns the name of the deciding check.
std::string emit_iso(Builder& b, const std::string& p, const IsoK& r, const std::string& x, const std::string& y,
                     Ambient ambient) {
  std::string sx = x, sy = y;
  if (ambient == Ambient::Homotopy) {
    emit_minimization(b, x, r.mx, p + "left_");
    emit_minimization(b, y, r.my, p + "right_");
    sx = p + "left_min";
    sy = p + "right_min";
  }
  const std::string name = p + "isomorphism";
  const IsoSearch& s = r.search;
  if (s.verdict == Verdict::Yes && s.witness) {
    b.map(p + "iso", *s.witness);
    b.claim(name, claim_all({chain(sx, sy, p + "iso"), {{"kind", "invertible"}, {"map", p + "iso"}}}),
            "invertible chain map, " + s.reason);
  } else if (s.verdict == Verdict::No) {
    b.claim(name, {{"kind", "no_invertible_map"}, {"source", sx}, {"target", sy}},
            s.reason == "dimension" ? "terms differ"
                                    : "all " + std::to_string(s.enumerated) + " top combinations over F" +
                                          std::to_string(s.field_size) + " are singular (rank " +
                                          std::to_string(s.top_rank) + ")");
  } else {
    b.info(name, "UNKNOWN", "search caps reached after " + std::to_string(s.searched) + " samples");
  }
  return name;
}

void emit_relproj(Builder& b, const PeriodicComplex& P, const RunOptions& opt) {
  const RelProjFlag r = relproj_to_flag(P, opt.resolution_bound);
  b.object("input", P);
  b.object("deltaP", r.deltaP);
  b.object("Q", r.Q);
  b.object("Qprime", r.Qprime);
  b.map("f", r.f);
  b.map("f_inverse", r.f_inverse);
  b.map("h", r.h);
  b.map("s", r.s);
  b.map("e", r.e);
  b.map("m", r.m);
  b.claim("square_zero", claim_all({on("square_zero", "Q"), on("square_zero", "Qprime")}));
  b.claim("f_invertible", claim_all({equal(expr({term(1, {"f", "f_inverse"})}), expr({term(1, {"1:Q"})})),
                                     equal(expr({term(1, {"f_inverse", "f"})}), expr({term(1, {"1:Qprime"})}))}));
  b.claim("conjugation", equal(expr({term(1, {"f_inverse", "d:Q", "f"})}), expr({term(1, {"d:Qprime"})})),
          "f^-1 e_Q f = e_Q'");
  b.claim("f_chain_map", chain("Qprime", "Q", "f"));
  b.claim("strictly_lower", {{"kind", "strictly_lower"}, {"object", "Qprime"}, {"blocks", r.block}});
  b.claim("homotopy_identity",
          equal(expr({term(1, {"m", "d:input", "e"})}), expr({term(1, {"d:deltaP", "h"}), term(-1, {"h", "d:deltaP"})})),
          "m e_P e = e_dP h - h e_dP");
  b.requires_pass = {"square_zero", "f_invertible", "conjugation", "strictly_lower"};
  b.results["epsilon_Qprime"] = r.Qprime.d.words();
  b.results["epsilon_Q"] = r.Q.d.words();
  b.results["f"] = r.f.words();
  b.results["f_inverse"] = r.f_inverse.words();
  b.results["Qprime_summands"] = projmodule_json(*P.A, r.Qprime.module);
  b.results["blocks"] = r.block;
  b.justification = "Q' admits a projective flag and is conjugate to Q by f";
}

void emit_flag(Builder& b, const RepComplex& M, const RunOptions& opt) {
  const FlagWitness w = flag_resolution(M, opt.resolution_bound);
  b.dmodule("input", M);
  b.object("flag", w.flag);
  b.repmaps("augmentation", {w.augmentation});
  b.claim("square_zero", on("square_zero", "flag"));
  b.claim("strictly_lower", {{"kind", "strictly_lower"}, {"object", "flag"}, {"blocks", w.block}});
  b.claim("quasi_iso", {{"kind", "quasi_iso"}, {"dmodule", "input"}, {"object", "flag"}, {"map", "augmentation"}});
  b.requires_pass = {"square_zero", "strictly_lower", "quasi_iso"};
  json pieces = json::array();
  for (const auto& p : w.pieces) pieces.push_back(projmodule_json(*M.A, p));
  b.results["length"] = w.length;
  b.results["pieces"] = pieces;
  b.results["blocks"] = w.block;
  b.justification = "flag resolution quasi-isomorphic to the input";
}

// ---- commands

void cmd_algebra_info(Builder& b, const Job& job, const RunOptions&) {
  const PathAlgebra& A = *job.A;
  const Quiver& Q = A.quiver();
  json paths = json::array(), cartan = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i) paths.push_back(A.word_string(i));
  for (int v = 0; v < Q.vertex_count(); ++v) {
    json row = json::array();
    for (int w = 0; w < Q.vertex_count(); ++w) row.push_back(A.hom_basis(w, v).size());
    cartan.push_back(row);
  }
  b.results["dim"] = A.dim();
  b.results["hereditary"] = A.is_hereditary();
  b.results["length_bound"] = A.length_bound();
  b.results["paths"] = paths;
  b.results["cartan"] = cartan;
  b.info("finite_dimensional", "PASS", "every path of length " + std::to_string(A.length_bound() + 1) + " vanishes");
  b.justification = "path basis enumerated";
}

void cmd_resolve(Builder& b, const Job& job, const RunOptions& opt) {
  const Representation M = job.args.contains("simple") ? Representation::simple(job.A, vertex_arg(job, "simple"))
                                                       : module_arg(job, "module");
  const Resolution r = proj_resolution(M, opt.resolution_bound);
  b.module("module", M);
  b.object("resolution", from_resolution(job.A, r));
  b.repmaps("augmentation", {r.augmentation});
  b.claim("square_zero", on("square_zero", "resolution"));
  b.claim("minimal", on("minimal", "resolution"));
  b.claim("resolution", {{"kind", "resolution"}, {"object", "resolution"}, {"module", "module"}, {"map", "augmentation"}});
  b.requires_pass = {"square_zero", "resolution"};
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back(projmodule_json(*job.A, t));
  b.results["terms"] = terms;
  b.results["length"] = r.terms.empty() ? 0 : r.terms.size() - 1;
  b.results["sequence"] = sequence(b.store.objects.at("resolution"));
  b.justification = "minimal projective resolution";
}

void cmd_ext(Builder& b, const Job& job, const RunOptions& opt) {
  const Representation S = module_arg(job, "source"), T = module_arg(job, "target");
  const int l = arg_int(job, "degree");
  const ExtBasis e = ext_basis(S, T, l, opt.resolution_bound);
  b.object("source_resolution", e.source);
  b.object("target_resolution", e.target);
  b.object("shifted_target", shift(e.target, l));
  std::vector<json> classes;
  for (std::size_t k = 0; k < e.basis.size(); ++k) {
    const std::string n = "class_" + std::to_string(k);
    b.map(n, e.basis[k].map);
    classes.push_back(chain("source_resolution", "shifted_target", n));
  }
  b.claim("classes_are_chain_maps", claim_all(classes));
  b.claim("dimension", {{"kind", "hom_dim"},
                        {"source", "source_resolution"},
                        {"target", "target_resolution"},
                        {"shift", l},
                        {"value", e.basis.size()}});
  b.requires_pass = {"classes_are_chain_maps", "dimension"};
  b.results["degree"] = l;
  b.results["dim"] = e.basis.size();
  b.justification = "Ext as homotopy classes of maps between minimal resolutions";
}

void cmd_compress(Builder& b, const Job& job, const RunOptions&) {
  const Graded& X = object_arg(job, "object");
  if (X.period != 0) throw Error(ErrorCode::Semantic, "compress: the object must be bounded (period 0)");
  const int n = arg_int(job, "n", 1);
  const PeriodicComplex C = compress(X, n);
  b.object("input", X);
  b.object("compressed", C);
  b.claim("square_zero", on("square_zero", "compressed"));
  b.claim("compression", {{"kind", "is_compression"}, {"bounded", "input"}, {"periodic", "compressed"}, {"n", n}});
  b.requires_pass = {"square_zero", "compression"};
  b.results["n"] = n;
  b.results["sequence"] = sequence(C);
  b.justification = "summands regrouped by degree mod n, same differential";
}

void cmd_homology(Builder& b, const Job& job, const RunOptions&) {
  json table, c;
  if (wants_dmodule(job)) {
    const RepComplex& M = named(job, job.dmodules, "dmodule", "differential module");
    b.dmodule("input", M);
    table = homology_table(M);
    c = {{"kind", "homology"}, {"dmodule", "input"}, {"table", table}};
  } else {
    const Graded& X = object_arg(job, "object");
    b.object("input", X);
    table = homology_table(X);
    c = {{"kind", "homology"}, {"object", "input"}, {"table", table}};
  }
  b.claim("homology", c);
  b.requires_pass = {"homology"};
  bool acyclic = true;
  for (const auto& row : table)
    for (auto d : row.at("dims").get<std::vector<std::size_t>>()) acyclic = acyclic && d == 0;
  b.results["homology"] = table;
  b.results["acyclic"] = acyclic;
  b.justification = "dimension vectors of the homology at each position";
}

void cmd_cone(Builder& b, const Job& job, const RunOptions&) {
  const Graded &X = object_arg(job, "source"), &Y = object_arg(job, "target");
  const ProjMap& f = map_arg(job, "map");
  b.object("source", X);
  b.object("target", Y);
  b.map("map", f);
  b.claim("chain_map", chain("source", "target", "map"));
  b.object("cone", cone(X, Y, f));
  b.claim("square_zero", on("square_zero", "cone"));
  b.requires_pass = {"chain_map", "square_zero"};
  b.results["sequence"] = sequence(b.store.objects.at("cone"));
  b.justification = "cone with differential [[-d_X, 0], [f, d_Y]]";
}

void cmd_minimize(Builder& b, const Job& job, const RunOptions&) {
  const Graded& X = object_arg(job, "object");
  const Minimization m = X.period == 0 ? minimize_bounded(X) : minimize(X);
  b.object("input", X);
  emit_minimization(b, "input", m, "");
  b.requires_pass = {"min_square_zero", "min_minimal", "equivalence_maps", "retraction", "homotopy"};
  b.results["steps"] = m.steps;
  b.results["size"] = {{"input", X.size()}, {"minimal", m.min.size()}};
  b.results["sequence"] = sequence(m.min);
  b.justification = "Gaussian elimination of unit entries with a homotopy equivalence";
}

void cmd_iso(Builder& b, const Job& job, const RunOptions& opt) {
  const Graded &X = object_arg(job, "left"), &Y = object_arg(job, "right");
  const std::string amb = arg_string(job, "ambient").value_or("homotopy");
  if (amb != "homotopy" && amb != "strict") throw Error(ErrorCode::Semantic, "ambient must be 'homotopy' or 'strict'");
  const Ambient a = amb == "strict" ? Ambient::Strict : Ambient::Homotopy;
  const IsoK r = a == Ambient::Strict ? iso_cn(X, Y, opt.caps, a) : iso_k(X, Y, opt.caps);
  b.object("left", X);
  b.object("right", Y);
  const std::string decide = emit_iso(b, "", r, "left", "right", a);
  b.verdict = to_string(r.search.verdict);
  if (r.search.verdict != Verdict::Unknown) b.requires_pass = {decide};
  b.results["ambient"] = amb;
  b.results["search"] = search_json(r.search);
  b.justification = a == Ambient::Strict ? "strict isomorphism search" : "strict search between minimal models";
}

void cmd_indec(Builder& b, const Job& job, const RunOptions& opt) {
  const Graded& X = object_arg(job, "object");
  const IndecResult r = indecomposable(X, opt.caps);
  b.object("input", X);
  b.verdict = to_string(r.verdict);
  const json dim = {{"kind", "end_dim"}, {"object", "input"}, {"value", r.end_dim}};
  switch (r.verdict) {
    case IndecVerdict::Indecomposable:
      b.claim("local_end", r.end_dim == 1 ? dim : claim_all({dim, on("local_end", "input")}), r.method);
      b.requires_pass = {"local_end"};
      break;
    case IndecVerdict::Decomposable:
      b.map("idempotent", *r.idempotent);
      b.claim("idempotent", {{"kind", "nontrivial_idempotent"}, {"object", "input"}, {"map", "idempotent"}}, r.method);
      b.requires_pass = {"idempotent"};
      break;
    case IndecVerdict::Zero:
      b.claim("zero", dim, "End vanishes");
      b.requires_pass = {"zero"};
      break;
    case IndecVerdict::Unknown:
      b.info("local_end", "UNKNOWN", r.method);
      break;
  }
  b.results["end_dim"] = r.end_dim;
  b.results["method"] = r.method;
  b.justification = "endomorphism algebra in the homotopy category";
}

void cmd_flag(Builder& b, const Job& job, const RunOptions& opt) {
  if (wants_dmodule(job)) return emit_flag(b, named(job, job.dmodules, "dmodule", "differential module"), opt);
  const Graded& P = object_arg(job, "object");
  if (P.period != 1) throw Error(ErrorCode::Semantic, "flag: the object must be a differential module (period 1)");
  emit_relproj(b, P, opt);
}

void cmd_relproj_flag(Builder& b, const Job& job, const RunOptions& opt) {
  const Graded& P = object_arg(job, "object");
  if (P.period != 1) throw Error(ErrorCode::Semantic, "relproj-flag: the object must have period 1");
  emit_relproj(b, P, opt);
}

void cmd_orbit_hom(Builder& b, const Job& job, const RunOptions&) {
  const Graded &X = object_arg(job, "left"), &Y = object_arg(job, "right");
  const int n = arg_int(job, "n", 1);
  const OrbitHom o = orbit_hom_check(X, Y, n);
  b.object("left", X);
  b.object("right", Y);
  b.claim("orbit_hom", {{"kind", "orbit_hom"}, {"left", "left"}, {"right", "right"}, {"n", n}, {"lhs", o.lhs}, {"rhs", o.rhs}},
          "sum over shifts kn of dim Hom(X, Sigma^kn Y) against dim Hom of the compressions");
  b.requires_pass = {"orbit_hom"};
  b.verdict = o.equal ? "EQUAL" : "NOT_EQUAL";
  json terms = json::array();
  for (const auto& [i, d] : o.terms) terms.push_back({{"shift", i}, {"dim", d}});
  b.results["lhs"] = o.lhs;
  b.results["rhs"] = o.rhs;
  b.results["terms"] = terms;
  b.results["window"] = {o.window.first, o.window.second};
  b.justification = o.equal ? "Hom dimensions agree" : "Hom dimensions differ: the implementation is at fault";
}

void cmd_cycle_complex(Builder& b, const Job& job, const RunOptions&) {
  const PeriodicComplex X = cycle_complex(job.A, cycle_arg(job));
  b.object("complex", X);
  b.claim("square_zero", on("square_zero", "complex"));
  b.claim("minimal", on("minimal", "complex"));
  b.claim("degrees_occupied", on("degrees_occupied", "complex"));
  b.requires_pass = {"square_zero", "minimal"};
  b.results["period"] = X.period;
  b.results["sequence"] = sequence(X);
  b.justification = "maximal nonzero compositions inserted along the cycle";
}

void cmd_splice(Builder& b, const Job& job, const RunOptions& opt) {
  const int first = vertex_arg(job, "first");
  std::vector<ExtStep> steps;
  if (job.args.contains("chain")) {
    for (const auto& st : job.args["chain"]) {
      ExtStep s;
      const auto v = job.A->quiver().find_vertex(st.at("target").get<std::string>());
      if (!v) throw Error(ErrorCode::Semantic, "splice: unknown vertex " + st.at("target").dump());
      s.target = *v;
      s.degree = st.at("degree").get<int>();
      if (st.contains("coeff"))
        for (const auto& c : st["coeff"]) s.coeff.push_back(scalar_from_json(job.A->field(), c));
      steps.push_back(s);
    }
  }
  const Splice sp = splice_ext(job.A, first, steps, opt.resolution_bound);
  b.object("raw", sp.raw);
  b.object("complex", sp.complex);
  for (std::size_t k = 0; k < sp.classes.size(); ++k) {
    const std::string p = "class_" + std::to_string(k);
    b.object(p + "_source", sp.classes[k].source);
    b.object(p + "_target", sp.classes[k].shifted_target());
    b.map(p, sp.classes[k].map);
  }
  b.claim("square_zero", claim_all({on("square_zero", "raw"), on("square_zero", "complex")}));
  b.claim("minimal", on("minimal", "complex"));
  std::vector<json> cls;
  for (std::size_t k = 0; k < sp.classes.size(); ++k) {
    const std::string p = "class_" + std::to_string(k);
    cls.push_back(chain(p + "_source", p + "_target", p));
  }
  if (!cls.empty()) b.claim("classes_are_chain_maps", claim_all(cls));
  b.claim("end_dim", {{"kind", "end_dim"}, {"object", "complex"}, {"value", sp.end_dim}});
  b.requires_pass = {"square_zero", "minimal"};
  b.results["end_dim"] = sp.end_dim;
  b.results["sequence"] = sequence(sp.complex);
  b.justification = "iterated cones of resolutions along the chosen Ext classes, then minimized";
}

void cmd_nongradable(Builder& b, const Job& job, const RunOptions& opt) {
  const PeriodicComplex Y = job.args.contains("cycle") ? cycle_complex(job.A, cycle_arg(job)) : object_arg(job, "object");
  const int n = arg_int(job, "n", 1);
  const NongradResult r = nongradability_certificate(Y, n, opt.caps);
  b.object("pattern", r.pattern);
  b.object("wrapped", r.wrapped);
  b.claim("wrap", {{"kind", "is_wrap"}, {"pattern", "pattern"}, {"wrapped", "wrapped"}, {"n", n}});
  std::vector<std::string> req = {"wrap"};
  for (const Check& c : r.certificate.checks) {
    json cl;
    if (c.name == "d_squared_zero") cl = claim_all({on("square_zero", "pattern"), on("square_zero", "wrapped")});
    if (c.name == "minimal") cl = on("minimal", "pattern");
    if (c.name == "genuinely_periodic") cl = claim_all({on("degrees_occupied", "pattern"), on("no_gradable_shape", "pattern")});
    if (c.name == "indecomposable_wrap" && c.status != CheckStatus::Unknown) {
      const json dim = {{"kind", "end_dim"}, {"object", "wrapped"}, {"value", r.indec.end_dim}};
      cl = r.indec.end_dim == 1 ? dim : claim_all({dim, on("local_end", "wrapped")});
    }
    if (cl.is_null()) {
      b.info(c.name, to_string(c.status), c.witness);
    } else {
      b.claim(c.name, cl, c.witness);
    }
    req.push_back(c.name);
  }
  b.claim("end_dim_pattern", {{"kind", "end_dim"}, {"object", "pattern"}, {"value", r.end_dim_pattern}});
  b.verdict = r.certificate.verdict;
  b.justification = r.certificate.justification;
  if (r.certificate.verdict == "NON_GRADABLE_OBJECT_EXISTS") b.requires_pass = req;
  if (r.shape) {
    b.object("shape", *r.shape);
    b.claim("gradable_shape", {{"kind", "is_compression"}, {"bounded", "shape"}, {"periodic", "pattern"}, {"n", Y.period}});
    if (r.certificate.verdict == "GRADABLE") b.requires_pass = {"gradable_shape"};
  }
  b.results["n"] = n;
  b.results["end_dim_pattern"] = r.end_dim_pattern;
  b.results["end_dim_wrap"] = r.indec.end_dim;
  b.results["indecomposable_wrap"] = to_string(r.indec.verdict);
  b.results["indec_method"] = r.indec.method;
  b.results["sequence"] = sequence(r.pattern);
  b.results["unchecked_step"] =
      "that an object meeting these checks lies outside the image of compression is the mathematical argument, "
      "not a machine-checked step";
}

std::string naturality_string(Verdict v) {
  return v == Verdict::Yes ? "SOLVABLE" : v == Verdict::No ? "UNSOLVABLE" : "UNKNOWN";
}

void cmd_sigma_square(Builder& b, const Job& job, const RunOptions& opt) {
  const Graded &Q1 = object_arg(job, "q1"), &Q2 = object_arg(job, "q2");
  const ProjMap& f = map_arg(job, "map");
  const Naturality nat = naturality_square(Q1, Q2, f, opt.caps);
  const SigmaCones sc = sigma_cone_compare(Q1, Q2, f, opt.caps);
  b.object("Q1", Q1);
  b.object("Q2", Q2);
  b.object("sigma_Q1", shift(Q1));
  b.object("sigma_Q2", shift(Q2));
  b.map("f", f);
  b.claim("f_chain_map", chain("Q1", "Q2", "f"));
  if (nat.verdict == Verdict::Yes) {
    b.map("u", *nat.u);
    b.map("v", *nat.v);
    b.map("s", *nat.s);
    b.claim("naturality",
            claim_all({chain("Q1", "sigma_Q1", "u"), chain("Q2", "sigma_Q2", "v"), {{"kind", "invertible"}, {"map", "u"}},
                       {{"kind", "invertible"}, {"map", "v"}},
                       {{"kind", "homotopy"},
                        {"source", "Q1"},
                        {"target", "sigma_Q2"},
                        {"lhs", expr({term(1, {"v", "f"}), term(-1, {"f", "u"})})},
                        {"s", "s"}}}),
            "invertible u, v with v f - (Sigma f) u null-homotopic");
  } else if (nat.verdict == Verdict::No) {
    b.claim("naturality", {{"kind", "naturality_unsolvable"}, {"q1", "Q1"}, {"q2", "Q2"}, {"map", "f"}},
            "all " + std::to_string(nat.search.enumerated) + " solutions over F" + std::to_string(nat.search.field_size) +
                " have a singular top (solution space " + std::to_string(nat.solution_dim) + ", top rank " +
                std::to_string(nat.search.top_rank) + ")");
  } else {
    b.info("naturality", "UNKNOWN", "search caps reached");
  }
  b.object("cone_f", sc.cone_f);
  b.object("cone_sigma_f", sc.cone_sigma_f);
  b.claim("cones_square_zero", claim_all({on("square_zero", "cone_f"), on("square_zero", "cone_sigma_f")}));
  const std::string strict = emit_iso(b, "strict_", sc.strict, "cone_f", "cone_sigma_f", Ambient::Strict);
  const std::string homotopy = emit_iso(b, "homotopy_", sc.homotopy, "cone_f", "cone_sigma_f", Ambient::Homotopy);

  b.verdict = naturality_string(nat.verdict);
  if (nat.verdict != Verdict::Unknown) b.requires_pass = {"f_chain_map", "naturality"};
  b.results["naturality"] = naturality_string(nat.verdict);
  b.results["cone_comparison"] = to_string(sc.strict.search.verdict);
  b.results["cone_comparison_homotopy"] = to_string(sc.homotopy.search.verdict);
  b.results["degenerate"] = nat.degenerate || sc.degenerate;
  b.results["labels"] = (nat.degenerate || sc.degenerate) ? json::array({"DEGENERATE_CHARACTERISTIC_2"}) : json::array();
  b.results["naturality_search"] = {{"solution_dim", nat.solution_dim},   {"top_rank", nat.search.top_rank},
                                    {"field_size", nat.search.field_size}, {"searched", nat.search.searched},
                                    {"enumerated", nat.search.enumerated}, {"exhaustive", nat.search.exhaustive}};
  b.results["cone_search"] = search_json(sc.strict.search);
  b.results["cone_search_homotopy"] = search_json(sc.homotopy.search);
  b.results["deciding_checks"] = {{"cone_comparison", strict}, {"cone_comparison_homotopy", homotopy}};
  b.justification = nat.degenerate ? "characteristic 2: Sigma acts trivially on maps, so the square closes"
                                   : "naturality square for Sigma against the identity, and the cones of f and Sigma f";
}

void cmd_stalk_check(Builder& b, const Job& job, const RunOptions& opt) {
  const RepComplex& M = named(job, job.dmodules, "dmodule", "differential module");
  const StalkCheck sc = hereditary_stalk_check(M, opt.caps, opt.resolution_bound);
  b.dmodule("input", M);
  b.object("flag_m", sc.flag_m.flag);
  b.object("flag_h", sc.flag_h.flag);
  b.repmaps("augmentation", {sc.flag_m.augmentation});
  b.claim("flag_quasi_iso", {{"kind", "quasi_iso"}, {"dmodule", "input"}, {"object", "flag_m"}, {"map", "augmentation"}});
  b.claim("same_homology", {{"kind", "homology"}, {"object", "flag_h"}, {"table", homology_table(M)}});
  const std::string decide = emit_iso(b, "", sc.iso, "flag_m", "flag_h", Ambient::Homotopy);
  b.verdict = sc.holds ? "HOLDS" : sc.iso.search.verdict == Verdict::No ? "FAILS" : "UNKNOWN";
  if (b.verdict == "HOLDS") b.requires_pass = {"flag_quasi_iso", "same_homology", decide};
  b.results["search"] = search_json(sc.iso.search);
  b.justification = "(M, e) against (H(M), 0) through the minimal models of their flag resolutions";
}

using Command = std::function<void(Builder&, const Job&, const RunOptions&)>;

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"algebra-info", cmd_algebra_info}, {"resolve", cmd_resolve},
      {"ext", cmd_ext},                   {"compress", cmd_compress},
      {"homology", cmd_homology},         {"cone", cmd_cone},
      {"minimize", cmd_minimize},         {"iso", cmd_iso},
      {"indec", cmd_indec},               {"flag", cmd_flag},
      {"relproj-flag", cmd_relproj_flag}, {"orbit-hom", cmd_orbit_hom},
      {"cycle-complex", cmd_cycle_complex}, {"splice", cmd_splice},
      {"nongradable", cmd_nongradable},   {"sigma-square", cmd_sigma_square},
      {"stalk-check", cmd_stalk_check},
  };
  return table;
}

json error_report(const std::string& command, const std::string& code, const std::string& message) {
  return {{"command", command}, {"verdict", "ERROR"}, {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "algebra-info", "resolve", "ext",           "compress", "homology",    "cone",
      "minimize",     "iso",     "indec",         "flag",     "relproj-flag", "orbit-hom",
      "cycle-complex", "splice", "nongradable",   "sigma-square", "stalk-check", "verify"};
  return names;
}

json run_command(const std::string& command, const Job& job, const RunOptions& options) {
  const auto it = commands().find(command);
  if (it == commands().end()) return error_report(command, to_string(ErrorCode::Semantic), "unknown command");
  // [args.<command>] overrides the shared [args] for that command.
  Job local = job;
  if (job.args.contains(command) && job.args[command].is_object())
    for (const auto& [k, v] : job.args[command].items()) local.args[k] = v;
  try {
    Builder b(command, local, options);
    it->second(b, local, options);
    return b.finish();
  } catch (const Error& e) {
    json r = error_report(command, to_string(e.code()), e.what());
    r["params"] = Builder::params(job, options);
    return r;
  } catch (const json::exception& e) {
    json r = error_report(command, to_string(ErrorCode::Semantic), std::string("bad argument: ") + e.what());
    r["params"] = Builder::params(job, options);
    return r;
  }
}

json verify_certificate(const json& cert) {
  json out = json::object();
  out["command"] = "verify";
  out["certified_command"] = cert.value("command", "");
  json checks = json::array();
  bool ok = true;
  std::string reason;
  try {
    if (cert.value("verdict", "") == "ERROR") throw Error(ErrorCode::Semantic, "error reports carry no certificate");
    const json& params = cert.at("params");
    Store s;
    s.A = algebra_from_json(params.at("algebra"), parse_field(params.at("field").get<std::string>()));
    s.caps.seed = params.at("seed").get<std::uint64_t>();
    s.caps.enumerate = params.at("caps").at("enumerate").get<std::uint64_t>();
    s.caps.random = params.at("caps").at("random").get<std::uint64_t>();
    const json& w = cert.at("witnesses");
    for (const auto& [n, j] : w.at("objects").items()) s.objects.emplace(n, graded_from_json(s.A, j));
    for (const auto& [n, j] : w.at("maps").items()) s.maps.emplace(n, projmap_from_json(s.A, j));
    for (const auto& [n, j] : w.at("modules").items()) s.modules.emplace(n, rep_from_json(s.A, j));
    for (const auto& [n, j] : w.at("dmodules").items()) s.dmodules.emplace(n, rep_complex_from_json(s.A, j));
    for (const auto& [n, j] : w.at("module_maps").items()) {
      std::vector<RepMap> list;
      for (const auto& m : j) {
        RepMap f;
        const json &shape = m.at("shape"), &comp = m.at("comp");
        if (shape.size() != comp.size()) throw Error(ErrorCode::Parse, "certificate: module map shape");
        for (std::size_t v = 0; v < comp.size(); ++v)
          f.comp.push_back(matrix_from_json(s.A->field(), comp[v], shape[v].at(0).get<std::size_t>(),
                                            shape[v].at(1).get<std::size_t>()));
        list.push_back(f);
      }
      s.repmaps.emplace(n, list);
    }
    std::map<std::string, std::string> status;
    for (const auto& c : cert.at("checks")) {
      const std::string name = c.at("name").get<std::string>(), st = c.at("status").get<std::string>();
      status[name] = st;
      json r = {{"name", name}, {"recorded", st}};
      if (c.at("claim").is_null()) {
        r["replayed"] = nullptr;
        r["agrees"] = true;
      } else {
        std::string why;
        const bool h = holds_noexcept(c.at("claim"), s, &why);
        const bool agrees = (st == "PASS" && h) || (st == "FAIL" && !h);
        r["replayed"] = status_string(h);
        r["agrees"] = agrees;
        if (!why.empty()) r["detail"] = why;
        ok = ok && agrees;
      }
      checks.push_back(r);
    }
    for (const auto& n : cert.at("verdict_requires")) {
      const auto it = status.find(n.get<std::string>());
      if (it == status.end() || it->second != "PASS") {
        ok = false;
        reason = "verdict requires check '" + n.get<std::string>() + "' to pass";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    reason = e.what();
  }
  out["verdict"] = ok ? "ACCEPTED" : "REJECTED";
  out["justification"] = ok ? "every claim replays to its recorded status" : reason.empty() ? "a claim disagrees" : reason;
  out["checks"] = checks;
  return out;
}

int exit_code(const json& report, bool strict) {
  const std::string v = report.value("verdict", "");
  if (v == "ERROR") return report.at("error").value("code", "") == to_string(ErrorCode::Parse) ? 2 : 3;
  if (v == "REJECTED") return 3;
  if (strict) {
    if (v.find("UNKNOWN") != std::string::npos) return 4;
    if (report.contains("checks"))
      for (const auto& c : report["checks"])
        if (c.value("status", "") == "UNKNOWN") return 4;
  }
  return 0;
}

}  // namespace pcx
