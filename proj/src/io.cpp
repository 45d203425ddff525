#include "pcx/io.hpp"

#include "pcx/error.hpp"

#include <toml.hpp>

#include <fstream>
#include <sstream>

namespace pcx {

namespace {

std::string where(const std::string& origin, const toml::node& n) {
  const auto& b = n.source().begin;
  return origin + ":" + std::to_string(b.line) + ":" + std::to_string(b.column);
}

[[noreturn]] void fail(ErrorCode code, const std::string& origin, const toml::node& n, const std::string& msg) {
  throw Error(code, where(origin, n) + ": " + msg);
}

json to_json(const toml::node& n) {
  if (auto t = n.as_table()) {
    json j = json::object();
    for (const auto& [k, v] : *t) j[std::string(k.str())] = to_json(v);
    return j;
  }
  if (auto a = n.as_array()) {
    json j = json::array();
    for (const auto& v : *a) j.push_back(to_json(v));
    return j;
  }
  if (auto s = n.as_string()) return s->get();
  if (auto i = n.as_integer()) return i->get();
  if (auto f = n.as_floating_point()) return f->get();
  if (auto b = n.as_boolean()) return b->get();
  return nullptr;
}

struct Ctx {
  std::string origin;
  AlgebraPtr A;
};

int vertex_of(const Ctx& c, const toml::node& n) {
  const auto s = n.value<std::string>();
  if (!s) fail(ErrorCode::Parse, c.origin, n, "expected a vertex name");
  const auto v = c.A->quiver().find_vertex(*s);
  if (!v) fail(ErrorCode::Parse, c.origin, n, "unknown vertex '" + *s + "'");
  return *v;
}

const toml::array& array_of(const Ctx& c, const toml::node& n, const std::string& what) {
  const auto* a = n.as_array();
  if (!a) fail(ErrorCode::Parse, c.origin, n, what + " must be an array");
  return *a;
}

std::string entry_text(const Ctx& c, const toml::node& n) {
  if (auto s = n.value<std::string>()) return *s;
  if (auto i = n.value<std::int64_t>()) return std::to_string(*i);
  fail(ErrorCode::Parse, c.origin, n, "matrix entries must be strings or integers");
}

Scalar scalar_of(const Ctx& c, const toml::node& n) {
  const std::string t = entry_text(c, n);
  try {
    return c.A->field().from_rational(Rational(t));
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, c.origin, n, "not a scalar: '" + t + "'");
  }
}

ProjMap projmap_of(const Ctx& c, const toml::node& n, const ProjModule& src, const ProjModule& tgt) {
  const auto& rows = array_of(c, n, "matrix");
  if (rows.size() != tgt.size())
    fail(ErrorCode::Semantic, c.origin, n, "expected " + std::to_string(tgt.size()) + " rows, got " + std::to_string(rows.size()));
  ProjMap f(c.A, src, tgt);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& row = array_of(c, rows[j], "matrix row");
    if (row.size() != src.size())
      fail(ErrorCode::Semantic, c.origin, rows[j], "expected " + std::to_string(src.size()) + " columns");
    for (std::size_t i = 0; i < row.size(); ++i) {
      try {
        f.set(j, i, parse_element(*c.A, entry_text(c, row[i]), src[i], tgt[j]));
      } catch (const Error& e) {
        fail(e.code(), c.origin, row[i], e.what());
      }
    }
  }
  return f;
}

Matrix scalar_matrix_of(const Ctx& c, const toml::node& n, std::size_t r, std::size_t k) {
  Matrix m(c.A->field(), r, k);
  const auto& rows = array_of(c, n, "matrix");
  if (r == 0 || k == 0) return m;
  if (rows.size() != r) fail(ErrorCode::Semantic, c.origin, n, "expected " + std::to_string(r) + " rows");
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = array_of(c, rows[i], "matrix row");
    if (row.size() != k) fail(ErrorCode::Semantic, c.origin, rows[i], "expected " + std::to_string(k) + " columns");
    for (std::size_t j = 0; j < k; ++j) m(i, j) = scalar_of(c, row[j]);
  }
  return m;
}

ProjModule summands_of(const Ctx& c, const toml::node& n) {
  ProjModule P;
  for (const auto& v : array_of(c, n, "summands")) P.summands.push_back(vertex_of(c, v));
  return P;
}

Graded object_of(const Ctx& c, const toml::table& t) {
  const toml::node* s = t.get("summands");
  if (!s) fail(ErrorCode::Parse, c.origin, t, "object needs summands");
  const ProjModule P = summands_of(c, *s);
  const int period = static_cast<int>(t["period"].value_or<std::int64_t>(1));
  std::vector<int> degree(P.size(), 0);
  if (const toml::node* d = t.get("degrees")) {
    const auto& a = array_of(c, *d, "degrees");
    if (a.size() != P.size()) fail(ErrorCode::Semantic, c.origin, *d, "one degree per summand");
    for (std::size_t i = 0; i < a.size(); ++i) degree[i] = static_cast<int>(a[i].value_or<std::int64_t>(0));
  }
  ProjMap d(c.A, P, P);
  if (const toml::node* m = t.get("d")) d = projmap_of(c, *m, P, P);
  try {
    return make_graded(c.A, period, P, degree, d);
  } catch (const Error& e) {
    fail(e.code(), c.origin, t, e.what());
  }
}

std::vector<std::size_t> dims_of(const Ctx& c, const toml::node& n) {
  const int nv = c.A->vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  if (const auto* a = n.as_array()) {
    if (static_cast<int>(a->size()) != nv) fail(ErrorCode::Semantic, c.origin, n, "one dimension per vertex");
    for (int v = 0; v < nv; ++v) dims[v] = static_cast<std::size_t>((*a)[v].value_or<std::int64_t>(0));
  } else if (const auto* t = n.as_table()) {
    for (const auto& [k, v] : *t) {
      const auto idx = c.A->quiver().find_vertex(k.str());
      if (!idx) fail(ErrorCode::Parse, c.origin, v, "unknown vertex '" + std::string(k.str()) + "'");
      dims[*idx] = static_cast<std::size_t>(v.value_or<std::int64_t>(0));
    }
  } else {
    fail(ErrorCode::Parse, c.origin, n, "dims must be an array or a table");
  }
  return dims;
}

Representation module_of(const Ctx& c, const toml::table& t) {
  const toml::node* d = t.get("dims");
  if (!d) fail(ErrorCode::Parse, c.origin, t, "module needs dims");
  Representation M = Representation::zero(c.A);
  M.dims = dims_of(c, *d);
  const Quiver& Q = c.A->quiver();
  for (int a = 0; a < Q.arrow_count(); ++a) M.act[a] = Matrix(c.A->field(), M.dims[Q.arrow(a).source], M.dims[Q.arrow(a).target]);
  if (const auto* arrows = t["arrows"].as_table()) {
    for (const auto& [k, v] : *arrows) {
      const auto a = Q.find_arrow(k.str());
      if (!a) fail(ErrorCode::Parse, c.origin, v, "unknown arrow '" + std::string(k.str()) + "'");
      M.act[*a] = scalar_matrix_of(c, v, M.dims[Q.arrow(*a).source], M.dims[Q.arrow(*a).target]);
    }
  }
  try {
    M.validate();
  } catch (const Error& e) {
    fail(e.code(), c.origin, t, e.what());
  }
  return M;
}

}  // namespace

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "q" || s == "0" || s == "rational") return Field::rationals();
  const std::string digits = (!s.empty() && (s[0] == 'F' || s[0] == 'f')) ? s.substr(1) : s;
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(s);
    return Field::prime(static_cast<std::uint32_t>(p));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "field must be Q or a prime, got '" + s + "'");
  }
}

Job parse_job(const std::string& text, const std::string& origin, std::optional<Field> field_override,
              std::optional<std::size_t> length_bound) {
  toml::table root;
  try {
    root = toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    const auto& b = e.source().begin;
    throw Error(ErrorCode::Parse, origin + ":" + std::to_string(b.line) + ":" + std::to_string(b.column) + ": " +
                                      std::string(e.description()));
  }
  Job job;
  Ctx c{origin, nullptr};

  Field F = Field::rationals();
  if (const auto* f = root["field"].as_table()) {
    if (auto p = (*f)["p"].value<std::int64_t>()) {
      try {
        F = Field::prime(static_cast<std::uint32_t>(*p));
      } catch (const Error& e) {
        fail(ErrorCode::Parse, origin, *f, e.what());
      }
    } else if (!(*f)["rational"].value_or(false)) {
      fail(ErrorCode::Parse, origin, *f, "[field] needs p = <prime> or rational = true");
    }
  }
  if (field_override) F = *field_override;

  const auto* alg = root["algebra"].as_table();
  if (!alg) throw Error(ErrorCode::Parse, origin + ": missing [algebra]");
  Quiver Q;
  json echo = json::object();
  echo["vertices"] = json::array();
  echo["arrows"] = json::array();
  echo["relations"] = json::array();
  const toml::node* vs = alg->get("vertices");
  if (!vs) fail(ErrorCode::Parse, origin, *alg, "[algebra] needs vertices");
  for (const auto& v : array_of(c, *vs, "vertices")) {
    const auto name = v.value<std::string>();
    if (!name) fail(ErrorCode::Parse, origin, v, "vertex names must be strings");
    if (Q.find_vertex(*name)) fail(ErrorCode::Semantic, origin, v, "duplicate vertex '" + *name + "'");
    Q.add_vertex(*name);
    echo["vertices"].push_back(*name);
  }
  if (const toml::node* as = alg->get("arrows")) {
    for (const auto& a : array_of(c, *as, "arrows")) {
      const auto* t = a.as_table();
      if (!t) fail(ErrorCode::Parse, origin, a, "arrows are tables {name, from, to}");
      const auto name = (*t)["name"].value<std::string>();
      const auto from = (*t)["from"].value<std::string>();
      const auto to = (*t)["to"].value<std::string>();
      if (!name || !from || !to) fail(ErrorCode::Parse, origin, a, "arrow needs name, from and to");
      const auto s = Q.find_vertex(*from), e = Q.find_vertex(*to);
      if (!s) fail(ErrorCode::Parse, origin, a, "unknown vertex '" + *from + "' in arrow " + *name);
      if (!e) fail(ErrorCode::Parse, origin, a, "unknown vertex '" + *to + "' in arrow " + *name);
      if (Q.find_arrow(*name) || Q.find_vertex(*name)) fail(ErrorCode::Semantic, origin, a, "duplicate name '" + *name + "'");
      Q.add_arrow(*name, *s, *e);
      echo["arrows"].push_back({{"name", *name}, {"from", *from}, {"to", *to}});
    }
  }
  std::vector<Word> rels;
  if (const toml::node* rs = alg->get("relations")) {
    for (const auto& r : array_of(c, *rs, "relations")) {
      Word w;
      json jr = json::array();
      for (const auto& a : array_of(c, r, "relation")) {
        const auto name = a.value<std::string>();
        const auto idx = name ? Q.find_arrow(*name) : std::nullopt;
        if (!idx) fail(ErrorCode::Parse, origin, a, "unknown arrow '" + name.value_or("?") + "' in relation");
        w.push_back(*idx);
        jr.push_back(*name);
      }
      rels.push_back(w);
      echo["relations"].push_back(jr);
    }
  }
  std::optional<std::size_t> bound;
  if (auto b = (*alg)["length_bound"].value<std::int64_t>()) {
    bound = static_cast<std::size_t>(*b);
    echo["length_bound"] = *b;
  }
  if (length_bound) {
    bound = length_bound;
    echo["length_bound"] = *length_bound;
  }
  try {
    job.A = std::make_shared<const PathAlgebra>(PathAlgebra::build(std::move(Q), std::move(rels), F, bound));
  } catch (const Error& e) {
    fail(e.code(), origin, *alg, e.what());
  }
  job.algebra = echo;
  c.A = job.A;

  if (const auto* objs = root["objects"].as_table())
    for (const auto& [k, v] : *objs) {
      const auto* t = v.as_table();
      if (!t) fail(ErrorCode::Parse, origin, v, "object must be a table");
      job.objects.emplace(std::string(k.str()), object_of(c, *t));
    }
  if (const auto* mods = root["modules"].as_table())
    for (const auto& [k, v] : *mods) {
      const auto* t = v.as_table();
      if (!t) fail(ErrorCode::Parse, origin, v, "module must be a table");
      const Representation M = module_of(c, *t);
      job.modules.emplace(std::string(k.str()), M);
      if (const auto* dt = (*t)["differential"].as_table()) {
        RepMap e = RepMap::zero(M, M);
        for (const auto& [vk, vm] : *dt) {
          const auto idx = job.A->quiver().find_vertex(vk.str());
          if (!idx) fail(ErrorCode::Parse, origin, vm, "unknown vertex '" + std::string(vk.str()) + "'");
          e.comp[*idx] = scalar_matrix_of(c, vm, M.dims[*idx], M.dims[*idx]);
        }
        try {
          job.dmodules.emplace(std::string(k.str()), make_rep_complex(job.A, 1, {M}, {e}));
        } catch (const Error& err) {
          fail(err.code(), origin, *dt, err.what());
        }
      }
    }
  if (const auto* maps = root["maps"].as_table())
    for (const auto& [k, v] : *maps) {
      const auto* t = v.as_table();
      if (!t) fail(ErrorCode::Parse, origin, v, "map must be a table");
      auto lookup = [&](const char* key) -> const Graded& {
        const auto name = (*t)[key].value<std::string>();
        if (!name) fail(ErrorCode::Parse, origin, *t, std::string("map needs ") + key);
        const auto it = job.objects.find(*name);
        if (it == job.objects.end()) fail(ErrorCode::Parse, origin, *t, "unknown object '" + *name + "'");
        return it->second;
      };
      const Graded &X = lookup("source"), &Y = lookup("target");
      const toml::node* e = t->get("entries");
      if (!e) fail(ErrorCode::Parse, origin, *t, "map needs entries");
      job.maps.emplace(std::string(k.str()), projmap_of(c, *e, X.module, Y.module));
    }
  if (const auto* a = root["args"].as_table()) job.args = to_json(*a);
  if (const auto* j = root["job"].as_table()) job.command = (*j)["command"].value_or(std::string());
  return job;
}

Job load_job(const std::string& path, std::optional<Field> field_override, std::optional<std::size_t> length_bound) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str(), path, field_override, length_bound);
}

AlgebraPtr algebra_from_json(const json& j, Field F) {
  Quiver Q;
  for (const auto& v : j.at("vertices")) Q.add_vertex(v.get<std::string>());
  for (const auto& a : j.at("arrows")) {
    const auto s = Q.find_vertex(a.at("from").get<std::string>()), t = Q.find_vertex(a.at("to").get<std::string>());
    if (!s || !t) throw Error(ErrorCode::Parse, "certificate: arrow with unknown vertex");
    Q.add_arrow(a.at("name").get<std::string>(), *s, *t);
  }
  std::vector<Word> rels;
  for (const auto& r : j.at("relations")) {
    Word w;
    for (const auto& a : r) {
      const auto idx = Q.find_arrow(a.get<std::string>());
      if (!idx) throw Error(ErrorCode::Parse, "certificate: unknown arrow in relation");
      w.push_back(*idx);
    }
    rels.push_back(w);
  }
  std::optional<std::size_t> bound;
  if (j.contains("length_bound")) bound = j["length_bound"].get<std::size_t>();
  return std::make_shared<const PathAlgebra>(PathAlgebra::build(std::move(Q), std::move(rels), F, bound));
}

json algebra_json(const PathAlgebra& A) {
  const Quiver& Q = A.quiver();
  json j = {{"vertices", json::array()}, {"arrows", json::array()}, {"relations", json::array()}};
  for (int v = 0; v < Q.vertex_count(); ++v) j["vertices"].push_back(Q.vertex_name(v));
  for (int a = 0; a < Q.arrow_count(); ++a)
    j["arrows"].push_back({{"name", Q.arrow(a).name},
                           {"from", Q.vertex_name(Q.arrow(a).source)},
                           {"to", Q.vertex_name(Q.arrow(a).target)}});
  for (const Word& w : A.relations()) {
    json r = json::array();
    for (int a : w) r.push_back(Q.arrow(a).name);
    j["relations"].push_back(r);
  }
  return j;
}

json scalar_json(const Scalar& s) {
  if (s.field().is_rational() && boost::multiprecision::denominator(s.rational()) != 1) return s.to_string();
  const std::string t = s.to_string();
  try {
    return std::stoll(t);
  } catch (const std::exception&) {
    return t;
  }
}

Scalar scalar_from_json(const Field& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
  if (j.is_string()) return F.from_rational(Rational(j.get<std::string>()));
  throw Error(ErrorCode::Parse, "certificate: bad scalar " + j.dump());
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Field& F, const json& j, std::size_t rows, std::size_t cols) {
  Matrix m(F, rows, cols);
  if (rows == 0 || cols == 0) return m;
  if (j.size() != rows) throw Error(ErrorCode::Parse, "certificate: matrix row count");
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw Error(ErrorCode::Parse, "certificate: matrix column count");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(F, j[i][k]);
  }
  return m;
}

json projmodule_json(const PathAlgebra& A, const ProjModule& P) {
  json j = json::array();
  for (int v : P.summands) j.push_back(A.quiver().vertex_name(v));
  return j;
}

ProjModule projmodule_from_json(const PathAlgebra& A, const json& j) {
  ProjModule P;
  for (const auto& v : j) {
    const auto idx = A.quiver().find_vertex(v.get<std::string>());
    if (!idx) throw Error(ErrorCode::Parse, "certificate: unknown vertex " + v.dump());
    P.summands.push_back(*idx);
  }
  return P;
}

json projmap_json(const ProjMap& f) {
  const PathAlgebra& A = *f.algebra();
  json coeffs = json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    json row = json::array();
    for (std::size_t k = 0; k < f.cols(); ++k) {
      json entry = json::array();
      const auto& basis = A.hom_basis(f.source()[k], f.target()[r]);
      const auto& terms = f(r, k).terms();
      for (std::size_t b : basis) {
        Scalar c = A.field().zero();
        for (const auto& [i, s] : terms)
          if (i == b) c = s;
        entry.push_back(scalar_json(c));
      }
      row.push_back(entry);
    }
    coeffs.push_back(row);
  }
  return {{"source", projmodule_json(A, f.source())},
          {"target", projmodule_json(A, f.target())},
          {"words", f.words()},
          {"coefficients", coeffs}};
}

ProjMap projmap_from_json(const AlgebraPtr& A, const json& j) {
  const ProjModule P = projmodule_from_json(*A, j.at("source")), Q = projmodule_from_json(*A, j.at("target"));
  ProjMap f(A, P, Q);
  const json& c = j.at("coefficients");
  if (c.size() != Q.size()) throw Error(ErrorCode::Parse, "certificate: map row count");
  for (std::size_t r = 0; r < Q.size(); ++r) {
    if (c[r].size() != P.size()) throw Error(ErrorCode::Parse, "certificate: map column count");
    for (std::size_t k = 0; k < P.size(); ++k) {
      const auto& basis = A->hom_basis(P[k], Q[r]);
      if (c[r][k].size() != basis.size()) throw Error(ErrorCode::Parse, "certificate: entry length");
      Element e;
      for (std::size_t b = 0; b < basis.size(); ++b) e += Element::basis(basis[b], scalar_from_json(A->field(), c[r][k][b]));
      f.set(r, k, e);
    }
  }
  return f;
}

json graded_json(const Graded& X) {
  return {{"period", X.period},
          {"summands", projmodule_json(*X.A, X.module)},
          {"degrees", X.degree},
          {"d", projmap_json(X.d)}};
}

Graded graded_from_json(const AlgebraPtr& A, const json& j) {
  const ProjModule P = projmodule_from_json(*A, j.at("summands"));
  const ProjMap d = projmap_from_json(A, j.at("d"));
  if (d.source() != P || d.target() != P) throw Error(ErrorCode::Parse, "certificate: differential shape");
  return make_graded(A, j.at("period").get<int>(), P, j.at("degrees").get<std::vector<int>>(), d);
}

json rep_json(const Representation& M) {
  const Quiver& Q = M.A->quiver();
  json dims = json::object(), arrows = json::object();
  for (int v = 0; v < Q.vertex_count(); ++v) dims[Q.vertex_name(v)] = M.dims[v];
  for (int a = 0; a < Q.arrow_count(); ++a) arrows[Q.arrow(a).name] = matrix_json(M.act[a]);
  return {{"dims", dims}, {"arrows", arrows}};
}

Representation rep_from_json(const AlgebraPtr& A, const json& j) {
  const Quiver& Q = A->quiver();
  Representation M = Representation::zero(A);
  for (int v = 0; v < Q.vertex_count(); ++v) M.dims[v] = j.at("dims").at(Q.vertex_name(v)).get<std::size_t>();
  for (int a = 0; a < Q.arrow_count(); ++a)
    M.act[a] = matrix_from_json(A->field(), j.at("arrows").at(Q.arrow(a).name), M.dims[Q.arrow(a).source],
                                M.dims[Q.arrow(a).target]);
  M.validate();
  return M;
}

json repmap_json(const RepMap& f) {
  json j = json::array();
  for (const auto& m : f.comp) j.push_back(matrix_json(m));
  return j;
}

RepMap repmap_from_json(const Field& F, const json& j, const Representation& M, const Representation& N) {
  RepMap f;
  if (j.size() != M.dims.size()) throw Error(ErrorCode::Parse, "certificate: one matrix per vertex");
  for (std::size_t v = 0; v < M.dims.size(); ++v) f.comp.push_back(matrix_from_json(F, j[v], N.dims[v], M.dims[v]));
  return f;
}

json rep_complex_json(const RepComplex& M) {
  json terms = json::array(), diffs = json::array();
  for (const auto& t : M.terms) terms.push_back(rep_json(t));
  for (const auto& d : M.diffs) diffs.push_back(repmap_json(d));
  return {{"period", M.n}, {"terms", terms}, {"diffs", diffs}};
}

RepComplex rep_complex_from_json(const AlgebraPtr& A, const json& j) {
  const int n = j.at("period").get<int>();
  std::vector<Representation> terms;
  for (const auto& t : j.at("terms")) terms.push_back(rep_from_json(A, t));
  std::vector<RepMap> diffs;
  for (int i = 0; i < n; ++i)
    diffs.push_back(repmap_from_json(A->field(), j.at("diffs").at(i), terms.at(i), terms.at((i + 1) % n)));
  return make_rep_complex(A, n, terms, diffs);
}

}  // namespace pcx
