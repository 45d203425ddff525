#include "pcx/algebra.hpp"

#include "pcx/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace pcx {

int Quiver::add_vertex(std::string name) {
  if (find_vertex(name)) throw Error(ErrorCode::Semantic, "duplicate vertex '" + name + "'");
  vertices_.push_back(std::move(name));
  return vertex_count() - 1;
}

int Quiver::add_arrow(std::string name, int source, int target) {
  if (find_arrow(name)) throw Error(ErrorCode::Semantic, "duplicate arrow '" + name + "'");
  if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
    throw Error(ErrorCode::Semantic, "arrow '" + name + "' has an undeclared endpoint");
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrow_count() - 1;
}

std::optional<int> Quiver::find_vertex(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v] == name) return v;
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(std::string_view name) const {
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

namespace {

bool composable(const Quiver& Q, const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (Q.arrow(w[k + 1]).target != Q.arrow(w[k]).source) return false;
  return true;
}

}  // namespace

bool PathAlgebra::contains_relation(const Word& w) const {
  for (const auto& r : relations_)
    if (r.size() <= w.size() && std::search(w.begin(), w.end(), r.begin(), r.end()) != w.end())
      return true;
  return false;
}

PathAlgebra PathAlgebra::build(Quiver quiver, std::vector<Word> relations, Field field,
                               std::optional<std::size_t> length_bound) {
  PathAlgebra A;
  const int nv = quiver.vertex_count();
  const std::size_t bound =
      length_bound.value_or(std::max<std::size_t>(1, 2 * quiver.arrow_count() * nv));
  if (bound < 1) throw Error(ErrorCode::Semantic, "length bound must be at least 1");
  for (const auto& r : relations) {
    if (r.size() < 2) throw Error(ErrorCode::Semantic, "relations must have length at least 2");
    for (int a : r)
      if (a < 0 || a >= quiver.arrow_count()) throw Error(ErrorCode::Semantic, "relation uses unknown arrow");
    if (!composable(quiver, r)) throw Error(ErrorCode::Semantic, "relation word is not composable");
  }
  A.quiver_ = std::move(quiver);
  A.relations_ = std::move(relations);
  A.field_ = field;
  A.length_bound_ = bound;

  const Quiver& Q = A.quiver_;
  for (int v = 0; v < nv; ++v) A.basis_.push_back(Path{v, v, {}});
  std::vector<std::size_t> frontier(A.basis_.size());
  for (std::size_t i = 0; i < frontier.size(); ++i) frontier[i] = i;
  for (std::size_t len = 1; !frontier.empty(); ++len) {
    std::vector<std::size_t> next;
    for (auto idx : frontier) {
      for (int a = 0; a < Q.arrow_count(); ++a) {
        const Path& p = A.basis_[idx];
        if (Q.arrow(a).source != p.target) continue;
        Word w;
        w.reserve(p.word.size() + 1);
        w.push_back(a);
        w.insert(w.end(), p.word.begin(), p.word.end());
        if (A.contains_relation(w)) continue;
        if (len > bound)
          throw Error(ErrorCode::NotFiniteDimensional,
                      "relation-free path " + A.word_string(w) + " longer than the length bound " +
                          std::to_string(bound));
        A.basis_.push_back(Path{p.source, Q.arrow(a).target, std::move(w)});
        next.push_back(A.basis_.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  std::map<Word, std::size_t> index;
  for (std::size_t i = nv; i < A.basis_.size(); ++i) index[A.basis_[i].word] = i;
  const std::size_t n = A.basis_.size();
  A.table_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Path& p = A.basis_[i];
      const Path& q = A.basis_[j];
      if (p.source != q.target) continue;
      if (p.length() == 0) {
        A.table_[i * n + j] = static_cast<int>(j);
      } else if (q.length() == 0) {
        A.table_[i * n + j] = static_cast<int>(i);
      } else {
        Word w = p.word;
        w.insert(w.end(), q.word.begin(), q.word.end());
        auto it = index.find(w);
        if (it != index.end()) A.table_[i * n + j] = static_cast<int>(it->second);
      }
    }
  A.hom_.assign(static_cast<std::size_t>(nv) * nv, {});
  for (std::size_t i = 0; i < n; ++i)
    A.hom_[static_cast<std::size_t>(A.basis_[i].target) * nv + A.basis_[i].source].push_back(i);
  return A;
}

PathAlgebra PathAlgebra::with_field(Field f) const {
  PathAlgebra A = *this;
  A.field_ = f;
  return A;
}

std::optional<std::size_t> PathAlgebra::index_of(const Word& w) const {
  if (w.empty()) return std::nullopt;
  for (std::size_t i = vertex_count(); i < basis_.size(); ++i)
    if (basis_[i].word == w) return i;
  return std::nullopt;
}

std::string PathAlgebra::word_string(const Word& w) const {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "*" : "") + quiver_.arrow(w[k]).name;
  return s;
}

std::string PathAlgebra::word_string(std::size_t i) const {
  const Path& p = basis_.at(i);
  if (p.word.empty()) return "e" + quiver_.vertex_name(p.source);
  return word_string(p.word);
}

Element Element::basis(std::size_t index, Scalar coeff) {
  Element e;
  if (!coeff.is_zero()) e.terms_.emplace_back(index, std::move(coeff));
  return e;
}

std::optional<Scalar> Element::coefficient(std::size_t i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const auto& t, std::size_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return std::nullopt;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

Element& Element::operator+=(const Element& o) {
  if (o.terms_.empty()) return *this;
  std::vector<std::pair<std::size_t, Scalar>> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element Element::scaled(const Scalar& s) const {
  if (s.is_zero()) return {};
  Element e = *this;
  for (auto& t : e.terms_) t.second *= s;
  return e;
}

std::string Element::to_string(const PathAlgebra& A) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [i, c] = terms_[k];
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (k) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    const bool trivial = A.path(i).length() == 0;
    if (trivial) s += cs;
    else s += (cs == "1" ? "" : cs + "*") + A.word_string(i);
  }
  return s;
}

Element multiply(const PathAlgebra& A, const Element& a, const Element& b) {
  Element out;
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      int k = A.product(i, j);
      if (k < 0) continue;
      auto [it, fresh] = acc.try_emplace(static_cast<std::size_t>(k), ci * cj);
      if (!fresh) it->second += ci * cj;
    }
  for (auto& [k, c] : acc) out += Element::basis(k, c);
  return out;
}

Element unit_at(const PathAlgebra& A, int v) { return Element::basis(A.idempotent(v), A.field().one()); }

Element path_element(const PathAlgebra& A, const Word& w) {
  if (auto i = A.index_of(w)) return Element::basis(*i, A.field().one());
  return {};
}

Word parse_word(const Quiver& Q, std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto star = text.find('*', pos);
    std::string_view tok = text.substr(pos, star == std::string_view::npos ? text.npos : star - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    auto a = Q.find_arrow(tok);
    if (!a) throw Error(ErrorCode::Parse, "unknown arrow '" + std::string(tok) + "'");
    w.push_back(*a);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return w;
}

namespace {

bool is_number(std::string_view t) {
  if (t.empty()) return false;
  bool slash = false;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == '/' && !slash && k > 0 && k + 1 < t.size()) slash = true;
    else if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

Element parse_term(const PathAlgebra& A, std::string_view term, int source, int target) {
  const Quiver& Q = A.quiver();
  Scalar coeff = A.field().one();
  Word w;
  bool idempotent = false;
  std::size_t pos = 0;
  while (pos <= term.size()) {
    auto star = term.find('*', pos);
    std::string_view tok = trim(term.substr(pos, star == std::string_view::npos ? term.npos : star - pos));
    if (tok.empty()) throw Error(ErrorCode::Parse, "empty factor in '" + std::string(term) + "'");
    if (is_number(tok) && w.empty()) {
      coeff *= A.field().from_rational(Rational(std::string(tok)));
    } else if (auto a = Q.find_arrow(tok)) {
      w.push_back(*a);
    } else if (tok.size() > 1 && tok[0] == 'e' && Q.find_vertex(tok.substr(1))) {
      if (*Q.find_vertex(tok.substr(1)) != source || source != target)
        throw Error(ErrorCode::Semantic, "idempotent '" + std::string(tok) + "' does not fit this entry");
      idempotent = true;
    } else {
      throw Error(ErrorCode::Parse, "unknown arrow '" + std::string(tok) + "'");
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  if (w.empty()) {
    if (coeff.is_zero()) return {};
    if (source != target)
      throw Error(ErrorCode::Semantic, "scalar entry '" + std::string(term) + "' between distinct vertices " +
                                           Q.vertex_name(source) + " -> " + Q.vertex_name(target));
    return unit_at(A, source).scaled(coeff);
  }
  if (idempotent) throw Error(ErrorCode::Parse, "idempotent mixed with arrows in '" + std::string(term) + "'");
  if (!composable(Q, w)) throw Error(ErrorCode::Semantic, "word '" + std::string(term) + "' is not composable");
  if (Q.arrow(w.back()).source != source || Q.arrow(w.front()).target != target)
    throw Error(ErrorCode::Semantic, "word '" + std::string(term) + "' is not a path " + Q.vertex_name(source) +
                                         " -> " + Q.vertex_name(target));
  return path_element(A, w).scaled(coeff);
}

}  // namespace

Element parse_element(const PathAlgebra& A, std::string_view text, int source, int target) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty algebra element");
  Element out;
  std::size_t start = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    start = 1;
  }
  for (std::size_t k = start; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == '+' || text[k] == '-') {
      auto term = trim(text.substr(start, k - start));
      if (term.empty()) throw Error(ErrorCode::Parse, "dangling sign in '" + std::string(text) + "'");
      Element t = parse_term(A, term, source, target);
      out += negative ? -t : t;
      if (k < text.size()) negative = text[k] == '-';
      start = k + 1;
    }
  }
  return out;
}

}  // namespace pcx
