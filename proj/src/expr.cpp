#include "lpa/expr.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace lpa {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  int column() const { return static_cast<int>(pos) + 1; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(1, column(), msg);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool try_consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<std::int64_t> try_int() {
    skip_ws();
    std::size_t p = pos;
    bool neg = false;
    if (p < text.size() && text[p] == '-') {
      neg = true;
      ++p;
    }
    std::size_t digits = p;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    if (p == digits) return std::nullopt;
    std::int64_t v = 0;
    for (std::size_t i = digits; i < p; ++i) v = v * 10 + (text[i] - '0');
    pos = p;
    return neg ? -v : v;
  }

  // Lowercase keyword immediately followed by '('.
  std::optional<std::string> try_call() {
    skip_ws();
    std::size_t p = pos;
    while (p < text.size() && text[p] >= 'a' && text[p] <= 'z') ++p;
    if (p == pos || p >= text.size() || text[p] != '(') return std::nullopt;
    std::string kw = text.substr(pos, p - pos);
    pos = p + 1;
    return kw;
  }

  // Raw body up to the matching ')' (no nesting inside id bodies).
  std::string call_body() {
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("missing ')'");
    std::string body = text.substr(pos, close - pos);
    pos = close + 1;
    // trim
    std::size_t b = body.find_first_not_of(" \t");
    std::size_t e = body.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return body.substr(b, e - b + 1);
  }
};

// Splits a dotted path body into edge ids of g. Ids may contain '.', so
// the dot-separated tokens are re-joined greedily (longest candidate
// first), backtracking on composition failure. `need_range`, when set,
// constrains r(next edge).
bool segment_path(const Graph& g, const std::vector<std::string>& toks,
                  std::size_t i, const std::optional<std::string>& need_range,
                  std::vector<std::string>& out) {
  if (i == toks.size()) return true;
  for (std::size_t j = toks.size(); j-- > i;) {
    std::string cand;
    for (std::size_t k = i; k <= j; ++k) {
      if (k > i) cand += '.';
      cand += toks[k];
    }
    if (!g.has_edge(cand)) continue;
    const Edge& e = g.edge(cand);
    if (need_range && e.rng != *need_range) continue;
    out.push_back(cand);
    if (segment_path(g, toks, j + 1, e.src, out)) return true;
    out.pop_back();
  }
  return false;
}

Path parse_path_body(const Graph& g, const std::string& body, Lexer& lex) {
  if (body.empty()) lex.fail("empty path");
  std::vector<std::string> toks;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == '.') {
      toks.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  std::vector<std::string> ids;
  if (!segment_path(g, toks, 0, std::nullopt, ids))
    lex.fail("cannot resolve '" + body + "' as a path over graph '" +
             g.name() + "'");
  return Path::make(g, ids);
}

struct Parser {
  GraphRef g;
  Ring ring;
  Lexer lex;

  Parser(GraphRef g_, Ring r, const std::string& text)
      : g(std::move(g_)), ring(r), lex(text) {}

  Element parse() {
    Element e = expr();
    if (!lex.eof()) lex.fail("trailing input");
    return e;
  }

  Element expr() {
    Element acc = term();
    while (true) {
      char c = lex.peek();
      if (c == '+') {
        ++lex.pos;
        acc = acc + term();
      } else if (c == '-') {
        ++lex.pos;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Element term() {
    std::optional<std::int64_t> coef = lex.try_int();
    if (coef) {
      if (lex.peek() == '*') {
        ++lex.pos;
      } else {
        // Bare integer: only the zero element is expressible this way.
        if (ring.normalize(*coef) == 0) return Element::zero(g, ring);
        lex.fail("bare integer is not an element; multiply by an atom");
      }
    }
    Element acc = atom();
    while (lex.peek() == '*') {
      ++lex.pos;
      acc = acc * atom();
    }
    return coef ? acc.scaled(*coef) : acc;
  }

  Element atom() {
    if (auto kw = lex.try_call()) {
      std::string body = lex.call_body();
      if (*kw == "p") {
        if (!g->has_vertex(body)) lex.fail("unknown vertex '" + body + "'");
        return Element::vertex(g, ring, body);
      }
      if (*kw == "s") return Element::path(g, ring, parse_path_body(*g, body, lex));
      if (*kw == "sx") return Element::ghost(g, ring, parse_path_body(*g, body, lex));
      lex.fail("unknown atom '" + *kw + "'");
    }
    if (lex.try_consume('(')) {
      Element e = expr();
      lex.expect(')');
      return e;
    }
    lex.fail("expected atom");
  }
};

void render_atoms(std::ostringstream& out, const Monomial& m) {
  bool mu_empty = m.mu.empty();
  bool nu_empty = m.nu.empty();
  if (mu_empty && nu_empty) {
    out << "p(" << m.mu.anchor << ")";
    return;
  }
  if (!mu_empty) out << "s(" << path_to_string(m.mu) << ")";
  if (!mu_empty && !nu_empty) out << "*";
  if (!nu_empty) out << "sx(" << path_to_string(m.nu) << ")";
}

}  // namespace

Element parse_element(GraphRef g, Ring ring, const std::string& text) {
  Parser p(std::move(g), ring, text);
  return p.parse();
}

std::string to_expr(const Monomial& m) {
  std::ostringstream out;
  render_atoms(out, m);
  return out.str();
}

std::string to_expr(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    std::int64_t mag = c;
    if (first) {
      if (c < 0) {
        out << c << " * ";
        render_atoms(out, m);
        first = false;
        continue;
      }
    } else {
      if (c < 0) {
        out << " - ";
        mag = -c;
      } else {
        out << " + ";
      }
    }
    if (mag != 1) out << mag << " * ";
    render_atoms(out, m);
    first = false;
  }
  return out.str();
}

}  // namespace lpa
