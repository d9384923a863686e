#include "lpa/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "lpa/expr.hpp"

namespace lpa {

namespace {

// Candidate pairs in (|mu|+|nu|, |mu|, mu lex, nu lex) order.
std::vector<std::pair<Path, Path>> candidate_pairs(const Graph& g,
                                                   std::size_t max_len) {
  std::vector<std::vector<Path>> by_len(max_len + 1);
  for (const auto& p : enumerate_paths(g, max_len))
    by_len[p.length()].push_back(p);
  std::vector<std::pair<Path, Path>> pairs;
  for (std::size_t total = 0; total <= 2 * max_len; ++total) {
    for (std::size_t lm = 0; lm <= std::min(total, max_len); ++lm) {
      std::size_t ln = total - lm;
      if (ln > max_len) continue;
      for (const auto& mu : by_len[lm])
        for (const auto& nu : by_len[ln]) pairs.emplace_back(mu, nu);
    }
  }
  return pairs;
}

// Is `p` exactly alpha repeated k >= 1 times?
std::optional<std::int64_t> cycle_power(const Path& p, const Path& alpha) {
  if (alpha.empty() || p.empty()) return std::nullopt;
  if (p.edges.size() % alpha.edges.size() != 0) return std::nullopt;
  std::size_t k = p.edges.size() / alpha.edges.size();
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (p.edges[i] != alpha.edges[i % alpha.edges.size()]) return std::nullopt;
  return static_cast<std::int64_t>(k);
}

// Matches y against conclusion (1) or (2) of the reduction theorem.
std::optional<ReductionCertificate> match(const Graph& g, const Element& y,
                                          const Path& mu, const Path& nu) {
  if (y.is_zero()) return std::nullopt;

  // (1): a single term r p_v.
  if (y.term_count() == 1) {
    const auto& [m, c] = *y.terms().begin();
    if (m.mu.empty() && m.nu.empty())
      return VertexCertificate{mu, nu, c, m.mu.anchor};
  }

  // (2): every term is a power of one cycle alpha anchored at v = r(alpha):
  // (alpha^i, v) for i > 0, (v, alpha^|i|) for i < 0, (v, v) for i = 0.
  // alpha is taken from the shortest positive-degree term, falling back to
  // the shortest negative-degree term when no positive power is present.
  const Path* alpha_src = nullptr;
  for (const auto& [m, c] : y.terms()) {
    if (!m.mu.empty() && !m.nu.empty()) return std::nullopt;  // mixed term
    if (!m.mu.empty() &&
        (!alpha_src || m.mu.edges.size() < alpha_src->edges.size()))
      alpha_src = &m.mu;
  }
  if (!alpha_src) {
    for (const auto& [m, c] : y.terms())
      if (!m.nu.empty() &&
          (!alpha_src || m.nu.edges.size() < alpha_src->edges.size()))
        alpha_src = &m.nu;
  }
  if (!alpha_src) return std::nullopt;  // only vertex terms: handled by (1)
  const Path alpha = *alpha_src;
  if (!is_cycle(g, alpha)) return std::nullopt;
  const std::string v = alpha.range(g);

  std::map<std::int64_t, std::int64_t> coeffs;
  for (const auto& [m, c] : y.terms()) {
    if (m.mu.empty() && m.nu.empty()) {
      if (m.mu.anchor != v) return std::nullopt;
      coeffs[0] = c;
    } else if (!m.mu.empty()) {
      if (m.nu.anchor != v) return std::nullopt;
      auto k = cycle_power(m.mu, alpha);
      if (!k) return std::nullopt;
      coeffs[*k] = c;
    } else {
      if (m.mu.anchor != v) return std::nullopt;
      auto k = cycle_power(m.nu, alpha);
      if (!k) return std::nullopt;
      coeffs[-*k] = c;
    }
  }
  return CycleCertificate{mu, nu, alpha, std::move(coeffs)};
}

Element conjugate(const Element& x, const Path& mu, const Path& nu) {
  const GraphRef& g = x.graph();
  Element left = Element::ghost(g, x.ring(), mu);
  Element right = Element::path(g, x.ring(), nu);
  return left * x * right;
}

std::size_t default_bound(const Element& x) {
  std::size_t b = 0;
  for (const auto& [m, c] : x.terms())
    b = std::max(b, m.mu.length() + m.nu.length());
  return b;
}

ReductionOutcome scan(const Element& x, std::size_t bound, bool parallel,
                      std::size_t& scanned) {
  const Graph& g = *x.graph();
  auto pairs = candidate_pairs(g, bound);
  ReductionOutcome out;
  out.bound_used = bound;

  const std::size_t n = pairs.size();
  const std::size_t block = 256;
  std::size_t found = n;
  std::optional<ReductionCertificate> cert;

  // Blockwise scan: the parallel variant evaluates a whole block and takes
  // the least matching index, so the returned certificate is the least
  // pair in the deterministic order regardless of scheduling.
  for (std::size_t base = 0; base < n && !cert; base += block) {
    std::size_t end = std::min(base + block, n);
    std::vector<std::optional<ReductionCertificate>> hits(end - base);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i = base; i < end; ++i) {
        Element y = conjugate(x, pairs[i].first, pairs[i].second);
        hits[i - base] = match(g, y, pairs[i].first, pairs[i].second);
      }
    } else {
      for (std::size_t i = base; i < end; ++i) {
        Element y = conjugate(x, pairs[i].first, pairs[i].second);
        hits[i - base] = match(g, y, pairs[i].first, pairs[i].second);
        if (hits[i - base]) break;
      }
    }
    for (std::size_t i = base; i < end; ++i) {
      if (hits[i - base]) {
        found = i;
        cert = hits[i - base];
        break;
      }
    }
  }
  // Position of the found pair (scheduling-independent), or the full count.
  scanned = cert ? found + 1 : n;
  out.pairs_scanned = scanned;
  out.certificate = std::move(cert);
  return out;
}

ReductionOutcome run(const Element& x, const ReduceOptions& opts, bool parallel) {
  if (x.is_zero()) throw Error("reduce requires a nonzero element");
  std::size_t scanned = 0;
  if (opts.max_len) {
    return scan(x, *opts.max_len, parallel, scanned);
  }
  std::size_t bound = default_bound(x);
  ReductionOutcome out = scan(x, bound, parallel, scanned);
  if (out.certificate) return out;
  std::size_t more = 0;
  out = scan(x, bound + 2, parallel, more);
  out.pairs_scanned += scanned;
  return out;
}

}  // namespace

ReductionOutcome reduce(const Element& x, const ReduceOptions& opts) {
  return run(x, opts, opts.parallel);
}

ReductionOutcome reduce_serial(const Element& x, const ReduceOptions& opts) {
  return run(x, opts, false);
}

bool verify_certificate(const Element& x, const ReductionCertificate& cert) {
  const GraphRef& gref = x.graph();
  const Graph& g = *gref;
  const Ring ring = x.ring();
  try {
    if (const auto* vc = std::get_if<VertexCertificate>(&cert)) {
      if (ring.is_zero(vc->coefficient)) return false;
      if (!vc->mu.valid_in(g) || !vc->nu.valid_in(g)) return false;
      if (!g.has_vertex(vc->vertex)) return false;
      Element lhs = conjugate(x, vc->mu, vc->nu);
      Element rhs =
          Element::vertex(gref, ring, vc->vertex).scaled(vc->coefficient);
      return !lhs.is_zero() && lhs == rhs;
    }
    const auto& cc = std::get<CycleCertificate>(cert);
    if (!cc.mu.valid_in(g) || !cc.nu.valid_in(g) || !cc.alpha.valid_in(g))
      return false;
    if (!is_cycle(g, cc.alpha)) return false;
    bool any = false;
    for (const auto& [i, c] : cc.coefficients)
      if (!ring.is_zero(c)) any = true;
    if (!any) return false;
    const std::string v = cc.alpha.range(g);
    Element rhs = Element::zero(gref, ring);
    for (const auto& [i, c] : cc.coefficients) {
      // s_alpha^i; negative i are ghost powers, i = 0 is p_{r(alpha)}.
      Path power = Path::vertex(v);
      for (std::int64_t k = 0; k < (i < 0 ? -i : i); ++k)
        power = concat(g, power, cc.alpha);
      Element term = i >= 0 ? Element::monomial(gref, ring, c, power, Path::vertex(v))
                            : Element::monomial(gref, ring, c, Path::vertex(v), power);
      rhs = rhs + term;
    }
    Element lhs = conjugate(x, cc.mu, cc.nu);
    return !lhs.is_zero() && lhs == rhs;
  } catch (const Error&) {
    return false;
  }
}

std::string serialize_certificate(const ReductionCertificate& cert) {
  std::ostringstream out;
  if (const auto* vc = std::get_if<VertexCertificate>(&cert)) {
    out << "mu=" << path_to_string(vc->mu) << " nu=" << path_to_string(vc->nu)
        << " kind=vertex r=" << vc->coefficient << " v=" << vc->vertex;
    return out.str();
  }
  const auto& cc = std::get<CycleCertificate>(cert);
  out << "mu=" << path_to_string(cc.mu) << " nu=" << path_to_string(cc.nu)
      << " kind=cycle alpha=" << path_to_string(cc.alpha) << " coeffs=";
  bool first = true;
  for (const auto& [i, c] : cc.coefficients) {
    if (!first) out << ",";
    out << i << ":" << c;
    first = false;
  }
  return out.str();
}

namespace {

// A path string is a dot-joined edge sequence, or a vertex id for the
// length-0 path (edge reading wins if both parse).
Path parse_path_string(const Graph& g, const std::string& s) {
  std::vector<std::string> toks;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '.') {
      toks.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  // Greedy longest-first segmentation, as in the expression grammar.
  struct Seg {
    const Graph& g;
    const std::vector<std::string>& toks;
    bool run(std::size_t i, const std::optional<std::string>& need_range,
             std::vector<std::string>& outv) {
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
        outv.push_back(cand);
        if (run(j + 1, e.src, outv)) return true;
        outv.pop_back();
      }
      return false;
    }
  };
  std::vector<std::string> ids;
  Seg seg{g, toks};
  if (seg.run(0, std::nullopt, ids)) return Path::make(g, ids);
  if (g.has_vertex(s)) return Path::vertex(s);
  throw Error("cannot resolve path '" + s + "'");
}

}  // namespace

ReductionCertificate parse_certificate(const Graph& g, const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw Error("certificate token '" + tok + "' is not key=value");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  auto need = [&](const std::string& k) -> const std::string& {
    auto it = kv.find(k);
    if (it == kv.end()) throw Error("certificate missing '" + k + "'");
    return it->second;
  };
  auto to_int = [](const std::string& s) -> std::int64_t {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::exception();
      return v;
    } catch (...) {
      throw Error("certificate integer '" + s + "' is malformed");
    }
  };
  Path mu = parse_path_string(g, need("mu"));
  Path nu = parse_path_string(g, need("nu"));
  const std::string& kind = need("kind");
  if (kind == "vertex") {
    VertexCertificate vc;
    vc.mu = std::move(mu);
    vc.nu = std::move(nu);
    vc.coefficient = to_int(need("r"));
    vc.vertex = need("v");
    if (!g.has_vertex(vc.vertex))
      throw Error("unknown vertex '" + vc.vertex + "'");
    return vc;
  }
  if (kind == "cycle") {
    CycleCertificate cc;
    cc.mu = std::move(mu);
    cc.nu = std::move(nu);
    cc.alpha = parse_path_string(g, need("alpha"));
    const std::string& cs = need("coeffs");
    std::size_t pos = 0;
    while (pos < cs.size()) {
      std::size_t comma = cs.find(',', pos);
      std::string item = cs.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw Error("certificate coeffs item '" + item + "' is not i:c");
      cc.coefficients[to_int(item.substr(0, colon))] =
          to_int(item.substr(colon + 1));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return cc;
  }
  throw Error("unknown certificate kind '" + kind + "'");
}

}  // namespace lpa
