#include "qline/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qline {

bool grevlex_less(const ExpVec& a, const ExpVec& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  // a < b iff the rightmost nonzero entry of a-b is positive
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool lex_less(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MPoly MPoly::zero(const FieldCtx& F, const std::vector<std::string>& vars) {
  return MPoly(F, vars);
}

MPoly MPoly::constant(const FieldCtx& F, const std::vector<std::string>& vars,
                      const Fq& a) {
  MPoly r(F, vars);
  if (!a.is_zero()) r.terms_.push_back({ExpVec(vars.size(), 0), a});
  return r;
}

MPoly MPoly::variable(const FieldCtx& F, const std::vector<std::string>& vars,
                      int index) {
  MPoly r(F, vars);
  ExpVec e(vars.size(), 0);
  e[index] = 1;
  r.terms_.push_back({std::move(e), Fq::one(F)});
  return r;
}

MPoly MPoly::monomial(const FieldCtx& F, const std::vector<std::string>& vars,
                      ExpVec e, const Fq& a) {
  MPoly r(F, vars);
  require(e.size() == vars.size(), errc::internal, "exponent vector length");
  if (!a.is_zero()) r.terms_.push_back({std::move(e), a});
  return r;
}

int MPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return (int)i;
  return -1;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_[0].e.begin(), terms_[0].e.end(), [](int x) { return !x; }));
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_)
    d = std::max(d, std::accumulate(t.e.begin(), t.e.end(), 0));
  return d;
}

int MPoly::degree_in(int vi) const {
  if (is_zero()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.e[vi]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (is_zero()) return true;
  int d = std::accumulate(terms_[0].e.begin(), terms_[0].e.end(), 0);
  for (const auto& t : terms_)
    if (std::accumulate(t.e.begin(), t.e.end(), 0) != d) return false;
  return true;
}

bool MPoly::uses_only(const std::vector<int>& allowed) const {
  for (const auto& t : terms_) {
    for (int vi = 0; vi < nvars(); ++vi) {
      if (t.e[vi] &&
          std::find(allowed.begin(), allowed.end(), vi) == allowed.end())
        return false;
    }
  }
  return true;
}

Fq MPoly::coeff(const ExpVec& e) const {
  for (const auto& t : terms_)
    if (t.e == e) return t.c;
  return Fq::zero(*F_);
}

const MPoly::Term& MPoly::leading_term() const {
  require(!is_zero(), errc::zero_input, "leading term of 0");
  return terms_.front();
}

const MPoly::Term& MPoly::lex_leading_term() const {
  require(!is_zero(), errc::zero_input, "leading term of 0");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (lex_less(best->e, t.e)) best = &t;
  return *best;
}

void MPoly::check_ring(const MPoly& o) const {
  require(*F_ == *o.F_ && vars_ == o.vars_, errc::ctx_mismatch,
          "operands live in different rings");
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_less(b.e, a.e); });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().e == t.e)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.c.is_zero(); }),
            out.end());
  terms_ = std::move(out);
}

void MPoly::add_term(ExpVec e, const Fq& c) {
  require(e.size() == vars_.size(), errc::internal, "exponent vector length");
  terms_.push_back({std::move(e), c});
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].e == o.terms_[j].e) {
      Fq c = terms_[i].c + o.terms_[j].c;
      if (!c.is_zero()) out.push_back({terms_[i].e, c});
      ++i, ++j;
    } else if (grevlex_less(o.terms_[j].e, terms_[i].e)) {
      out.push_back(terms_[i++]);
    } else {
      out.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.push_back(terms_[i++]);
  while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_ring(b);
  MPoly r(a.ctx(), a.vars());
  if (a.is_zero() || b.is_zero()) return r;
  std::map<ExpVec, Fq> acc;
  const int n = a.nvars();
  ExpVec e(n);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      for (int v = 0; v < n; ++v) e[v] = ta.e[v] + tb.e[v];
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, ta.c * tb.c);
      else
        it->second += ta.c * tb.c;
    }
  }
  for (auto& [ev, c] : acc)
    if (!c.is_zero()) r.add_term(ev, c);
  r.normalize();
  return r;
}

MPoly MPoly::operator*(const Fq& s) const {
  MPoly r(*F_, vars_);
  if (s.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c *= s;
  r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                [](const Term& t) { return t.c.is_zero(); }),
                 r.terms_.end());
  return r;
}

MPoly MPoly::pow(int e) const {
  MPoly r = MPoly::constant(*F_, vars_, Fq::one(*F_));
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return *F_ == *o.F_ && vars_ == o.vars_ && terms_ == o.terms_;
}

bool MPoly::operator<(const MPoly& o) const {
  if (total_degree() != o.total_degree()) return total_degree() < o.total_degree();
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].e != o.terms_[i].e) return grevlex_less(terms_[i].e, o.terms_[i].e);
    if (terms_[i].c != o.terms_[i].c) return terms_[i].c < o.terms_[i].c;
  }
  return false;
}

Fq MPoly::eval(const std::vector<Fq>& point) const {
  require((int)point.size() == nvars(), errc::internal, "evaluation point arity");
  std::vector<std::vector<Fq>> pows(nvars());
  for (int v = 0; v < nvars(); ++v) pows[v].push_back(Fq::one(*F_));
  Fq acc = Fq::zero(*F_);
  for (const auto& t : terms_) {
    Fq m = t.c;
    for (int v = 0; v < nvars(); ++v) {
      int e = t.e[v];
      if (!e) continue;
      auto& pw = pows[v];
      while ((int)pw.size() <= e) pw.push_back(pw.back() * point[v]);
      m *= pw[e];
    }
    acc += m;
  }
  return acc;
}

MPoly MPoly::derivative(int vi) const {
  MPoly r(*F_, vars_);
  for (const auto& t : terms_) {
    if (!t.e[vi]) continue;
    ExpVec e = t.e;
    Fq c = t.c * Fq(*F_, e[vi]);
    --e[vi];
    if (!c.is_zero()) r.terms_.push_back({std::move(e), c});
  }
  r.normalize();
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  require((int)images.size() == nvars(), errc::internal, "substitution arity");
  require(!images.empty(), errc::internal, "empty substitution");
  const FieldCtx& TF = images[0].ctx();
  const auto& tvars = images[0].vars();
  MPoly acc(TF, tvars);
  std::vector<std::vector<MPoly>> pows(nvars());
  for (int v = 0; v < nvars(); ++v)
    pows[v].push_back(MPoly::constant(TF, tvars, Fq::one(TF)));
  for (const auto& t : terms_) {
    MPoly m = MPoly::constant(TF, tvars, t.c);
    for (int v = 0; v < nvars(); ++v) {
      int e = t.e[v];
      if (!e) continue;
      auto& pw = pows[v];
      while ((int)pw.size() <= e) pw.push_back(pw.back() * images[v]);
      m = m * pw[e];
    }
    acc += m;
  }
  return acc;
}

MPoly MPoly::map_coeffs(const FieldCtx& target) const {
  const Tower* tw = target.tower;
  require(tw != nullptr, errc::internal, "target context without tower");
  MPoly r(target, vars_);
  for (const auto& t : terms_) r.terms_.push_back({t.e, tw->embed(t.c, target)});
  return r;
}

MPoly MPoly::rename_ring(const std::vector<std::string>& new_vars) const {
  MPoly r(*F_, new_vars);
  std::vector<int> where(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    for (size_t j = 0; j < new_vars.size(); ++j)
      if (vars_[i] == new_vars[j]) where[i] = (int)j;
  }
  for (const auto& t : terms_) {
    ExpVec e(new_vars.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!t.e[i]) continue;
      require(where[i] >= 0, errc::internal,
              "polynomial uses a variable outside the target ring");
      e[where[i]] = t.e[i];
    }
    r.terms_.push_back({std::move(e), t.c});
  }
  r.normalize();
  return r;
}

MPoly MPoly::renamed_var(const std::string& from, const std::string& to) const {
  std::vector<std::string> nv = vars_;
  for (auto& v : nv)
    if (v == from) v = to;
  MPoly r(*F_, nv);
  for (const auto& t : terms_) r.terms_.push_back(t);
  return r;
}

std::optional<MPoly> MPoly::try_divide_exact(const MPoly& g) const {
  check_ring(g);
  require(!g.is_zero(), errc::division_by_zero, "division by zero polynomial");
  MPoly q(*F_, vars_);
  MPoly r = *this;
  const Term& glt = g.leading_term();
  Fq glc_inv = glt.c.inv();
  const int n = nvars();
  while (!r.is_zero()) {
    const Term& rlt = r.leading_term();
    ExpVec e(n);
    for (int v = 0; v < n; ++v) {
      e[v] = rlt.e[v] - glt.e[v];
      if (e[v] < 0) return std::nullopt;
    }
    MPoly m = MPoly::monomial(*F_, vars_, std::move(e), rlt.c * glc_inv);
    q += m;
    r -= m * g;
  }
  return q;
}

std::vector<MPoly> MPoly::coeffs_in(int vi) const {
  int d = std::max(degree_in(vi), 0);
  std::vector<MPoly> out((size_t)d + 1, MPoly(*F_, vars_));
  for (const auto& t : terms_) {
    ExpVec e = t.e;
    int k = e[vi];
    e[vi] = 0;
    out[k].terms_.push_back({std::move(e), t.c});
  }
  for (auto& c : out) c.normalize();
  return out;
}

bool MPoly::is_univariate_in(int vi) const {
  for (const auto& t : terms_)
    for (int v = 0; v < nvars(); ++v)
      if (v != vi && t.e[v]) return false;
  return true;
}

UPoly MPoly::to_upoly(int vi) const {
  require(is_univariate_in(vi), errc::internal, "polynomial is not univariate");
  UPoly u(*F_);
  u.c.assign(std::max(degree_in(vi), 0) + 1, Fq::zero(*F_));
  for (const auto& t : terms_) u.c[t.e[vi]] = t.c;
  u.trim();
  return u;
}

MPoly MPoly::from_upoly(const UPoly& u, const std::vector<std::string>& vars, int vi) {
  MPoly r(*u.F, vars);
  for (size_t i = 0; i < u.c.size(); ++i) {
    if (u.c[i].is_zero()) continue;
    ExpVec e(vars.size(), 0);
    e[vi] = (int)i;
    r.terms_.push_back({std::move(e), u.c[i]});
  }
  r.normalize();
  return r;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = t.c.is_one();
    bool has_var = std::any_of(t.e.begin(), t.e.end(), [](int x) { return x > 0; });
    if (!unit || !has_var) os << t.c.str();
    bool need_star = !unit || !has_var;
    for (int v = 0; v < nvars(); ++v) {
      if (!t.e[v]) continue;
      if (need_star) os << '*';
      need_star = true;
      os << vars_[v];
      if (t.e[v] > 1) os << '^' << t.e[v];
    }
  }
  return os.str();
}

// ------------------------------------------------------------- resultant

MPoly det_bareiss(std::vector<std::vector<MPoly>> a, const FieldCtx& F,
                  const std::vector<std::string>& vars);

MPoly resultant(const MPoly& f, const MPoly& g, int vi) {
  require(!f.is_zero() && !g.is_zero(), errc::zero_input, "resultant of 0");
  return resultant_formal(f, g, vi, f.degree_in(vi), g.degree_in(vi));
}

MPoly resultant_formal(const MPoly& f, const MPoly& g, int vi, int df, int dg) {
  require(!f.is_zero() && !g.is_zero(), errc::zero_input, "resultant of 0");
  require(df >= 1 && dg >= 1, errc::zero_input,
          "resultant needs positive degree in the eliminated variable");
  const FieldCtx& F = f.ctx();
  const auto& vars = f.vars();
  auto fc = f.coeffs_in(vi);
  auto gc = g.coeffs_in(vi);
  fc.resize(df + 1, MPoly(F, vars));
  gc.resize(dg + 1, MPoly(F, vars));
  int n = df + dg;
  std::vector<std::vector<MPoly>> syl(n, std::vector<MPoly>(n, MPoly(F, vars)));
  // dg rows shifted copies of f's coefficients, df rows of g's
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) syl[r][r + (df - k)] = fc[k];
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k) syl[dg + r][r + (dg - k)] = gc[k];
  return det_bareiss(std::move(syl), F, vars);
}

MPoly substitute_linear(const MPoly& f, const std::vector<std::vector<Fq>>& M) {
  const int n = f.nvars();
  require((int)M.size() == n, errc::internal, "matrix size");
  {
    // invertibility check
    std::vector<std::vector<Fq>> a = M;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = rank; r < n; ++r)
        if (!a[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      Fq inv = a[rank][col].inv();
      for (int c = 0; c < n; ++c) a[rank][c] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == rank || a[r][col].is_zero()) continue;
        Fq factor = a[r][col];
        for (int c = 0; c < n; ++c) a[r][c] -= factor * a[rank][c];
      }
      ++rank;
    }
    require(rank == n, errc::singular_matrix, "coordinate change is singular");
  }
  std::vector<MPoly> images;
  for (int i = 0; i < n; ++i) {
    MPoly im(f.ctx(), f.vars());
    for (int j = 0; j < n; ++j) {
      if (M[i][j].is_zero()) continue;
      im += MPoly::variable(f.ctx(), f.vars(), j) * M[i][j];
    }
    images.push_back(std::move(im));
  }
  return f.substitute(images);
}

// --------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const FieldCtx& F;
  const std::vector<std::string>& vars;
  const std::map<std::string, Fq>& bindings;

  [[noreturn]] void err(const std::string& what) const {
    fail(errc::parse_error, what + " at position " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  MPoly expr() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    MPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        acc = acc * factor();
      else
        break;
    }
    return acc;
  }

  MPoly factor() {
    MPoly base = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
        err("expected exponent digits after '^'");
      int e = 0;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
        e = e * 10 + (s[pos] - '0');
        if (e > 1000) err("exponent too large");
        ++pos;
      }
      return base.pow(e);
    }
    return base;
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = (v * 10 + (std::uint64_t)(s[pos] - '0')) % F.p;
      ++pos;
    }
    if (pos == start) err("expected a number");
    return v;
  }

  MPoly atom() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MPoly inner = expr();
      if (!eat(')')) err("expected ')'");
      return inner;
    }
    if (std::isdigit((unsigned char)c)) {
      Fq num(F, number());
      skip_ws();
      if (eat('/')) {
        skip_ws();
        Fq den(F, number());
        require(!den.is_zero(), errc::division_by_zero,
                "rational literal with denominator divisible by p");
        num *= den.inv();
      }
      return MPoly::constant(F, vars, num);
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return MPoly::variable(F, vars, (int)i);
      auto it = bindings.find(name);
      if (it != bindings.end()) return MPoly::constant(F, vars, it->second);
      pos = start;
      err("unknown identifier '" + name + "'");
    }
    err(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MPoly parse_poly(const std::string& text, const FieldCtx& F,
                 const std::vector<std::string>& vars,
                 const std::map<std::string, Fq>& bindings) {
  Parser p{text, 0, F, vars, bindings};
  MPoly r = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing input");
  return r;
}

}  // namespace qline
