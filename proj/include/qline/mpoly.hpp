#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qline/galois.hpp"
#include "qline/upoly.hpp"

namespace qline {

using ExpVec = std::vector<int>;

/// Graded reverse-lexicographic comparison; fixes the canonical term order
/// and the printed form everywhere.
bool grevlex_less(const ExpVec& a, const ExpVec& b);
/// Pure lexicographic comparison (used only for the scaling convention of
/// recovered ruled quartics).
bool lex_less(const ExpVec& a, const ExpVec& b);

/// Sparse multivariate polynomial over a FieldCtx with a fixed ordered
/// variable list. Terms are kept grevlex-descending with no zero
/// coefficients, so equal polynomials compare equal term-by-term.
class MPoly {
 public:
  struct Term {
    ExpVec e;
    Fq c;
    bool operator==(const Term& o) const { return e == o.e && c == o.c; }
  };

  MPoly() = default;
  MPoly(const FieldCtx& F, std::vector<std::string> vars)
      : F_(&F), vars_(std::move(vars)) {}

  static MPoly zero(const FieldCtx& F, const std::vector<std::string>& vars);
  static MPoly constant(const FieldCtx& F, const std::vector<std::string>& vars,
                        const Fq& a);
  static MPoly variable(const FieldCtx& F, const std::vector<std::string>& vars,
                        int index);
  static MPoly monomial(const FieldCtx& F, const std::vector<std::string>& vars,
                        ExpVec e, const Fq& a);

  const FieldCtx& ctx() const { return *F_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return (int)vars_.size(); }
  int var_index(const std::string& name) const;  // -1 if absent
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int vi) const;
  bool is_homogeneous() const;
  bool uses_only(const std::vector<int>& allowed) const;
  Fq coeff(const ExpVec& e) const;
  const Term& leading_term() const;  // grevlex-largest; errc::zero_input on 0
  /// Lex-largest term.
  const Term& lex_leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator*(const Fq& s) const;
  MPoly pow(int e) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  /// Deterministic total order (degree, then terms).
  bool operator<(const MPoly& o) const;

  Fq eval(const std::vector<Fq>& point) const;
  MPoly derivative(int vi) const;
  /// Simultaneous substitution var i -> images[i]; images share one ring which
  /// becomes the ring of the result. Coefficients must live in that ring's
  /// field (map_coeffs first when crossing fields).
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Coefficients embedded into target (same p); ring variables unchanged.
  MPoly map_coeffs(const FieldCtx& target) const;
  /// Same polynomial in a different ring; variables are matched by name and
  /// all others must be absent.
  MPoly rename_ring(const std::vector<std::string>& new_vars) const;
  /// Same polynomial with one variable relabeled.
  MPoly renamed_var(const std::string& from, const std::string& to) const;

  /// Exact quotient when g divides this, std::nullopt otherwise.
  std::optional<MPoly> try_divide_exact(const MPoly& g) const;

  /// Coefficients of this viewed as a polynomial in var vi; entry d is the
  /// coefficient of vi^d (a polynomial in the same ring, vi-free).
  std::vector<MPoly> coeffs_in(int vi) const;
  bool is_univariate_in(int vi) const;
  UPoly to_upoly(int vi) const;
  static MPoly from_upoly(const UPoly& u, const std::vector<std::string>& vars, int vi);

  std::string str() const;

  void add_term(ExpVec e, const Fq& c);  // accumulate, then normalize()
  void normalize();

 private:
  void check_ring(const MPoly& o) const;

  const FieldCtx* F_ = nullptr;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

inline MPoly operator*(const Fq& s, const MPoly& a) { return a * s; }

/// Sylvester resultant in var vi with the degrees taken as written.
MPoly resultant(const MPoly& f, const MPoly& g, int vi);
/// Sylvester resultant with prescribed formal degrees (homogeneous binary
/// resultant when inputs are homogeneous in a variable pair).
MPoly resultant_formal(const MPoly& f, const MPoly& g, int vi, int df, int dg);

/// f(M x) for an invertible square matrix over the coefficient field.
MPoly substitute_linear(const MPoly& f, const std::vector<std::vector<Fq>>& M);

/// Text form: grevlex-descending "c*x1^2*x3" terms joined by " + ".
/// parse accepts the CLI grammar (integers, rationals, bound identifiers,
/// parentheses, '^'); errc::parse_error with position on bad input.
MPoly parse_poly(const std::string& text, const FieldCtx& F,
                 const std::vector<std::string>& vars,
                 const std::map<std::string, Fq>& bindings = {});

}  // namespace qline
