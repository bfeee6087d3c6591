#include "qline/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace qline {

namespace {

// Table-based arithmetic for one small field F_q, elements as indices
// (little-endian base-p digits of the coefficient vector). Holds no pointer
// into any tower, so instances can be cached across sessions with the same
// (p, degree, modulus).
struct SmallField {
  std::uint32_t q = 0;
  std::uint64_t p = 0;
  int L = 1;
  std::vector<std::uint64_t> modulus;  // monic, size L+1 (empty for L = 1)
  std::vector<std::uint32_t> mul, add;
  std::vector<std::uint32_t> neg, inv;
  std::vector<std::int32_t> sqrt_of;  // -1 when not a square
  std::uint32_t two = 0, four = 0;

  SmallField(std::uint64_t p_, int L_, std::vector<std::uint64_t> mod)
      : p(p_), L(L_), modulus(std::move(mod)) {
    std::uint64_t qq = 1;
    for (int i = 0; i < L; ++i) qq *= p;
    require(qq <= 4096, errc::internal, "oracle field too large for tables");
    q = (std::uint32_t)qq;
    auto digits = [&](std::uint32_t idx) {
      std::array<std::uint64_t, 8> d{};
      for (int i = 0; i < L; ++i) {
        d[i] = idx % p;
        idx /= (std::uint32_t)p;
      }
      return d;
    };
    auto pack = [&](const std::array<std::uint64_t, 8>& d) {
      std::uint64_t id = 0, mult = 1;
      for (int i = 0; i < L; ++i) {
        id += (d[i] % p) * mult;
        mult *= p;
      }
      return (std::uint32_t)id;
    };
    mul.assign((size_t)q * q, 0);
    add.assign((size_t)q * q, 0);
    neg.assign(q, 0);
    inv.assign(q, 0);
    sqrt_of.assign(q, -1);
    for (std::uint32_t i = 0; i < q; ++i) {
      auto di = digits(i);
      std::array<std::uint64_t, 8> nd{};
      for (int k = 0; k < L; ++k) nd[k] = di[k] ? p - di[k] : 0;
      neg[i] = pack(nd);
      for (std::uint32_t j = 0; j <= i; ++j) {
        auto dj = digits(j);
        std::array<std::uint64_t, 8> s{};
        for (int k = 0; k < L; ++k) s[k] = (di[k] + dj[k]) % p;
        std::uint32_t sidx = pack(s);
        add[(size_t)i * q + j] = add[(size_t)j * q + i] = sidx;
        // convolution then reduction by the monic modulus
        std::array<std::uint64_t, 16> conv{};
        for (int a = 0; a < L; ++a) {
          if (!di[a]) continue;
          for (int b = 0; b < L; ++b) conv[a + b] = (conv[a + b] + di[a] * dj[b]) % p;
        }
        for (int d = 2 * L - 2; d >= L; --d) {
          std::uint64_t lead = conv[d] % p;
          if (!lead) continue;
          conv[d] = 0;
          for (int k = 0; k < L; ++k) {
            if (!modulus[k]) continue;
            conv[d - L + k] = (conv[d - L + k] + (p - lead % p) * modulus[k]) % p;
          }
        }
        std::array<std::uint64_t, 8> m{};
        for (int k = 0; k < L; ++k) m[k] = conv[k];
        std::uint32_t midx = pack(m);
        mul[(size_t)i * q + j] = mul[(size_t)j * q + i] = midx;
      }
    }
    for (std::uint32_t i = 0; i < q; ++i) sqrt_of[mul[(size_t)i * q + i]] = (std::int32_t)i;
    // inverses by Fermat through the finished multiplication table
    for (std::uint32_t i = 1; i < q; ++i) {
      std::uint32_t r = pack({1});
      std::uint32_t b = i;
      std::uint64_t e = (std::uint64_t)q - 2;
      while (e) {
        if (e & 1) r = mul[(size_t)r * q + b];
        b = mul[(size_t)b * q + b];
        e >>= 1;
      }
      inv[i] = r;
    }
    std::array<std::uint64_t, 8> c{};
    c[0] = 2 % p;
    two = pack(c);
    c[0] = 4 % p;
    four = pack(c);
  }

  std::uint32_t mu(std::uint32_t a, std::uint32_t b) const { return mul[(size_t)a * q + b]; }
  std::uint32_t ad(std::uint32_t a, std::uint32_t b) const { return add[(size_t)a * q + b]; }
  std::uint32_t su(std::uint32_t a, std::uint32_t b) const { return ad(a, neg[b]); }
  Fq to_fq(const FieldCtx& K, std::uint32_t idx) const {
    std::vector<std::uint64_t> v(L);
    for (int i = 0; i < L; ++i) {
      v[i] = idx % p;
      idx /= (std::uint32_t)p;
    }
    return Fq::from_vec(K, v);
  }
  std::uint32_t from_fq(const Fq& x) const {
    std::uint64_t id = 0, mult = 1;
    for (int i = 0; i < L; ++i) {
      id += x.vec()[i] * mult;
      mult *= p;
    }
    return (std::uint32_t)id;
  }
};

const SmallField& small_field_for(const FieldCtx& K) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, int, std::vector<std::uint64_t>>,
                  std::unique_ptr<SmallField>>
      cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_tuple(K.p, K.k, K.modulus);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<SmallField>(K.p, K.k, K.modulus)).first;
  return *it->second;
}

// a polynomial over F_q in index form
struct IdxPoly {
  std::vector<std::pair<std::array<std::uint8_t, 4>, std::uint32_t>> terms;

  static IdxPoly from(const SmallField& sf, const MPoly& f) {
    IdxPoly out;
    for (const auto& t : f.terms()) {
      std::array<std::uint8_t, 4> e{};
      for (int i = 0; i < 4; ++i) e[i] = (std::uint8_t)t.e[i];
      out.terms.push_back({e, sf.from_fq(t.c)});
    }
    return out;
  }

  std::uint32_t eval(const SmallField& sf, const std::array<std::uint32_t, 4>& x) const {
    std::uint32_t acc = 0;
    for (const auto& [e, c] : terms) {
      std::uint32_t m = c;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < e[i]; ++k) m = sf.mu(m, x[i]);
      acc = sf.ad(acc, m);
    }
    return acc;
  }
};

// projective normalization of an index tuple: scale so the last nonzero
// entry is 1
template <size_t N>
void normalize_idx(const SmallField& sf, std::array<std::uint32_t, N>& v) {
  for (size_t i = N; i-- > 0;) {
    if (v[i] != 0) {
      std::uint32_t s = sf.inv[v[i]];
      for (auto& x : v) x = sf.mu(x, s);
      return;
    }
  }
}

// all projective points of the conic mu^T M mu = 0 in P^2(F_q); M symmetric
// given in index form. Appends index triples.
void conic_points(const SmallField& sf, const std::array<std::array<std::uint32_t, 3>, 3>& M,
                  std::vector<std::array<std::uint32_t, 3>>& out) {
  auto apply = [&](const std::array<std::uint32_t, 3>& v) {
    std::array<std::uint32_t, 3> r{};
    for (int i = 0; i < 3; ++i) {
      std::uint32_t acc = 0;
      for (int j = 0; j < 3; ++j) acc = sf.ad(acc, sf.mu(M[i][j], v[j]));
      r[i] = acc;
    }
    return r;
  };
  auto qform = [&](const std::array<std::uint32_t, 3>& v) {
    auto Mv = apply(v);
    std::uint32_t acc = 0;
    for (int i = 0; i < 3; ++i) acc = sf.ad(acc, sf.mu(v[i], Mv[i]));
    return acc;
  };
  bool all_zero = true;
  for (auto& row : M)
    for (auto x : row) all_zero = all_zero && (x == 0);
  require(!all_zero, errc::internal, "zero conic must be handled by the caller");
  // kernel of M over F_q (index arithmetic, 3x3)
  std::array<std::array<std::uint32_t, 3>, 3> m = M;
  std::vector<std::array<std::uint32_t, 3>> ker;
  {
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < 3; ++col) {
      int piv = -1;
      for (int r = rank; r < 3; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      std::uint32_t s = sf.inv[m[rank][col]];
      for (int c = 0; c < 3; ++c) m[rank][c] = sf.mu(m[rank][c], s);
      for (int r = 0; r < 3; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        std::uint32_t f = m[r][col];
        for (int c = 0; c < 3; ++c) m[r][c] = sf.su(m[r][c], sf.mu(f, m[rank][c]));
      }
      pivot_col[rank] = col;
      ++rank;
    }
    std::array<bool, 3> is_pivot{false, false, false};
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int free = 0; free < 3; ++free) {
      if (is_pivot[free]) continue;
      std::array<std::uint32_t, 3> v{};
      v[free] = 1;
      for (int r = 0; r < rank; ++r) v[pivot_col[r]] = sf.neg[m[r][free]];
      ker.push_back(v);
    }
  }
  int rank = 3 - (int)ker.size();
  if (rank == 1) {
    // point set is the projective line v . mu = 0 where M = c v v^T; the
    // kernel is that line
    require(ker.size() == 2, errc::internal, "oracle conic rank bookkeeping");
    for (std::uint32_t a = 0; a < sf.q; ++a) {
      std::array<std::uint32_t, 3> pt{};
      for (int i = 0; i < 3; ++i) pt[i] = sf.ad(sf.mu(a, ker[0][i]), ker[1][i]);
      out.push_back(pt);
    }
    out.push_back(ker[0]);
    return;
  }
  if (rank == 2) {
    // union of at most two lines through the kernel point
    auto k = ker[0];
    //基 complement: two unit-ish vectors independent of k
    int pivot = 0;
    for (int i = 0; i < 3; ++i)
      if (k[i] != 0) pivot = i;
    std::array<std::uint32_t, 3> B1{}, B2{};
    B1[(pivot + 1) % 3] = 1;
    B2[(pivot + 2) % 3] = 1;
    // binary quadratic in (a : b): q(a B1 + b B2)
    std::uint32_t A = qform(B1), C = qform(B2);
    std::uint32_t Bq;
    {
      std::array<std::uint32_t, 3> s{};
      for (int i = 0; i < 3; ++i) s[i] = sf.ad(B1[i], B2[i]);
      Bq = sf.su(sf.su(qform(s), A), C);  // cross term
    }
    std::vector<std::array<std::uint32_t, 2>> dirs;
    if (A == 0) {
      dirs.push_back({1, 0});
      if (Bq != 0) dirs.push_back({sf.neg[sf.mu(C, sf.inv[Bq])], 1});
    } else {
      // a = (-B +- sqrt(B^2-4AC)) / 2A, b = 1
      std::uint32_t disc = sf.su(sf.mu(Bq, Bq), sf.mu(sf.four, sf.mu(A, C)));
      if (sf.sqrt_of[disc] >= 0) {
        std::uint32_t r = (std::uint32_t)sf.sqrt_of[disc];
        std::uint32_t inv2A = sf.inv[sf.mu(sf.two, A)];
        std::uint32_t a1 = sf.mu(sf.ad(sf.neg[Bq], r), inv2A);
        std::uint32_t a2 = sf.mu(sf.su(sf.neg[Bq], r), inv2A);
        dirs.push_back({a1, 1});
        if (a2 != a1) dirs.push_back({a2, 1});
      }
    }
    for (auto& d : dirs) {
      std::array<std::uint32_t, 3> dir{};
      for (int i = 0; i < 3; ++i) dir[i] = sf.ad(sf.mu(d[0], B1[i]), sf.mu(d[1], B2[i]));
      // line through k and dir
      for (std::uint32_t tpar = 0; tpar < sf.q; ++tpar) {
        std::array<std::uint32_t, 3> pt{};
        for (int i = 0; i < 3; ++i) pt[i] = sf.ad(k[i], sf.mu(tpar, dir[i]));
        out.push_back(pt);
      }
      out.push_back(dir);
    }
    out.push_back(k);
    return;
  }
  // nondegenerate conic: find one rational point, then sweep lines through it
  std::array<std::uint32_t, 3> P0{};
  bool found = false;
  for (std::uint32_t y = 0; y < sf.q && !found; ++y) {
    // mu = (x, y, 1): A2 x^2 + B2 x + C2 = 0
    std::array<std::uint32_t, 3> e1{1, 0, 0}, rest{0, y, 1};
    std::uint32_t A2 = qform(e1);
    std::uint32_t C2 = qform(rest);
    std::uint32_t B2;
    {
      std::array<std::uint32_t, 3> s{1, y, 1};
      B2 = sf.su(sf.su(qform(s), A2), C2);
    }
    if (A2 == 0) {
      if (B2 != 0) {
        P0 = {sf.neg[sf.mu(C2, sf.inv[B2])], y, 1};
        found = true;
      } else if (C2 == 0) {
        P0 = {1, y, 1};
        found = true;
      }
      continue;
    }
    std::uint32_t disc = sf.su(sf.mu(B2, B2), sf.mu(sf.four, sf.mu(A2, C2)));
    if (sf.sqrt_of[disc] >= 0) {
      std::uint32_t r = (std::uint32_t)sf.sqrt_of[disc];
      std::uint32_t inv2A = sf.inv[sf.mu(sf.two, A2)];
      P0 = {sf.mu(sf.ad(sf.neg[B2], r), inv2A), y, 1};
      found = true;
    }
  }
  // a nondegenerate conic over F_q always has q + 1 rational points, and at
  // most two of them lie on the scanned-out line z = 0
  require(found, errc::internal, "nondegenerate conic without a rational point");
  // sweep the q + 1 lines through P0: directions taken from a projective
  // line missing P0; each line meets the conic in exactly one further point
  auto MP0 = apply(P0);
  auto handle_dir = [&](const std::array<std::uint32_t, 3>& d) {
    std::uint32_t dMd = qform(d);
    std::uint32_t P0Md = 0;
    for (int i = 0; i < 3; ++i) P0Md = sf.ad(P0Md, sf.mu(d[i], MP0[i]));
    if (dMd == 0) {
      out.push_back(d);  // the second intersection sits at the direction
      return;
    }
    // tau = -2 P0.M.d / d.M.d
    std::uint32_t tau = sf.neg[sf.mu(sf.mu(sf.two, P0Md), sf.inv[dMd])];
    if (tau == 0) return;  // tangent line: only P0
    std::array<std::uint32_t, 3> pt{};
    for (int i = 0; i < 3; ++i) pt[i] = sf.ad(P0[i], sf.mu(tau, d[i]));
    out.push_back(pt);
  };
  int miss = 0;
  for (int i = 0; i < 3; ++i)
    if (P0[i] != 0) miss = i;
  int j = (miss + 1) % 3, k = (miss + 2) % 3;
  for (std::uint32_t a = 0; a < sf.q; ++a) {
    std::array<std::uint32_t, 3> d{};
    d[j] = a;
    d[k] = 1;
    handle_dir(d);
  }
  {
    std::array<std::uint32_t, 3> d{};
    d[j] = 1;
    handle_dir(d);
  }
  out.push_back(P0);
}

}  // namespace

std::vector<LineKey> brute_force_lines_meeting(const QuarticWithLine& X, int L) {
  const Tower& tw = *X.tower;
  const FieldCtx& K = tw.field(L);
  const SmallField& sf = small_field_for(K);
  MPoly fK = L == 1 ? X.f : X.f.map_coeffs(K);
  IdxPoly f = IdxPoly::from(sf, fK);
  // first, second and third partials in index form
  std::vector<IdxPoly> grad, hess, third;
  std::vector<std::pair<int, int>> hess_ij;
  std::vector<std::array<int, 3>> third_ijk;
  for (int i = 0; i < 4; ++i) grad.push_back(IdxPoly::from(sf, fK.derivative(i)));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      hess.push_back(IdxPoly::from(sf, fK.derivative(i).derivative(j)));
      hess_ij.push_back({i, j});
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      for (int k = j; k < 4; ++k) {
        third.push_back(IdxPoly::from(sf, fK.derivative(i).derivative(j).derivative(k)));
        third_ijk.push_back({i, j, k});
      }

  std::vector<LineKey> lines;
  auto consider_point = [&](std::uint32_t px1, std::uint32_t px2) {
    std::array<std::uint32_t, 4> P = {px1, px2, 0, 0};
    // gradient at P
    std::array<std::uint32_t, 4> g{};
    bool gz = true;
    for (int i = 0; i < 4; ++i) {
      g[i] = grad[i].eval(sf, P);
      gz = gz && (g[i] == 0);
    }
    require(!gz, errc::singular_surface, "oracle requires X smooth along the line");
    // basis of the tangent plane g . Q = 0
    int piv = 0;
    while (g[piv] == 0) ++piv;
    std::array<std::array<std::uint32_t, 4>, 3> B{};
    {
      int row = 0;
      std::uint32_t ginv = sf.inv[g[piv]];
      for (int i = 0; i < 4; ++i) {
        if (i == piv) continue;
        // Q = e_i - (g_i / g_piv) e_piv
        B[row][i] = 1;
        B[row][piv] = sf.neg[sf.mu(g[i], ginv)];
        ++row;
      }
    }
    // polar conic matrix in the B basis: Hessian/2 restricted
    std::array<std::array<std::uint32_t, 4>, 4> Hf{};
    for (size_t h = 0; h < hess.size(); ++h) {
      std::uint32_t v = hess[h].eval(sf, P);
      auto [i, j] = hess_ij[h];
      Hf[i][j] = v;
      Hf[j][i] = v;
    }
    std::array<std::array<std::uint32_t, 3>, 3> M{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        std::uint32_t acc = 0;
        for (int i = 0; i < 4; ++i) {
          if (B[a][i] == 0) continue;
          for (int j = 0; j < 4; ++j) {
            if (Hf[i][j] == 0 || B[b][j] == 0) continue;
            acc = sf.ad(acc, sf.mu(B[a][i], sf.mu(Hf[i][j], B[b][j])));
          }
        }
        M[a][b] = acc;
      }
    // third polar as a dense ternary cubic in the plane coordinates:
    // C3[a][b] is the coefficient of mu1^a mu2^b mu3^(3-a-b)
    std::vector<std::uint32_t> tvals(third.size());
    for (size_t h = 0; h < third.size(); ++h) tvals[h] = third[h].eval(sf, P);
    std::uint32_t C3[4][4] = {};
    for (size_t h = 0; h < third.size(); ++h) {
      auto [i, j, k] = third_ijk[h];
      int reps = (i == j && j == k) ? 1 : ((i == j || j == k || i == k) ? 3 : 6);
      std::uint32_t repsc = (std::uint32_t)((std::uint64_t)reps % sf.p);
      std::uint32_t base = sf.mu(tvals[h], repsc);
      if (!base) continue;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c) {
            std::uint32_t v = sf.mu(base, sf.mu(B[a][i], sf.mu(B[b][j], B[c][k])));
            if (!v) continue;
            int e1 = (a == 0) + (b == 0) + (c == 0);
            int e2 = (a == 1) + (b == 1) + (c == 1);
            C3[e1][e2] = sf.ad(C3[e1][e2], v);
          }
    }
    auto cubic_at = [&](const std::array<std::uint32_t, 3>& mu) {
      std::uint32_t acc = 0;
      std::uint32_t p1 = 1;
      for (int a = 0; a <= 3; ++a) {
        std::uint32_t p2 = 1;
        for (int b = 0; a + b <= 3; ++b) {
          if (C3[a][b]) {
            std::uint32_t m = sf.mu(C3[a][b], sf.mu(p1, p2));
            int c = 3 - a - b;
            for (int e = 0; e < c; ++e) m = sf.mu(m, mu[2]);
            acc = sf.ad(acc, m);
          }
          p2 = sf.mu(p2, mu[1]);
        }
        p1 = sf.mu(p1, mu[0]);
      }
      return acc;
    };

    std::vector<std::array<std::uint32_t, 3>> pts;
    bool conic_zero = true;
    for (auto& row : M)
      for (auto x : row) conic_zero = conic_zero && (x == 0);
    if (conic_zero) {
      // the polar conic vanishes identically: sweep the zero locus of the
      // third polar directly (Horner in mu1 per mu2 on the mu3 = 1 patch)
      for (std::uint32_t m2 = 0; m2 < sf.q; ++m2) {
        std::uint32_t m2p[4] = {1, m2, sf.mu(m2, m2), 0};
        m2p[3] = sf.mu(m2p[2], m2);
        std::uint32_t cf[4];
        for (int a = 0; a <= 3; ++a) {
          std::uint32_t acc = 0;
          for (int b = 0; a + b <= 3; ++b) acc = sf.ad(acc, sf.mu(C3[a][b], m2p[b]));
          cf[a] = acc;
        }
        for (std::uint32_t m1 = 0; m1 < sf.q; ++m1) {
          std::uint32_t v = cf[3];
          v = sf.ad(sf.mu(v, m1), cf[2]);
          v = sf.ad(sf.mu(v, m1), cf[1]);
          v = sf.ad(sf.mu(v, m1), cf[0]);
          if (v == 0) pts.push_back({m1, m2, 1});
        }
      }
      for (std::uint32_t m1 = 0; m1 < sf.q; ++m1) {
        std::uint32_t v = sf.ad(sf.mu(C3[3][0], sf.mu(m1, sf.mu(m1, m1))),
                                sf.ad(sf.mu(C3[2][1], sf.mu(m1, m1)),
                                      sf.ad(sf.mu(C3[1][2], m1), C3[0][3])));
        if (v == 0) pts.push_back({m1, 1, 0});
      }
      if (C3[3][0] == 0) pts.push_back({1, 0, 0});
    } else {
      conic_points(sf, M, pts);
    }
    std::vector<LineKey> local;
    for (auto& mu : pts) {
      if (mu[0] == 0 && mu[1] == 0 && mu[2] == 0) continue;
      if (cubic_at(mu) != 0) continue;  // third polar filter
      std::array<std::uint32_t, 4> Q{};
      for (int i = 0; i < 4; ++i) {
        std::uint32_t acc = 0;
        for (int a = 0; a < 3; ++a) acc = sf.ad(acc, sf.mu(mu[a], B[a][i]));
        Q[i] = acc;
      }
      if (Q[2] == 0 && Q[3] == 0) continue;  // span(P, Q) is the line itself
      // direct verification on five points of the line
      bool on = f.eval(sf, Q) == 0;
      for (std::uint32_t tau = 1; tau <= 3 && on; ++tau) {
        std::array<std::uint32_t, 4> pt{};
        std::uint32_t tidx = sf.from_fq(Fq(K, tau));
        for (int i = 0; i < 4; ++i) pt[i] = sf.ad(P[i], sf.mu(tidx, Q[i]));
        on = f.eval(sf, pt) == 0;
      }
      if (!on) continue;
      // canonical key: pencil plane from (Q3 : Q4), dual point in the plane
      LineKey key{};
      std::array<std::uint32_t, 2> st = {Q[2], Q[3]};
      normalize_idx(sf, st);
      // plane coordinates: P = (p1, p2, 0), Q = (q1, q2, u) with u from the
      // normalized parameter
      std::uint32_t u = (st[1] != 0) ? Q[3] : Q[2];
      std::array<std::uint32_t, 3> A3 = {P[0], P[1], 0}, B3 = {Q[0], Q[1], u};
      // dual = A3 x B3
      std::array<std::uint32_t, 3> dual = {
          sf.su(sf.mu(A3[1], B3[2]), sf.mu(A3[2], B3[1])),
          sf.su(sf.mu(A3[2], B3[0]), sf.mu(A3[0], B3[2])),
          sf.su(sf.mu(A3[0], B3[1]), sf.mu(A3[1], B3[0]))};
      normalize_idx(sf, dual);
      key.v = {st[0], st[1], dual[0], dual[1], dual[2]};
      local.push_back(key);
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    lines.insert(lines.end(), local.begin(), local.end());
  };

  for (std::uint32_t x1 = 0; x1 < sf.q; ++x1) consider_point(x1, 1);
  consider_point(1, 0);
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<LineKey> rational_lines_from_table(const QuarticWithLine& X,
                                               const FiberTable& table, int L) {
  const Tower& tw = *X.tower;
  const FieldCtx& K = tw.field(L);
  const SmallField& sf = small_field_for(K);
  std::vector<LineKey> out;
  for (const auto& fib : table.fibers) {
    // parameter must be rational over F_q
    int d = fib.param.field_degree;
    int g = std::gcd(d, L);
    auto sd = tw.try_descend(fib.param.s, tw.field(g));
    auto td = tw.try_descend(fib.param.t, tw.field(g));
    if (!sd || !td) continue;
    Fq sK = tw.embed(*sd, K), tK = tw.embed(*td, K);
    for (const auto& comp : fib.components_plane) {
      int D = comp.ctx().k;
      int gg = std::gcd(D, L);
      // dual coefficients (a : b : c) of the line inside the plane
      std::array<Fq, 3> dual = {Fq::zero(comp.ctx()), Fq::zero(comp.ctx()),
                                Fq::zero(comp.ctx())};
      for (const auto& t : comp.terms())
        for (int v = 0; v < 3; ++v)
          if (t.e[v]) dual[v] = t.c;
      bool ok = true;
      std::array<Fq, 3> dualK = {Fq::zero(K), Fq::zero(K), Fq::zero(K)};
      for (int v = 0; v < 3 && ok; ++v) {
        auto dd = tw.try_descend(dual[v], tw.field(gg));
        if (!dd)
          ok = false;
        else
          dualK[v] = tw.embed(*dd, K);
      }
      if (!ok) continue;
      LineKey key{};
      std::array<std::uint32_t, 2> st = {sf.from_fq(sK), sf.from_fq(tK)};
      normalize_idx(sf, st);
      std::array<std::uint32_t, 3> dl = {sf.from_fq(dualK[0]), sf.from_fq(dualK[1]),
                                         sf.from_fq(dualK[2])};
      normalize_idx(sf, dl);
      key.v = {st[0], st[1], dl[0], dl[1], dl[2]};
      out.push_back(key);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qline
