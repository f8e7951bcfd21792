#include "srlab/construct.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "srlab/error.hpp"

namespace srlab {

Matrix qpoly_matrix(std::span<const Elem> coeffs, const Basis& B) {
  const FieldPtr& E = B.field();
  if (E->is_prime()) throw Error(ErrorKind::FieldMismatch, "q-polynomials need a proper extension");
  std::size_t m = B.size();
  if (coeffs.size() != m) throw Error(ErrorKind::LengthMismatch, "need exactly m coefficients");
  std::uint64_t q = E->base()->order();
  Matrix out(E->base(), m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Elem x = B[j], img = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (coeffs[i]) img = E->add(img, E->mul(coeffs[i], x));
      x = E->pow(x, q);
    }
    auto col = B.expand(img);
    for (std::size_t r = 0; r < m; ++r) out.set(r, j, col[r]);
  }
  return out;
}

SumRankCode sr_construct(const std::vector<LinearCode>& codes, const Basis& B) {
  const FieldPtr& E = B.field();
  std::size_t m = B.size();
  if (codes.size() != m) throw Error(ErrorKind::LengthMismatch, "need one code per basis element");
  std::size_t t = codes[0].n();
  for (auto& c : codes) {
    require_same_field(c.field(), E, "sr_construct");
    if (c.n() != t) throw Error(ErrorKind::LengthMismatch, "codes of different length");
  }
  AmbientProfile prof = AmbientProfile::uniform(E->base(), static_cast<unsigned>(m), static_cast<unsigned>(m), t);
  Matrix gen(E->base(), 0, prof.length());
  std::size_t expected = 0;
  std::vector<Elem> a(m), flat(prof.length());
  for (std::size_t i = 0; i < m; ++i) {
    expected += m * codes[i].k();
    for (std::size_t r = 0; r < codes[i].k(); ++r)
      for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t j = 0; j < t; ++j) {
          std::fill(a.begin(), a.end(), 0);
          a[i] = E->mul(B[l], codes[i].generator().at(r, j));
          Matrix blk = qpoly_matrix(a, B);
          for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) flat[j * m * m + x * m + y] = blk.at(x, y);
        }
        gen.append_row(flat);
      }
  }
  SumRankCode out(prof, gen);
  if (out.dim() != expected) throw Error(ErrorKind::DimensionMismatch, "SR dimension differs from m * sum k_i");
  return out;
}

AmbientProfile default_matb_profile(const FieldPtr& base, unsigned m, std::size_t N) {
  if (N < m) throw Error(ErrorKind::ProfileInvalid, "length shorter than the block height");
  std::size_t t = N / m, r = N % m;
  BlockShapes b(t, {m, m});
  b[0].second += static_cast<unsigned>(r);
  return AmbientProfile(base, std::move(b));
}

SumRankCode matb_construct(const LinearCode& C, const Basis& B, const AmbientProfile& profile) {
  const FieldPtr& E = B.field();
  require_same_field(C.field(), E, "matb_construct code field");
  require_same_field(profile.field(), B.base(), "matb_construct profile field");
  std::size_t m = B.size(), N = 0;
  for (auto [mi, ni] : profile.blocks()) {
    if (mi != m) throw Error(ErrorKind::ProfileMismatch, "every block needs m rows");
    N += ni;
  }
  if (N != C.n()) throw Error(ErrorKind::ProfileMismatch, "block columns do not sum to the code length");
  Matrix gen(profile.field(), 0, profile.length());
  std::vector<Elem> flat(profile.length());
  for (std::size_t r = 0; r < C.k(); ++r)
    for (std::size_t l = 0; l < m; ++l) {
      std::size_t coord = 0;
      for (std::size_t i = 0; i < profile.num_blocks(); ++i) {
        unsigned ni = profile.blocks()[i].second;
        for (unsigned s = 0; s < ni; ++s, ++coord) {
          auto col = B.expand(E->mul(B[l], C.generator().at(r, coord)));
          for (std::size_t j = 0; j < m; ++j) flat[profile.offset(i) + j * ni + s] = col[j];
        }
      }
      gen.append_row(flat);
    }
  SumRankCode out(profile, gen);
  if (out.dim() != m * C.k()) throw Error(ErrorKind::DimensionMismatch, "Mat_B dimension differs from m * dim C");
  return out;
}

const F4RankTable& f4_rank_table() {
  static const F4RankTable table = [] {
    FieldPtr f4 = Field::tower(2, {2});
    Basis B = Basis::polynomial(f4);
    F4RankTable t{};
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) {
        std::vector<Elem> c{a, b};
        t[a][b] = static_cast<std::uint8_t>(rank(qpoly_matrix(c, B)));
      }
    return t;
  }();
  return table;
}

namespace {

using u64 = std::uint64_t;

// Codewords in a fixed order, truncated to the first cap entries.
std::vector<std::vector<Elem>> all_codewords(const LinearCode& c, bool projective, u64 cap) {
  const Field& F = *c.field();
  auto grow = [&](std::vector<std::vector<Elem>>& span, std::size_t r, u64 limit) {
    std::size_t sz = span.size();
    for (Elem lam = 1; lam < F.order() && span.size() < limit; ++lam)
      for (std::size_t i = 0; i < sz && span.size() < limit; ++i) {
        auto v = span[i];
        for (std::size_t x = 0; x < c.n(); ++x) v[x] = F.add(v[x], F.mul(lam, c.generator().at(r, x)));
        span.push_back(std::move(v));
      }
  };
  if (projective) {
    // leading coefficient 1 on row j, anything on later rows
    std::vector<std::vector<Elem>> res;
    for (std::size_t j = c.k(); j-- > 0 && res.size() < cap;) {
      std::vector<std::vector<Elem>> span{std::vector<Elem>(c.n(), 0)};
      for (std::size_t r = j + 1; r < c.k(); ++r) grow(span, r, cap - res.size());
      for (auto& v : span) {
        for (std::size_t x = 0; x < c.n(); ++x) v[x] = F.add(v[x], c.generator().at(j, x));
        res.push_back(std::move(v));
      }
    }
    return res;
  }
  std::vector<std::vector<Elem>> out{std::vector<Elem>(c.n(), 0)};
  for (std::size_t r = 0; r < c.k() && out.size() < cap; ++r) grow(out, r, cap);
  return out;
}

u64 sat_mul(u64 a, u64 b) {
  const u64 top = 1ull << 63;
  if (a == 0 || b == 0) return 0;
  return a > top / b ? top : std::min(top, a * b);
}

u64 sat_pow(u64 q, std::size_t k) {
  u64 r = 1;
  for (std::size_t i = 0; i < k; ++i) r = sat_mul(r, q);
  return r;
}

std::vector<u64> support(const std::vector<Elem>& v, std::size_t words) {
  std::vector<u64> m(words, 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) m[i >> 6] |= 1ull << (i & 63);
  return m;
}

struct PairBest {
  unsigned w = ~0u;
  u64 idx = ~0ull;
};

}  // namespace

DistanceResult pairwise_sr_distance(const LinearCode& c0, const LinearCode& c1, const SearchOptions& opt) {
  require_same_field(c0.field(), c1.field(), "pairwise_sr_distance");
  const Field& F = *c0.field();
  if (F.order() != 4 || F.degree() != 2)
    throw Error(ErrorKind::MethodUnavailable, "pairwise enumeration needs GF(4) over GF(2)");
  if (c0.n() != c1.n()) throw Error(ErrorKind::LengthMismatch, "codes of different length");
  if (c0.k() + c1.k() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code is undefined");
  const auto& T = f4_rank_table();

  bool scale_invariant = true, pattern = true;
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      for (Elem l = 1; l < 4; ++l) scale_invariant = scale_invariant && T[F.mul(l, a)][F.mul(l, b)] == T[a][b];
      Elem pa = a ? 1 : 0, pb = b ? 1 : 0;
      pattern = pattern && T[a][b] == T[pa][pb];
    }
  const unsigned w10 = T[1][0], w01 = T[0][1], w11 = T[1][1];

  std::size_t n = c0.n(), words = (n + 63) / 64;
  const u64 top = 1ull << 63;
  u64 size0 = sat_pow(4, c0.k()), size1 = sat_pow(4, c1.k());
  u64 proj0 = scale_invariant ? (size0 == top ? top : (size0 - 1) / 3) : size0 - 1;
  u64 proj1 = scale_invariant ? (size1 == top ? top : (size1 - 1) / 3) : size1 - 1;
  u64 total = std::min(top, proj1 + sat_mul(proj0, size1));

  // Past the budget only prefixes of the lists are materialised.
  u64 cap1 = size1, cap0 = proj0 + 1, capp = proj1;
  if (total > opt.budget) {
    const u64 keep = 1ull << 14;
    cap1 = std::min(size1, keep);
    capp = std::min(proj1, keep);
    cap0 = std::min({proj0, opt.budget / cap1 + 1, u64{1} << 16}) + 1;
  }
  auto list1 = all_codewords(c1, false, cap1);
  auto list0 = all_codewords(c0, scale_invariant, cap0 - (scale_invariant ? 1 : 0));
  if (scale_invariant) list0.insert(list0.begin(), std::vector<Elem>(n, 0));
  std::vector<std::vector<Elem>> list1p;  // nonzero c1 up to scaling, paired with c0 = 0
  if (scale_invariant) {
    list1p = all_codewords(c1, true, capp);
  } else {
    list1p = all_codewords(c1, false, capp + 1);
    list1p.erase(list1p.begin());
  }

  // pairs: first (0, c1) for c1 in list1p, then (c0, c1) for c0 in list0[1..], c1 in list1
  u64 head = list1p.size();
  u64 outer = list0.size() - 1;
  u64 listed = head + sat_mul(outer, list1.size());
  u64 limit = std::min({total, listed, opt.budget});

  std::vector<std::vector<u64>> s0, s1;
  for (auto& v : list0) s0.push_back(support(v, words));
  for (auto& v : list1) s1.push_back(support(v, words));

  auto weight_general = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    unsigned w = 0;
    for (std::size_t i = 0; i < n; ++i) w += T[a[i]][b[i]];
    return w;
  };
  auto weight = [&](std::size_t i0, std::size_t i1) -> unsigned {
    if (!pattern) return weight_general(list0[i0], list1[i1]);
    unsigned w = 0;
    for (std::size_t x = 0; x < words; ++x) {
      u64 a = s0[i0][x], b = s1[i1][x];
      w += w10 * std::popcount(a & ~b) + w01 * std::popcount(b & ~a) + w11 * std::popcount(a & b);
    }
    return w;
  };

  PairBest head_best;
  for (u64 i = 0; i < std::min(head, limit); ++i) {
    unsigned w = pattern ? 0 : weight_general(list0[0], list1p[i]);
    if (pattern)
      for (auto x : support(list1p[i], words)) w += w01 * std::popcount(x);
    if (w < head_best.w) head_best = {w, i};
  }

  unsigned jobs = std::max(1u, opt.jobs);
  u64 body = limit > head ? limit - head : 0;
  std::vector<PairBest> parts(jobs);
  auto run = [&](unsigned part) {
    u64 a = body * part / jobs, b = body * (part + 1) / jobs;
    PairBest best;
    u64 k1 = list1.size();
    for (u64 p = a; p < b;) {
      u64 i0 = 1 + p / k1, i1 = p % k1;
      u64 stop = std::min<u64>(b, (p / k1 + 1) * k1);
      if (words == 1 && pattern) {
        u64 A = s0[i0][0];
        for (; p < stop; ++p, ++i1) {
          u64 B = s1[i1][0];
          unsigned w = w10 * std::popcount(A & ~B) + w01 * std::popcount(B & ~A) + w11 * std::popcount(A & B);
          if (w < best.w) best = {w, head + p};
        }
      } else {
        for (; p < stop; ++p, ++i1) {
          unsigned w = weight(i0, i1);
          if (w < best.w) best = {w, head + p};
        }
      }
    }
    parts[part] = best;
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> th;
    for (unsigned i = 0; i < jobs; ++i) th.emplace_back(run, i);
    for (auto& t : th) t.join();
  }
  PairBest best = head_best;
  for (auto& p : parts)
    if (p.w < best.w || (p.w == best.w && p.idx < best.idx)) best = p;

  DistanceResult res;
  res.method = "codeword pairs";
  res.total = total;
  res.evaluated = limit;
  res.exact = limit == total;
  res.distance = best.w;
  res.lower_bound = res.exact ? best.w : 1;
  if (best.idx != ~0ull) {
    std::vector<Elem> a, b;
    if (best.idx < head) {
      a = list0[0];
      b = list1p[best.idx];
    } else {
      u64 p = best.idx - head;
      a = list0[1 + p / list1.size()];
      b = list1[p % list1.size()];
    }
    res.witness = a;
    res.witness.insert(res.witness.end(), b.begin(), b.end());
  }
  return res;
}

BoundPair sr_distance_bounds(unsigned m, const std::vector<unsigned>& d) {
  if (d.size() != m || m == 0) throw Error(ErrorKind::LengthMismatch, "need one distance per constituent");
  unsigned a = ~0u, b = ~0u, mn = ~0u;
  for (unsigned i = 0; i < m; ++i) {
    a = std::min(a, (m - i) * d[i]);
    b = std::min(b, (i + 1) * d[i]);
    mn = std::min(mn, d[i]);
  }
  return {std::max(a, b), m * mn};
}

BoundPair matb_distance_bounds(unsigned d, const AmbientProfile& profile) {
  std::vector<unsigned> cols;
  unsigned sum = 0;
  for (auto [m, n] : profile.blocks()) {
    cols.push_back(n);
    sum += n;
  }
  if (d == 0) throw Error(ErrorKind::DistanceExceedsLength, "distance must be positive");
  if (d > sum) throw Error(ErrorKind::DistanceExceedsLength, "d exceeds the total number of columns");
  std::sort(cols.begin(), cols.end(), std::greater<>());
  unsigned s = 0, acc = 0;
  while (acc + cols[s] < d) acc += cols[s++];
  unsigned upper = std::min<unsigned>(d, static_cast<unsigned>(profile.rank_sum()));
  return {s + 1, upper};
}

BoundPair matb_square_bounds(unsigned d, std::size_t t) {
  if (d == 0 || d > 2 * t) throw Error(ErrorKind::DistanceExceedsLength, "need 0 < d <= 2t");
  return {(d + 1) / 2, d};
}

unsigned selfdual_sr_distance_upper(std::size_t t) { return static_cast<unsigned>(8 * (t / 12 + 1)); }

bool verify_duality_sr(const std::vector<LinearCode>& codes, const Basis& B) {
  std::vector<LinearCode> duals;
  for (auto& c : codes) duals.push_back(dual(c));
  return dual_tr(sr_construct(codes, B)) == sr_construct(duals, B);
}

bool verify_duality_matb(const LinearCode& C, const Basis& B, const AmbientProfile& profile) {
  return dual_tr(matb_construct(C, B, profile)) == matb_construct(dual(C), dual_basis(B), profile);
}

}  // namespace srlab
