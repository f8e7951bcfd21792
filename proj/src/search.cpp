#include "srlab/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <list>
#include <thread>

#include "srlab/error.hpp"

namespace srlab {

namespace {

using u64 = std::uint64_t;
constexpr u64 kCap = 1ull << 63;

u64 sat_pow(u64 p, u64 f) {
  unsigned __int128 r = 1;
  for (u64 i = 0; i < f; ++i) {
    r *= p;
    if (r >= kCap) return kCap;
  }
  return static_cast<u64>(r);
}

u64 sat_add(u64 a, u64 b) { return (a >= kCap - b) ? kCap : a + b; }

struct Plan {
  unsigned p = 2, e = 1;
  std::size_t k = 0;
  std::vector<u64> size, start;  // segment s has leading row k-1-s
  u64 total = 0;
};

Plan make_plan(unsigned p, unsigned e, std::size_t k) {
  Plan pl;
  pl.p = p;
  pl.e = e;
  pl.k = k;
  u64 acc = 0;
  for (std::size_t s = 0; s < k; ++s) {
    pl.start.push_back(acc);
    u64 sz = sat_pow(p, u64(e) * s);
    pl.size.push_back(sz);
    acc = sat_add(acc, sz);
  }
  pl.total = acc;
  return pl;
}

// Digits of the p-ary modular Gray code of x, least significant first.
std::vector<unsigned> gray_digits(u64 x, unsigned p) {
  std::vector<unsigned> d;
  while (x) {
    d.push_back(static_cast<unsigned>(x % p));
    x /= p;
  }
  std::vector<unsigned> g(d.size());
  for (std::size_t t = 0; t < d.size(); ++t) {
    unsigned next = t + 1 < d.size() ? d[t + 1] : 0;
    g[t] = (d[t] + p - next) % p;
  }
  return g;
}

unsigned trailing_zero_digits(u64 x, unsigned p) {
  if (p == 2) return static_cast<unsigned>(std::countr_zero(x));
  unsigned t = 0;
  while (x % p == 0) {
    x /= p;
    ++t;
  }
  return t;
}

struct Best {
  unsigned w = std::numeric_limits<unsigned>::max();
  u64 idx = kCap;
  void consider(unsigned weight, u64 index) {
    if (weight < w || (weight == w && index < idx)) {
      w = weight;
      idx = index;
    }
  }
};

/* ---- kernels ---- */

template <std::size_t W>
using Bits = std::array<u64, W>;

inline u64 get_bits(const u64* v, std::size_t words, std::size_t pos, unsigned len) {
  std::size_t w = pos >> 6, o = pos & 63;
  u64 x = v[w] >> o;
  if (o + len > 64 && w + 1 < words) x |= v[w + 1] << (64 - o);
  return len == 64 ? x : (x & ((1ull << len) - 1));
}

unsigned xor_rank(u64* rows, unsigned m) {
  unsigned r = 0;
  for (unsigned i = 0; i < m; ++i) {
    u64 x = rows[i];
    for (unsigned j = 0; j < r; ++j) x = std::min(x, x ^ rows[j]);
    if (x) rows[r++] = x;
  }
  return r;
}

struct BitBlock {
  unsigned m, n;
  std::size_t off;
  const std::vector<std::uint8_t>* table;  // set when m*n <= 16
};

struct BlockTables {
  std::list<std::pair<std::pair<unsigned, unsigned>, std::vector<std::uint8_t>>> shapes;
  const std::vector<std::uint8_t>* get(unsigned m, unsigned n) {
    if (m * n > 16) return nullptr;
    for (auto& s : shapes)
      if (s.first == std::make_pair(m, n)) return &s.second;
    std::vector<std::uint8_t> t(1u << (m * n));
    for (u64 x = 0; x < t.size(); ++x) {
      u64 rows[16];
      for (unsigned r = 0; r < m; ++r) rows[r] = (x >> (r * n)) & ((1ull << n) - 1);
      t[x] = static_cast<std::uint8_t>(xor_rank(rows, m));
    }
    shapes.push_back({{m, n}, std::move(t)});
    return &shapes.back().second;
  }
};

template <std::size_t W>
struct BitHamming {
  using Vec = Bits<W>;
  std::vector<Vec> gens;
  unsigned planes = 1;
  std::size_t wp = 1;
  struct State {
    Vec v;
  };
  State make_state() const { return {}; }
  void load(State& s, const Vec& v) const { s.v = v; }
  void step(State& s, std::size_t g) const {
    for (std::size_t i = 0; i < W; ++i) s.v[i] ^= gens[g][i];
  }
  void add_to(Vec& v, std::size_t g, unsigned times) const {
    if (times & 1)
      for (std::size_t i = 0; i < W; ++i) v[i] ^= gens[g][i];
  }
  unsigned weight(const State& s) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < wp; ++i) {
      u64 x = 0;
      for (unsigned b = 0; b < planes; ++b) x |= s.v[b * wp + i];
      w += static_cast<unsigned>(std::popcount(x));
    }
    return w;
  }
};

template <std::size_t W>
struct BitSumRank {
  using Vec = Bits<W>;
  std::vector<Vec> gens;
  std::vector<BitBlock> blocks;
  std::vector<std::vector<std::uint32_t>> touched;
  struct State {
    Vec v;
    std::vector<std::uint8_t> ranks;
    unsigned total = 0;
  };
  State make_state() const {
    State s{};
    s.ranks.assign(blocks.size(), 0);
    return s;
  }
  unsigned block_rank(const Vec& v, const BitBlock& b) const {
    if (b.table) return (*b.table)[get_bits(v.data(), W, b.off, b.m * b.n)];
    u64 rows[64];
    unsigned m = std::min(b.m, 64u);
    for (unsigned r = 0; r < m; ++r) rows[r] = get_bits(v.data(), W, b.off + std::size_t(r) * b.n, b.n);
    return xor_rank(rows, m);
  }
  void load(State& s, const Vec& v) const {
    s.v = v;
    s.total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      s.ranks[i] = static_cast<std::uint8_t>(block_rank(v, blocks[i]));
      s.total += s.ranks[i];
    }
  }
  void step(State& s, std::size_t g) const {
    for (std::size_t i = 0; i < W; ++i) s.v[i] ^= gens[g][i];
    for (auto bi : touched[g]) {
      unsigned r = block_rank(s.v, blocks[bi]);
      s.total = s.total - s.ranks[bi] + r;
      s.ranks[bi] = static_cast<std::uint8_t>(r);
    }
  }
  void add_to(Vec& v, std::size_t g, unsigned times) const {
    if (times & 1)
      for (std::size_t i = 0; i < W; ++i) v[i] ^= gens[g][i];
  }
  unsigned weight(const State& s) const { return s.total; }
};

unsigned field_rank(const Field& F, std::vector<Elem> a, unsigned m, unsigned n) {
  unsigned r = 0;
  for (unsigned c = 0; c < n && r < m; ++c) {
    unsigned p = r;
    while (p < m && a[p * n + c] == 0) ++p;
    if (p == m) continue;
    if (p != r)
      for (unsigned j = 0; j < n; ++j) std::swap(a[p * n + j], a[r * n + j]);
    Elem s = F.inv(a[r * n + c]);
    for (unsigned i = r + 1; i < m; ++i) {
      Elem f = a[i * n + c];
      if (f == 0) continue;
      f = F.mul(f, s);
      for (unsigned j = c; j < n; ++j) a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[r * n + j]));
    }
    ++r;
  }
  return r;
}

struct Generic {
  using Vec = std::vector<Elem>;
  const Field* F = nullptr;
  std::vector<Vec> gens;
  BlockShapes shapes;
  std::vector<std::size_t> offs;
  std::vector<std::vector<std::uint32_t>> touched;
  struct State {
    Vec v;
    std::vector<unsigned> ranks;
    unsigned total = 0;
  };
  State make_state() const {
    State s;
    s.ranks.assign(shapes.size(), 0);
    return s;
  }
  unsigned block(const Vec& v, std::size_t i) const {
    auto [m, n] = shapes[i];
    std::vector<Elem> a(v.begin() + offs[i], v.begin() + offs[i] + std::size_t(m) * n);
    return field_rank(*F, std::move(a), m, n);
  }
  void recount(State& s) const {
    if (shapes.empty()) {
      s.total = 0;
      for (Elem x : s.v) s.total += x != 0;
    }
  }
  void load(State& s, const Vec& v) const {
    s.v = v;
    if (shapes.empty()) return recount(s);
    s.total = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      s.ranks[i] = block(v, i);
      s.total += s.ranks[i];
    }
  }
  void step(State& s, std::size_t g) const {
    for (std::size_t i = 0; i < s.v.size(); ++i) s.v[i] = F->add(s.v[i], gens[g][i]);
    if (shapes.empty()) return recount(s);
    for (auto bi : touched[g]) {
      unsigned r = block(s.v, bi);
      s.total = s.total - s.ranks[bi] + r;
      s.ranks[bi] = r;
    }
  }
  void add_to(Vec& v, std::size_t g, unsigned times) const {
    for (unsigned t = 0; t < times; ++t)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = F->add(v[i], gens[g][i]);
  }
  unsigned weight(const State& s) const { return s.total; }
};

/* ---- engine ---- */

template <class K>
typename K::Vec segment_start_vector(const K& ker, const Plan& pl, std::size_t j, u64 local) {
  auto v = ker.gens[j * pl.e];
  auto g = gray_digits(local, pl.p);
  std::size_t base = (j + 1) * pl.e;
  for (std::size_t t = 0; t < g.size(); ++t)
    if (g[t]) ker.add_to(v, base + t, g[t]);
  return v;
}

template <class K>
Best run_range(const K& ker, const Plan& pl, u64 a, u64 b) {
  Best best;
  if (a >= b) return best;
  auto st = ker.make_state();
  std::size_t s = std::upper_bound(pl.start.begin(), pl.start.end(), a) - pl.start.begin() - 1;
  u64 idx = a;
  while (idx < b && s < pl.k) {
    std::size_t j = pl.k - 1 - s;
    u64 local = idx - pl.start[s];
    u64 end_local = std::min(pl.size[s], b - pl.start[s]);
    std::size_t base = (j + 1) * pl.e;
    ker.load(st, segment_start_vector(ker, pl, j, local));
    best.consider(ker.weight(st), pl.start[s] + local);
    for (u64 l = local + 1; l < end_local; ++l) {
      ker.step(st, base + trailing_zero_digits(l, pl.p));
      unsigned w = ker.weight(st);
      if (w < best.w) {
        best.w = w;
        best.idx = pl.start[s] + l;
      }
    }
    idx = pl.start[s] + end_local;
    ++s;
  }
  return best;
}

std::vector<Elem> scale_add(const Field& F, std::vector<Elem> acc, Elem c, std::span<const Elem> row) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = F.add(acc[i], F.mul(c, row[i]));
  return acc;
}

// Message coefficients (over the code field) of enumeration index idx.
std::vector<Elem> message_of(const Plan& pl, u64 idx) {
  std::size_t s = std::upper_bound(pl.start.begin(), pl.start.end(), idx) - pl.start.begin() - 1;
  std::size_t j = pl.k - 1 - s;
  std::vector<Elem> msg(pl.k, 0);
  msg[j] = 1;
  auto g = gray_digits(idx - pl.start[s], pl.p);
  for (std::size_t t = 0; t < g.size(); ++t) {
    std::size_t row = j + 1 + t / pl.e;
    Elem scale = 1;
    for (unsigned b = 0; b < t % pl.e; ++b) scale *= pl.p;
    msg[row] += g[t] * scale;
  }
  return msg;
}

template <class K>
DistanceResult run(const K& ker, const Matrix& gen, const SearchOptions& opt) {
  const Field& F = *gen.field();
  Plan pl = make_plan(F.characteristic(), F.absolute_degree(), gen.rows());
  DistanceResult res;
  res.method = "exhaustive";
  res.total = pl.total;
  u64 limit = std::min<u64>(pl.total, opt.budget);
  res.evaluated = limit;
  res.exact = limit == pl.total;

  unsigned jobs = std::max(1u, opt.jobs);
  std::vector<Best> parts(jobs);
  std::vector<u64> cut(jobs + 1);
  for (unsigned i = 0; i <= jobs; ++i) cut[i] = static_cast<u64>((unsigned __int128)limit * i / jobs);
  if (jobs == 1) {
    parts[0] = run_range(ker, pl, 0, limit);
  } else {
    std::vector<std::thread> th;
    for (unsigned i = 0; i < jobs; ++i) th.emplace_back([&, i] { parts[i] = run_range(ker, pl, cut[i], cut[i + 1]); });
    for (auto& t : th) t.join();
  }
  Best best;
  for (auto& b : parts) best.consider(b.w, b.idx);
  std::vector<Elem> msg;
  if (best.idx != kCap) msg = message_of(pl, best.idx);

  if (!res.exact) {
    // Low-weight messages: every g_i and g_i + c g_j.
    auto st = ker.make_state();
    auto consider_msg = [&](const std::vector<Elem>& m) {
      typename K::Vec v = ker.gens[0];
      bool first = true;
      for (std::size_t r = 0; r < pl.k; ++r) {
        Elem c = m[r];
        for (unsigned b = 0; b < pl.e && c; ++b, c /= pl.p) {
          unsigned d = c % pl.p;
          if (!d) continue;
          if (first) {
            v = ker.gens[r * pl.e + b];
            ker.add_to(v, r * pl.e + b, d - 1);
            first = false;
          } else {
            ker.add_to(v, r * pl.e + b, d);
          }
        }
      }
      ker.load(st, v);
      unsigned w = ker.weight(st);
      if (w < best.w) {
        best.w = w;
        msg = m;
      }
    };
    std::vector<Elem> m(pl.k, 0);
    for (std::size_t i = 0; i < pl.k; ++i) {
      m[i] = 1;
      consider_msg(m);
      for (std::size_t j = i + 1; j < pl.k; ++j) {
        for (u64 c = 1; c < F.order(); ++c) {
          m[j] = static_cast<Elem>(c);
          consider_msg(m);
        }
        m[j] = 0;
      }
      m[i] = 0;
    }
  }

  res.distance = best.w;
  res.lower_bound = res.exact ? best.w : 1;
  std::vector<Elem> w(gen.cols(), 0);
  for (std::size_t r = 0; r < msg.size(); ++r)
    if (msg[r]) w = scale_add(F, std::move(w), msg[r], gen.row(r));
  res.witness = std::move(w);
  return res;
}

std::vector<std::vector<std::uint32_t>> touched_blocks(const std::vector<std::vector<Elem>>& gens, const BlockShapes& shapes) {
  std::vector<std::vector<std::uint32_t>> out(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::size_t off = 0;
    for (std::size_t b = 0; b < shapes.size(); ++b) {
      std::size_t len = std::size_t(shapes[b].first) * shapes[b].second;
      for (std::size_t i = off; i < off + len; ++i)
        if (gens[g][i]) {
          out[g].push_back(static_cast<std::uint32_t>(b));
          break;
        }
      off += len;
    }
  }
  return out;
}

// F_p generators: (p^b as an element) * row i, index i*e + b.
std::vector<std::vector<Elem>> prime_generators(const Matrix& gen) {
  const Field& F = *gen.field();
  unsigned e = F.absolute_degree();
  std::vector<std::vector<Elem>> out;
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    Elem s = 1;
    for (unsigned b = 0; b < e; ++b, s *= F.characteristic()) {
      std::vector<Elem> v(gen.cols());
      for (std::size_t c = 0; c < gen.cols(); ++c) v[c] = F.mul(s, gen.at(r, c));
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <std::size_t W>
DistanceResult run_bits(const Matrix& gen, const BlockShapes& shapes, const std::vector<std::vector<Elem>>& pg,
                        const SearchOptions& opt) {
  const Field& F = *gen.field();
  std::size_t n = gen.cols();
  if (shapes.empty()) {
    BitHamming<W> ker;
    ker.planes = F.absolute_degree();
    ker.wp = (n + 63) / 64;
    for (auto& v : pg) {
      Bits<W> b{};
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned bit = 0; bit < ker.planes; ++bit)
          if ((v[i] >> bit) & 1) {
            std::size_t pos = bit * ker.wp * 64 + i;
            b[pos >> 6] |= 1ull << (pos & 63);
          }
      ker.gens.push_back(b);
    }
    return run(ker, gen, opt);
  }
  static thread_local BlockTables tables;
  BitSumRank<W> ker;
  std::size_t off = 0;
  for (auto [m, c] : shapes) {
    ker.blocks.push_back({m, c, off, tables.get(m, c)});
    off += std::size_t(m) * c;
  }
  for (auto& v : pg) {
    Bits<W> b{};
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) b[i >> 6] |= 1ull << (i & 63);
    ker.gens.push_back(b);
  }
  ker.touched = touched_blocks(pg, shapes);
  return run(ker, gen, opt);
}

}  // namespace

unsigned hamming_weight(std::span<const Elem> v) {
  unsigned w = 0;
  for (Elem x : v) w += x != 0;
  return w;
}

unsigned block_rank_weight(const Field& F, std::span<const Elem> v, const BlockShapes& blocks) {
  unsigned w = 0;
  std::size_t off = 0;
  for (auto [m, n] : blocks) {
    std::vector<Elem> a(v.begin() + off, v.begin() + off + std::size_t(m) * n);
    w += field_rank(F, std::move(a), m, n);
    off += std::size_t(m) * n;
  }
  return w;
}

DistanceResult search_min_weight(const Matrix& gen, const BlockShapes& blocks, const SearchOptions& opt) {
  if (gen.rows() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code is undefined");
  const Field& F = *gen.field();
  std::size_t n = gen.cols();
  if (!blocks.empty()) {
    std::size_t len = 0;
    for (auto [m, c] : blocks) len += std::size_t(m) * c;
    if (len != n) throw Error(ErrorKind::DimensionMismatch, "block shapes do not cover the vector");
  }
  auto pg = prime_generators(gen);
  if (F.characteristic() == 2) {
    bool ok = true;
    std::size_t words = 0;
    if (blocks.empty()) {
      words = F.absolute_degree() * ((n + 63) / 64);
    } else {
      ok = F.absolute_degree() == 1;
      for (auto [m, c] : blocks) ok = ok && c <= 64 && m <= 64;
      words = (n + 63) / 64;
    }
    if (ok) {
      if (words <= 1) return run_bits<1>(gen, blocks, pg, opt);
      if (words <= 2) return run_bits<2>(gen, blocks, pg, opt);
      if (words <= 4) return run_bits<4>(gen, blocks, pg, opt);
      if (words <= 8) return run_bits<8>(gen, blocks, pg, opt);
      if (words <= 16) return run_bits<16>(gen, blocks, pg, opt);
    }
  }
  Generic ker;
  ker.F = &F;
  ker.gens = pg;
  ker.shapes = blocks;
  std::size_t off = 0;
  for (auto [m, c] : blocks) {
    ker.offs.push_back(off);
    off += std::size_t(m) * c;
  }
  ker.touched = touched_blocks(pg, blocks);
  return run(ker, gen, opt);
}

}  // namespace srlab
