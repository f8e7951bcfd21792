#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "srlab/error.hpp"
#include "srlab/search.hpp"

namespace srlab {

namespace {

using u64 = std::uint64_t;

struct InfoSet {
  Matrix g;           // identity on cols (first rank rows)
  std::size_t rank;
};

std::vector<InfoSet> information_sets(const Matrix& gen) {
  std::size_t k = gen.rows(), n = gen.cols();
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<InfoSet> sets;
  while (!remaining.empty()) {
    std::vector<char> in(n, 0);
    for (auto c : remaining) in[c] = 1;
    std::vector<std::size_t> order = remaining;
    for (std::size_t c = 0; c < n; ++c)
      if (!in[c]) order.push_back(c);
    Matrix perm(gen.field(), k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) perm.set(r, c, gen.at(r, order[c]));
    auto rr = rref_full(perm);
    std::size_t r = 0;
    while (r < rr.pivots.size() && rr.pivots[r] < remaining.size()) ++r;
    if (r == 0) break;
    Matrix g(gen.field(), k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < n; ++c) g.set(i, order[c], rr.m.at(i, c));
    std::vector<char> used(n, 0);
    for (std::size_t i = 0; i < r; ++i) used[order[rr.pivots[i]]] = 1;
    std::erase_if(remaining, [&](std::size_t c) { return used[c] != 0; });
    sets.push_back({std::move(g), r});
  }
  return sets;
}

// Codewords as flat u64 arrays: bit planes in characteristic 2, one element per word otherwise.
struct Packing {
  const Field* F;
  bool bits;
  std::size_t n, words, len;

  std::vector<u64> pack(std::span<const Elem> v) const {
    std::vector<u64> out(len, 0);
    if (!bits) {
      for (std::size_t i = 0; i < n; ++i) out[i] = v[i];
      return out;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned b = 0; b < F->absolute_degree(); ++b)
        if ((v[i] >> b) & 1) out[b * words + (i >> 6)] |= 1ull << (i & 63);
    return out;
  }
  void add(u64* dst, const u64* a, const u64* b) const {
    if (bits) {
      for (std::size_t i = 0; i < len; ++i) dst[i] = a[i] ^ b[i];
    } else {
      for (std::size_t i = 0; i < len; ++i) dst[i] = F->add(static_cast<Elem>(a[i]), static_cast<Elem>(b[i]));
    }
  }
  unsigned weight(const u64* v) const {
    unsigned w = 0;
    if (!bits) {
      for (std::size_t i = 0; i < len; ++i) w += v[i] != 0;
      return w;
    }
    unsigned planes = F->absolute_degree();
    for (std::size_t x = 0; x < words; ++x) {
      u64 m = 0;
      for (unsigned b = 0; b < planes; ++b) m |= v[b * words + x];
      w += std::popcount(m);
    }
    return w;
  }
};

struct Enumerator {
  const Packing& pk;
  std::size_t k;
  std::uint64_t q;
  std::vector<std::vector<u64>> mult;  // mult[r * (q - 1) + c - 1] = c g_r
  std::vector<std::vector<u64>> acc;
  std::vector<std::pair<std::size_t, Elem>> cur, best_msg;
  unsigned best = std::numeric_limits<unsigned>::max();
  u64 evaluated = 0, budget = 0;
  bool stopped = false;

  Enumerator(const Packing& p, const Matrix& g, u64 bud) : pk(p), k(g.rows()), q(g.field()->order()), budget(bud) {
    const Field& F = *g.field();
    for (std::size_t r = 0; r < k; ++r)
      for (u64 c = 1; c < q; ++c) {
        std::vector<Elem> v(g.cols());
        for (std::size_t i = 0; i < g.cols(); ++i) v[i] = F.mul(static_cast<Elem>(c), g.at(r, i));
        mult.push_back(pk.pack(v));
      }
    acc.assign(k + 1, std::vector<u64>(pk.len, 0));
  }

  // Messages of weight exactly w with leading coefficient 1.
  void level(unsigned w) {
    cur.clear();
    dfs(0, w, 0);
  }

  void dfs(unsigned depth, unsigned w, std::size_t from) {
    for (std::size_t r = from; r + (w - depth) <= k && !stopped; ++r) {
      u64 cmax = depth == 0 ? 1 : q - 1;
      for (u64 c = 1; c <= cmax && !stopped; ++c) {
        pk.add(acc[depth + 1].data(), acc[depth].data(), mult[r * (q - 1) + c - 1].data());
        cur.emplace_back(r, static_cast<Elem>(c));
        if (depth + 1 == w) {
          if (evaluated == budget) {
            stopped = true;
          } else {
            ++evaluated;
            unsigned x = pk.weight(acc[depth + 1].data());
            if (x < best) {
              best = x;
              best_msg = cur;
            }
          }
        } else {
          dfs(depth + 1, w, r + 1);
        }
        cur.pop_back();
      }
    }
  }
};

}  // namespace

DistanceResult hamming_by_information_sets(const Matrix& gen, const SearchOptions& opt) {
  const Field& F = *gen.field();
  std::size_t k = gen.rows(), n = gen.cols();
  if (k == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code is undefined");
  auto sets = information_sets(gen);
  if (sets.empty() || sets[0].rank != k) throw Error(ErrorKind::DimensionMismatch, "generator rows are dependent");

  Packing pk{&F, F.characteristic() == 2, n, (n + 63) / 64, 0};
  pk.len = pk.bits ? pk.words * F.absolute_degree() : n;

  std::vector<Enumerator> en;
  u64 left = opt.budget;
  for (auto& s : sets) en.emplace_back(pk, s.g, left);

  auto gain = [&](std::size_t j, unsigned w) -> unsigned {
    long long v = static_cast<long long>(w) + 1 - static_cast<long long>(k - sets[j].rank);
    return v > 0 ? static_cast<unsigned>(v) : 0;
  };
  std::vector<unsigned> done(sets.size(), 0);
  auto lower = [&] {
    unsigned L = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) L += gain(j, done[j]);
    return L;
  };

  DistanceResult res;
  res.method = "information sets";
  unsigned __int128 t = 1;
  for (std::size_t i = 0; i < k && t < (1ull << 63); ++i) t *= F.order();
  res.total = t >= (1ull << 63) ? 1ull << 63 : static_cast<u64>((t - 1) / (F.order() - 1));
  unsigned U = std::numeric_limits<unsigned>::max();
  std::size_t best_set = 0;
  u64 evaluated = 0;
  bool out_of_budget = false, complete = false;
  for (unsigned w = 1; w <= k && !out_of_budget && !complete; ++w) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (gain(j, w) == 0) {
        done[j] = w;
        continue;
      }
      auto& e = en[j];
      e.budget = e.evaluated + (opt.budget - evaluated);
      u64 before = e.evaluated;
      e.level(w);
      evaluated += e.evaluated - before;
      if (e.best < U) {
        U = e.best;
        best_set = j;
      }
      if (e.stopped) {
        out_of_budget = true;
        break;
      }
      done[j] = w;
      if (w == k && sets[j].rank == k) complete = true;
      if (lower() >= U || complete) break;
    }
    if (!out_of_budget && lower() >= U) break;
  }

  if (U == std::numeric_limits<unsigned>::max()) {
    res.distance = hamming_weight(gen.row(0));
    res.witness = gen.row_vector(0);
    res.evaluated = evaluated;
    return res;
  }
  unsigned L = complete ? U : std::min(lower(), U);
  res.evaluated = evaluated;
  res.exact = L >= U && U != std::numeric_limits<unsigned>::max();
  res.distance = U;
  res.lower_bound = std::max(1u, L);
  std::vector<Elem> word(n, 0);
  for (auto [r, c] : en[best_set].best_msg)
    for (std::size_t i = 0; i < n; ++i) word[i] = F.add(word[i], F.mul(c, sets[best_set].g.at(r, i)));
  res.witness = std::move(word);
  return res;
}

}  // namespace srlab
