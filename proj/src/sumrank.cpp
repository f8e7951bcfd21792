#include "srlab/sumrank.hpp"

#include "srlab/error.hpp"

namespace srlab {

AmbientProfile::AmbientProfile(FieldPtr f, BlockShapes blocks) : f_(std::move(f)), blocks_(std::move(blocks)) {
  for (auto [m, n] : blocks_) {
    if (m == 0 || n == 0 || m > n) throw Error(ErrorKind::ProfileInvalid, "blocks need 0 < m_i <= n_i");
    offs_.push_back(length_);
    length_ += std::size_t(m) * n;
  }
}

AmbientProfile AmbientProfile::uniform(FieldPtr f, unsigned m, unsigned n, std::size_t t) {
  return AmbientProfile(std::move(f), BlockShapes(t, {m, n}));
}

std::size_t AmbientProfile::rank_sum() const {
  std::size_t s = 0;
  for (auto [m, n] : blocks_) s += m;
  return s;
}

bool AmbientProfile::is_uniform() const {
  for (auto& b : blocks_)
    if (b != blocks_.front()) return false;
  return true;
}

SumRankVector::SumRankVector(const AmbientProfile& p, std::vector<Matrix> blocks) : p_(p), blocks_(std::move(blocks)) {
  if (blocks_.size() != p_.num_blocks()) throw Error(ErrorKind::ProfileMismatch, "block count differs from profile");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    require_same_field(blocks_[i].field(), p_.field(), "sum-rank block");
    if (blocks_[i].rows() != p_.blocks()[i].first || blocks_[i].cols() != p_.blocks()[i].second)
      throw Error(ErrorKind::ProfileMismatch, "block shape differs from profile");
  }
}

SumRankVector SumRankVector::zero(const AmbientProfile& p) {
  std::vector<Matrix> b;
  for (auto [m, n] : p.blocks()) b.emplace_back(p.field(), m, n);
  return SumRankVector(p, std::move(b));
}

SumRankVector SumRankVector::unflatten(const AmbientProfile& p, std::span<const Elem> flat) {
  if (flat.size() != p.length()) throw Error(ErrorKind::LengthMismatch, "flattened length differs from profile");
  std::vector<Matrix> b;
  std::size_t k = 0;
  for (auto [m, n] : p.blocks()) {
    Matrix x(p.field(), m, n);
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = 0; c < n; ++c) x.set(r, c, flat[k++]);
    b.push_back(std::move(x));
  }
  return SumRankVector(p, std::move(b));
}

std::vector<Elem> SumRankVector::flatten() const {
  std::vector<Elem> out;
  out.reserve(p_.length());
  for (auto& b : blocks_)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(b.at(r, c));
  return out;
}

unsigned sr_weight(const SumRankVector& v) {
  unsigned w = 0;
  for (auto& b : v.blocks()) w += static_cast<unsigned>(rank(b));
  return w;
}

unsigned sr_distance(const SumRankVector& a, const SumRankVector& b) {
  if (!(a.profile() == b.profile())) throw Error(ErrorKind::ProfileMismatch, "sr_distance profiles differ");
  const Field& F = *a.profile().field();
  auto x = a.flatten(), y = b.flatten();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = F.sub(x[i], y[i]);
  return sr_weight(SumRankVector::unflatten(a.profile(), x));
}

Elem trace_ip(const SumRankVector& u, const SumRankVector& v) {
  if (!(u.profile() == v.profile())) throw Error(ErrorKind::ProfileMismatch, "trace_ip profiles differ");
  const Field& F = *u.profile().field();
  Elem s = 0;
  for (std::size_t i = 0; i < u.blocks().size(); ++i) {
    Matrix p = mat_mul(u.blocks()[i], transpose(v.blocks()[i]));
    for (std::size_t d = 0; d < p.rows(); ++d) s = F.add(s, p.at(d, d));
  }
  return s;
}

SumRankCode::SumRankCode(AmbientProfile p, const Matrix& gen) : p_(std::move(p)), gen_(gen.field()) {
  require_same_field(gen.field(), p_.field(), "sum-rank code generator");
  if (gen.cols() != p_.length() && !(gen.rows() == 0 && gen.cols() == 0))
    throw Error(ErrorKind::LengthMismatch, "generator width differs from profile length");
  Matrix g = gen.cols() == p_.length() ? gen : Matrix(p_.field(), 0, p_.length());
  auto res = rref_full(g);
  Matrix out(g.field(), res.pivots.size(), g.cols());
  for (std::size_t r = 0; r < res.pivots.size(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out.set(r, c, res.m.at(r, c));
  gen_ = std::move(out);
  pivots_ = std::move(res.pivots);
}

SumRankCode SumRankCode::full(const AmbientProfile& p) { return SumRankCode(p, Matrix::identity(p.field(), p.length())); }

SumRankCode dual_tr(const SumRankCode& c) {
  if (c.dim() == 0) return SumRankCode::full(c.profile());
  return SumRankCode(c.profile(), kernel_basis(c.generator()));
}

namespace {
Matrix sr_gram(const SumRankCode& c) { return mat_mul(c.generator(), transpose(c.generator())); }
}  // namespace

bool is_self_dual_sr(const SumRankCode& c) {
  return 2 * c.dim() == c.profile().length() && sr_gram(c).is_zero();
}

bool is_lcd_sr(const SumRankCode& c) { return c.dim() == 0 || rank(sr_gram(c)) == c.dim(); }

DistanceResult min_sr_distance(const SumRankCode& c, const SearchOptions& opt) {
  return search_min_weight(c.generator(), c.profile().blocks(), opt);
}

StructuralReport structural_checks(const SumRankCode& c) {
  if (!is_self_dual_sr(c)) throw Error(ErrorKind::NotSelfDual, "structural checks need a self-dual code");
  StructuralReport r;
  r.half_dimension = 2 * c.dim() == c.profile().length();
  if (c.field()->characteristic() == 2) {
    r.all_ones_checked = true;
    std::vector<Elem> j(c.profile().length(), 1);
    r.contains_all_ones = c.contains(j);
  }
  return r;
}

SumRankVector cyclic_shift(const SumRankVector& v) {
  if (!v.profile().is_uniform()) throw Error(ErrorKind::NonUniformProfile, "cyclic shift needs equal block shapes");
  std::vector<Matrix> b;
  const auto& src = v.blocks();
  if (!src.empty()) {
    b.push_back(src.back());
    for (std::size_t i = 0; i + 1 < src.size(); ++i) b.push_back(src[i]);
  }
  return SumRankVector(v.profile(), std::move(b));
}

std::vector<Elem> cyclic_shift_flat(const AmbientProfile& p, std::span<const Elem> flat) {
  if (!p.is_uniform()) throw Error(ErrorKind::NonUniformProfile, "cyclic shift needs equal block shapes");
  std::vector<Elem> out(flat.size());
  if (p.num_blocks() == 0) return out;
  std::size_t len = std::size_t(p.blocks()[0].first) * p.blocks()[0].second;
  for (std::size_t i = 0; i < flat.size(); ++i) out[(i + len) % flat.size()] = flat[i];
  return out;
}

bool is_cyclic_sr(const SumRankCode& c) {
  if (!c.profile().is_uniform()) throw Error(ErrorKind::NonUniformProfile, "cyclic shift needs equal block shapes");
  for (std::size_t r = 0; r < c.dim(); ++r)
    if (!c.contains(cyclic_shift_flat(c.profile(), c.generator().row(r)))) return false;
  return true;
}

namespace {

struct Atom {
  unsigned rank;
  std::vector<std::uint64_t> syn;
  std::vector<Elem> entries;
};

struct Ball {
  const Field* F;
  bool bits;
  std::vector<std::vector<Atom>> atoms;  // per block, nonzero matrices
  std::vector<std::vector<std::uint64_t>> acc;
  std::vector<std::pair<std::size_t, std::size_t>> path, found_path;
  std::uint64_t visited = 0, budget = 0;
  bool stopped = false, found = false;

  void add(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] = bits ? a[i] ^ b[i] : F->add(static_cast<Elem>(a[i]), static_cast<Elem>(b[i]));
  }
  static bool zero(const std::vector<std::uint64_t>& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  }
  // Vectors of weight exactly w whose blocks are drawn from `from` on.
  void walk(std::size_t from, unsigned left, unsigned depth) {
    for (std::size_t b = from; b < atoms.size() && !stopped && !found; ++b)
      for (std::size_t a = 0; a < atoms[b].size() && !stopped && !found; ++a) {
        const Atom& at = atoms[b][a];
        if (at.rank > left) continue;
        if (visited == budget) {
          stopped = true;
          return;
        }
        ++visited;
        add(acc[depth + 1], acc[depth], at.syn);
        path.emplace_back(b, a);
        if (at.rank == left) {
          if (zero(acc[depth + 1])) {
            found = true;
            found_path = path;
          }
        } else {
          walk(b + 1, left - at.rank, depth + 1);
        }
        path.pop_back();
      }
  }
};

}  // namespace

DistanceResult sr_low_weight_search(const SumRankCode& c, unsigned max_weight, const SearchOptions& opt) {
  const Field& F = *c.field();
  const AmbientProfile& P = c.profile();
  std::size_t N = P.length();
  DistanceResult res;
  res.method = "low-weight syndromes";
  if (c.dim() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code is undefined");
  Matrix H = kernel_basis(c.generator());
  std::size_t r = H.rows();
  Ball ball;
  ball.F = &F;
  ball.bits = F.order() == 2;
  ball.budget = opt.budget;
  std::size_t len = ball.bits ? (r + 63) / 64 : r;
  for (std::size_t i = 0; i < P.num_blocks(); ++i) {
    auto [m, n] = P.blocks()[i];
    std::uint64_t count = 1;
    for (unsigned e = 0; e < m * n; ++e) {
      count *= F.order();
      if (count > (1u << 16)) throw Error(ErrorKind::Unsupported, "blocks too large for the low-weight search");
    }
    std::vector<Atom> atoms;
    for (std::uint64_t code = 1; code < count; ++code) {
      Matrix M(c.field(), m, n);
      std::vector<Elem> ent(std::size_t(m) * n);
      std::uint64_t x = code;
      for (auto& v : ent) {
        v = static_cast<Elem>(x % F.order());
        x /= F.order();
      }
      for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < n; ++b) M.set(a, b, ent[a * n + b]);
      Atom at{static_cast<unsigned>(rank(M)), std::vector<std::uint64_t>(len, 0), ent};
      for (std::size_t j = 0; j < r; ++j) {
        Elem s = dot(F, H.row(j).subspan(P.offset(i), ent.size()), ent);
        if (ball.bits) {
          if (s) at.syn[j >> 6] |= 1ull << (j & 63);
        } else {
          at.syn[j] = s;
        }
      }
      atoms.push_back(std::move(at));
    }
    ball.atoms.push_back(std::move(atoms));
  }
  ball.acc.assign(P.rank_sum() + 2, std::vector<std::uint64_t>(len, 0));
  unsigned w = 1;
  for (; w <= max_weight; ++w) {
    ball.walk(0, w, 0);
    if (ball.found || ball.stopped) break;
  }
  res.evaluated = ball.visited;
  res.lower_bound = w;
  if (ball.found) {
    res.exact = true;
    res.distance = w;
    res.witness.assign(N, 0);
    for (auto [b, a] : ball.found_path) {
      const auto& ent = ball.atoms[b][a].entries;
      std::copy(ent.begin(), ent.end(), res.witness.begin() + static_cast<std::ptrdiff_t>(P.offset(b)));
    }
  }
  return res;
}

}  // namespace srlab
