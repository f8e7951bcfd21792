#include "srlab/properties.hpp"

#include <functional>
#include <map>

#include "srlab/construct.hpp"
#include "srlab/error.hpp"
#include "srlab/random.hpp"

namespace srlab {

namespace {

using Trial = std::function<Json(Rng&)>;  // null on success, details on failure

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FieldPtr f4() {
  static FieldPtr f = Field::gf(4);
  return f;
}

FieldPtr f8() {
  static FieldPtr f = Field::gf(8);
  return f;
}

// Self-dual, LCD or unconstrained, so both sides of an equivalence get exercised.
LinearCode mixed_code(const FieldPtr& f, std::size_t n, Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0:
      if (n % 2 == 0) return random_self_dual_code(f, n, rng);
      [[fallthrough]];
    case 1:
      return random_lcd_code(f, n, pick(rng, 0, n), rng);
    default:
      return random_code(f, n, pick(rng, 0, n), rng);
  }
}

Json fail(std::initializer_list<std::pair<const std::string, Json>> kv) { return Json(kv); }

Json duality_sr(Rng& rng) {
  std::size_t t = pick(rng, 1, 5);
  auto c0 = random_code(f4(), t, pick(rng, 0, t), rng), c1 = random_code(f4(), t, pick(rng, 0, t), rng);
  Basis B = random_basis(f4(), rng);
  if (verify_duality_sr({c0, c1}, B)) return nullptr;
  return fail({{"c0", code_to_json(c0)}, {"c1", code_to_json(c1)}, {"basis", B.elements()}});
}

Json duality_matb(Rng& rng) {
  FieldPtr f = pick(rng, 0, 1) ? f8() : f4();
  unsigned m = f->degree();
  std::size_t N = pick(rng, m, 8);
  auto c = random_code(f, N, pick(rng, 0, N), rng);
  Basis B = random_basis(f, rng);
  AmbientProfile P = random_profile(f->base(), m, N, rng);
  if (verify_duality_matb(c, B, P)) return nullptr;
  return fail({{"code", code_to_json(c)}, {"basis", B.elements()}});
}

Json transfer_sr(Rng& rng) {
  std::size_t t = 2 * pick(rng, 1, 3);
  auto c0 = mixed_code(f4(), t, rng);
  auto c1 = pick(rng, 0, 1) ? c0 : mixed_code(f4(), t, rng);
  SumRankCode S = sr_construct({c0, c1}, random_basis(f4(), rng));
  bool sd = is_self_dual_sr(S) == (is_self_dual(c0) && is_self_dual(c1));
  bool lcd = is_lcd_sr(S) == (is_lcd(c0) && is_lcd(c1));
  if (sd && lcd) return nullptr;
  return fail({{"c0", code_to_json(c0)}, {"c1", code_to_json(c1)}, {"self_dual_ok", sd}, {"lcd_ok", lcd}});
}

Json transfer_matb(Rng& rng) {
  FieldPtr f = pick(rng, 0, 1) ? f8() : f4();
  unsigned m = f->degree();
  std::size_t N = pick(rng, m, 8);
  auto c = mixed_code(f, N, rng);
  SumRankCode M = matb_construct(c, self_dual_basis(f), random_profile(f->base(), m, N, rng));
  bool sd = is_self_dual_sr(M) == is_self_dual(c);
  bool lcd = is_lcd_sr(M) == is_lcd(c);
  if (sd && lcd) return nullptr;
  return fail({{"code", code_to_json(c)}, {"self_dual_ok", sd}, {"lcd_ok", lcd}});
}

Json equal_constituents(Rng& rng) {
  std::size_t t = pick(rng, 1, 8);
  auto c = random_code(f4(), t, pick(rng, 1, std::min<std::size_t>(t, 5)), rng);
  unsigned dh = min_hamming_distance(c).distance;
  unsigned dsr = min_sr_distance(sr_construct({c, c}, random_basis(f4(), rng))).distance;
  if (dh == dsr) return nullptr;
  return fail({{"code", code_to_json(c)}, {"d_h", dh}, {"d_sr", dsr}});
}

Json sandwiches(Rng& rng) {
  std::size_t t = pick(rng, 1, 6);
  std::size_t k0 = pick(rng, 1, std::min<std::size_t>(t, 4)), k1 = pick(rng, 1, std::min<std::size_t>(t, 4));
  auto c0 = random_code(f4(), t, k0, rng), c1 = random_code(f4(), t, k1, rng);
  unsigned d = min_sr_distance(sr_construct({c0, c1}, random_basis(f4(), rng))).distance;
  BoundPair b = sr_distance_bounds(2, {min_hamming_distance(c0).distance, min_hamming_distance(c1).distance});
  if (d < b.lower || d > b.upper) return fail({{"c0", code_to_json(c0)}, {"c1", code_to_json(c1)}, {"d_sr", d}});

  std::size_t N = 2 * pick(rng, 1, 4);
  auto c = random_code(f4(), N, pick(rng, 1, std::min<std::size_t>(N, 6)), rng);
  unsigned dh = min_hamming_distance(c).distance;
  AmbientProfile P = random_profile(f4()->base(), 2, N, rng);
  unsigned dm = min_sr_distance(matb_construct(c, random_basis(f4(), rng), P)).distance;
  BoundPair pb = matb_distance_bounds(dh, P);
  if (dm < pb.lower || dm > pb.upper) return fail({{"code", code_to_json(c)}, {"d_sr", dm}, {"profile", P.blocks()}});
  AmbientProfile Q = AmbientProfile::uniform(f4()->base(), 2, 2, N / 2);
  unsigned dq = min_sr_distance(matb_construct(c, random_basis(f4(), rng), Q)).distance;
  BoundPair qb = matb_square_bounds(dh, N / 2);
  if (dq < qb.lower || dq > qb.upper) return fail({{"code", code_to_json(c)}, {"d_sr", dq}, {"square", true}});
  return nullptr;
}

Json pairwise(Rng& rng) {
  std::size_t t = pick(rng, 1, 6);
  auto c0 = random_code(f4(), t, pick(rng, 0, std::min<std::size_t>(t, 4)), rng);
  auto c1 = random_code(f4(), t, pick(rng, c0.k() ? 0 : 1, std::min<std::size_t>(t, 4)), rng);
  unsigned a = pairwise_sr_distance(c0, c1).distance;
  unsigned b = min_sr_distance(sr_construct({c0, c1}, random_basis(f4(), rng))).distance;
  if (a == b) return nullptr;
  return fail({{"c0", code_to_json(c0)}, {"c1", code_to_json(c1)}, {"pairs", a}, {"exhaustive", b}});
}

const std::map<std::string, Trial>& suites() {
  static const std::map<std::string, Trial> m{
      {"duality-sr", duality_sr},         {"duality-matb", duality_matb}, {"transfer-sr", transfer_sr},
      {"transfer-matb", transfer_matb},   {"equal-constituents", equal_constituents},
      {"sandwiches", sandwiches},         {"pairwise", pairwise},
  };
  return m;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : suites()) out.push_back(k);
  return out;
}

PropertyReport run_property(const std::string& name, std::size_t trials, std::uint64_t seed) {
  auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorKind::ParseError, "unknown property " + name);
  PropertyReport r;
  r.name = name;
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    Json f = it->second(rng);
    ++r.trials;
    if (f.is_null()) continue;
    if (r.failures++ == 0) {
      f["trial"] = i;
      r.first_failure = f;
    }
  }
  return r;
}

}  // namespace srlab
