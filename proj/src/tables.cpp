#include "srlab/tables.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "srlab/construct.hpp"
#include "srlab/cyclic.hpp"
#include "srlab/error.hpp"
#include "srlab/polytext.hpp"

namespace srlab {

namespace detail {
// Generated at build time from data/manifests/*.json.
const std::vector<std::pair<std::string, std::string>>& embedded_manifests();
}  // namespace detail

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::InsideBounds: return "inside-bounds";
    case RowStatus::BudgetLimited: return "budget-limited";
    case RowStatus::Mismatch: return "mismatch";
  }
  return "?";
}

RowStatus TableReport::status() const {
  RowStatus s = RowStatus::Match;
  for (auto& r : rows) s = std::max(s, r.status);
  return s;
}

namespace {

using u64 = std::uint64_t;

std::map<std::string, Json>& manifests() {
  static std::map<std::string, Json> m = [] {
    std::map<std::string, Json> out;
    for (auto& [id, text] : detail::embedded_manifests()) out[id] = Json::parse(text);
    return out;
  }();
  return m;
}

// Distance knowledge: exact when lower == upper.
struct Dist {
  unsigned lower = 0, upper = 0;
  std::string method;
  u64 evaluated = 0, total = 0;
  bool exact() const { return lower == upper; }
};

Dist from_search(const DistanceResult& r) {
  Dist d;
  d.upper = r.distance;
  d.lower = r.exact ? r.distance : r.lower_bound;
  d.method = r.exact ? r.method : r.method + " (budget reached)";
  d.evaluated = r.evaluated;
  d.total = r.total;
  return d;
}

// Tighten with a proven lower bound.
void raise_lower(Dist& d, unsigned lower, const std::string& why) {
  if (d.exact() || lower <= d.lower) return;
  d.lower = std::min(lower, d.upper);
  d.method += " + " + why;
}

Json dist_json(const Dist& d) {
  Json j;
  if (d.exact()) {
    j["value"] = d.lower;
  } else {
    j["lower"] = d.lower;
    j["upper"] = d.upper;
  }
  j["exact"] = d.exact();
  j["method"] = d.method;
  if (d.total) {
    j["evaluated"] = d.evaluated;
    j["total"] = d.total;
  }
  return j;
}

Json bounds_json(const BoundPair& b) { return Json{{"lower", b.lower}, {"upper", b.upper}}; }

std::string interval(unsigned a, unsigned b) {
  return "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

struct CodeEntry {
  explicit CodeEntry(LinearCode c) : code(std::move(c)) {}
  LinearCode code;
  Json spec;
  std::optional<Polynomial> generator;
  std::once_flag dh_once;
  DistanceResult dh;
};

class Context {
 public:
  Context(const Json& manifest, const TableOptions& opt) : manifest_(manifest), opt_(opt) {}

  const TableOptions& opt() const { return opt_; }
  const Json& manifest() const { return manifest_; }
  SearchOptions search() const { return {opt_.budget, std::max(1u, opt_.jobs)}; }
  SearchOptions pairs() const { return {opt_.pair_budget, std::max(1u, opt_.jobs)}; }

  FieldPtr field(u64 q) {
    std::lock_guard lk(mu_);
    auto& f = fields_[q];
    if (!f) f = Field::gf(q);
    return f;
  }

  RootContext& roots(u64 q, u64 n) {
    FieldPtr f = field(q);
    std::lock_guard lk(mu_);
    auto& r = roots_[{q, n}];
    if (!r) r = std::make_unique<RootContext>(f, n);
    return *r;
  }

  std::shared_ptr<CodeEntry> code(const Json& spec) {
    const std::string key = spec.dump();
    {
      std::lock_guard lk(mu_);
      if (auto it = codes_.find(key); it != codes_.end()) return it->second;
    }
    std::shared_ptr<CodeEntry> e = build(spec);
    e->spec = spec;
    std::lock_guard lk(mu_);
    return codes_.emplace(key, e).first->second;
  }

  const DistanceResult& d_h(CodeEntry& e) {
    std::call_once(e.dh_once, [&] {
      e.dh = min_hamming_distance(e.code, search());
      if (e.dh.exact) return;
      DistanceResult p = periodic_subcode_search(e.code, search());
      e.dh.method += " + periodic subcodes";
      if (p.distance && p.distance < e.dh.distance) {
        e.dh.distance = p.distance;
        e.dh.witness = p.witness;
      }
    });
    return e.dh;
  }

  // Hamming distance printed in another table for the same code, if listed.
  std::optional<std::pair<unsigned, std::string>> printed_d_h(const Json& spec) const {
    if (!manifest_.contains("printed_d_h")) return std::nullopt;
    for (auto& p : manifest_["printed_d_h"])
      if (p["code"] == spec) return std::make_pair(p["d_h"].get<unsigned>(), p["cite"].get<std::string>());
    return std::nullopt;
  }

  const Basis& self_dual_f4_basis() {
    FieldPtr f = field(4);
    std::lock_guard lk(mu_);
    if (!sd_basis_) sd_basis_ = std::make_unique<Basis>(self_dual_basis(f));
    return *sd_basis_;
  }

  void report_self_dual(const std::string& where, const SumRankCode& c) {
    if (!opt_.on_self_dual) return;
    std::lock_guard lk(cb_mu_);
    opt_.on_self_dual(where, c);
  }

 private:
  std::shared_ptr<CodeEntry> build(const Json& spec) {
    if (spec.contains("bch")) {
      auto& b = spec["bch"];
      RootContext& rc = roots(b["q"].get<u64>(), b["n"].get<u64>());
      Polynomial g = rc.bch_generator(b["delta"].get<unsigned>(), b["b"].get<u64>());
      auto e = std::make_shared<CodeEntry>(cyclic_code(g, rc.n()));
      e->generator = g;
      return e;
    }
    FieldPtr f = field(manifest_.value("q", 4u));
    std::size_t n = spec["n"].get<std::size_t>();
    if (spec.contains("poly")) {
      Polynomial g = parse_polynomial(f, spec["poly"].get<std::string>());
      auto e = std::make_shared<CodeEntry>(cyclic_code(g, n));
      e->generator = g;
      return e;
    }
    if (spec.contains("matrix"))
      return std::make_shared<CodeEntry>(
          LinearCode::from_rows(f, n, spec["matrix"].get<std::vector<std::vector<Elem>>>()));
    throw Error(ErrorKind::ParseError, "unknown code spec " + spec.dump());
  }

  const Json& manifest_;
  const TableOptions& opt_;
  std::mutex mu_, cb_mu_;
  std::map<u64, FieldPtr> fields_;
  std::map<std::pair<u64, u64>, std::unique_ptr<RootContext>> roots_;
  std::map<std::string, std::shared_ptr<CodeEntry>> codes_;
  std::unique_ptr<Basis> sd_basis_;
};

class Row {
 public:
  Row(const Json& row) {
    r.id = row.value("id", "");
    r.cite = row.value("cite", "");
  }

  RowReport r;

  void add(std::string name, RowStatus s, Json expected, Json computed) {
    r.status = std::max(r.status, s);
    r.checks.push_back({std::move(name), s, std::move(expected), std::move(computed)});
  }
  void flag(std::string s) { r.flags.push_back(std::move(s)); }
  void note(std::string s) { r.notes.push_back(std::move(s)); }

  bool property(const std::string& name, bool ok, Json computed = nullptr) {
    if (computed.is_null()) computed = ok;
    add(name, ok ? RowStatus::Match : RowStatus::Mismatch, true, std::move(computed));
    return ok;
  }

  void exact_int(const std::string& name, const Json& expected, long long v) {
    long long e = expected["value"].get<long long>();
    add(name, e == v ? RowStatus::Match : RowStatus::Mismatch, expected, v);
  }

  void distance(const std::string& name, const Json& expected, const Dist& d) {
    RowStatus s;
    bool ex = expected["kind"] == "exact";
    unsigned a = ex ? expected["value"].get<unsigned>() : expected["lower"].get<unsigned>();
    unsigned b = ex ? a : expected["upper"].get<unsigned>();
    if (d.exact()) {
      bool in = a <= d.lower && d.lower <= b;
      s = !in ? RowStatus::Mismatch : ex ? RowStatus::Match : RowStatus::InsideBounds;
    } else {
      bool overlap = d.lower <= b && a <= d.upper;
      bool inside = !ex && a <= d.lower && d.upper <= b;
      s = inside ? RowStatus::InsideBounds : overlap ? RowStatus::BudgetLimited : RowStatus::Mismatch;
      if (overlap && ex && d.upper > a)
        note(name + ": no word of the printed weight among the evaluated ones (lightest " +
             std::to_string(d.upper) + ")");
    }
    add(name, s, expected, dist_json(d));
  }

  // Printed value or interval against a bound formula.
  void bounds(const std::string& name, const Json& expected, const BoundPair& f, const std::string& source) {
    Json comp = bounds_json(f);
    comp["from"] = source;
    if (expected["kind"] == "exact") {
      unsigned e = expected["value"].get<unsigned>();
      bool in = f.lower <= e && e <= f.upper;
      add(name, in ? RowStatus::Match : RowStatus::Mismatch, expected, comp);
      if (expected.value("star", false))
        add(name + ": printed value attains the upper bound", f.upper == e ? RowStatus::Match : RowStatus::Mismatch,
            e, comp);
      return;
    }
    unsigned a = expected["lower"].get<unsigned>(), b = expected["upper"].get<unsigned>();
    if (a == f.lower && b == f.upper) {
      add(name, RowStatus::Match, expected, comp);
    } else if (a <= f.upper && f.lower <= b) {
      if (a != f.lower)
        flag("printed lower bound " + std::to_string(a) + " differs from the formula value " + std::to_string(f.lower));
      if (b != f.upper)
        flag("printed upper bound " + std::to_string(b) + " differs from the formula value " + std::to_string(f.upper));
      add(name, RowStatus::InsideBounds, expected, comp);
    } else {
      add(name, RowStatus::Mismatch, expected, comp);
    }
  }

  void error(const std::string& name, const std::exception& e) {
    Json c{{"error", e.what()}};
    if (auto* se = dynamic_cast<const Error*>(&e)) c["kind"] = error_kind_name(se->kind());
    add(name, RowStatus::Mismatch, nullptr, c);
  }
};

Json value_of(const Json& expected) {
  return expected["kind"] == "exact" ? expected["value"] : expected["upper"];
}

std::string suffix(std::size_t i, std::size_t count) {
  return count > 1 ? " [g" + std::to_string(i + 1) + "]" : "";
}

// d_H with, for BCH codes, the designed distance as a certified lower bound.
Dist hamming(Context& ctx, CodeEntry& e, Row* row) {
  const Json& spec = e.spec;
  Dist d = from_search(ctx.d_h(e));
  if (!d.exact() && spec.contains("bch")) {
    auto& b = spec["bch"];
    unsigned delta = b["delta"].get<unsigned>();
    RootContext& rc = ctx.roots(b["q"].get<u64>(), b["n"].get<u64>());
    bool cert = rc.has_consecutive_roots(*e.generator, delta, b["b"].get<u64>());
    if (row) row->property("consecutive roots certify d_H >= " + std::to_string(delta), cert);
    if (cert) raise_lower(d, delta, "designed distance");
  }
  return d;
}

std::optional<Polynomial> conjugate_match(const Polynomial& computed, const Polynomial& printed, std::string& how) {
  const Field& F = *computed.field();
  Polynomial p = computed;
  for (unsigned i = 0; i < F.absolute_degree(); ++i) {
    if (p == printed) {
      how = i == 0 ? "as printed" : "Frobenius conjugate (power " + std::to_string(i) + ")";
      return p;
    }
    std::vector<Elem> c = p.coeffs();
    for (auto& x : c) x = F.pow(x, F.characteristic());
    p = Polynomial(p.field(), c);
  }
  return std::nullopt;
}

void eval_cyclic_lcd(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  const Json& spec = row["code"];
  auto e = ctx.code(spec);
  const LinearCode& C = e->code;
  R.exact_int("dim", exp["dim"], static_cast<long long>(C.k()));
  auto& b = spec["bch"];
  std::size_t kc = bch_dimension(b["q"].get<u64>(), b["n"].get<u64>(), b["delta"].get<unsigned>(), b["b"].get<u64>());
  R.property("dim agrees with the cyclotomic coset count", kc == C.k(), kc);
  R.property("LCD", is_lcd(C));
  R.property("cyclic", is_cyclic(C));
  R.distance("d_H", exp["d_h"], hamming(ctx, *e, &R));
  if (exp.contains("generator")) {
    Polynomial printed = parse_polynomial(C.field(), exp["generator"].get<std::string>());
    std::string how;
    auto m = conjugate_match(*e->generator, printed, how);
    Json comp{{"generator", format_polynomial(*e->generator)}};
    if (m) comp["matched"] = how;
    R.add("generator polynomial", m ? RowStatus::Match : RowStatus::Mismatch, exp["generator"], comp);
  }
}

// Returns the exact Hamming distances of both codes when known.
std::optional<std::vector<unsigned>> exact_pair(Context& ctx, CodeEntry& a, CodeEntry& b) {
  auto& ha = ctx.d_h(a);
  auto& hb = ctx.d_h(b);
  if (!ha.exact || !hb.exact) return std::nullopt;
  return std::vector<unsigned>{ha.distance, hb.distance};
}

unsigned pair_weight(std::span<const Elem> c0, std::span<const Elem> c1) {
  const auto& T = f4_rank_table();
  unsigned w = 0;
  for (std::size_t i = 0; i < c0.size(); ++i) w += T[c0[i]][c1[i]];
  return w;
}

// Weights of (c, 0), (0, c) and (c, c) for the lightest Hamming words found.
unsigned witness_upper(Context& ctx, CodeEntry& a, CodeEntry& b) {
  std::vector<Elem> zero(a.code.n(), 0);
  unsigned best = ~0u;
  for (auto* e : {&a, &b}) {
    const auto& w = ctx.d_h(*e).witness;
    if (w.empty()) continue;
    if (a.code.contains(w)) best = std::min({best, pair_weight(w, zero)});
    if (b.code.contains(w)) best = std::min(best, pair_weight(zero, w));
    if (a.code.contains(w) && b.code.contains(w)) best = std::min(best, pair_weight(w, w));
  }
  return best;
}

Dist pair_distance(Context& ctx, CodeEntry& a, CodeEntry& b) {
  Dist ha = hamming(ctx, a, nullptr), hb = hamming(ctx, b, nullptr);
  if (a.code == b.code && ha.exact()) {
    ha.method = "d_sr(SR(C,C)) = d_H(C), d_H by " + ha.method;
    return ha;
  }
  Dist d = from_search(pairwise_sr_distance(a.code, b.code, ctx.pairs()));
  if (d.exact()) return d;
  if (a.code == b.code) {
    Dist id = ha;
    id.method = "d_sr(SR(C,C)) = d_H(C), d_H by " + ha.method;
    if (id.upper > d.upper) id.upper = d.upper;
    return id;
  }
  unsigned w = witness_upper(ctx, a, b);
  if (w < d.upper) {
    d.upper = w;
    d.method += " + Hamming witnesses";
  }
  raise_lower(d, sr_distance_bounds(2, {ha.lower, hb.lower}).lower, "sum-rank sandwich");
  return d;
}

void eval_sr_pairs(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  auto a = ctx.code(row["c0"]);
  auto b = ctx.code(row["c1"]);
  long long dim = 2 * static_cast<long long>(a->code.k() + b->code.k());
  R.exact_int("dim", exp["dim"], dim);
  SumRankCode S = sr_construct({a->code, b->code}, Basis::polynomial(a->code.field()));
  R.property("dim of the constructed code is 2(k0 + k1)", static_cast<long long>(S.dim()) == dim, S.dim());
  R.property("LCD", is_lcd_sr(S));

  auto dh = exact_pair(ctx, *a, *b);
  Dist d = pair_distance(ctx, *a, *b);
  R.distance("d_sr", exp["d_sr"], d);
  if (dh) {
    BoundPair f = sr_distance_bounds(2, *dh);
    R.bounds("d_sr bounds", exp["d_sr"], f, "computed d_H " + interval((*dh)[0], (*dh)[1]));
    if (d.exact()) {
      R.property("d_sr inside the sum-rank sandwich", f.lower <= d.lower && d.lower <= f.upper, dist_json(d));
      if (exp["d_sr"].value("star", false)) R.property("d_sr equals the sandwich upper bound", d.lower == f.upper, d.lower);
    }
    return;
  }
  auto pa = ctx.printed_d_h(row["c0"]), pb = ctx.printed_d_h(row["c1"]);
  std::vector<unsigned> used;
  std::string src = "d_H";
  for (auto [e, p] : {std::pair{a.get(), pa}, std::pair{b.get(), pb}}) {
    auto& h = ctx.d_h(*e);
    if (h.exact) {
      used.push_back(h.distance);
      src += " " + std::to_string(h.distance) + " (computed)";
    } else if (p) {
      used.push_back(p->first);
      src += " " + std::to_string(p->first) + " (printed, " + p->second + ")";
    }
  }
  if (used.size() == 2) {
    R.bounds("d_sr bounds", exp["d_sr"], sr_distance_bounds(2, used), src);
    R.note("sandwich evaluated with " + src);
  }
}

void self_dual_sr_checks(Context& ctx, Row& R, const SumRankCode& S, const std::string& where, bool cyclic) {
  bool sd = R.property("self-dual (trace inner product)", is_self_dual_sr(S));
  if (sd) {
    StructuralReport s = structural_checks(S);
    R.property("dimension is half the ambient", s.half_dimension, S.dim());
    if (s.all_ones_checked) R.property("contains the all-ones vector", s.contains_all_ones);
    ctx.report_self_dual(where, S);
  }
  if (cyclic) R.property("cyclic sum-rank code", is_cyclic_sr(S));
}

void eval_selfdual_sr(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  const std::size_t t = row["t"].get<std::size_t>();
  const std::string where = ctx.manifest()["table"].get<std::string>() + "/" + R.r.id;
  if (!row.contains("c0")) {
    R.note("bound-only: no generators are printed for this row");
    R.exact_int("dim (2t from k0 = k1 = t/2)", exp["dim"], 2 * static_cast<long long>(t));
    unsigned d = exp["d_h"]["value"].get<unsigned>();
    R.bounds("d_sr bounds", exp["d_sr"], sr_distance_bounds(2, {d, d}), "printed d_H " + std::to_string(d));
    R.property("printed d_H within 4 floor(t/12) + 4", d <= selfdual_f4_distance_upper(t), d);
    unsigned up = value_of(exp["d_sr"]).get<unsigned>();
    R.property("printed d_sr within 8 (floor(t/12) + 1)", up <= selfdual_sr_distance_upper(t), up);
    return;
  }
  auto a = ctx.code(row["c0"]);
  auto b = ctx.code(row["c1"]);
  if (row.contains("source")) R.note("codes: " + row["source"].get<std::string>());
  for (auto [e, nm] : {std::pair{a.get(), "C0"}, std::pair{b.get(), "C1"}}) {
    R.property(std::string(nm) + " Euclidean self-dual", is_self_dual(e->code));
    Dist h = hamming(ctx, *e, nullptr);
    R.distance(std::string("d_H(") + nm + ")", exp["d_h"], h);
    if (h.exact())
      R.property(std::string("d_H(") + nm + ") within 4 floor(t/12) + 4", h.lower <= selfdual_f4_distance_upper(t), h.lower);
  }
  SumRankCode S = sr_construct({a->code, b->code}, Basis::polynomial(a->code.field()));
  R.exact_int("dim", exp["dim"], static_cast<long long>(S.dim()));
  self_dual_sr_checks(ctx, R, S, where, false);
  auto dh = exact_pair(ctx, *a, *b);
  Dist d = pair_distance(ctx, *a, *b);
  R.distance("d_sr", exp["d_sr"], d);
  if (d.exact()) R.property("d_sr within 8 (floor(t/12) + 1)", d.lower <= selfdual_sr_distance_upper(t), d.lower);
  if (dh) R.bounds("d_sr bounds", exp["d_sr"], sr_distance_bounds(2, *dh), "computed d_H " + interval((*dh)[0], (*dh)[1]));
}

AmbientProfile matb_profile(Context& ctx, std::size_t N) { return default_matb_profile(ctx.field(4)->base(), 2, N); }

// lo and hi come from the Hamming-distance sandwich evaluated at the d_H interval.
Dist matb_distance(Context& ctx, const SumRankCode& M, unsigned lo, unsigned hi) {
  Dist d = from_search(min_sr_distance(M, ctx.search()));
  if (d.exact()) return d;
  if (hi < d.upper) {
    d.upper = hi;
    d.method += " + image of the lightest Hamming word";
  }
  raise_lower(d, lo, "Hamming-distance bound");
  if (d.exact()) return d;
  DistanceResult low = sr_low_weight_search(M, d.upper - 1, ctx.search());
  if (low.exact) {
    d.lower = d.upper = low.distance;
    d.method += " + low-weight syndromes";
  } else {
    raise_lower(d, low.lower_bound, "low-weight syndromes");
  }
  return d;
}

void eval_selfdual_matb(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  const std::size_t t = row["t"].get<std::size_t>();
  const std::string where = ctx.manifest()["table"].get<std::string>() + "/" + R.r.id;
  if (!row.contains("code")) {
    R.note("bound-only: no generator is printed for this row");
    R.exact_int("dim (2k with k = t)", exp["dim"], 2 * static_cast<long long>(t));
    unsigned d = exp["d_h"]["value"].get<unsigned>();
    R.bounds("d_sr bounds", exp["d_sr"], matb_square_bounds(d, t), "printed d_H " + std::to_string(d));
    R.property("printed d_H within 4 floor(2t/12) + 4", d <= selfdual_f4_distance_upper(2 * t), d);
    return;
  }
  if (row.contains("source")) R.note("code: " + row["source"].get<std::string>());
  auto e = ctx.code(row["code"]);
  const LinearCode& C = e->code;
  R.property("Euclidean self-dual", is_self_dual(C));
  Dist h = hamming(ctx, *e, nullptr);
  R.distance("d_H", exp["d_h"], h);
  SumRankCode M = matb_construct(C, ctx.self_dual_f4_basis(), matb_profile(ctx, C.n()));
  R.exact_int("dim", exp["dim"], static_cast<long long>(M.dim()));
  R.property("dim is 2 dim C", M.dim() == 2 * C.k(), M.dim());
  self_dual_sr_checks(ctx, R, M, where, false);
  std::optional<BoundPair> f;
  if (h.exact()) f = matb_square_bounds(h.lower, t);
  R.distance("d_sr", exp["d_sr"],
             matb_distance(ctx, M, matb_square_bounds(h.lower, t).lower, matb_square_bounds(h.upper, t).upper));
  if (f) R.bounds("d_sr bounds", exp["d_sr"], *f, "computed d_H " + std::to_string(h.lower));
}

void eval_matb_lcd(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  const Json& spec = row["code"];
  auto e = ctx.code(spec);
  const LinearCode& C = e->code;
  AmbientProfile P = matb_profile(ctx, C.n());
  if (ctx.manifest().contains("block_length"))
    R.add("block length", P.num_blocks() == ctx.manifest()["block_length"].get<std::size_t>() ? RowStatus::Match : RowStatus::Mismatch,
          ctx.manifest()["block_length"], P.num_blocks());
  SumRankCode M = matb_construct(C, ctx.self_dual_f4_basis(), P);
  R.exact_int("dim", exp["dim"], static_cast<long long>(M.dim()));
  R.property("dim is 2 dim C", M.dim() == 2 * C.k(), M.dim());
  R.property("C is LCD", is_lcd(C));
  R.property("LCD", is_lcd_sr(M));
  Dist h = hamming(ctx, *e, nullptr);
  std::optional<BoundPair> f;
  std::string src;
  if (h.exact()) {
    f = matb_distance_bounds(h.lower, P);
    src = "computed d_H " + std::to_string(h.lower);
  }
  R.distance("d_sr", exp["d_sr"],
             matb_distance(ctx, M, matb_distance_bounds(h.lower, P).lower, matb_distance_bounds(h.upper, P).upper));
  if (!f) {
    if (auto p = ctx.printed_d_h(spec)) {
      f = matb_distance_bounds(p->first, P);
      src = "printed d_H " + std::to_string(p->first) + " (" + p->second + ")";
      R.note("bounds evaluated with " + src);
    }
  }
  if (f) R.bounds("d_sr bounds", exp["d_sr"], *f, src);
}

struct GenCode {
  std::shared_ptr<CodeEntry> entry;
  Dist dh;
};

// Shared per-generator checks of the cyclic self-dual tables.
std::vector<GenCode> generator_codes(Context& ctx, const Json& row, Row& R, std::size_t n) {
  const Json& exp = row["expect"];
  const auto& gens = row["generators"];
  FieldPtr f = ctx.field(ctx.manifest().value("q", 4u));
  std::vector<GenCode> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string sx = suffix(i, gens.size());
    const std::string text = gens[i].get<std::string>();
    try {
      Polynomial g = parse_polynomial(f, text);
      if (!R.property("generator divides x^n - 1" + sx, divides(g, Polynomial::x_pow_minus_one(f, n)))) continue;
      auto e = ctx.code(Json{{"poly", text}, {"n", n}});
      R.property("Euclidean self-dual" + sx, is_self_dual(e->code));
      R.property("cyclic" + sx, is_cyclic(e->code));
      R.property("dual is cyclic" + sx, is_cyclic(dual(e->code)));
      Dist h = hamming(ctx, *e, nullptr);
      R.distance("d_H" + sx, exp["d_h"], h);
      if (h.exact())
        R.property("d_H within 4 floor(n/12) + 4" + sx, h.lower <= selfdual_f4_distance_upper(n), h.lower);
      out.push_back({e, h});
    } catch (const std::exception& ex) {
      R.error("generator" + sx, ex);
    }
  }
  return out;
}

void eval_cyclic_selfdual_sr(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  const std::size_t t = row["t"].get<std::size_t>();
  auto codes = generator_codes(ctx, row, R, row["n"].get<std::size_t>());
  if (codes.empty()) return;
  auto& a = *codes[0].entry;
  auto& b = *codes[codes.size() > 1 ? 1 : 0].entry;
  R.note(codes.size() > 1 ? "C0 and C1 are the first two generators" : "C0 = C1");
  SumRankCode S = sr_construct({a.code, b.code}, Basis::polynomial(a.code.field()));
  self_dual_sr_checks(ctx, R, S, ctx.manifest()["table"].get<std::string>() + "/" + R.r.id, true);
  auto dh = exact_pair(ctx, a, b);
  Dist d = pair_distance(ctx, a, b);
  R.distance("d_sr", exp["d_sr"], d);
  if (d.exact()) R.property("d_sr within 8 (floor(t/12) + 1)", d.lower <= selfdual_sr_distance_upper(t), d.lower);
  if (dh) R.bounds("d_sr bounds", exp["d_sr"], sr_distance_bounds(2, *dh), "computed d_H " + interval((*dh)[0], (*dh)[1]));
}

void eval_cyclic_selfdual_matb(Context& ctx, const Json& row, Row& R) {
  const Json& exp = row["expect"];
  const std::size_t t = row["t"].get<std::size_t>();
  const std::size_t n = row["n"].get<std::size_t>();
  auto codes = generator_codes(ctx, row, R, n);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const std::string sx = suffix(i, codes.size());
    const LinearCode& C = codes[i].entry->code;
    SumRankCode M = matb_construct(C, ctx.self_dual_f4_basis(), matb_profile(ctx, n));
    R.property("dim is 2 dim C" + sx, M.dim() == 2 * C.k(), M.dim());
    Row sub(Json::object());
    self_dual_sr_checks(ctx, sub, M, ctx.manifest()["table"].get<std::string>() + "/" + R.r.id + sx, true);
    for (auto& c : sub.r.checks) R.add(c.name + sx, c.status, c.expected, c.computed);
    std::optional<BoundPair> f;
    const Dist& h = codes[i].dh;
    if (h.exact()) f = matb_square_bounds(h.lower, t);
    R.distance("d_sr" + sx, exp["d_sr"],
               matb_distance(ctx, M, matb_square_bounds(h.lower, t).lower, matb_square_bounds(h.upper, t).upper));
    if (f) R.bounds("d_sr bounds" + sx, exp["d_sr"], *f, "computed d_H " + std::to_string(codes[i].dh.lower));
  }
}

RowReport eval_row(Context& ctx, const Json& row) {
  Row R(row);
  R.r.cite = row.value("cite", "");
  auto t0 = std::chrono::steady_clock::now();
  const std::string kind = ctx.manifest()["kind"].get<std::string>();
  if (row.contains("known_discrepancy")) R.note("known discrepancy: " + row["known_discrepancy"].get<std::string>());
  try {
    if (kind == "cyclic_lcd") eval_cyclic_lcd(ctx, row, R);
    else if (kind == "sr_pairs") eval_sr_pairs(ctx, row, R);
    else if (kind == "selfdual_sr") eval_selfdual_sr(ctx, row, R);
    else if (kind == "selfdual_matb") eval_selfdual_matb(ctx, row, R);
    else if (kind == "matb_lcd") eval_matb_lcd(ctx, row, R);
    else if (kind == "cyclic_selfdual_sr") eval_cyclic_selfdual_sr(ctx, row, R);
    else if (kind == "cyclic_selfdual_matb") eval_cyclic_selfdual_matb(ctx, row, R);
    else throw Error(ErrorKind::ParseError, "unknown manifest kind " + kind);
  } catch (const std::exception& e) {
    R.error("row", e);
  }
  R.r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return R.r;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

std::vector<std::string> table_ids() {
  std::vector<std::string> ids;
  for (auto& [id, m] : manifests()) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return ids;
}

const Json& table_manifest(const std::string& id) {
  auto& m = manifests();
  auto it = m.find(id);
  if (it == m.end()) throw Error(ErrorKind::UnknownTable, "no manifest for table " + id);
  return it->second;
}

TableReport run_table(const std::string& id, const TableOptions& opt) { return run_table(table_manifest(id), opt); }

TableReport run_table(const Json& manifest, const TableOptions& opt) {
  TableReport rep;
  rep.table = manifest["table"].get<std::string>();
  rep.title = manifest.value("title", "");
  Context ctx(manifest, opt);
  const auto& rows = manifest["rows"];
  rep.rows.resize(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) rep.rows[i] = eval_row(ctx, rows[i]);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(rows.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> th;
    for (unsigned i = 0; i < jobs; ++i) th.emplace_back(worker);
    for (auto& t : th) t.join();
  }
  return rep;
}

Json report_json(const std::vector<TableReport>& reports, bool timing) {
  Json out;
  out["tables"] = Json::array();
  std::map<std::string, std::size_t> counts{{"match", 0}, {"inside-bounds", 0}, {"budget-limited", 0}, {"mismatch", 0}};
  for (auto& t : reports) {
    Json jt;
    jt["table"] = t.table;
    jt["title"] = t.title;
    jt["status"] = status_name(t.status());
    jt["rows"] = Json::array();
    for (auto& r : t.rows) {
      ++counts[status_name(r.status)];
      Json jr;
      jr["id"] = r.id;
      jr["cite"] = r.cite;
      jr["status"] = status_name(r.status);
      jr["checks"] = Json::array();
      for (auto& c : r.checks)
        jr["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"expected", c.expected},
                                {"computed", c.computed}});
      jr["flags"] = r.flags;
      jr["notes"] = r.notes;
      if (timing) jr["seconds"] = r.seconds;
      jt["rows"].push_back(jr);
    }
    out["tables"].push_back(jt);
  }
  Json summary;
  for (const char* k : {"match", "inside-bounds", "budget-limited", "mismatch"}) summary[k] = counts[k];
  out["summary"] = summary;
  out["exit_code"] = report_exit_code(reports);
  return out;
}

std::string report_csv(const std::vector<TableReport>& reports, bool timing) {
  std::ostringstream os;
  os << "table,row,cite,row_status,check,check_status,expected,computed,flags,notes";
  if (timing) os << ",seconds";
  os << "\r\n";
  for (auto& t : reports)
    for (auto& r : t.rows)
      for (auto& c : r.checks) {
        os << csv_cell(t.table) << ',' << csv_cell(r.id) << ',' << csv_cell(r.cite) << ',' << status_name(r.status) << ','
           << csv_cell(c.name) << ',' << status_name(c.status) << ',' << csv_cell(c.expected.dump()) << ','
           << csv_cell(c.computed.dump()) << ',' << csv_cell(join(r.flags)) << ',' << csv_cell(join(r.notes));
        if (timing) os << ',' << r.seconds;
        os << "\r\n";
      }
  return os.str();
}

int report_exit_code(const std::vector<TableReport>& reports) {
  RowStatus s = RowStatus::Match;
  for (auto& t : reports) s = std::max(s, t.status());
  if (s == RowStatus::Mismatch) return 3;
  if (s == RowStatus::BudgetLimited) return 2;
  return 0;
}

}  // namespace srlab
