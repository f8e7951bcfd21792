#include "srlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "srlab/construct.hpp"
#include "srlab/cyclic.hpp"
#include "srlab/error.hpp"
#include "srlab/polytext.hpp"
#include "srlab/properties.hpp"
#include "srlab/serialize.hpp"
#include "srlab/tables.hpp"

namespace srlab {

namespace {

using u64 = std::uint64_t;

struct Globals {
  u64 budget = 1ull << 24;
  u64 pair_budget = 1ull << 27;
  unsigned jobs = 1;
  std::string format = "json";
  u64 seed = 1;
  bool timing = false;
};

struct FieldArgs {
  u64 q = 0;
  std::string tower;  // "p:d1,d2,..."
};

void add_field_options(CLI::App* c, FieldArgs& a) {
  c->add_option("--q", a.q, "field order, one extension step over the prime field");
  c->add_option("--tower", a.tower, "tower as p:d1,d2,... (degrees of the successive steps)");
}

FieldPtr make_field(const FieldArgs& a) {
  if (!a.tower.empty()) {
    auto colon = a.tower.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "tower must look like p:d1,d2");
    std::uint32_t p = static_cast<std::uint32_t>(std::stoul(a.tower.substr(0, colon)));
    std::vector<unsigned> degs;
    std::stringstream ss(a.tower.substr(colon + 1));
    for (std::string part; std::getline(ss, part, ',');)
      if (!part.empty()) degs.push_back(static_cast<unsigned>(std::stoul(part)));
    return Field::tower(p, degs);
  }
  if (a.q == 0) throw Error(ErrorKind::ParseError, "give --q or --tower");
  return Field::gf(a.q);
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    Json j = Json::parse(read_input(path, in));
    // outputs of `cyclic` and `sr construct-*` wrap the code
    if (j.is_object() && j.contains("code") && !j.contains("generator")) return j["code"];
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

BlockShapes parse_blocks(const std::string& text) {
  // "2x3,2x2*5"
  BlockShapes out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    unsigned m = 0, n = 0, rep = 1;
    char x = 0, star = 0;
    std::istringstream ps(part);
    ps >> m >> x >> n;
    if (!ps || x != 'x') throw Error(ErrorKind::ParseError, "bad block '" + part + "', expected MxN or MxN*K");
    if (ps >> star) {
      if (star != '*' || !(ps >> rep)) throw Error(ErrorKind::ParseError, "bad block repeat in '" + part + "'");
    }
    for (unsigned i = 0; i < rep; ++i) out.push_back({m, n});
  }
  return out;
}

std::vector<Elem> parse_elems(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(static_cast<Elem>(std::stoul(part)));
  return out;
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

void emit(std::ostream& out, const Globals& g, const Json& j) {
  if (g.format != "csv") {
    out << j.dump(2) << "\n";
    return;
  }
  // header row of top-level keys, one value row; nested values as JSON text
  if (!j.is_object()) {
    out << "value\r\n" << csv_cell(j.dump()) << "\r\n";
    return;
  }
  std::vector<std::string> head, vals;
  for (auto& [k, v] : j.items()) {
    head.push_back(csv_cell(k));
    vals.push_back(csv_cell(v.is_string() ? v.get<std::string>() : v.dump()));
  }
  for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
  out << "\r\n";
  for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << vals[i];
  out << "\r\n";
}

Json distance_json(const DistanceResult& r) {
  Json j{{"d", r.distance}, {"exact", r.exact}, {"lower_bound", r.lower_bound},
         {"method", r.method}, {"evaluated", r.evaluated}, {"total", r.total}};
  j["witness"] = r.witness;
  return j;
}

Basis basis_for(const FieldPtr& ext, const std::string& spec, bool prefer_self_dual) {
  if (!spec.empty()) return Basis(ext, parse_elems(spec));
  if (prefer_self_dual && self_dual_basis_exists(ext->base()->order(), ext->degree())) return self_dual_basis(ext);
  return Basis::polynomial(ext);
}

Json basis_json(const Basis& b) { return b.elements(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-dual and LCD codes in the sum-rank metric", "srlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "codewords evaluated by a distance search");
  app.add_option("--pair-budget", g.pair_budget, "codeword pairs for the pairwise sum-rank search");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "seed for randomized commands");
  app.add_flag("--timing", g.timing, "include elapsed seconds in table reports");

  // field
  auto* field = app.add_subcommand("field", "finite field queries");
  field->require_subcommand(1);
  FieldArgs fa;
  auto* f_info = field->add_subcommand("info", "order, modulus chain, primitive element, self-dual basis");
  add_field_options(f_info, fa);
  auto* f_trace = field->add_subcommand("trace", "trace of an element down to a subfield");
  add_field_options(f_trace, fa);
  Elem element = 0;
  u64 trace_to = 0;
  f_trace->add_option("element", element, "canonical integer")->required();
  f_trace->add_option("--to", trace_to, "order of the target subfield (default: prime field)");

  // cyclic
  auto* cyc = app.add_subcommand("cyclic", "cyclic code from a generator polynomial or BCH parameters");
  FieldArgs ca;
  add_field_options(cyc, ca);
  std::size_t cyc_n = 0;
  std::string cyc_gen;
  std::vector<u64> cyc_bch;
  bool cyc_cosets = false;
  cyc->add_option("--n", cyc_n, "code length")->required();
  auto* o_gen = cyc->add_option("--gen", cyc_gen, "generator polynomial, e.g. \"w^2+w^2x+x^2+x^3\"");
  auto* o_bch = cyc->add_option("--bch", cyc_bch, "designed distance and first exponent")->expected(2);
  o_gen->excludes(o_bch);
  cyc->add_flag("--cosets", cyc_cosets, "also list all cyclotomic cosets");

  // code
  auto* code = app.add_subcommand("code", "linear code queries on code JSON");
  code->require_subcommand(1);
  std::string code_in = "-";
  std::map<std::string, CLI::App*> code_cmds;
  for (auto [name, what] : std::initializer_list<std::pair<const char*, const char*>>{
           {"dual", "Euclidean dual"},
           {"selfdual", "whether C equals its dual"},
           {"lcd", "whether C meets its dual only in 0"},
           {"mindist", "minimum Hamming distance"},
           {"info", "length, dimension, hull dimension"}}) {
    auto* c = code->add_subcommand(name, what);
    c->add_option("input", code_in, "code JSON file, - for stdin");
    code_cmds[name] = c;
  }

  // sr
  auto* sr = app.add_subcommand("sr", "sum-rank constructions and queries");
  sr->require_subcommand(1);
  std::vector<std::string> sr_codes;
  std::string sr_in = "-", sr_basis, sr_blocks, sr_method = "exhaustive";
  auto* s_csr = sr->add_subcommand("construct-sr", "SR(C_0, ..., C_{m-1}) from m codes of equal length");
  s_csr->add_option("codes", sr_codes, "code JSON files")->required();
  s_csr->add_option("--basis", sr_basis, "basis of F_{q^m} over F_q as canonical ints");
  auto* s_cmb = sr->add_subcommand("construct-matb", "Mat_B(C) into blocks (m, n_i)");
  s_cmb->add_option("input", sr_in, "code JSON file, - for stdin");
  s_cmb->add_option("--basis", sr_basis, "basis (default: a self-dual basis when one exists)");
  s_cmb->add_option("--blocks", sr_blocks, "profile such as 2x3,2x2*5 (default: (m,m) blocks, remainder on the first)");
  std::map<std::string, CLI::App*> sr_cmds;
  for (auto [name, what] : std::initializer_list<std::pair<const char*, const char*>>{
           {"dual", "dual under the trace inner product"},
           {"selfdual", "whether the code equals its trace dual"},
           {"lcd", "whether the code meets its trace dual only in 0"},
           {"structure", "half dimension and all-ones checks of a self-dual code"},
           {"cyclic", "whether the code is closed under the block shift"}}) {
    auto* c = sr->add_subcommand(name, what);
    c->add_option("input", sr_in, "sum-rank code JSON file, - for stdin");
    sr_cmds[name] = c;
  }
  auto* s_min = sr->add_subcommand("mindist", "minimum sum-rank distance");
  s_min->add_option("input", sr_in, "sum-rank code JSON (exhaustive method)");
  s_min->add_option("--method", sr_method)->check(CLI::IsMember({"exhaustive", "pairs"}));
  s_min->add_option("--codes", sr_codes, "C0 and C1 code JSON files (pairs method)");
  auto* s_bounds = sr->add_subcommand("bounds", "distance sandwiches");
  std::vector<unsigned> b_sr, b_matb, b_square;
  std::size_t b_sdsr = 0, b_sdf4 = 0;
  s_bounds->add_option("--sr-bounds,--theorem23", b_sr, "m d_0 ... d_{m-1}: bounds for SR(C_0, ..., C_{m-1})");
  s_bounds->add_option("--matb-bounds,--prop38", b_matb, "d: bounds for Mat_B(C) on --blocks");
  s_bounds->add_option("--square-bounds,--cor32", b_square, "d t: bounds for Mat_B(C) on t blocks (2,2)")->expected(2);
  s_bounds->add_option("--selfdual-sr-upper", b_sdsr, "t: distance upper bound for self-dual codes on t blocks (2,2)");
  s_bounds->add_option("--selfdual-f4-upper", b_sdf4, "n: distance upper bound for self-dual codes over GF(4)");
  s_bounds->add_option("--blocks", sr_blocks, "profile for --matb-bounds");
  auto* s_verify = sr->add_subcommand("verify", "check a duality theorem on given codes");
  s_verify->add_option("codes", sr_codes, "code JSON files: m codes for SR, one code with --matb")->required();
  bool verify_matb = false;
  s_verify->add_flag("--matb", verify_matb, "check Mat_B(C)^perp = Mat_B'(C^perp)");
  s_verify->add_option("--basis", sr_basis, "basis as canonical ints");
  s_verify->add_option("--blocks", sr_blocks, "profile for --matb");

  // tables
  auto* tables = app.add_subcommand("tables", "recompute the embedded table manifests");
  std::vector<std::string> table_args;
  tables->add_option("ids", table_args, "table ids, `all`, or `ids` to list them")->required();

  // check
  auto* check = app.add_subcommand("check", "randomized property suites, seeded by --seed");
  std::string check_name;
  std::size_t check_trials = 100;
  check->add_option("property", check_name, "suite name, or `list`")->required();
  check->add_option("--trials", check_trials, "number of random instances");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) {
      if (check_name == "list") {
        emit(out, g, property_names());
        return 0;
      }
      PropertyReport r = run_property(check_name, check_trials, g.seed);
      Json j{{"property", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"seed", g.seed}};
      if (r.failures) j["first_failure"] = r.first_failure;
      emit(out, g, j);
      return r.failures ? 3 : 0;
    }
    if (f_info->parsed()) {
      FieldPtr f = make_field(fa);
      Json j = field_to_json(f);
      j["order"] = f->order();
      j["absolute_degree"] = f->absolute_degree();
      j["primitive"] = f->primitive();
      j["describe"] = f->describe();
      if (!f->is_prime()) {
        bool ex = self_dual_basis_exists(f->base()->order(), f->degree());
        j["self_dual_basis_exists"] = ex;
        if (ex) j["self_dual_basis"] = basis_json(self_dual_basis(f));
      }
      emit(out, g, j);
      return 0;
    }
    if (f_trace->parsed()) {
      FieldPtr f = make_field(fa);
      if (element >= f->order()) throw Error(ErrorKind::FieldMismatch, "element outside the field");
      const Field* sub = f.get();
      while (sub->base() && (trace_to == 0 ? true : sub->order() != trace_to)) sub = sub->base().get();
      if (trace_to && sub->order() != trace_to) throw Error(ErrorKind::NotSubfield, "no subfield of that order in the tower");
      emit(out, g, Json{{"element", element}, {"subfield_order", sub->order()}, {"trace", f->trace_to(element, *sub)}});
      return 0;
    }
    if (cyc->parsed()) {
      FieldPtr f = make_field(ca);
      Polynomial gen(f);
      Json meta;
      if (!cyc_gen.empty()) {
        gen = parse_polynomial(f, cyc_gen);
      } else if (cyc_bch.size() == 2) {
        RootContext rc(f, cyc_n);
        gen = rc.bch_generator(static_cast<unsigned>(cyc_bch[0]), cyc_bch[1]);
        Json used = Json::array();
        std::vector<std::size_t> seen;
        for (u64 j = 0; j + 1 < cyc_bch[0]; ++j) {
          std::size_t idx = rc.cosets().index[(cyc_bch[1] + j) % cyc_n];
          if (std::find(seen.begin(), seen.end(), idx) == seen.end()) {
            seen.push_back(idx);
            used.push_back(rc.cosets().cosets[idx]);
          }
        }
        meta["cosets_used"] = used;
      } else {
        throw Error(ErrorKind::ParseError, "give --gen or --bch");
      }
      LinearCode c = cyclic_code(gen, cyc_n);
      Json j;
      j["code"] = code_to_json(c);
      j["generator_polynomial"] = {{"text", format_polynomial(gen)}, {"coeffs", gen.coeffs()}};
      j["n"] = c.n();
      j["k"] = c.k();
      for (auto& [k, v] : meta.items()) j[k] = v;
      if (cyc_cosets) j["cosets"] = cyclotomic_cosets(f->order(), cyc_n).cosets;
      emit(out, g, j);
      return 0;
    }
    for (auto& [name, c] : code_cmds) {
      if (!c->parsed()) continue;
      LinearCode C = code_from_json(read_json(code_in, in));
      if (name == "dual") {
        emit(out, g, code_to_json(dual(C)));
      } else if (name == "selfdual") {
        emit(out, g, Json{{"self_dual", is_self_dual(C)}});
      } else if (name == "lcd") {
        emit(out, g, Json{{"lcd", is_lcd(C)}, {"hull_dimension", hull_dimension(C)}});
      } else if (name == "info") {
        emit(out, g, Json{{"n", C.n()}, {"k", C.k()}, {"self_orthogonal", is_self_orthogonal(C)},
                          {"self_dual", is_self_dual(C)}, {"lcd", is_lcd(C)}, {"hull_dimension", hull_dimension(C)}});
      } else {
        auto r = min_hamming_distance(C, {g.budget, g.jobs});
        emit(out, g, distance_json(r));
        return r.exact ? 0 : 2;
      }
      return 0;
    }
    if (s_csr->parsed()) {
      std::vector<LinearCode> cs;
      for (auto& p : sr_codes) cs.push_back(code_from_json(read_json(p, in)));
      Basis B = basis_for(cs.at(0).field(), sr_basis, false);
      SumRankCode S = sr_construct(cs, B);
      emit(out, g, Json{{"code", srcode_to_json(S)}, {"dim", S.dim()}, {"basis", basis_json(B)}});
      return 0;
    }
    if (s_cmb->parsed()) {
      LinearCode C = code_from_json(read_json(sr_in, in));
      Basis B = basis_for(C.field(), sr_basis, true);
      const FieldPtr& base = C.field()->base();
      AmbientProfile P = sr_blocks.empty() ? default_matb_profile(base, C.field()->degree(), C.n())
                                           : AmbientProfile(base, parse_blocks(sr_blocks));
      SumRankCode S = matb_construct(C, B, P);
      emit(out, g, Json{{"code", srcode_to_json(S)}, {"dim", S.dim()}, {"basis", basis_json(B)}});
      return 0;
    }
    for (auto& [name, c] : sr_cmds) {
      if (!c->parsed()) continue;
      SumRankCode S = srcode_from_json(read_json(sr_in, in));
      if (name == "dual") {
        emit(out, g, srcode_to_json(dual_tr(S)));
      } else if (name == "selfdual") {
        Json j{{"self_dual", is_self_dual_sr(S)}};
        if (j["self_dual"].get<bool>()) {
          auto r = structural_checks(S);
          j["half_dimension"] = r.half_dimension;
          if (r.all_ones_checked) j["contains_all_ones"] = r.contains_all_ones;
        }
        emit(out, g, j);
      } else if (name == "lcd") {
        emit(out, g, Json{{"lcd", is_lcd_sr(S)}});
      } else if (name == "structure") {
        auto r = structural_checks(S);
        Json j{{"half_dimension", r.half_dimension}, {"passed", r.passed()}};
        if (r.all_ones_checked) j["contains_all_ones"] = r.contains_all_ones;
        emit(out, g, j);
      } else {
        emit(out, g, Json{{"cyclic", is_cyclic_sr(S)}});
      }
      return 0;
    }
    if (s_min->parsed()) {
      DistanceResult r;
      if (sr_method == "pairs") {
        if (sr_codes.size() != 2) throw Error(ErrorKind::ParseError, "--method pairs needs --codes C0 C1");
        r = pairwise_sr_distance(code_from_json(read_json(sr_codes[0], in)), code_from_json(read_json(sr_codes[1], in)),
                                 {g.pair_budget, g.jobs});
      } else {
        r = min_sr_distance(srcode_from_json(read_json(sr_in, in)), {g.budget, g.jobs});
      }
      emit(out, g, distance_json(r));
      return r.exact ? 0 : 2;
    }
    if (s_bounds->parsed()) {
      Json j;
      if (!b_sr.empty()) {
        std::vector<unsigned> d(b_sr.begin() + 1, b_sr.end());
        auto b = sr_distance_bounds(b_sr[0], d);
        j = {{"lower", b.lower}, {"upper", b.upper}};
      } else if (!b_matb.empty()) {
        if (sr_blocks.empty()) throw Error(ErrorKind::ParseError, "--matb-bounds needs --blocks");
        auto b = matb_distance_bounds(b_matb[0], AmbientProfile(Field::prime(2), parse_blocks(sr_blocks)));
        j = {{"lower", b.lower}, {"upper", b.upper}};
      } else if (b_square.size() == 2) {
        auto b = matb_square_bounds(b_square[0], b_square[1]);
        j = {{"lower", b.lower}, {"upper", b.upper}};
      } else if (b_sdsr) {
        j = {{"upper", selfdual_sr_distance_upper(b_sdsr)}};
      } else if (b_sdf4) {
        j = {{"upper", selfdual_f4_distance_upper(b_sdf4)}};
      } else {
        throw Error(ErrorKind::ParseError, "choose one bound");
      }
      emit(out, g, j);
      return 0;
    }
    if (s_verify->parsed()) {
      std::vector<LinearCode> cs;
      for (auto& p : sr_codes) cs.push_back(code_from_json(read_json(p, in)));
      bool holds;
      if (verify_matb) {
        const LinearCode& C = cs.at(0);
        Basis B = basis_for(C.field(), sr_basis, false);
        const FieldPtr& base = C.field()->base();
        AmbientProfile P = sr_blocks.empty() ? default_matb_profile(base, C.field()->degree(), C.n())
                                             : AmbientProfile(base, parse_blocks(sr_blocks));
        holds = verify_duality_matb(C, B, P);
      } else {
        holds = verify_duality_sr(cs, basis_for(cs.at(0).field(), sr_basis, false));
      }
      emit(out, g, Json{{"holds", holds}});
      return 0;
    }
    if (tables->parsed()) {
      if (table_args.size() == 1 && table_args[0] == "ids") {
        Json j = Json::array();
        for (auto& id : table_ids()) j.push_back({{"table", id}, {"title", table_manifest(id).value("title", "")}});
        emit(out, g, j);
        return 0;
      }
      std::vector<std::string> ids;
      for (auto& a : table_args) {
        if (a == "all") {
          auto all = table_ids();
          ids.insert(ids.end(), all.begin(), all.end());
        } else {
          table_manifest(a);
          ids.push_back(a);
        }
      }
      TableOptions opt;
      opt.budget = g.budget;
      opt.pair_budget = g.pair_budget;
      opt.jobs = g.jobs;
      std::vector<TableReport> reps;
      for (auto& id : ids) reps.push_back(run_table(id, opt));
      if (g.format == "csv") {
        out << report_csv(reps, g.timing);
      } else {
        out << report_json(reps, g.timing).dump(2) << "\n";
      }
      return report_exit_code(reps);
    }
  } catch (const Error& e) {
    err << Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", "Unexpected"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace srlab
