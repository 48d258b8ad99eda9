// schurmp: command-line front end for the schurmp library.
//
// Exit codes: 0 success, 2 precondition violation, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schurmp/schurmp.hpp"

using namespace schurmp;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::InvalidArgument, path + ": " + e.what());
  }
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) fail(Errc::InvalidArgument, "not an integer: '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// "reps:1,3,5" or "W:r=5,s=5,m=2". Returns the closed set and, for W specs,
// the restricted-weight configuration.
struct GeneratingSet {
  CosetSet set;
  std::optional<RestrictedWeightConfig> weight;
};

GeneratingSet parse_generating_set(const std::string& text, std::uint32_t q, std::optional<std::uint32_t> n) {
  if (text.rfind("reps:", 0) == 0) {
    if (!n) fail(Errc::InvalidArgument, "--n is required with reps:");
    return {coset_closure(q, *n, parse_uint_list(text.substr(5))), std::nullopt};
  }
  if (text.rfind("W:", 0) == 0) {
    RestrictedWeightConfig cfg;
    cfg.q = q;
    bool have_r = false, have_s = false, have_m = false;
    std::stringstream ss(text.substr(2));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail(Errc::InvalidArgument, "expected key=value in '" + kv + "'");
      const auto key = kv.substr(0, eq);
      const auto vals = parse_uint_list(kv.substr(eq + 1));
      if (vals.size() != 1) fail(Errc::InvalidArgument, "expected one value for " + key);
      if (key == "r") cfg.r = vals[0], have_r = true;
      else if (key == "s") cfg.s = vals[0], have_s = true;
      else if (key == "m") cfg.m = vals[0], have_m = true;
      else fail(Errc::InvalidArgument, "unknown key '" + key + "'");
    }
    if (!have_r || !have_s || !have_m) fail(Errc::InvalidArgument, "W: needs r, s and m");
    auto set = restricted_weight_set(cfg);
    if (n && *n != set.n()) fail(Errc::ModulusMismatch, "--n differs from q^r - 1 = " + std::to_string(set.n()));
    return {std::move(set), cfg};
  }
  fail(Errc::InvalidArgument, "generating set must start with 'reps:' or 'W:'");
}

json cosets_json(const CosetSet& s) {
  json out = json::array();
  std::vector<bool> seen(s.n(), false);
  for (auto a : s.elems()) {
    if (seen[a]) continue;
    auto c = coset(s.q(), s.n(), a);
    for (auto x : c.elems()) seen[x] = true;
    out.push_back(c.elems());
  }
  return out;
}

json set_summary(const CosetSet& s) {
  json out = coset_to_json(s);
  out["size"] = s.size();
  out["closed"] = s.is_closed();
  out["cosets"] = cosets_json(s);
  if (!s.empty()) {
    out["amplitude"] = amplitude(s);
    out["max_element_amplitude"] = max_element_amplitude(s);
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string format_table(const std::string& name, const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "csv") return to_csv(rows);
  if (format == "json") return table_to_json(name, rows).dump(2) + "\n";
  return to_markdown(rows);
}

json distance_report_json(const MPDistanceReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.per_row)
    rows.push_back({{"row_code", distance_to_json(r.row_code)}, {"constituent", distance_to_json(r.constituent)}});
  return {{"bound", distance_to_json(rep.bound)}, {"nested", rep.nested}, {"per_row", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur products of linear, cyclic, matrix-product and Hermitian codes"};
  app.require_subcommand(1);

  // coset
  auto* coset_cmd = app.add_subcommand("coset", "Describe a generating set and its cyclotomic cosets");
  std::uint32_t coset_q = 2;
  std::optional<std::uint32_t> coset_n;
  std::string coset_set;
  coset_cmd->add_option("--q", coset_q, "Field size")->default_val(2);
  coset_cmd->add_option("--n", coset_n, "Length (modulus)");
  coset_cmd->add_option("--set", coset_set, "reps:1,3,5 or W:r=5,s=5,m=2")->required();

  // cyclic
  auto* cyclic_cmd = app.add_subcommand("cyclic", "Build the cyclic code C(I) and its square");
  std::uint32_t cyc_q = 2;
  std::optional<std::uint32_t> cyc_n;
  std::string cyc_set, cyc_format = "json";
  bool cyc_distance = false, cyc_code = false;
  std::uint64_t cyc_budget = kDefaultDistanceBudget;
  cyclic_cmd->add_option("--q", cyc_q, "Field size")->default_val(2);
  cyclic_cmd->add_option("--n", cyc_n, "Length");
  cyclic_cmd->add_option("--set", cyc_set, "Generating set: reps:... or W:...")->required();
  cyclic_cmd->add_flag("--distance", cyc_distance, "Brute-force the minimum distance within the budget");
  cyclic_cmd->add_flag("--emit-code", cyc_code, "Include the generator matrix");
  cyclic_cmd->add_option("--budget", cyc_budget, "Codeword enumeration budget");
  cyclic_cmd->add_option("--format", cyc_format, "json or text (generator rows as logs)")
      ->check(CLI::IsMember({"json", "text"}));

  // square
  auto* square_cmd = app.add_subcommand("square", "Schur square of a code given as JSON");
  std::string sq_code_path;
  std::uint64_t sq_budget = kDefaultDistanceBudget;
  square_cmd->add_option("--code", sq_code_path, "Code descriptor file")->required()->check(CLI::ExistingFile);
  square_cmd->add_option("--budget", sq_budget, "Codeword enumeration budget");

  // mp
  auto* mp_cmd = app.add_subcommand("mp", "Matrix-product code from a JSON descriptor");
  std::string mp_spec_path, mp_square;
  std::uint64_t mp_budget = kDefaultDistanceBudget;
  mp_cmd->add_option("--spec", mp_spec_path, "Descriptor file {A, constituents}")
      ->required()
      ->check(CLI::ExistingFile);
  mp_cmd->add_option("--square", mp_square, "Closed-form square: uuv, vandermonde or msp")
      ->check(CLI::IsMember({"uuv", "vandermonde", "msp"}));
  mp_cmd->add_option("--budget", mp_budget, "Codeword enumeration budget");

  // hermitian
  auto* herm_cmd = app.add_subcommand("hermitian", "Parameters of the Hermitian matrix-product code C(r,s)");
  std::uint32_t herm_q = 4, herm_r = 13, herm_s = 2;
  bool herm_verify = false;
  herm_cmd->add_option("--q", herm_q, "Curve parameter (field GF(q^2))")->required();
  herm_cmd->add_option("--r", herm_r, "Pole order r")->required();
  herm_cmd->add_option("--s", herm_s, "Number of constituents s")->required();
  herm_cmd->add_flag("--verify-ranks", herm_verify, "Recompute k and k* by explicit rank");

  // table
  auto* table_cmd = app.add_subcommand("table", "Parameter tables");
  table_cmd->require_subcommand(1);
  auto* rw_cmd = table_cmd->add_subcommand("restricted-weight", "(u,u+v) codes from restricted-weight cyclic codes");
  RestrictedWeightTableConfig rw_cfg;
  std::string rw_format = "md";
  rw_cmd->add_option("--r-min", rw_cfg.r_min)->default_val(5);
  rw_cmd->add_option("--r-max", rw_cfg.r_max)->default_val(11);
  rw_cmd->add_option("--s", rw_cfg.s)->default_val(5);
  rw_cmd->add_option("--m1", rw_cfg.m1)->default_val(2);
  rw_cmd->add_option("--m2", rw_cfg.m2)->default_val(1);
  rw_cmd->add_option("--q", rw_cfg.q)->default_val(2);
  rw_cmd->add_option("--format", rw_format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));

  auto* th_cmd = table_cmd->add_subcommand("hermitian", "Hermitian C(r,s) codes and their squares");
  std::uint32_t th_q = 4;
  std::string th_rows, th_format = "md";
  bool th_verify = false;
  th_cmd->add_option("--q", th_q)->default_val(4);
  th_cmd->add_option("--rows", th_rows, "Comma-separated r:s pairs (default: the 13 standard rows)");
  th_cmd->add_flag("--verify-ranks", th_verify, "Recompute k and k* by explicit rank");
  th_cmd->add_option("--format", th_format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run oracle-equality suites");
  std::string v_suite = "all", v_tier = "small";
  std::uint64_t v_seed = 1;
  bool v_fault = false;
  verify_cmd->add_option("--suite", v_suite, "uuv, vandermonde, msp, nested, cyclic, evaluation, hermitian or all");
  verify_cmd->add_option("--seed", v_seed)->default_val(1);
  verify_cmd->add_option("--tier", v_tier)->check(CLI::IsMember({"small", "full"}));
  verify_cmd->add_flag("--inject-fault", v_fault, "Compare against a deliberately wrong Schur product");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (*coset_cmd) {
      const auto g = parse_generating_set(coset_set, coset_q, coset_n);
      auto out = set_summary(g.set);
      out = json{{"schema_version", kSchemaVersion}, {"set", out}};
      if (g.weight) out["dual_distance_bound"] = distance_to_json(dual_distance_bound_W(*g.weight));
      emit(out);
    } else if (*cyclic_cmd) {
      const auto g = parse_generating_set(cyc_set, cyc_q, cyc_n);
      const auto field = make_field_of_size(cyc_q);
      const auto h = cyclic_code(field, g.set);
      if (cyc_format == "text") {
        std::cout << generator_text(h.code());
        return 0;
      }
      const auto sq = cyclic_product(h, h);
      json out = {{"schema_version", kSchemaVersion},
                  {"q", cyc_q},
                  {"n", h.length()},
                  {"k", h.dimension()},
                  {"generating_set", set_summary(h.generating_set())},
                  {"defining_set", coset_to_json(h.defining_set())},
                  {"generator_polynomial", h.generator_polynomial()}};
      if (h.dimension() > 0) {
        out["d_bound"] = distance_to_json(DistanceValue::lower_bound(h.designed_distance()));
        out["d_bound_max_element"] =
            distance_to_json(DistanceValue::lower_bound(h.length() - max_element_amplitude(h.generating_set()) + 1));
      }
      if (cyc_distance) out["d"] = distance_to_json(min_distance(h.code(), cyc_budget));
      out["square"] = {{"k", sq.dimension()}, {"generating_set", coset_to_json(sq.generating_set())}};
      if (sq.dimension() > 0)
        out["square"]["d_bound"] = distance_to_json(DistanceValue::lower_bound(sq.designed_distance()));
      if (cyc_code) out["code"] = code_to_json(h.code());
      emit(out);
    } else if (*square_cmd) {
      const auto c = code_from_json(read_json_file(sq_code_path));
      const auto sq = schur_square(c);
      json out = {{"schema_version", kSchemaVersion}, {"n", c.length()}, {"k", c.dimension()},
                  {"k_square", sq.dimension()}};
      if (c.dimension() > 0) out["singleton_square_bound"] = singleton_square_bound(c.length(), c.dimension());
      out["d"] = distance_to_json(min_distance(c, sq_budget));
      out["d_square"] = distance_to_json(min_distance(sq, sq_budget));
      out["square"] = code_to_json(sq);
      emit(out);
    } else if (*mp_cmd) {
      const auto spec = spec_from_json(read_json_file(mp_spec_path));
      const auto code = build(spec);
      json out = {{"schema_version", kSchemaVersion},
                  {"n", code.length()},
                  {"k", code.dimension()},
                  {"distance", distance_report_json(distance_bound(spec, {}, mp_budget))}};
      if (!mp_square.empty()) {
        MatrixProductSpec sq;
        if (mp_square == "uuv") {
          if (spec.rows() != 2 || !(spec.A == uuv_matrix(spec.field())))
            fail(Errc::InvalidArgument, "spec is not a (u,u+v) code");
          sq = square_uuv(spec.constituents[0], spec.constituents[1], mp_budget).spec;
        } else if (mp_square == "vandermonde") {
          if (!detail::is_vandermonde(spec.A)) fail(Errc::InvalidArgument, "defining matrix is not Vandermonde");
          // With one row the points are not recorded in A; any l distinct ones do.
          std::vector<Elem> alphas;
          if (spec.rows() > 1)
            alphas.assign(spec.A.row(1).begin(), spec.A.row(1).end());
          else {
            alphas = default_alphas(*spec.field());
            alphas.resize(std::min(alphas.size(), spec.cols()));
          }
          sq = square_vandermonde(spec.constituents, alphas);
        } else {
          const auto p = spec.field()->characteristic();
          if (!(spec.A == ms_p_matrix(spec.field(), p))) fail(Errc::InvalidArgument, "defining matrix is not MS_p");
          sq = square_msp(spec.constituents, p);
        }
        const auto closed = build(sq);
        const auto direct = schur_square(code);
        out["square"] = {{"k", closed.dimension()},
                         {"A", matrix_to_json(sq.A)},
                         {"constituent_dims", json::array()},
                         {"matches_direct", closed == direct},
                         {"distance", distance_report_json(distance_bound(sq, {}, mp_budget))}};
        for (const auto& c : sq.constituents) out["square"]["constituent_dims"].push_back(c.dimension());
        if (!(closed == direct)) {
          emit(out);
          return kExitVerification;
        }
      }
      emit(out);
    } else if (*herm_cmd) {
      const auto p = C_rs_params(herm_q, herm_r, herm_s);
      bool verified = false;
      if (herm_verify) {
        const HermitianCurve curve(herm_q);
        const auto ranks = hermitian_ranks(curve, herm_r, herm_s);
        verified = ranks.k == p.k && ranks.k_star == p.k_star;
        if (!verified) {
          emit({{"n", p.n}, {"k", ranks.k}, {"k_star", ranks.k_star}, {"verified", false}});
          return kExitVerification;
        }
      }
      emit({{"schema_version", kSchemaVersion},
            {"q", herm_q},
            {"r", herm_r},
            {"s", herm_s},
            {"n", p.n},
            {"k", p.k},
            {"d_designed", p.d},
            {"k_star", p.k_star},
            {"d_star_designed", p.d_star},
            {"verified", verified}});
    } else if (*rw_cmd) {
      std::cout << format_table("restricted-weight", table_restricted_weight(rw_cfg), rw_format);
    } else if (*th_cmd) {
      auto rows = default_hermitian_rows();
      if (!th_rows.empty()) {
        rows.clear();
        std::stringstream ss(th_rows);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) fail(Errc::InvalidArgument, "row must be r:s, got '" + item + "'");
          const auto r = parse_uint_list(item.substr(0, colon)), s = parse_uint_list(item.substr(colon + 1));
          if (r.size() != 1 || s.size() != 1) fail(Errc::InvalidArgument, "row must be r:s, got '" + item + "'");
          rows.emplace_back(r[0], s[0]);
        }
      }
      std::cout << format_table("hermitian", table_hermitian(th_q, rows, th_verify), th_format);
    } else if (*verify_cmd) {
      const auto rep = verify(v_suite, v_seed, v_tier == "full" ? Tier::full : Tier::small,
                              v_fault ? Oracle::faulty() : Oracle{});
      json cases = json::array();
      for (const auto& c : rep.cases) {
        json j = {{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        cases.push_back(std::move(j));
      }
      emit({{"schema_version", kSchemaVersion},
            {"suite", rep.suite},
            {"seed", rep.seed},
            {"tier", v_tier},
            {"total", rep.cases.size()},
            {"failed", rep.failures()},
            {"passed", rep.ok()},
            {"cases", cases}});
      return rep.ok() ? 0 : kExitVerification;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return is_verification_failure(e.code()) ? kExitVerification : kExitPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
