// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "osforge/cartan.hpp"
#include "osforge/classify.hpp"
#include "osforge/corpus.hpp"
#include "osforge/groebner.hpp"
#include "osforge/invariants.hpp"
#include "osforge/json_io.hpp"
#include "osforge/module.hpp"
#include "osforge/os_algebra.hpp"
#include "osforge/verify.hpp"

namespace {

using osforge::io::json;
using namespace osforge;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGenericity = 3;

struct GlobalOptions {
  std::string field = "p:32003";
  int imax = 4;
  std::uint64_t seed = 1;
  int trials = 8;
  std::string order = "std";
  std::string format = "json";

  la::Field make_field() const {
    if (field == "q" || field == "Q" || field == "rationals") {
      return la::Field::rationals();
    }
    std::string spec = field;
    if (spec.rfind("p:", 0) == 0) spec = spec.substr(2);
    try {
      return la::Field::prime(std::stoll(spec));
    } catch (const std::exception&) {
      throw std::invalid_argument("--field expects q or p:<prime>, got " +
                                  field);
    }
  }
  exterior::MonomialOrder make_order() const {
    return exterior::order_from_name(order);
  }
  verify::RunConfig make_config() const {
    return verify::RunConfig{make_field(), imax, seed, trials, make_order()};
  }
};

void print_table(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        print_table(value, path, os);
      } else {
        os << path << ": " << (value.is_string() ? value.get<std::string>()
                                                 : value.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    int k = 0;
    for (const auto& item : j) {
      print_table(item, prefix + "[" + std::to_string(k++) + "]", os);
    }
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const json& out, const GlobalOptions& opts) {
  if (opts.format == "table") {
    print_table(out, "", std::cout);
  } else {
    std::cout << out.dump(2) << "\n";
  }
}

json header(const std::string& command, const GlobalOptions& opts) {
  json out;
  out["schema"] = 1;
  out["command"] = command;
  out["field"] = opts.make_field().name();
  return out;
}

json table_to_json(const homology::HomTable& t) {
  json rows = json::array();
  for (const auto& [key, v] : t.entries) {
    rows.push_back({key.first, key.second, v});
  }
  return rows;
}

json totals_to_json(const homology::HomTable& t) {
  json totals = json::array();
  for (int i = 0; i <= t.i_max; ++i) totals.push_back(t.total(i));
  return totals;
}

json poly_to_json(const poly::ZPoly& p) {
  json out;
  out["text"] = p.str();
  out["coefficients"] = p.coeffs();
  return out;
}

std::vector<exterior::ExteriorElement> os_generators(const matroid::Matroid& m,
                                                     const la::Field& field) {
  return osalg::os_ideal(m, field).generators;
}

int cmd_matroid_info(const std::string& arg, const GlobalOptions& opts) {
  auto m = io::load_matroid(arg);
  json out = header("matroid info", opts);
  out["matroid"] = io::matroid_to_json(m);
  out["rank"] = m.rank();
  json comps = json::array();
  for (auto c : m.components()) comps.push_back(matroid::set_elements(c));
  out["components"] = comps;
  out["connected"] = m.is_connected();
  auto elems = m.classify_elements();
  out["loops"] = elems.loops;
  out["parallel_classes"] = elems.parallel_classes;
  out["coloops"] = elems.coloops;
  out["simple"] = elems.is_simple;
  auto lattice = m.flats_lattice();
  out["flats"] = lattice.flats.size();
  auto mu = matroid::mobius(lattice);
  out["mobius_top"] = mu[lattice.top()];
  out["characteristic_polynomial"] =
      matroid::characteristic_polynomial(m).str();
  out["beta"] = m.beta_invariant();
  json broken = json::array();
  for (auto b : m.broken_circuits()) broken.push_back(matroid::set_elements(b));
  out["broken_circuits"] = broken;
  json nbc_counts = json::array();
  {
    std::vector<long long> counts(m.n() + 1, 0);
    if (!m.has_loops()) {
      for (auto s : m.nbc_sets()) ++counts[std::popcount(s)];
    }
    for (long long c : counts) nbc_counts.push_back(c);
  }
  out["nbc_count_by_size"] = nbc_counts;
  emit(out, opts);
  return kExitOk;
}

int cmd_os(const std::string& sub, const std::string& arg,
           const GlobalOptions& opts) {
  la::Field field = opts.make_field();
  auto m = io::load_matroid(arg);
  auto gens = os_generators(m, field);
  json out = header("os " + sub, opts);
  out["matroid"] = io::matroid_to_json(m);

  if (sub == "ideal") {
    json g = json::array();
    for (const auto& e : gens) g.push_back(e.str());
    out["n"] = m.n();
    out["generators"] = g;
    emit(out, opts);
    return kExitOk;
  }
  if (sub == "hilbert") {
    auto h = osalg::hilbert_series(m);
    out["hilbert"] = poly_to_json(h);
    if (!h.is_zero()) {
      auto factor = homology::hilbert_factor(h);
      out["factorization"] = {{"s", factor.s}, {"q", factor.q.str()}};
    } else {
      out["zero_module"] = true;
    }
    emit(out, opts);
    return kExitOk;
  }
  if (sub == "betti") {
    auto betti = homology::betti_table(
        homology::module_from_ideal(gens, m.n(), field), opts.imax);
    out["betti"] = table_to_json(betti);
    out["totals"] = totals_to_json(betti);
    emit(out, opts);
    return kExitOk;
  }
  if (sub == "bass") {
    auto quotient = homology::module_from_quotient(gens, m.n(), field);
    if (quotient.is_zero()) {
      out["zero_module"] = true;
      out["bass"] = json::array();
      emit(out, opts);
      return kExitOk;
    }
    auto bass = homology::bass_table(gens, m.n(), field, opts.imax);
    out["bass"] = table_to_json(bass);
    out["totals"] = totals_to_json(bass);
    int d = m.rank();
    bool concentrated = true;
    for (const auto& [key, v] : bass.entries) {
      if (v != 0 && key.first + key.second != d) concentrated = false;
    }
    out["linear_diagonal"] = concentrated ? json(d) : json(nullptr);
    emit(out, opts);
    return kExitOk;
  }
  if (sub == "invariants") {
    if (m.has_loops()) {
      out["zero_module"] = true;
      out["note"] = "the matroid has a loop, so E/J = 0; depth/reg undefined";
      emit(out, opts);
      return kExitOk;
    }
    auto inv = homology::invariants(gens, m.n(), field, opts.imax, opts.seed,
                                    opts.trials);
    out["depth"] = inv.depth;
    if (!inv.depth_consistent) {
      out["depth_interval"] = {inv.depth_lower, inv.depth_upper};
    }
    out["cx"] = inv.cx;
    out["reg"] = inv.reg;
    out["d"] = inv.d;
    out["hilbert"] = poly_to_json(inv.hilbert);
    json gin_gens = json::array();
    for (auto u : inv.gin.generators()) {
      gin_gens.push_back(exterior::monomial_str(u));
    }
    out["gin"] = gin_gens;
    out["method"] = inv.method;
    emit(out, opts);
    return inv.depth_consistent && inv.reg_consistent ? kExitOk
                                                      : kExitCheckFailure;
  }
  if (sub == "check-linear") {
    json proj;
    if (gens.empty() && !m.has_loops()) {
      proj["linear"] = true;
      proj["d"] = nullptr;
      proj["note"] = "zero ideal";
    } else {
      std::vector<exterior::ExteriorElement> ideal_gens = gens;
      if (m.has_loops()) {
        ideal_gens = {exterior::ExteriorElement::unit(m.n(), field)};
      }
      auto lin = homology::has_linear_projective(ideal_gens, m.n(), field,
                                                 opts.imax, opts.seed);
      proj["linear"] = lin.linear;
      proj["d"] = lin.linear ? json(lin.d) : json(nullptr);
    }
    out["projective"] = proj;
    json inj;
    if (m.has_loops()) {
      inj["zero_module"] = true;
    } else {
      auto lin = homology::has_linear_injective(gens, m.n(), field, opts.imax,
                                                opts.seed);
      inj["linear"] = lin.linear;
      inj["d"] = lin.linear ? json(lin.d) : json(nullptr);
    }
    out["injective"] = inj;
    emit(out, opts);
    return kExitOk;
  }
  throw std::invalid_argument("unknown os subcommand: " + sub);
}

int cmd_ideal(const std::string& sub, const std::string& arg, int attempts,
              const GlobalOptions& opts) {
  la::Field field = opts.make_field();
  auto input = io::load_ideal(arg, field);
  json out = header("ideal " + sub, opts);
  out["n"] = input.n;
  if (sub == "ini") {
    auto ini = groebner::initial_ideal(input.generators, input.n, field,
                                       opts.make_order());
    out["order"] = opts.order;
    json g = json::array();
    for (auto u : ini.generators()) g.push_back(exterior::monomial_str(u));
    out["generators"] = g;
    emit(out, opts);
    return kExitOk;
  }
  if (sub == "gin") {
    auto gin = groebner::gin(input.generators, input.n, field, attempts,
                             opts.seed);
    out["seed"] = opts.seed;
    out["attempts"] = attempts;
    json g = json::array();
    for (auto u : gin.generators()) g.push_back(exterior::monomial_str(u));
    out["generators"] = g;
    out["strongly_stable"] = monomial::is_strongly_stable(gin);
    emit(out, opts);
    return kExitOk;
  }
  throw std::invalid_argument("unknown ideal subcommand: " + sub);
}

int cmd_module_depth(const std::string& arg, const GlobalOptions& opts) {
  la::Field field = opts.make_field();
  auto input = io::load_ideal(arg, field);
  auto mod = homology::module_from_quotient(input.generators, input.n, field);
  json out = header("module depth", opts);
  out["n"] = input.n;
  if (mod.is_zero()) {
    out["zero_module"] = true;
    emit(out, opts);
    return kExitOk;
  }
  auto dr = homology::depth(mod, opts.trials, opts.seed);
  out["depth"] = dr.value;
  json cert = json::array();
  for (const auto& v : dr.certificate) {
    exterior::ExteriorElement e = exterior::ExteriorElement::zero(input.n, field);
    for (int i = 0; i < input.n; ++i) {
      if (!field.is_zero(v[i])) {
        e = e + exterior::ExteriorElement::term(
                    input.n, field, exterior::Monomial{1} << i, v[i]);
      }
    }
    cert.push_back(e.str());
  }
  out["certificate"] = cert;
  out["method"] = dr.method;
  emit(out, opts);
  return kExitOk;
}

int cmd_classify(const std::string& arg, const GlobalOptions& opts) {
  auto m = io::load_matroid(arg);
  json out = header("classify", opts);
  out["matroid"] = io::matroid_to_json(m);
  auto cls = classify::classify_linear_resolution(m);
  json c;
  c["kind"] = classify::class_kind_name(cls.kind);
  c["linear"] = cls.is_linear();
  if (cls.is_linear()) c["m"] = cls.m;
  c["coloops"] = cls.f;
  if (!cls.parts.empty()) c["parts"] = cls.parts;
  out["class"] = c;
  json predicted = json::array();
  for (int i = 0; i <= opts.imax; ++i) {
    auto b = classify::predicted_betti(m, i);
    predicted.push_back(b ? json(*b) : json(nullptr));
  }
  out["predicted_betti"] = predicted;
  if (!m.has_loops()) {
    auto inv = classify::predicted_invariants(m);
    out["predicted_invariants"] = {
        {"depth", inv.depth}, {"cx", inv.cx}, {"reg", inv.reg}, {"d", inv.d}};
  } else {
    out["predicted_invariants"] = nullptr;
  }
  out["rank3_profile"] = classify::rank3_profile_name(classify::rank3_profile(m));
  emit(out, opts);
  return kExitOk;
}

int cmd_verify(const std::string& suite, const GlobalOptions& opts) {
  auto cfg = opts.make_config();
  auto results = verify::run_suite(suite, cfg);
  auto summary = verify::summarize(results);
  json out = header("verify " + suite, opts);
  out["config"] = {{"imax", cfg.imax},
                   {"seed", cfg.seed},
                   {"trials", cfg.trials},
                   {"order", exterior::order_name(cfg.order)}};
  json rows = json::array();
  for (const auto& r : results) {
    json row;
    row["law"] = r.law;
    row["statement"] = verify::law_statement(r.law);
    row["instance"] = r.instance;
    row["status"] = r.status == verify::Status::pass ? "pass"
                    : r.status == verify::Status::fail ? "fail"
                                                       : "genericity";
    if (r.status != verify::Status::pass) {
      row["expected"] = r.expected;
      row["got"] = r.got;
    }
    rows.push_back(row);
  }
  out["results"] = rows;
  out["summary"] = {{"passed", summary.passed},
                    {"failed", summary.failed},
                    {"genericity", summary.genericity}};
  emit(out, opts);
  if (summary.failed > 0) return kExitCheckFailure;
  if (summary.genericity > 0) return kExitGenericity;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "os-forge: exact computations with graded modules over exterior "
      "algebras and Orlik-Solomon algebras of matroids"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--field", opts.field, "coefficient field: q or p:<prime>")
      ->capture_default_str();
  app.add_option("--imax", opts.imax, "homological truncation bound")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
  app.add_option("--trials", opts.trials,
                 "random regular-element attempts per depth step")
      ->capture_default_str();
  app.add_option("--order", opts.order, "monomial order: std or rev")
      ->check(CLI::IsMember({"std", "rev"}))
      ->capture_default_str();
  app.add_option("--format", opts.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string matroid_arg, ideal_arg, suite_arg, os_sub, ideal_sub;
  int gin_attempts = 3;

  auto* matroid_cmd = app.add_subcommand("matroid", "matroid invariants");
  auto* matroid_info = matroid_cmd->add_subcommand("info",
                                                   "combinatorial invariants");
  matroid_info->add_option("matroid", matroid_arg,
                           "matroid file, JSON, or expression like U(2,3)+U(1,1)")
      ->required();

  auto* os_cmd = app.add_subcommand("os", "Orlik-Solomon algebra computations");
  os_cmd->add_option("subcommand", os_sub,
                     "ideal | hilbert | betti | bass | invariants | check-linear")
      ->required()
      ->check(CLI::IsMember({"ideal", "hilbert", "betti", "bass", "invariants",
                             "check-linear"}));
  os_cmd->add_option("matroid", matroid_arg, "matroid input")->required();

  auto* ideal_cmd = app.add_subcommand("ideal", "initial and generic initial "
                                                "ideals");
  ideal_cmd->add_option("subcommand", ideal_sub, "ini | gin")
      ->required()
      ->check(CLI::IsMember({"ini", "gin"}));
  ideal_cmd->add_option("ideal", ideal_arg, "ideal JSON file or inline JSON")
      ->required();
  ideal_cmd->add_option("--attempts", gin_attempts,
                        "independent coordinate changes for gin")
      ->capture_default_str();

  auto* module_cmd = app.add_subcommand("module", "graded module computations");
  auto* module_depth = module_cmd->add_subcommand("depth",
                                                  "depth of E/J by greedy "
                                                  "regular sequences");
  module_depth->add_option("ideal", ideal_arg, "ideal JSON file or inline JSON")
      ->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "linear-resolution classification");
  classify_cmd->add_option("matroid", matroid_arg, "matroid input")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run a structural verification suite");
  verify_cmd->add_option("suite", suite_arg, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(osforge::verify::suite_names()));

  for (CLI::App* sub : {matroid_cmd, matroid_info, os_cmd, ideal_cmd,
                        module_cmd, module_depth, classify_cmd, verify_cmd}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (matroid_info->parsed()) return cmd_matroid_info(matroid_arg, opts);
    if (os_cmd->parsed()) return cmd_os(os_sub, matroid_arg, opts);
    if (ideal_cmd->parsed()) {
      return cmd_ideal(ideal_sub, ideal_arg, gin_attempts, opts);
    }
    if (module_depth->parsed()) return cmd_module_depth(ideal_arg, opts);
    if (classify_cmd->parsed()) return cmd_classify(matroid_arg, opts);
    if (verify_cmd->parsed()) return cmd_verify(suite_arg, opts);
    std::cerr << "no subcommand given\n";
    return kExitInputError;
  } catch (const osforge::groebner::GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const osforge::matroid::MatroidError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
