// Copyright 2026 The jlcs Authors.
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


#include "jlcs/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "jlcs/chars.h"
#include "jlcs/csa.h"
#include "jlcs/cyc.h"
#include "jlcs/error.h"
#include "jlcs/expsum.h"
#include "jlcs/ff.h"
#include "jlcs/report.h"
#include "jlcs/ssc.h"

namespace jlcs::cli {
namespace {

using locfield::LaurentTrunc;
using report::Json;

struct RunConfig {
  std::string command;
  uint32_t p = 0, f = 1;
  uint32_t m = 1, r = 1, s = 0;
  bool s_given = false;
  uint32_t n = 2, l = 2;
  uint32_t chi = 0;
  bool chi_given = false;
  uint32_t zeta = 0;  // dlog of zeta
  uint32_t c_order = 1, c_power = 0;
  uint32_t psi_twist = 0;  // dlog of the twist
  bool all_twists = false;
  uint32_t lambda = 0, a = 0;  // dlogs
  bool lambda_given = false, a_zero = false, all_lambda = false;
  uint32_t samples = 20;
  uint32_t twist_unit = 0, twist_varpi_order = 1, twist_varpi_power = 0;
  int64_t precision = locfield::kDefaultPrecision;
  uint64_t budget = 10'000'000;
  std::string format = "json", out;
  uint64_t seed = 0;
};

Json config_json(const RunConfig& c) {
  return Json{{"p", c.p},
              {"f", c.f},
              {"m", c.m},
              {"r", c.r},
              {"s", c.s},
              {"n", c.n},
              {"l", c.l},
              {"chi", c.chi},
              {"zeta_dlog", c.zeta},
              {"c_order", c.c_order},
              {"c_power", c.c_power},
              {"psi_twist_dlog", c.psi_twist},
              {"all_twists", c.all_twists},
              {"lambda_dlog", c.lambda_given ? Json(c.lambda) : Json(nullptr)},
              {"a_dlog", c.a_zero ? Json("zero") : Json(c.a)},
              {"all_lambda", c.all_lambda},
              {"samples", c.samples},
              {"twist_unit", c.twist_unit},
              {"twist_varpi_order", c.twist_varpi_order},
              {"twist_varpi_power", c.twist_varpi_power},
              {"precision", c.precision},
              {"budget", c.budget}};
}

// Residue field, cyclotomic ring and psi shared by every verb.
struct Context {
  explicit Context(const RunConfig& c)
      : k(make_k(c)), ring(make_ring(c, *k)), psi(k, k->gen_pow(c.psi_twist), ring), budget{c.budget} {}

  static ff::FieldPtr make_k(const RunConfig& c) {
    if (!ff::is_prime(c.p)) throw DomainError("--p must be prime");
    if (c.f == 0) throw DomainError("--f must be positive");
    return ff::FieldDesc::make_field(c.p, c.f);
  }
  static cyc::RingPtr make_ring(const RunConfig& c, const ff::FieldDesc& k) {
    if (c.c_order == 0 || c.twist_varpi_order == 0) throw DomainError("orders must be positive");
    uint64_t modulus = cyc::lcm(cyc::lcm(k.p(), k.unit_order()), 12);
    modulus = cyc::lcm(cyc::lcm(modulus, c.c_order), c.twist_varpi_order);
    if (modulus > (uint64_t{1} << 16)) throw DomainError("cyclotomic modulus too large");
    return cyc::CycRing::make(static_cast<uint32_t>(modulus));
  }
  chars::MultChar chi(uint32_t j) const { return chars::MultChar(k, j, ring); }
  ff::FFElem unit(uint32_t dlog) const { return k->gen_pow(dlog); }

  ff::FieldPtr k;
  cyc::RingPtr ring;
  chars::AddChar psi;
  expsum::Budget budget;
};

ssc::Side side_of(const RunConfig& c) {
  ssc::Side side{c.m, c.r, c.s_given ? c.s : (c.r == 1 ? 0u : 1u)};
  if (c.r == 1 && c.s_given && c.s != 0) throw DomainError("--s must be absent when r = 1");
  ssc::validate(side);
  return side;
}

Json value_row(const std::string& kind, Json parameters, const cyc::CycValue& v) {
  return Json{{"kind", kind}, {"parameters", std::move(parameters)}, {"value", report::to_json(v)}};
}

std::vector<uint32_t> chi_range(const RunConfig& c, const Context& ctx) {
  if (c.chi_given) return {c.chi};
  std::vector<uint32_t> out(ctx.k->unit_order());
  for (uint32_t j = 0; j < out.size(); ++j) out[j] = j;
  return out;
}

std::vector<ff::FFElem> lambda_range(const RunConfig& c, const Context& ctx, bool all_by_default) {
  if (c.lambda_given) return {ctx.unit(c.lambda)};
  if (!all_by_default && !c.all_lambda) return {ctx.k->one()};
  std::vector<ff::FFElem> out;
  for (uint32_t j = 0; j < ctx.k->unit_order(); ++j) out.push_back(ctx.unit(j));
  return out;
}

// ---------------------------------------------------------------- verbs

using Handler = std::function<void(const RunConfig&, report::Writer&)>;

void run_sums(const std::string& which, const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  Json params{{"q", ctx.k->size()}, {"psi_twist_dlog", c.psi_twist}};
  if (which == "gauss") {
    params["chi"] = c.chi;
    w.row(value_row("gauss", params, expsum::gauss_sum(ctx.chi(c.chi), ctx.psi)));
  } else if (which == "kloosterman") {
    params["l"] = c.l;
    params["a_dlog"] = c.a;
    w.row(value_row("kloosterman", params, expsum::kloosterman(c.l, ctx.unit(c.a), ctx.psi, ctx.budget)));
  } else if (which == "norm-fiber") {
    params["r"] = c.r;
    params["lambda_dlog"] = c.lambda;
    const auto ext = ff::FieldDesc::make_extension(ctx.k, c.r);
    w.row(value_row("norm_fiber", params, expsum::norm_fiber_sum(ext, ctx.unit(c.lambda), ctx.psi, ctx.budget)));
  } else {
    params["n"] = c.n;
    params["chi"] = c.chi;
    params["a_dlog"] = c.a_zero ? Json("zero") : Json(c.a);
    const ff::FFElem a = c.a_zero ? ctx.k->zero() : ctx.unit(c.a);
    w.row(value_row("restricted_gauss", params, expsum::restricted_gauss(c.n, ctx.chi(c.chi), ctx.psi, a)));
  }
}

void verify_gauss_power(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  std::vector<uint32_t> twists{c.psi_twist};
  if (c.all_twists) {
    twists.clear();
    for (uint32_t t = 0; t < ctx.k->unit_order(); ++t) twists.push_back(t);
  }
  for (uint32_t t : twists) {
    const chars::AddChar psi(ctx.k, ctx.unit(t), ctx.ring);
    for (uint32_t j : chi_range(c, ctx)) {
      w.row(report::to_json(expsum::check_gauss_power_identity(c.n, ctx.chi(j), psi, ctx.budget)));
    }
  }
}

void verify_norm_fiber(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  const auto k_r = ff::FieldDesc::make_extension(ctx.k, c.r);
  const auto k_n = ff::FieldDesc::make_extension(ctx.k, c.m * c.r);
  for (const ff::FFElem& lambda : lambda_range(c, ctx, true)) {
    w.row(report::to_json(expsum::check_norm_fiber_identity(k_r, k_n, c.m, lambda, ctx.psi, ctx.budget)));
  }
}

void verify_fourier(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  for (uint32_t j : chi_range(c, ctx)) {
    const auto chi = ctx.chi(j);
    const ff::FFElem witness = expsum::gn_nonzero_witness(c.n, chi, ctx.psi);
    w.row(Json{{"kind", "gn_witness"},
               {"parameters", {{"n", c.n}, {"chi", j}}},
               {"witness", report::to_json(witness)},
               {"value", report::to_json(expsum::restricted_gauss(c.n, chi, ctx.psi, witness))},
               {"match", true}});
    for (const auto& rep : expsum::fourier_inversion_check(c.n, chi, ctx.psi)) w.row(report::to_json(rep));
  }
}

void verify_separation(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  const auto table = expsum::KloostermanTable::build(c.n, ctx.psi, ctx.budget);
  for (uint32_t d = 1; d < ctx.k->unit_order(); ++d) {
    const ff::FFElem a_prime = ctx.unit(d);
    Json row{{"kind", "separation"}, {"parameters", {{"n", c.n}, {"a_prime_dlog", d}}}};
    try {
      const ff::FFElem a = expsum::separation_witness(table, a_prime);
      row["witness"] = report::to_json(a);
      row["k_a"] = report::to_json(table.at(a));
      row["k_a_a_prime"] = report::to_json(table.at(a * a_prime));
      row["match"] = !(table.at(a) == table.at(a * a_prime));
    } catch (const InternalError& e) {
      row["error"] = e.what();
      row["match"] = false;
    }
    w.row(std::move(row));
  }
}

Json check_row(const std::string& kind, Json parameters, bool ok) {
  return Json{{"kind", kind}, {"parameters", std::move(parameters)}, {"match", ok}};
}

void csa_selftest(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  const ssc::Side side = side_of(c);
  const ff::FFElem zeta = ctx.unit(c.zeta);
  const ssc::Frame frame = ssc::Frame::make(ctx.k, side, zeta, c.precision);
  const ssc::Frame split = ssc::Frame::make(ctx.k, {side.n(), 1, 0}, zeta, c.precision);
  const auto& alg = frame.algebra();
  const uint32_t n = side.n();
  const LaurentTrunc zeta_w = LaurentTrunc::monomial(zeta, 1);
  const Json params{{"side", report::to_json(side)}, {"zeta_dlog", c.zeta}};

  const LaurentTrunc norm = csa::rnorm(frame.phi());
  Json row = check_row("rnorm_phi", params, norm.agrees_with(n % 2 == 1 ? zeta_w : -zeta_w));
  row["value"] = report::to_json(norm);
  w.row(std::move(row));
  const LaurentTrunc trace = csa::rtrace(frame.phi_inv());
  row = check_row("rtrace_phi_inverse", params, n == 1 ? trace.val() == -1 : trace.is_zero());
  row["value"] = report::to_json(trace);
  row["note"] = n == 1 ? "n = 1: phi^{-1} is the scalar (zeta w)^{-1}" : "";
  w.row(std::move(row));
  const csa::MatA power = frame.phi().pow(n);
  const csa::MatA target = csa::MatA::scalar(&alg, side.m, csa::AlgElem::scalar(&alg, alg.lift_from_k(zeta_w)));
  w.row(check_row("phi_power_n", params, power.agrees_with(target)));

  std::mt19937_64 rng(c.seed);
  for (uint32_t i = 0; i < c.samples; ++i) {
    const csa::MatA u = csa::random_order_element(alg, side.m, rng);
    const csa::MatA g = csa::make_g_u(frame.phi(), u);
    const csa::RedCharPoly f = csa::red_charpoly(g);
    const auto eis = csa::eisenstein_check(f, zeta);
    const auto matched = csa::matching_element(f, zeta, split.algebra(), csa::rtrace(u));
    Json sample = check_row("g_u_sample", Json{{"side", report::to_json(side)}, {"sample", i}},
                            eis.eisenstein && matched.charpoly_match && matched.residue_trace_match.value_or(false));
    sample["eisenstein"] = eis.eisenstein;
    sample["classification"] = csa::to_string(csa::classify_qr(g));
    sample["charpoly_match"] = matched.charpoly_match;
    sample["charpoly"] = report::to_json(f);
    w.row(std::move(sample));
  }
}

struct EtaSetup {
  EtaSetup(const RunConfig& c, const Context& ctx)
      : side(side_of(c)),
        eta(ssc::make_param(ctx.unit(c.zeta), ctx.chi(c.chi), c.c_order, c.c_power, side)),
        frame(ssc::Frame::make(ctx.k, side, eta.zeta, c.precision)) {}
  ssc::Side side;
  ssc::SscParam eta;
  ssc::Frame frame;
};

std::vector<csa::MatA> sample_us(const RunConfig& c, const ssc::Frame& frame) {
  std::mt19937_64 rng(c.seed);
  std::vector<csa::MatA> us{csa::MatA(frame.algebra_ptr(), frame.m())};
  for (uint32_t i = 0; i < c.samples; ++i) us.push_back(csa::random_order_element(frame.algebra(), frame.m(), rng));
  return us;
}

void run_char(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  const EtaSetup e(c, ctx);
  for (const auto& row : ssc::char_table(e.frame, e.eta, ctx.psi, lambda_range(c, ctx, false),
                                         sample_us(c, e.frame), ctx.budget)) {
    w.row(report::to_json(row));
  }
}

void run_jl_verify(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  const EtaSetup e(c, ctx);
  const ssc::Frame split = ssc::Frame::make(ctx.k, {e.side.n(), 1, 0}, e.eta.zeta, c.precision);
  for (const auto& row : ssc::character_relation_check(e.frame, split, e.eta, ctx.psi, lambda_range(c, ctx, false),
                                                       sample_us(c, e.frame), ctx.budget)) {
    w.row(report::to_json(row));
  }
}

void run_epsilon(const RunConfig& c, report::Writer& w) {
  const Context ctx(c);
  const EtaSetup e(c, ctx);
  const ssc::TameChar xi = ssc::make_tame(ctx.chi(c.twist_unit), c.twist_varpi_order, c.twist_varpi_power);
  const Json params{{"side", report::to_json(e.side)}, {"zeta_dlog", c.zeta}, {"chi", c.chi},
                    {"c_order", c.c_order}, {"c_power", c.c_power}};
  const cyc::CycValue eps = ssc::epsilon(e.eta);
  const cyc::CycValue twisted = ssc::epsilon_twisted(e.eta, xi);
  const cyc::CycValue tau = ssc::normalized_tau(e.frame, e.eta, ctx.psi, xi);
  const ssc::JlImage image = ssc::jl_transfer(e.eta);
  w.row(value_row("epsilon", params, eps));
  w.row(value_row("epsilon_twisted", params, twisted));
  w.row(value_row("normalized_tau", params, tau));
  Json rel = check_row("tau_relation", params, tau.scaled(image.sign) == twisted);
  rel["lhs"] = report::to_json(tau.scaled(image.sign));
  rel["rhs"] = report::to_json(twisted);
  w.row(std::move(rel));
  const cyc::CycValue omega_d = ssc::central_char(e.eta).at_varpi();
  const cyc::CycValue omega_split = ssc::central_char(image.eta).at_varpi();
  const ssc::EndoLabel label_d = ssc::endoclass_label(e.eta, ctx.psi);
  const ssc::EndoLabel label_split = ssc::endoclass_label(image.eta, ctx.psi);
  Json inv = check_row("jl_invariance", params,
                       ssc::epsilon(image.eta) == eps && omega_d == omega_split && label_d == label_split &&
                           image.conductor == ssc::conductor(e.eta));
  inv["epsilon_split"] = report::to_json(ssc::epsilon(image.eta));
  inv["central_at_varpi"] = report::to_json(omega_d);
  inv["central_at_varpi_split"] = report::to_json(omega_split);
  inv["label"] = label_d.to_string();
  inv["label_split"] = label_split.to_string();
  inv["conductor"] = image.conductor;
  inv["sign"] = image.sign;
  w.row(std::move(inv));
}

bool row_passed(const Json& row) {
  if (row.contains("match")) return row["match"].get<bool>();
  if (row.contains("equal")) return row["equal"].get<bool>();
  return true;
}

// ---------------------------------------------------------------- parsing

void add_field_options(CLI::App* app, RunConfig& c) {
  app->add_option("--p", c.p, "characteristic")->required();
  app->add_option("--f", c.f, "degree of k over F_p")->capture_default_str();
  app->add_option("--psi-twist", c.psi_twist, "dlog of the twist defining psi")->capture_default_str();
}

void add_side_options(CLI::App* app, RunConfig& c) {
  app->add_option("--m", c.m, "matrix size over D")->capture_default_str();
  app->add_option("--r", c.r, "index of D")->capture_default_str();
  app->add_option("--s", c.s, "Hasse invariant numerator, coprime to r")->each([&c](const std::string&) { c.s_given = true; });
}

void add_eta_options(CLI::App* app, RunConfig& c) {
  app->add_option("--zeta", c.zeta, "dlog of zeta")->capture_default_str();
  app->add_option("--chi", c.chi, "exponent of chi")->capture_default_str();
  app->add_option("--c-order", c.c_order, "order of the root of unity c")->capture_default_str();
  app->add_option("--c-power", c.c_power, "c = z_order^power")->capture_default_str();
}

void add_sample_options(CLI::App* app, RunConfig& c) {
  app->add_flag("--all-lambda", c.all_lambda, "every lambda in k^x");
  app->add_option("--lambda-dlog", c.lambda, "a single lambda")->each([&c](const std::string&) { c.lambda_given = true; });
  app->add_option("--samples", c.samples, "random u in the order besides u = 0")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Character values and identities for simple supercuspidals of inner forms of GL_n"};
  app.name("jlcs");
  app.require_subcommand(1);
  app.add_option("--precision", c.precision, "w-adic precision")->capture_default_str();
  app.add_option("--budget", c.budget, "largest enumeration allowed")->capture_default_str();
  app.add_option("--format", c.format, "json, csv or text")->capture_default_str();
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--seed", c.seed, "seed for sampled elements")->capture_default_str();

  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    const std::string full = parent == &app ? name : parent->get_name() + " " + name;
    handlers[sub] = {full, std::move(h)};
    return sub;
  };

  CLI::App* sums = app.add_subcommand("sums", "evaluate one exponential sum")->require_subcommand(1);
  sums->fallthrough();
  for (const std::string which : {"gauss", "kloosterman", "norm-fiber", "restricted-gauss"}) {
    CLI::App* sub = leaf(sums, which, which + " sum", [which](const RunConfig& cfg, report::Writer& w) {
      run_sums(which, cfg, w);
    });
    add_field_options(sub, c);
    if (which != "norm-fiber") sub->add_option("--chi", c.chi, "exponent of chi")->capture_default_str();
    if (which == "kloosterman") sub->add_option("--l", c.l, "number of variables")->capture_default_str();
    if (which == "kloosterman" || which == "restricted-gauss") {
      sub->add_option("--a-dlog", c.a, "dlog of a")->capture_default_str();
    }
    if (which == "restricted-gauss") {
      sub->add_option("--n", c.n, "degree n")->capture_default_str();
      sub->add_flag("--a-zero", c.a_zero, "take a = 0");
    }
    if (which == "norm-fiber") {
      sub->add_option("--r", c.r, "extension degree")->capture_default_str();
      sub->add_option("--lambda-dlog", c.lambda, "dlog of lambda")->capture_default_str();
    }
  }

  CLI::App* verify = app.add_subcommand("verify", "check an identity exhaustively")->require_subcommand(1);
  verify->fallthrough();
  CLI::App* gauss_power = leaf(verify, "gauss-power", "sum_a chi(a) K_{n,a} = G(chi, psi)^n", verify_gauss_power);
  gauss_power->alias("d716");
  add_field_options(gauss_power, c);
  gauss_power->add_option("--n", c.n, "degree n")->capture_default_str();
  gauss_power->add_option("--chi", c.chi, "one chi instead of all")->each([&c](const std::string&) { c.chi_given = true; });
  gauss_power->add_flag("--all-twists", c.all_twists, "every additive character");
  CLI::App* norm_fiber = leaf(verify, "norm-fiber", "norm-fiber Kloosterman identity", verify_norm_fiber);
  norm_fiber->alias("d725");
  add_field_options(norm_fiber, c);
  norm_fiber->add_option("--m", c.m, "m")->capture_default_str();
  norm_fiber->add_option("--r", c.r, "r")->capture_default_str();
  norm_fiber->add_option("--lambda-dlog", c.lambda, "one lambda instead of all")->each([&c](const std::string&) {
    c.lambda_given = true;
  });
  CLI::App* fourier = leaf(verify, "fourier", "G_n nonvanishing and Fourier inversion", verify_fourier);
  add_field_options(fourier, c);
  fourier->add_option("--n", c.n, "degree n")->capture_default_str();
  fourier->add_option("--chi", c.chi, "one chi instead of all")->each([&c](const std::string&) { c.chi_given = true; });
  CLI::App* separation = leaf(verify, "separation", "K_{n,a} separates a from a a'", verify_separation);
  add_field_options(separation, c);
  separation->add_option("--n", c.n, "degree n")->capture_default_str();
  auto add_selftest = [&](CLI::App* parent, const std::string& name) {
    CLI::App* self = leaf(parent, name, "phi, g_u and matching checks", csa_selftest);
    add_field_options(self, c);
    add_side_options(self, c);
    self->add_option("--zeta", c.zeta, "dlog of zeta")->capture_default_str();
    self->add_option("--samples", c.samples, "random u in the order")->capture_default_str();
  };
  add_selftest(verify, "csa-selftest");
  CLI::App* csa = app.add_subcommand("csa", "algebra checks")->require_subcommand(1);
  csa->fallthrough();
  add_selftest(csa, "selftest");

  CLI::App* chr = leaf(&app, "char", "closed forms against direct sums on one side", run_char);
  add_field_options(chr, c);
  add_side_options(chr, c);
  add_eta_options(chr, c);
  add_sample_options(chr, c);

  CLI::App* jl = app.add_subcommand("jl", "Jacquet-Langlands checks")->require_subcommand(1);
  jl->fallthrough();
  CLI::App* jl_verify = leaf(jl, "verify", "character relation against the split side", run_jl_verify);
  add_field_options(jl_verify, c);
  add_side_options(jl_verify, c);
  add_eta_options(jl_verify, c);
  add_sample_options(jl_verify, c);

  CLI::App* eps = leaf(&app, "epsilon", "epsilon factors and tau", run_epsilon);
  add_field_options(eps, c);
  add_side_options(eps, c);
  add_eta_options(eps, c);
  eps->add_option("--twist-unit", c.twist_unit, "exponent of xi on units")->capture_default_str();
  eps->add_option("--twist-varpi-order", c.twist_varpi_order, "order of xi(w)")->capture_default_str();
  eps->add_option("--twist-varpi-power", c.twist_varpi_power, "xi(w) = z_order^power")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "jlcs: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::pair<std::string, Handler>* chosen = nullptr;
  for (const auto& [sub, entry] : handlers) {
    if (sub->parsed()) chosen = &entry;
  }
  if (!chosen) {
    err << "jlcs: no command given\n";
    return kExitUsage;
  }
  c.command = chosen->first;

  try {
    report::Writer writer(report::parse_format(c.format));
    writer.header(Json{{"tool", "jlcs"}, {"command", c.command}, {"seed", c.seed}, {"config", config_json(c)}});
    chosen->second(c, writer);
    size_t failed = 0;
    for (const Json& row : writer.rows()) {
      if (!row_passed(row)) {
        ++failed;
        err << "FAILED " << row.dump() << '\n';
      }
    }
    writer.summary(Json{{"rows", writer.rows().size()},
                        {"passed", writer.rows().size() - failed},
                        {"failed", failed},
                        {"status", failed == 0 ? "pass" : "fail"}});
    std::string text = writer.str();
    if (c.format == "text" && c.command.rfind("sums ", 0) == 0) {
      text = writer.rows().front()["value"]["text"].get<std::string>() + "\n";
    }
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream file(c.out, std::ios::binary);
      if (!file) throw DomainError("cannot open " + c.out);
      file << text;
    }
    return failed == 0 ? kExitOk : kExitFailed;
  } catch (const DomainError& e) {
    err << "jlcs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "jlcs: budget: " << e.what() << '\n';
    return kExitAbort;
  } catch (const PrecisionError& e) {
    err << "jlcs: precision: " << e.what() << '\n';
    return kExitAbort;
  } catch (const InternalError& e) {
    err << "jlcs: verification failed: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace jlcs::cli
