// SPDX-License-Identifier: Apache-2.0
//
// aprank: certified low-rank approximation of real symmetric tensors.
// Subcommands: generate, decompose, sparsify, norm, estimate-linf, eval, bench.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "aprank/bench.hpp"
#include "aprank/energy.hpp"
#include "aprank/frank_wolfe.hpp"
#include "aprank/instances.hpp"
#include "aprank/io.hpp"
#include "aprank/linf_estimate.hpp"
#include "aprank/norms.hpp"
#include "aprank/parallel.hpp"
#include "aprank/rng.hpp"
#include "aprank/sparsify.hpp"
#include "aprank/version.hpp"

namespace {

using aprank::io::json;

struct CommonOpts {
  std::int64_t seed = -1; // -1: draw one and log it
  int threads = -1;       // -1: APRANK_THREADS env, else hardware
  std::string report_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "RNG seed (default: random, logged in the report)");
  cmd->add_option("--threads", c.threads,
                  "worker threads (0 = hardware; default: APRANK_THREADS or hardware)");
  cmd->add_option("--report", c.report_path, "run report path");
}

std::uint64_t resolve_seed(CommonOpts& c) {
  if (c.seed < 0) {
    std::random_device rd;
    c.seed = static_cast<std::int64_t>((static_cast<std::uint64_t>(rd()) << 32) ^ rd()) &
             0x7FFFFFFFFFFFFFFFll;
  }
  return static_cast<std::uint64_t>(c.seed);
}

void resolve_threads(CommonOpts& c) {
  int t = c.threads;
  if (t < 0) {
    if (const char* env = std::getenv("APRANK_THREADS")) t = std::atoi(env);
    else t = 0;
  }
  aprank::set_thread_count(t);
}

void write_report(const CommonOpts& c, const std::string& command,
                  const std::string& default_stem, const json& inputs,
                  const json& outputs, double wall_seconds) {
  json report = {{"command", command},
                 {"version", aprank::kVersion},
                 {"seed", c.seed},
                 {"threads", aprank::thread_count()},
                 {"inputs", inputs},
                 {"outputs", outputs},
                 {"timings", {{"wall_seconds", wall_seconds}}}};
  std::string path = c.report_path.empty() ? default_stem + ".report.json" : c.report_path;
  aprank::io::write_json(path, report);
}

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> x;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      x.push_back(std::stod(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw aprank::InvalidArgument("cannot parse coordinate '" + s.substr(pos, next - pos) + "'");
    }
    pos = next + 1;
  }
  if (x.empty()) throw aprank::InvalidArgument("empty evaluation point");
  return x;
}

int run(int argc, char** argv) {
  CLI::App app{"approximate symmetric tensor rank toolkit"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "random planted-rank instance");
  CommonOpts gen_c;
  aprank::InstanceSpec spec;
  std::string gen_out = "instance.json";
  std::string gen_planted;
  gen->add_option("-m,--rank", spec.m, "planted rank")->required();
  gen->add_option("-n,--vars", spec.n, "variable count")->required();
  gen->add_option("--degree", spec.two_d, "tensor degree (even)")->required();
  gen->add_option("--epsilon", spec.epsilon, "noise level")->required();
  gen->add_option("-o,--output", gen_out, "tensor output path");
  gen->add_option("--planted", gen_planted, "also write the planted decomposition here");
  add_common(gen, gen_c);

  // ---- decompose ----
  auto* dec = app.add_subcommand("decompose", "low-rank approximation");
  CommonOpts dec_c;
  std::string dec_in, dec_out = "decomposition.json", dec_method = "energy";
  std::string dec_r = "2", dec_angle = "on", dec_lmo = "sample", dec_trace;
  double dec_eps = 0.1, dec_c1 = 3.0, dec_eta = 0.05, dec_nuclear = 0.0;
  std::int64_t dec_samples = 100000;
  int dec_retries = 20;
  dec->add_option("-i,--input", dec_in, "tensor JSON")->required();
  dec->add_option("-o,--output", dec_out, "decomposition output path");
  dec->add_option("--method", dec_method, "energy | fw")
      ->check(CLI::IsMember({"energy", "fw"}));
  dec->add_option("--epsilon", dec_eps, "target error")->required();
  dec->add_option("--r", dec_r, "norm order for --method energy: number >= 2 or 'inf'");
  dec->add_option("--samples", dec_samples, "sample batch size");
  dec->add_option("--retries", dec_retries, "witness search retries");
  dec->add_option("--c1", dec_c1, "sample-size constant c1");
  dec->add_option("--angle-filter", dec_angle, "on | off")
      ->check(CLI::IsMember({"on", "off"}));
  dec->add_option("--nuclear", dec_nuclear, "nuclear norm guess (fw)");
  dec->add_option("--lmo", dec_lmo, "fw oracle: sample | cover")
      ->check(CLI::IsMember({"sample", "cover"}));
  dec->add_option("--eta", dec_eta, "covering resolution");
  dec->add_option("--trace", dec_trace, "fw trace CSV path");
  add_common(dec, dec_c);

  // ---- sparsify ----
  auto* spf = app.add_subcommand("sparsify", "Maurey sparsification of a decomposition");
  CommonOpts spf_c;
  std::string spf_in, spf_out = "sparse.json", spf_norm = "hs";
  double spf_eps = 0.1, spf_eta = 0.05;
  std::optional<double> spf_t2;
  int spf_retries = 16;
  std::int64_t spf_samples = 100000;
  spf->add_option("-i,--input", spf_in, "decomposition JSON")->required();
  spf->add_option("-o,--output", spf_out, "output path");
  spf->add_option("--norm", spf_norm, "hs | l<r> | linf");
  spf->add_option("--epsilon", spf_eps, "tolerance")->required();
  spf->add_option("--t2", spf_t2, "type-2 constant override");
  spf->add_option("--retries", spf_retries, "redraw budget");
  spf->add_option("--samples", spf_samples, "Monte Carlo samples for l<r> checks");
  spf->add_option("--eta", spf_eta, "covering resolution for linf checks");
  add_common(spf, spf_c);

  // ---- norm ----
  auto* nrm = app.add_subcommand("norm", "norm estimate of a tensor");
  CommonOpts nrm_c;
  std::string nrm_in, nrm_kind = "hs";
  std::int64_t nrm_samples = 100000;
  nrm->add_option("-i,--input", nrm_in, "tensor JSON")->required();
  nrm->add_option("--kind", nrm_kind, "hs | l<r> | linf-lower");
  nrm->add_option("--samples", nrm_samples, "Monte Carlo / lower-bound samples");
  add_common(nrm, nrm_c);

  // ---- estimate-linf ----
  auto* lnf = app.add_subcommand("estimate-linf", "sup-norm bracket via sparsify + L_2k");
  CommonOpts lnf_c;
  std::string lnf_in;
  double lnf_eps = 0.25;
  std::int64_t lnf_samples = 100000;
  lnf->add_option("-i,--input", lnf_in, "decomposition JSON")->required();
  lnf->add_option("--epsilon", lnf_eps, "accuracy parameter in (0,1)");
  lnf->add_option("--samples", lnf_samples, "Monte Carlo samples");
  add_common(lnf, lnf_c);

  // ---- eval ----
  auto* evl = app.add_subcommand("eval", "evaluate a tensor at a point");
  CommonOpts evl_c;
  std::string evl_in, evl_x;
  evl->add_option("-i,--input", evl_in, "tensor JSON")->required();
  evl->add_option("-x,--point", evl_x, "comma-separated coordinates")->required();
  add_common(evl, evl_c);

  // ---- bench ----
  auto* bch = app.add_subcommand("bench", "planted-instance benchmark table");
  CommonOpts bch_c;
  std::string bch_config, bch_out = "bench.csv", bch_json;
  bch->add_option("--config", bch_config, "bench config JSON")->required();
  bch->add_option("-o,--output", bch_out, "CSV output path");
  bch->add_option("--json", bch_json, "JSON output path");
  add_common(bch, bch_c);

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  if (gen->parsed()) {
    resolve_threads(gen_c);
    spec.seed = resolve_seed(gen_c);
    auto [f, planted] = aprank::generate_instance(spec);
    aprank::io::write_json(gen_out, aprank::io::tensor_to_json(f));
    json outputs = {{"tensor", gen_out},
                    {"ambient_dim", f.dim()},
                    {"planted_rank", planted.size()}};
    if (!gen_planted.empty()) {
      aprank::io::write_json(gen_planted, aprank::io::decomposition_to_json(planted));
      outputs["planted"] = gen_planted;
    }
    json inputs = {{"m", spec.m}, {"n", spec.n}, {"degree", spec.two_d},
                   {"epsilon", spec.epsilon}};
    write_report(gen_c, "generate", gen_out, inputs, outputs, elapsed());
    std::cout << "wrote " << gen_out << " (dim " << f.dim() << ")\n";
    return 0;
  }

  if (dec->parsed()) {
    resolve_threads(dec_c);
    std::uint64_t seed = resolve_seed(dec_c);
    aprank::SymmetricTensor f = aprank::io::read_tensor(dec_in);
    json inputs = {{"input", dec_in}, {"method", dec_method}, {"epsilon", dec_eps},
                   {"r", dec_r},      {"samples", dec_samples}, {"retries", dec_retries},
                   {"angle_filter", dec_angle}};
    json outputs;
    if (dec_method == "energy") {
      aprank::SearchConfig cfg;
      cfg.sample_size = dec_samples;
      cfg.max_retries = dec_retries;
      cfg.seed = seed;
      cfg.c1 = dec_c1;
      if (dec_angle == "off") cfg.angle_cos_threshold.reset();
      auto [D, st] = aprank::decompose_energy(f, aprank::NormOrder::parse(dec_r),
                                              dec_eps, cfg);
      aprank::io::write_json(dec_out, aprank::io::decomposition_to_json(D));
      outputs = {{"decomposition", dec_out},
                 {"rank", D.size()},
                 {"loops", st.loops},
                 {"residual_norm", st.residual_r_norm},
                 {"residual_history", st.residual_history},
                 {"angle_filter_disabled", st.angle_filter_disabled}};
    } else {
      if (dec_nuclear <= 0.0)
        throw aprank::InvalidArgument("--method fw needs --nuclear > 0 (a bound on ||f||_*)");
      aprank::FWConfig cfg;
      cfg.epsilon = dec_eps;
      cfg.nuclear_guess = dec_nuclear;
      cfg.lmo = dec_lmo == "cover" ? aprank::FWConfig::Lmo::covering
                                   : aprank::FWConfig::Lmo::sampling;
      cfg.seed = seed;
      cfg.eta = dec_eta;
      cfg.samples = dec_samples;
      auto [D, trace] = aprank::fw_decompose(f, cfg);
      aprank::io::write_json(dec_out, aprank::io::decomposition_to_json(D));
      outputs = {{"decomposition", dec_out},
                 {"rank", D.size()},
                 {"iterations", trace.rows.size()}};
      if (!dec_trace.empty()) {
        aprank::io::write_trace_csv(dec_trace, trace, f.vars());
        outputs["trace"] = dec_trace;
      }
      inputs["nuclear"] = dec_nuclear;
      inputs["lmo"] = dec_lmo;
      inputs["eta"] = dec_eta;
    }
    write_report(dec_c, "decompose", dec_out, inputs, outputs, elapsed());
    std::cout << "wrote " << dec_out << " (rank " << outputs["rank"] << ")\n";
    return 0;
  }

  if (spf->parsed()) {
    resolve_threads(spf_c);
    std::uint64_t seed = resolve_seed(spf_c);
    aprank::Decomposition D = aprank::io::read_decomposition(spf_in);
    aprank::SparsifyConfig cfg;
    cfg.norm = aprank::NormSpec::parse(spf_norm);
    cfg.epsilon = spf_eps;
    cfg.seed = seed;
    cfg.max_retries = spf_retries;
    cfg.type2_override = spf_t2;
    cfg.mc_samples = spf_samples;
    cfg.covering_eta = spf_eta;
    aprank::SparsifyResult res = aprank::maurey_sparsify(D, cfg);
    aprank::io::write_json(spf_out, aprank::io::decomposition_to_json(res.sparse));
    json inputs = {{"input", spf_in}, {"norm", spf_norm}, {"epsilon", spf_eps},
                   {"retries", spf_retries}};
    if (spf_t2) inputs["t2"] = *spf_t2;
    json outputs = {{"decomposition", spf_out},
                    {"rank", res.sparse.size()},
                    {"k", res.k},
                    {"retries_used", res.retries_used},
                    {"measured_error", res.measured_error}};
    write_report(spf_c, "sparsify", spf_out, inputs, outputs, elapsed());
    std::cout << "wrote " << spf_out << " (rank " << res.sparse.size() << ", k = "
              << res.k << ")\n";
    return 0;
  }

  if (nrm->parsed()) {
    resolve_threads(nrm_c);
    std::uint64_t seed = resolve_seed(nrm_c);
    aprank::SymmetricTensor f = aprank::io::read_tensor(nrm_in);
    aprank::EstimateResult est;
    if (nrm_kind == "hs") {
      est = {aprank::hs_norm(f), 0.0, 0, aprank::EstimateMethod::exact};
    } else if (nrm_kind == "linf-lower") {
      auto pts = aprank::sample_sphere(f.vars(), nrm_samples, seed);
      est = {aprank::linf_lower(f, pts), 0.0, nrm_samples,
             aprank::EstimateMethod::monte_carlo};
    } else {
      aprank::NormSpec ns = aprank::NormSpec::parse(nrm_kind);
      if (ns.kind != aprank::NormSpec::Kind::lr)
        throw aprank::InvalidArgument("norm kind must be hs, l<r>, or linf-lower");
      int ri = static_cast<int>(ns.r);
      bool exact_ok = static_cast<double>(ri) == ns.r && ri % 2 == 0;
      if (exact_ok) {
        try {
          est = {aprank::lr_exact_even(f, ri), 0.0, 0, aprank::EstimateMethod::exact};
        } catch (const aprank::BudgetExceeded&) {
          exact_ok = false;
        }
      }
      if (!exact_ok) est = aprank::lr_monte_carlo(f, ns.r, nrm_samples, seed);
    }
    json out = aprank::io::estimate_to_json(est);
    std::cout << out.dump() << "\n";
    write_report(nrm_c, "norm", nrm_in + ".norm",
                 {{"input", nrm_in}, {"kind", nrm_kind}, {"samples", nrm_samples}},
                 out, elapsed());
    return 0;
  }

  if (lnf->parsed()) {
    resolve_threads(lnf_c);
    std::uint64_t seed = resolve_seed(lnf_c);
    aprank::Decomposition D = aprank::io::read_decomposition(lnf_in);
    aprank::LinfEstimate est = aprank::estimate_linf(D, lnf_eps, seed, {}, lnf_samples);
    json out = {{"lower", est.lower},
                {"upper", est.upper},
                {"k", est.k},
                {"barvinok_factor", est.barvinok_factor},
                {"sparse_rank", est.sparse_rank},
                {"q_norm", aprank::io::estimate_to_json(est.q_norm)}};
    std::cout << out.dump() << "\n";
    write_report(lnf_c, "estimate-linf", lnf_in + ".linf",
                 {{"input", lnf_in}, {"epsilon", lnf_eps}}, out, elapsed());
    return 0;
  }

  if (evl->parsed()) {
    resolve_threads(evl_c);
    resolve_seed(evl_c);
    aprank::SymmetricTensor f = aprank::io::read_tensor(evl_in);
    std::vector<double> x = parse_point(evl_x);
    double v = f.eval(x);
    std::cout << aprank::io::format_double(v) << "\n";
    write_report(evl_c, "eval", evl_in + ".eval", {{"input", evl_in}, {"x", evl_x}},
                 {{"value", v}}, elapsed());
    return 0;
  }

  if (bch->parsed()) {
    resolve_threads(bch_c);
    std::uint64_t seed = resolve_seed(bch_c);
    json cfg = aprank::io::read_json(bch_config);
    std::vector<aprank::InstanceSpec> specs;
    for (const auto& s : cfg.at("specs")) {
      aprank::InstanceSpec is;
      is.m = s.at("m").get<int>();
      is.n = s.at("n").get<int>();
      is.two_d = s.at("two_d").get<int>();
      is.epsilon = s.value("epsilon", 0.3);
      is.seed = s.contains("seed") ? s.at("seed").get<std::uint64_t>() : seed;
      specs.push_back(is);
    }
    aprank::BenchOptions opts;
    opts.method = cfg.value("method", std::string("energy"));
    opts.order = aprank::NormOrder::parse(cfg.value("r", std::string("4")));
    opts.epsilon = cfg.value("epsilon", 0.3);
    if (cfg.contains("samples")) opts.search.sample_size = cfg.at("samples").get<std::int64_t>();
    if (cfg.contains("retries")) opts.search.max_retries = cfg.at("retries").get<int>();
    auto rows = aprank::bench_suite(specs, opts);
    aprank::io::write_bench_csv(bch_out, rows);
    json outputs = {{"csv", bch_out}, {"rows", rows.size()}};
    if (!bch_json.empty()) {
      aprank::io::write_json(bch_json, aprank::io::bench_to_json(rows));
      outputs["json"] = bch_json;
    }
    write_report(bch_c, "bench", bch_out, {{"config", bch_config}}, outputs, elapsed());
    std::cout << "wrote " << bch_out << " (" << rows.size() << " rows)\n";
    return 0;
  }

  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const aprank::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const aprank::ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const aprank::Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
