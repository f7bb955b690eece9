#include "hecke/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  hecke::RunConfig cfg;
  CLI::App app{"Hecke polynomials, unramified sigma-conjugacy classes and congruence factors"};
  app.require_subcommand(1);

  std::string preset, config, mu, convention = "sigma-mu-inverse", cls;
  std::int64_t p = 0;
  unsigned threads = 1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", preset, "built-in datum (gl2, gl3, gl4, gsp4, gsp6, "
                                        "res_gl2_inert_g2, res_gl2_inert_g3, u3_quasisplit)");
    sub->add_option("--config", config, "datum config file");
    sub->add_option("--mu", mu, "override mu, e.g. 1,0,0");
    sub->add_flag("--machine", cfg.machine, "emit one JSON document");
    sub->add_option("--specialize-p", p, "substitute a prime for p");
    sub->add_option("--convention", convention, "upsilon convention")
        ->check(CLI::IsMember({"sigma-mu-inverse", "mu-inverse"}));
    sub->add_option("--threads", threads, "worker threads for class enumeration")
        ->check(CLI::Range(1u, 64u));
  };

  auto* hecke = app.add_subcommand("hecke", "Hecke polynomial H(x) in the torus model");
  common(hecke);
  hecke->add_flag("--factors", cfg.factors, "list the sigma-orbit factors");

  auto* bgu = app.add_subcommand("bgu", "unramified classes in B(G, upsilon)");
  common(bgu);
  bgu->add_flag("--list", cfg.list, "print every class");

  auto* adlv = app.add_subcommand("adlv", "dimensions and MV labels per class");
  common(adlv);
  adlv->add_option("--class", cls, "basic, ordinary or a 1-based index");
  adlv->add_flag("--mv", cfg.mv, "print MV labels");

  auto* hn = app.add_subcommand("hn", "Hodge-Newton decomposability");
  common(hn);
  hn->add_flag("--check-condition2", cfg.check_condition2, "report the condition over all classes");
  hn->add_flag("--inclusive", cfg.inclusive, "count M = G as decomposable");

  auto* cong = app.add_subcommand("congruence", "congruence factors and their divisibility");
  common(cong);
  cong->add_flag("--ledger", cfg.ledger, "print the per-class factorization ledger");
  cong->add_flag("--check-ordinary", cfg.check_ordinary, "evaluate H at the ordinary Frobenius");

  auto* val = app.add_subcommand("validate", "check a root datum");
  common(val);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : hecke::kExitInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  auto* sub = app.get_subcommands().front();
  if (!preset.empty()) cfg.preset = preset;
  if (!config.empty()) cfg.config_path = config;
  if (!mu.empty()) cfg.mu = mu;
  if (sub->count("--specialize-p")) cfg.specialize_p = p;
  if (!cls.empty()) cfg.class_selector = cls;
  cfg.threads = threads;
  cfg.convention = convention == "mu-inverse" ? hecke::UpsilonConvention::MuInverse
                                              : hecke::UpsilonConvention::SigmaMuInverse;
  return hecke::run(cfg, std::cout, std::cerr);
}
