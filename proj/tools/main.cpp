#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rankvar.h"

namespace {

struct Options {
  int p = 3, k = 2, e = 2, r = 1, trials = 10, samples = 2000;
  bool exhaustive = false;
  unsigned long long seed = 1;
  bool relax = false;
  std::string module = "D(p-1)";
  std::string suite;
  std::string format = "json";
  std::string out_path;
  std::string stages;
};

int finish(rv_engine* eng, rv_status st, char* text, const std::string& out_path) {
  int code = int(st);
  if (text) {
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      f << text;
      if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        code = int(RV_IO);
      }
    } else {
      std::cout << text << "\n";
    }
    rv_string_free(text);
  }
  if (st != RV_OK && st != RV_FAIL) std::cerr << "error: " << rv_last_error(eng) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for rank varieties of exterior powers of the "
               "natural simple module over elementary abelian p-groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "64-bit seed for all randomness");
  app.add_flag("--relax-limits", o.relax, "lift the p/k/e guardrails");

  auto add_pke = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "odd prime p");
    cmd->add_option("--k", o.k, "number of commuting p-cycles");
    cmd->add_option("--e", o.e, "field extension degree");
  };

  CLI::App* scan = app.add_subcommand("scan", "point-by-point membership scan");
  add_pke(scan);
  scan->add_option("--module", o.module, "natural|specht|specht-hook|D1|Dr|D(p-1)");
  scan->add_option("--r", o.r, "exterior power for Dr / specht-hook");
  scan->add_flag("--exhaustive", o.exhaustive, "force full enumeration");
  scan->add_option("--samples", o.samples, "sample count when not exhaustive");
  scan->add_option("--format", o.format, "json|csv");
  scan->add_option("--out", o.out_path, "write the report to this file");

  CLI::App* generic = app.add_subcommand("generic", "generic Jordan type");
  add_pke(generic);
  generic->add_option("--module", o.module, "module selector");
  generic->add_option("--r", o.r, "exterior power for Dr / specht-hook");
  generic->add_option("--trials", o.trials, "number of sampled points");
  generic->add_option("--out", o.out_path, "write the result to this file");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_pke(verify);
  verify->add_option("--suite", o.suite,
                     "lemma3.5|thm3.6|thm4.2|main|lemma4.6|lemma2.4|lemma2.6")
      ->required();
  verify->add_option("--out", o.out_path, "write the result to this file");

  CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson tools");
  CLI::App* lr_verify = lr->add_subcommand(
      "verify", "validate a chain of partitions, or compare brute-force and "
                "closed-form source sets for the two mu families");
  int lr_p = 0, lr_m = 0, lr_case = 1;
  std::string lr_b_range;
  lr_verify->add_option("--stages", o.stages,
                        "JSON array of partitions, e.g. [[2,1,1],[2,2,2,1]]");
  lr_verify->add_option("--p", lr_p, "odd prime p (source-set mode)");
  lr_verify->add_option("--m", lr_m, "weight m of the seed partitions");
  lr_verify->add_option("--b-range", lr_b_range, "row-count range, e.g. 4..7");
  lr_verify->add_option("--case", lr_case, "1 for mu=(p^b,1), 2 for mu=(p^b,p-1)");
  lr_verify->add_option("--out", o.out_path, "write the result to this file");

  CLI::App* repring = app.add_subcommand(
      "repring", "symbolic exterior power of J_n in the representation ring");
  int rr_n = 0, rr_r = 0, rr_p = 0;
  repring->add_option("--n", rr_n, "block size n")->required();
  repring->add_option("--r", rr_r, "exterior power")->required();
  repring->add_option("--p", rr_p, "odd prime p")->required();
  repring->add_option("--out", o.out_path, "write the result to this file");

  CLI::App* module_cmd = app.add_subcommand("module", "module constructions");
  CLI::App* module_build = module_cmd->add_subcommand("build", "build and check");
  add_pke(module_build);
  module_build->add_option("--which", o.module, "natural|specht|specht-hook|D1|Dr");
  module_build->add_option("--r", o.r, "exterior power");
  module_build->add_option("--out", o.out_path, "write the result to this file");

  CLI::App* trace = app.add_subcommand("traceability", "statement-to-suite table");
  trace->add_option("--out", o.out_path, "write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : int(RV_USAGE);
  }

  rv_engine* eng = rv_engine_new();
  rv_set_seed(eng, o.seed);
  rv_set_relaxed_limits(eng, o.relax ? 1 : 0);

  char* text = nullptr;
  rv_status st = RV_USAGE;
  if (scan->parsed()) {
    st = rv_scan(eng, o.module.c_str(), o.p, o.k, o.e, o.r, o.exhaustive ? 1 : 0,
                 o.samples, o.format.c_str(), &text);
  } else if (generic->parsed()) {
    st = rv_generic_type(eng, o.module.c_str(), o.p, o.k, o.e, o.r, o.trials, &text);
  } else if (verify->parsed()) {
    st = rv_run_suite(eng, o.suite.c_str(), o.p, o.k, o.e, &text);
  } else if (lr->parsed() && lr_verify->parsed()) {
    if (!o.stages.empty()) {
      st = rv_lr_verify(eng, o.stages.c_str(), &text);
    } else if (lr_p > 0) {
      int b_lo = 0, b_hi = 0;
      size_t dots = lr_b_range.find("..");
      try {
        if (dots == std::string::npos) {
          b_lo = b_hi = std::stoi(lr_b_range);
        } else {
          b_lo = std::stoi(lr_b_range.substr(0, dots));
          b_hi = std::stoi(lr_b_range.substr(dots + 2));
        }
      } catch (const std::exception&) {
        std::cerr << "error: --b-range must be N or N..M\n";
        rv_engine_free(eng);
        return int(RV_USAGE);
      }
      st = rv_lr_sources(eng, lr_p, lr_m, b_lo, b_hi, lr_case, &text);
    } else {
      std::cerr << "error: lr verify needs either --stages or --p/--m/--b-range\n";
      rv_engine_free(eng);
      return int(RV_USAGE);
    }
  } else if (repring->parsed()) {
    st = rv_repring_ext(eng, rr_n, rr_r, rr_p, &text);
  } else if (module_cmd->parsed() && module_build->parsed()) {
    st = rv_module_info(eng, o.module.c_str(), o.p, o.k, o.e, o.r, &text);
  } else if (trace->parsed()) {
    st = rv_traceability(eng, &text);
  } else {
    std::cerr << "error: missing subcommand\n";
  }

  int code = finish(eng, st, text, o.out_path);
  rv_engine_free(eng);
  return code;
}
