#include "rankvar.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "lr.hpp"
#include "rank_variety.hpp"
#include "suites.hpp"

using namespace rv;

struct rv_engine {
  uint64_t seed = 1;
  bool relax = false;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rv_status guard_params(const rv_engine* eng, int p, int k, int e, std::string& err) {
  if (eng->relax) return RV_OK;
  if (p > 7) {
    err = "p > 7 exceeds the default guardrail";
    return RV_PARAM;
  }
  if (k < 2 || k > 4) {
    err = "k outside [2,4] guardrail";
    return RV_PARAM;
  }
  if (e < 1 || e > 3) {
    err = "e outside [1,3] guardrail";
    return RV_PARAM;
  }
  return RV_OK;
}

// nullopt-style module factory; throws invalid_argument on unknown names
ModuleRep build_module(const std::string& which, int p, int k, int e, int r) {
  auto F = Field::make(p, e);
  if (which == "natural") return natural_specht(k * p, k, F);
  if (which == "specht") return natural_specht(k * p + 1, k, F);
  if (which == "specht-hook")
    return ext_power_module(natural_specht(k * p + 1, k, F), r);
  if (which == "D1") return quotient_D1(k, p, F);
  if (which == "Dr" || which == "D(p-1)") {
    int rr = which == "Dr" ? r : p - 1;
    ModuleRep D1 = quotient_D1(k, p, F);
    return rr == 1 ? D1 : ext_power_module(D1, rr);
  }
  throw std::invalid_argument("unknown module selector: " + which);
}

template <typename Fn>
rv_status wrap(rv_engine* eng, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& ex) {
    eng->last_error = ex.what();
    return RV_USAGE;
  } catch (const std::domain_error& ex) {
    eng->last_error = ex.what();
    return RV_PARAM;
  } catch (const std::exception& ex) {
    eng->last_error = ex.what();
    return RV_FAIL;
  }
}

nlohmann::json partition_json(const Partition& p) { return nlohmann::json(p); }

}  // namespace

extern "C" {

rv_engine* rv_engine_new(void) { return new rv_engine; }

void rv_engine_free(rv_engine* eng) { delete eng; }

const char* rv_last_error(const rv_engine* eng) { return eng->last_error.c_str(); }

void rv_set_seed(rv_engine* eng, uint64_t seed) { eng->seed = seed; }

void rv_set_relaxed_limits(rv_engine* eng, int relax) { eng->relax = relax != 0; }

rv_status rv_run_suite(rv_engine* eng, const char* name, int p, int k, int e,
                       char** json_out) {
  return wrap(eng, [&]() -> rv_status {
    SuiteParams prm;
    prm.p = p;
    prm.k = k;
    prm.e = e;
    prm.seed = eng->seed;
    prm.relax_limits = eng->relax;
    SuiteResult res = run_suite(name, prm);
    if (json_out) *json_out = dup_string(suite_json(res));
    if (!res.pass) {
      eng->last_error = "suite " + res.name + " failed";
      return RV_FAIL;
    }
    return RV_OK;
  });
}

rv_status rv_scan(rv_engine* eng, const char* module, int p, int k, int e, int r,
                  int exhaustive, int samples, const char* format, char** out) {
  return wrap(eng, [&]() -> rv_status {
    std::string err;
    if (rv_status st = guard_params(eng, p, k, e, err); st != RV_OK) {
      eng->last_error = err;
      return st;
    }
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "csv")
      throw std::invalid_argument("unknown format: " + fmt);
    ModuleRep M = build_module(module, p, k, e, r);
    ScanOptions opt;
    std::string which = module;
    opt.predicate = (which == "D1" || which == "Dr" || which == "D(p-1)")
                        ? Predicate::PZero
                        : Predicate::FZero;
    opt.seed = eng->seed;
    if (samples > 0) opt.samples = samples;
    if (exhaustive > 0) opt.budget = 1LL << 62;
    VarietyReport rep = scan(M, opt);
    if (out) *out = dup_string(fmt == "json" ? report_json(rep) : report_csv(rep));
    return RV_OK;
  });
}

rv_status rv_generic_type(rv_engine* eng, const char* module, int p, int k, int e,
                          int r, int trials, char** json_out) {
  return wrap(eng, [&]() -> rv_status {
    std::string err;
    if (rv_status st = guard_params(eng, p, k, e, err); st != RV_OK) {
      eng->last_error = err;
      return st;
    }
    ModuleRep M = build_module(module, p, k, e, r);
    GenericResult g = generic_type(M, trials < 1 ? 10 : trials, eng->seed);
    nlohmann::json j;
    j["module"] = M.label;
    j["dim"] = M.dim;
    j["seed"] = eng->seed;
    j["type"] = partition_json(g.type.blocks);
    j["witness"] = g.witness.coords;
    j["unanimous"] = g.unanimous;
    if (json_out) *json_out = dup_string(j.dump(2));
    return RV_OK;
  });
}

rv_status rv_lr_verify(rv_engine* eng, const char* stages_json, char** json_out) {
  return wrap(eng, [&]() -> rv_status {
    nlohmann::json in = nlohmann::json::parse(stages_json, nullptr, false);
    if (in.is_discarded() || !in.is_array())
      throw std::invalid_argument("stages must be a JSON array of partitions");
    std::vector<Partition> stages;
    for (const auto& s : in) stages.push_back(s.get<Partition>());
    nlohmann::json j;
    bool ok = is_lr_sequence(stages);
    j["valid"] = ok;
    if (ok) {
      LRSequence A{stages};
      auto [lam, beta, mu] = lr_type(A);
      j["lambda"] = partition_json(lam);
      j["beta"] = partition_json(beta);
      j["mu"] = partition_json(mu);
      SkewTableau T = companion_tableau(A);
      j["tableau"] = T.rows;
      j["tableau_conditions"] = check_tableau_conditions(T);
      j["lattice_word"] = lattice_word(T);
    }
    if (json_out) *json_out = dup_string(j.dump(2));
    return ok ? RV_OK : RV_FAIL;
  });
}

rv_status rv_lr_sources(rv_engine* eng, int p, int m, int b_lo, int b_hi,
                        int which_case, char** json_out) {
  return wrap(eng, [&]() -> rv_status {
    if (p < 3) throw std::invalid_argument("p must be an odd prime >= 3");
    if (m < 2 || m > p - 1) throw std::invalid_argument("m must lie in [2, p-1]");
    if (b_lo < 1 || b_hi < b_lo) throw std::invalid_argument("bad b range");
    if (which_case != 1 && which_case != 2)
      throw std::invalid_argument("case must be 1 or 2");
    nlohmann::json j;
    j["case"] = which_case;
    j["p"] = p;
    j["m"] = m;
    j["b_range"] = {b_lo, b_hi};
    j["reports"] = nlohmann::json::array();
    bool all_equal = true;
    for (int b = b_lo; b <= b_hi; ++b)
      for (const Partition& base : enumerate_partitions(m, m)) {
        if (base == Partition{m}) continue;
        Partition mu(b, p);
        mu.push_back(which_case == 1 ? 1 : p - 1);
        Partition beta = which_case == 1 ? complement(p, base) : base;
        if (weight(beta) > weight(mu)) continue;
        auto predicted = predicted_source_set(mu, beta, p);
        if (!predicted)
          throw std::invalid_argument("hypotheses not met at mu=" + to_string(mu) +
                                      " beta=" + to_string(beta));
        std::set<Partition> oracle = source_partitions(mu, beta);
        bool equal = oracle == *predicted;
        all_equal = all_equal && equal;
        nlohmann::json rep;
        rep["mu"] = partition_json(mu);
        rep["beta"] = partition_json(beta);
        rep["oracle_set"] = std::vector<Partition>(oracle.begin(), oracle.end());
        rep["predicted_set"] =
            std::vector<Partition>(predicted->begin(), predicted->end());
        rep["equal"] = equal;
        j["reports"].push_back(rep);
      }
    j["equal"] = all_equal;
    if (json_out) *json_out = dup_string(j.dump(2));
    if (!all_equal) {
      eng->last_error = "oracle and predicted source sets differ";
      return RV_FAIL;
    }
    return RV_OK;
  });
}

rv_status rv_repring_ext(rv_engine* eng, int n, int r, int p, char** json_out) {
  return wrap(eng, [&]() -> rv_status {
    JordanType symbolic = gaussian_ext(n, r, p);
    JordanType matrix = jt_ext(JordanType{p, {n}}, r);
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["p"] = p;
    j["blocks"] = partition_json(symbolic.blocks);
    j["dim"] = symbolic.dim();
    j["matches_matrix_route"] = symbolic == matrix;
    if (json_out) *json_out = dup_string(j.dump(2));
    return symbolic == matrix ? RV_OK : RV_FAIL;
  });
}

rv_status rv_module_info(rv_engine* eng, const char* module, int p, int k, int e,
                         int r, char** json_out) {
  return wrap(eng, [&]() -> rv_status {
    std::string err;
    if (rv_status st = guard_params(eng, p, k, e, err); st != RV_OK) {
      eng->last_error = err;
      return st;
    }
    ModuleRep M = build_module(module, p, k, e, r);
    bool order_ok = true, commute_ok = true;
    Mat I = identity(M.F, M.dim);
    for (const Mat& G : M.gens) order_ok = order_ok && mat_pow(G, p) == I;
    for (size_t i = 0; i < M.gens.size(); ++i)
      for (size_t j = i + 1; j < M.gens.size(); ++j)
        commute_ok = commute_ok &&
                     mat_mul(M.gens[i], M.gens[j]) == mat_mul(M.gens[j], M.gens[i]);
    nlohmann::json j;
    j["module"] = M.label;
    j["dim"] = M.dim;
    j["p"] = p;
    j["k"] = k;
    j["e"] = e;
    j["generators"] = M.gens.size();
    j["order_p"] = order_ok;
    j["commute"] = commute_ok;
    if (json_out) *json_out = dup_string(j.dump(2));
    return order_ok && commute_ok ? RV_OK : RV_FAIL;
  });
}

rv_status rv_traceability(rv_engine* eng, char** out) {
  return wrap(eng, [&]() -> rv_status {
    if (out) *out = dup_string(traceability_markdown());
    return RV_OK;
  });
}

void rv_string_free(char* s) { std::free(s); }

}  // extern "C"
