#include "suites.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lr.hpp"
#include "rank_variety.hpp"

namespace rv {

namespace {

void fail(SuiteResult& r, const std::string& msg) {
  r.pass = false;
  if (r.failures.size() < 50) r.failures.push_back(msg);
}

std::string part_text(const Partition& p) { return to_string(p); }

ModuleRep build_Dr(int k, int p, int r, const FieldPtr& F) {
  ModuleRep D1 = quotient_D1(k, p, F);
  if (r == 1) {
    D1.label = "D(1) p=" + std::to_string(p) + " k=" + std::to_string(k);
    return D1;
  }
  return ext_power_module(D1, r,
                          "D(" + std::to_string(r) + ") p=" + std::to_string(p) +
                              " k=" + std::to_string(k));
}

JordanType with_free_padding(int p, Partition stable, int dim) {
  int s = weight(stable);
  if ((dim - s) % p != 0 || dim < s)
    throw std::logic_error("free padding: dimension incompatible with stable part");
  Partition blocks;
  for (int t = 0; t < (dim - s) / p; ++t) blocks.push_back(p);
  for (int b : stable) blocks.push_back(b);
  std::sort(blocks.rbegin(), blocks.rend());
  return JordanType{p, blocks};
}

PointAlpha random_point(const FieldPtr& F, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, F->q - 1);
  PointAlpha a{F, std::vector<uint16_t>(k)};
  for (auto& c : a.coords) c = uint16_t(dist(rng));
  return a;
}

void suite_lemma35(SuiteResult& r, const SuiteParams& prm) {
  auto F = Field::make(prm.p, prm.e);
  std::mt19937_64 rng(prm.seed);
  int p = prm.p, k = prm.k;
  long long checked = 0;
  for (int t = 0; t < 200; ++t) {
    PointAlpha a = random_point(F, k, rng);
    bool fnz = eval_f(a) != 0;
    Mat L = matrix_L(a.coords, k, p, F, false, false);
    Mat Lp = matrix_L(a.coords, k, p, F, true, false);
    if (!(L == matrix_L(a.coords, k, p, F, false, true)) ||
        !(Lp == matrix_L(a.coords, k, p, F, true, true)))
      fail(r, "direct and derived block matrices differ at " + part_text(Partition(
                  a.coords.begin(), a.coords.end())));
    if ((rank(L) == (k - 1) * (p - 1) + p - 2) != fnz) fail(r, "rank(L) law violated");
    if ((rank(mat_pow(L, p - 2)) == 2 * k - 1) != fnz) fail(r, "rank(L^{p-2}) law violated");
    // rank(L^{p-1}) <= k-1 always, but equality survives one vanishing
    // coordinate: the other blocks' top powers still contribute k-1
    // independent rows.  Only two or more zeros drop the rank.
    int zeros = 0;
    for (uint16_t c : a.coords) zeros += c == 0;
    if ((rank(mat_pow(L, p - 1)) == k - 1) != (zeros <= 1))
      fail(r, "rank(L^{p-1}) law violated");
    if ((rank(Lp) == k * (p - 1)) != fnz) fail(r, "rank(L') law violated");
    ++checked;
  }
  r.counters["points"] = checked;
}

void suite_thm36(SuiteResult& r, const SuiteParams& prm) {
  auto F = Field::make(prm.p, prm.e);
  std::mt19937_64 rng(prm.seed);
  int p = prm.p, k = prm.k;
  ModuleRep S = natural_specht(k * p + 1, k, F);
  S.label = "S(" + std::to_string(k * p) + ",1)";
  ScanOptions opt;
  opt.predicate = Predicate::FZero;
  opt.budget = prm.budget;
  opt.samples = prm.samples;
  opt.seed = prm.seed;
  VarietyReport rep = scan(S, opt);
  r.counters["scan_points"] = rep.n_points;
  r.counters["scan_members"] = rep.n_members;
  if (!rep.verdict_membership)
    fail(r, "membership of the dim-" + std::to_string(S.dim) +
                " module does not match the vanishing of f_k");
  // higher hooks: every point off V(f_k) restricts freely
  long long hook_checks = 0;
  for (int rr = 2; rr <= p - 1; ++rr) {
    ModuleRep H = ext_power_module(S, rr);
    int trials = H.dim > 500 ? 3 : 5;
    for (int t = 0; t < trials; ++t) {
      PointAlpha a = random_point(F, k, rng);
      while (eval_f(a) == 0) a = random_point(F, k, rng);
      if (in_rank_variety(H, a))
        fail(r, "hook exterior power r=" + std::to_string(rr) +
                    " is not free off the coordinate hyperplanes");
      ++hook_checks;
    }
  }
  r.counters["hook_points"] = hook_checks;
}

void suite_thm42(SuiteResult& r, const SuiteParams& prm) {
  auto F = Field::make(prm.p, prm.e);
  std::mt19937_64 rng(prm.seed);
  int p = prm.p, k = prm.k;
  ModuleRep D1 = build_Dr(k, p, 1, F);
  Partition generic_expected;
  for (int i = 0; i < k - 1; ++i) generic_expected.push_back(p);
  generic_expected.push_back(p - 2);
  GenericResult g = generic_type(D1, 10, prm.seed);
  if (!(g.type == JordanType{p, generic_expected}))
    fail(r, "generic type is " + part_text(g.type.blocks) + ", expected " +
                part_text(generic_expected));
  if (!g.unanimous) fail(r, "generic type not unanimous across trials");
  // on V(p_k) \ V(f_k) the type drops to [p]^{k-2}[p-1]^2
  Partition special;
  for (int i = 0; i < k - 2; ++i) special.push_back(p);
  special.push_back(p - 1);
  special.push_back(p - 1);
  long long found = 0, attempts = 0;
  while (found < 20 && attempts < 200000) {
    ++attempts;
    PointAlpha a = random_point(F, k, rng);
    if (eval_p(a) != 0 || eval_f(a) == 0) continue;
    ++found;
    JordanType t = jordan_at(D1, a);
    if (!(t == JordanType{p, special}))
      fail(r, "type on the special locus is " + part_text(t.blocks) + ", expected " +
                  part_text(special));
  }
  if (found < 20) fail(r, "could not find 20 special points; raise e");
  r.counters["special_points"] = found;
}

void suite_main(SuiteResult& r, const SuiteParams& prm) {
  auto F = Field::make(prm.p, prm.e);
  ModuleRep D = build_Dr(prm.k, prm.p, prm.p - 1, F);
  ScanOptions opt;
  opt.predicate = Predicate::PZero;
  opt.budget = prm.budget;
  opt.samples = prm.samples;
  opt.seed = prm.seed;
  VarietyReport rep = scan(D, opt);
  r.counters["scan_points"] = rep.n_points;
  r.counters["scan_members"] = rep.n_members;
  r.counters["exhaustive"] = rep.exhaustive ? 1 : 0;
  r.counters["intersection_ok"] = rep.verdict_intersection ? 1 : 0;
  if (!rep.verdict_membership)
    fail(r, "membership of D(p-1) does not match the vanishing of p_k (" +
                std::to_string(rep.n_mismatch_a) + " mismatches)");
}

void suite_lemma46(SuiteResult& r, const SuiteParams& prm) {
  for (int e : {1, prm.e}) {
    auto F = Field::make(prm.p, e);
    ModuleRep D = build_Dr(prm.k, prm.p, prm.p - 1, F);
    ScanOptions opt;
    opt.predicate = Predicate::PZero;
    opt.budget = prm.budget;
    opt.samples = prm.samples;
    opt.seed = prm.seed;
    VarietyReport rep = scan(D, opt);
    r.counters["points_e" + std::to_string(e)] = rep.n_points;
    if (!rep.verdict_intersection)
      fail(r, "intersection with V(f_k) is not the pairwise coordinate locus over e=" +
                  std::to_string(e));
    if (e == prm.e) break;
  }
}

void suite_lemma24(SuiteResult& r, const SuiteParams& prm) {
  int p = prm.p;
  long long pairs = 0;
  auto compare = [&](const Partition& mu, const Partition& beta) {
    ++pairs;
    auto predicted = predicted_source_set(mu, beta, p);
    if (!predicted) {
      fail(r, "hypothesis not recognized for mu=" + part_text(mu) +
                  " beta=" + part_text(beta));
      return;
    }
    auto oracle = source_partitions(mu, beta);
    if (oracle != *predicted) {
      std::ostringstream os;
      os << "source sets differ at mu=" << part_text(mu) << " beta=" << part_text(beta)
         << "; oracle {";
      for (const auto& lam : oracle) os << " " << part_text(lam);
      os << " } predicted {";
      for (const auto& lam : *predicted) os << " " << part_text(lam);
      os << " }";
      fail(r, os.str());
    }
  };
  for (int m = 2; m <= std::min(3, p - 1); ++m)
    for (int b = m + 1; b <= m + 3; ++b) {
      Partition mu1(b, p);
      mu1.push_back(1);
      for (const Partition& bp : enumerate_partitions(m, m)) {
        if (bp == Partition{m}) continue;
        compare(mu1, complement(p, bp));
      }
      Partition mu2(b, p);
      mu2.push_back(p - 1);
      for (const Partition& beta : enumerate_partitions(m, m)) {
        if (beta == Partition{m}) continue;
        compare(mu2, beta);
      }
    }
  r.counters["pairs"] = pairs;
}

void suite_lemma26(SuiteResult& r, const SuiteParams& prm) {
  int p = prm.p;
  long long checks = 0;
  for (int rr = 1; rr <= p - 1; ++rr) {
    JordanType got = jt_ext(JordanType{p, {p - 1}}, rr);
    JordanType expect = with_free_padding(p, {rr % 2 == 0 ? 1 : p - 1},
                                          int(binom(p - 1, rr)));
    if (!(got == expect))
      fail(r, "ext^" + std::to_string(rr) + "(J_{p-1}) = " + part_text(got.blocks));
    ++checks;
  }
  for (int rr = 1; rr <= p - 2; ++rr) {
    JordanType got = jt_ext(JordanType{p, {p - 2}}, rr);
    JordanType expect = with_free_padding(p, {rr % 2 == 0 ? rr + 1 : p - rr - 1},
                                          int(binom(p - 2, rr)));
    if (!(got == expect))
      fail(r, "ext^" + std::to_string(rr) + "(J_{p-2}) = " + part_text(got.blocks));
    ++checks;
  }
  for (int n = 1; n <= p; ++n)
    for (int rr = 1; rr <= p - 1; ++rr) {
      if (!(gaussian_ext(n, rr, p) == jt_ext(JordanType{p, {n}}, rr)))
        fail(r, "symbolic ext^" + std::to_string(rr) + "(J_" + std::to_string(n) +
                    ") disagrees with the matrix route");
      ++checks;
    }
  r.counters["checks"] = checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lemma3.5", "thm3.6", "thm4.2", "main", "lemma4.6", "lemma2.4", "lemma2.6"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& prm) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw std::invalid_argument("unknown suite: " + name);
  if (!prm.relax_limits) {
    if (prm.p > 7) throw std::domain_error("p > 7 exceeds the default guardrail");
    if (prm.k < 2 || prm.k > 4) throw std::domain_error("k outside [2,4] guardrail");
    if (prm.e < 1 || prm.e > 3) throw std::domain_error("e outside [1,3] guardrail");
  }
  SuiteResult r;
  r.name = name;
  r.seed = prm.seed;
  r.params = {{"p", prm.p}, {"k", prm.k}, {"e", prm.e}};
  r.pass = true;
  auto start = std::chrono::steady_clock::now();
  if (name == "lemma3.5")
    suite_lemma35(r, prm);
  else if (name == "thm3.6")
    suite_thm36(r, prm);
  else if (name == "thm4.2")
    suite_thm42(r, prm);
  else if (name == "main")
    suite_main(r, prm);
  else if (name == "lemma4.6")
    suite_lemma46(r, prm);
  else if (name == "lemma2.4")
    suite_lemma24(r, prm);
  else if (name == "lemma2.6")
    suite_lemma26(r, prm);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

std::string suite_json(const SuiteResult& r) {
  nlohmann::json j;
  j["suite"] = r.name;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  for (const auto& [k, v] : r.counters) j["counters"][k] = v;
  j["failures"] = r.failures;
  return j.dump(2);
}

std::string traceability_markdown() {
  std::ostringstream os;
  os << "| Suite | Claim verified | How |\n"
     << "|---|---|---|\n"
     << "| lemma2.4 | For mu = (p^b,1) with beta = p - beta' (beta' of weight m, "
        "not a single row) and for mu = (p^b,p-1) with beta of weight m, the "
        "partitions lambda admitting an LR sequence [lambda,beta;mu] are exactly "
        "the unions of (p^h) with the one-box extensions of beta' resp. their "
        "p-complements | brute-force enumeration of all LR sequences vs. the "
        "closed-form set |\n"
     << "| lemma2.6 | ext^r(J_{p-1}) and ext^r(J_{p-2}) have stable parts [1] or "
        "[p-1] resp. [r+1] or [p-r-1] by parity; the q-binomial recurrence gives "
        "the same types as explicit minors | matrix exterior powers vs. symbolic "
        "Gaussian classes, all n <= p, r < p |\n"
     << "| lemma3.5 | rank(L) = (k-1)(p-1)+p-2, rank(L^{p-2}) = 2k-1 and "
        "rank(L') = k(p-1), each iff x_1...x_k != 0; rank(L^{p-1}) = k-1 iff "
        "at most one coordinate vanishes | 200 seeded points per (p,k); "
        "direct block form vs. change-of-basis |\n"
     << "| thm3.6 | membership set of the dim-kp standard module equals the "
        "vanishing locus of f_k = x_1...x_k; higher hook powers restrict freely "
        "off V(f_k) | exhaustive or sampled scans |\n"
     << "| thm4.2 | generic type of the dim-(kp-2) simple quotient is "
        "[p]^{k-1}[p-2]; on V(p_k) minus V(f_k) it is [p]^{k-2}[p-1]^2 | seeded "
        "generic sampling plus 20 special points |\n"
     << "| lemma4.6 | membership of D(p-1) together with f_k = 0 happens exactly "
        "where at least two coordinates vanish | exhaustive scans over the prime "
        "field and the extension |\n"
     << "| main | the membership set of D(p-1) equals the vanishing locus of "
        "p_k = sum_i (x_1...x_k/x_i)^{p-1} | exhaustive point-by-point scan |\n";
  return os.str();
}

}  // namespace rv
