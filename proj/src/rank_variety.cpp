#include "rank_variety.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rv {

bool PointAlpha::zero() const {
  return std::all_of(coords.begin(), coords.end(), [](uint16_t c) { return c == 0; });
}

Mat x_alpha(const ModuleRep& M, const PointAlpha& alpha) {
  if (int(alpha.coords.size()) != M.k)
    throw std::invalid_argument("x_alpha: point length mismatch");
  if (alpha.F->p != M.F->p || alpha.F->q != M.F->q)
    throw std::invalid_argument("x_alpha: field mismatch");
  Mat X(M.F, M.dim, M.dim);
  Mat I = identity(M.F, M.dim);
  for (int i = 0; i < M.k; ++i)
    if (alpha.coords[i]) X = mat_add(X, mat_scale(alpha.coords[i], mat_sub(M.gens[i], I)));
  return X;
}

JordanType jordan_at(const ModuleRep& M, const PointAlpha& alpha) {
  if (alpha.zero())
    throw std::invalid_argument("jordan_at: zero point has no cyclic shifted subgroup");
  return JordanType{M.p, nilpotent_jordan_type(x_alpha(M, alpha), M.p)};
}

bool in_rank_variety(const ModuleRep& M, const PointAlpha& alpha) {
  if (alpha.zero()) return true;
  if (M.dim % M.p != 0) return true;
  return rank(x_alpha(M, alpha)) != M.dim - M.dim / M.p;
}

uint16_t eval_f(const PointAlpha& alpha) {
  uint16_t v = 1;
  for (uint16_t c : alpha.coords) v = alpha.F->mul(v, c);
  return v;
}

uint16_t eval_p(const PointAlpha& alpha) {
  const Field& F = *alpha.F;
  uint16_t sum = 0;
  int k = int(alpha.coords.size());
  for (int i = 0; i < k; ++i) {
    uint16_t prod = 1;
    for (int j = 0; j < k; ++j)
      if (j != i) prod = F.mul(prod, alpha.coords[j]);
    sum = F.add(sum, F.pow(prod, F.p - 1));
  }
  return sum;
}

GenericResult generic_type(const ModuleRep& M, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic_type: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, M.F->q - 1);
  std::vector<std::pair<JordanType, PointAlpha>> seen;
  long long attempts = 0, limit = 500LL * trials;
  while (int(seen.size()) < trials) {
    if (++attempts > limit)
      throw std::runtime_error("generic_type: field too small, raise e");
    PointAlpha a{M.F, {}};
    a.coords.resize(M.k);
    for (auto& c : a.coords) c = uint16_t(dist(rng));
    if (!eval_f(a) || !eval_p(a)) continue;
    seen.emplace_back(jordan_at(M, a), a);
  }
  GenericResult out{seen[0].first, seen[0].second, true};
  for (const auto& [t, a] : seen) {
    if (!(t == out.type)) out.unanimous = false;
    if (dominates(t.blocks, out.type.blocks)) {
      out.type = t;
      out.witness = a;
    }
  }
  for (const auto& [t, a] : seen)
    if (!dominates(out.type.blocks, t.blocks))
      throw std::logic_error("generic_type: observed types have no dominance maximum");
  return out;
}

std::vector<PointAlpha> orbit_reduce(const std::vector<PointAlpha>& points, int p) {
  std::set<std::vector<uint16_t>> reps;
  FieldPtr F;
  for (const PointAlpha& a : points) {
    if (!F) F = a.F;
    int k = int(a.coords.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<uint16_t> best = a.coords;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> scale(k, 1);
      while (true) {
        std::vector<uint16_t> cand(k);
        for (int i = 0; i < k; ++i)
          cand[i] = a.F->mul(a.coords[perm[i]], a.F->from_int(scale[i]));
        if (cand < best) best = cand;
        int i = 0;
        while (i < k && scale[i] == p - 1) scale[i++] = 1;
        if (i == k) break;
        ++scale[i];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    reps.insert(best);
  }
  std::vector<PointAlpha> out;
  for (const auto& c : reps) out.push_back(PointAlpha{F, c});
  return out;
}

namespace {

int zero_count(const std::vector<uint16_t>& v) {
  return int(std::count(v.begin(), v.end(), uint16_t(0)));
}

}  // namespace

VarietyReport scan(const ModuleRep& M, const ScanOptions& opt) {
  VarietyReport rep;
  rep.module_label = M.label;
  rep.p = M.p;
  rep.e = M.F->e;
  rep.k = M.k;
  rep.seed = opt.seed;
  rep.predicate = opt.predicate;

  long long total = 1;
  for (int i = 0; i < M.k && total <= opt.budget; ++i) total *= M.F->q;
  rep.exhaustive = total <= opt.budget;

  auto evaluate = [&](const std::vector<uint16_t>& coords) {
    PointAlpha a{M.F, coords};
    PointRecord r;
    r.alpha = coords;
    r.f_zero = eval_f(a) == 0;
    r.p_zero = eval_p(a) == 0;
    if (a.zero()) {
      r.in_variety = true;
    } else if (M.dim <= opt.jordan_dim_limit) {
      JordanType t = jordan_at(M, a);
      r.jordan = t.blocks;
      r.in_variety = !is_free_type(t);
    } else {
      r.in_variety = in_rank_variety(M, a);
    }
    rep.records.push_back(std::move(r));
  };

  if (rep.exhaustive) {
    std::vector<uint16_t> coords(M.k, 0);
    for (long long t = 0; t < total; ++t) {
      long long v = t;
      for (int i = 0; i < M.k; ++i) {
        coords[i] = uint16_t(v % M.F->q);
        v /= M.F->q;
      }
      evaluate(coords);
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> dist(0, M.F->q - 1);
    for (int t = 0; t < opt.samples; ++t) {
      std::vector<uint16_t> coords(M.k);
      for (auto& c : coords) c = uint16_t(dist(rng));
      evaluate(coords);
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const PointRecord& a, const PointRecord& b) { return a.alpha < b.alpha; });
  }

  for (const PointRecord& r : rep.records) {
    ++rep.n_points;
    bool pred_zero = opt.predicate == Predicate::FZero ? r.f_zero : r.p_zero;
    if (r.in_variety) ++rep.n_members;
    if (pred_zero) ++rep.n_predicate_zero;
    if (r.in_variety != pred_zero) ++rep.n_mismatch_a;
    if ((r.in_variety && r.f_zero) != (zero_count(r.alpha) >= 2)) ++rep.n_mismatch_b;
  }
  rep.verdict_membership = rep.n_mismatch_a == 0;
  rep.verdict_intersection = rep.n_mismatch_b == 0;
  return rep;
}

bool maximal_set_test(const ModuleRep& M, const PointAlpha& alpha,
                      const JordanType& gtype) {
  return jordan_at(M, alpha) == gtype;
}

namespace {

std::string coords_text(const std::vector<uint16_t>& alpha, int p) {
  // each coordinate as its base-p coefficient list (low degree first),
  // coordinates joined by semicolons
  std::string s;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ';';
    int v = alpha[i];
    std::string part;
    do {
      if (!part.empty()) part += ':';
      part += std::to_string(v % p);
      v /= p;
    } while (v);
    s += part;
  }
  return s;
}

}  // namespace

std::string report_json(const VarietyReport& r) {
  nlohmann::json j;
  j["module"] = r.module_label;
  j["p"] = r.p;
  j["e"] = r.e;
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["exhaustive"] = r.exhaustive;
  j["predicate"] = r.predicate == Predicate::FZero ? "f_zero" : "p_zero";
  j["points"] = r.n_points;
  j["members"] = r.n_members;
  j["predicate_zero"] = r.n_predicate_zero;
  j["mismatch_membership"] = r.n_mismatch_a;
  j["mismatch_intersection"] = r.n_mismatch_b;
  j["verdict_membership"] = r.verdict_membership;
  j["verdict_intersection"] = r.verdict_intersection;
  nlohmann::json recs = nlohmann::json::array();
  for (const PointRecord& rec : r.records) {
    nlohmann::json jr;
    jr["alpha"] = coords_text(rec.alpha, r.p);
    jr["jordan_type"] = rec.jordan;
    jr["in_variety"] = rec.in_variety;
    jr["f_zero"] = rec.f_zero;
    jr["p_zero"] = rec.p_zero;
    recs.push_back(jr);
  }
  j["records"] = recs;
  return j.dump(2);
}

std::string report_csv(const VarietyReport& r) {
  std::ostringstream os;
  os << "alpha,jordan_type,in_variety,f_zero,p_zero\n";
  for (const PointRecord& rec : r.records) {
    os << coords_text(rec.alpha, r.p) << ',';
    for (size_t i = 0; i < rec.jordan.size(); ++i)
      os << (i ? "|" : "") << rec.jordan[i];
    os << ',' << (rec.in_variety ? 1 : 0) << ',' << (rec.f_zero ? 1 : 0) << ','
       << (rec.p_zero ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace rv
