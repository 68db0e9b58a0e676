#ifndef RANKVAR_RANK_VARIETY_HPP
#define RANKVAR_RANK_VARIETY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cp_jordan.hpp"
#include "symmod.hpp"

namespace rv {

// A point alpha = (alpha_1, ..., alpha_k) of affine k-space over the
// module's field.
struct PointAlpha {
  FieldPtr F;
  std::vector<uint16_t> coords;

  bool zero() const;
  bool operator==(const PointAlpha& o) const { return coords == o.coords; }
};

// sum_i alpha_i (G_i - I); always p-nilpotent for commuting order-p G_i.
Mat x_alpha(const ModuleRep& M, const PointAlpha& alpha);

// Jordan type of x_alpha; throws on alpha = 0 (no cyclic shifted
// subgroup there).
JordanType jordan_at(const ModuleRep& M, const PointAlpha& alpha);

// True at alpha = 0; otherwise true iff the restriction to the cyclic
// shifted subgroup at alpha is not free.  Uses a single rank
// computation: with all block sizes at most p, freeness is equivalent
// to rank(x_alpha) = dim - dim/p.
bool in_rank_variety(const ModuleRep& M, const PointAlpha& alpha);

// f_k = product of the coordinates.
uint16_t eval_f(const PointAlpha& alpha);

// p_k = sum_i (product of the other coordinates)^{p-1}.
uint16_t eval_p(const PointAlpha& alpha);

// Generic Jordan type: dominance maximum over seeded random points with
// f_k * p_k != 0, with the witnessing point and a unanimity flag.
struct GenericResult {
  JordanType type;
  PointAlpha witness;
  bool unanimous = true;
};

GenericResult generic_type(const ModuleRep& M, int trials, uint64_t seed);

// One canonical representative (lexicographic orbit minimum) per orbit
// of the group generated by single-coordinate scalings by nonzero
// prime-field elements and coordinate permutations.
std::vector<PointAlpha> orbit_reduce(const std::vector<PointAlpha>& points, int p);

enum class Predicate { FZero, PZero };

struct PointRecord {
  std::vector<uint16_t> alpha;
  Partition jordan;  // empty when not computed (alpha = 0 or dim too large)
  bool in_variety = false;
  bool f_zero = false;
  bool p_zero = false;
};

struct VarietyReport {
  std::string module_label;
  int p = 0, e = 0, k = 0;
  uint64_t seed = 0;
  bool exhaustive = false;
  Predicate predicate = Predicate::PZero;
  std::vector<PointRecord> records;
  long long n_points = 0, n_members = 0, n_predicate_zero = 0, n_mismatch_a = 0,
            n_mismatch_b = 0;
  bool verdict_membership = false;    // membership <=> predicate vanishes
  bool verdict_intersection = false;  // member & f=0 <=> >= 2 zero coords
};

struct ScanOptions {
  Predicate predicate = Predicate::PZero;
  long long budget = 100000;  // exhaustive when q^k fits
  int samples = 2000;         // sampled points otherwise
  uint64_t seed = 1;
  int jordan_dim_limit = 150;  // full Jordan type only below this dim
};

VarietyReport scan(const ModuleRep& M, const ScanOptions& opt);

// Whether alpha attains the precomputed generic type.
bool maximal_set_test(const ModuleRep& M, const PointAlpha& alpha,
                      const JordanType& gtype);

std::string report_json(const VarietyReport& r);
std::string report_csv(const VarietyReport& r);

}  // namespace rv

#endif
