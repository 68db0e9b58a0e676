#ifndef RANKVAR_LR_HPP
#define RANKVAR_LR_HPP

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "partition.hpp"

namespace rv {

// A chain of partitions a^0 <= a^1 <= ... <= a^r where each step adds at
// most one box per row and the step sizes satisfy the lattice condition.
struct LRSequence {
  std::vector<Partition> stages;
};

// A ragged grid of entries >= 0; the 0-region marks the inner shape.
struct SkewTableau {
  std::vector<std::vector<int>> rows;
};

bool is_lr_sequence(const std::vector<Partition>& stages);

// (a^0, beta, a^r) where conjugate(beta)_h = |a^h| - |a^{h-1}|.
// Throws if the stage size differences are not weakly decreasing.
std::tuple<Partition, Partition, Partition> lr_type(const LRSequence& A);

// Tableau of shape conjugate(a^r); the cell gets the least h with the
// cell inside conjugate(a^h), and 0 on conjugate(a^0).
SkewTableau companion_tableau(const LRSequence& A);

// (i) columns strictly increasing in the positive entries, and
// (ii) for every column a and value h, the count of h in columns >= a
//      is at least the count of h+1 there.
bool check_tableau_conditions(const SkewTableau& T);

// Right-to-left row reading of the positive entries, top row first.
std::vector<int> lattice_word(const SkewTableau& T);

// All LR sequences of type [lam, beta; mu], deterministic DFS order.
std::vector<LRSequence> enumerate_lr_sequences(const Partition& lam,
                                               const Partition& beta,
                                               const Partition& mu);

// Independent oracle: the number of lattice-word semistandard skew
// tableaux of shape conjugate(mu)\conjugate(lam) and weight
// conjugate(beta).  Kept separate from enumerate_lr_sequences.
long long lr_coefficient_tableau_count(const Partition& lam,
                                       const Partition& beta,
                                       const Partition& mu);

// { lam of |mu|-|beta| : an LR sequence of type [lam, beta; mu] exists }.
std::set<Partition> source_partitions(const Partition& mu, const Partition& beta);

// The classification's predicted source set for mu = (p^b, 1) with
// beta = p - beta' (case 1) or mu = (p^b, p-1) with beta of weight m
// (case 2); nullopt when (mu, beta) matches neither hypothesis.
// In both cases the predicted lambda are (p^h) joined with delta
// (case 1) or with p - delta (case 2), where delta runs over the
// one-box extensions of beta' resp. beta and h is forced by weight.
// Entries whose p-row multiplicity would be negative are dropped.
std::optional<std::set<Partition>> predicted_source_set(const Partition& mu,
                                                        const Partition& beta,
                                                        int p);

}  // namespace rv

#endif
