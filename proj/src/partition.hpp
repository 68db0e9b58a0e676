#ifndef RANKVAR_PARTITION_HPP
#define RANKVAR_PARTITION_HPP

#include <string>
#include <vector>

namespace rv {

// A partition is a weakly decreasing list of positive integers.  The empty
// list is the unique partition of 0.  No trailing zeros are ever stored;
// operations that need aligned lengths pad internally.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& lam);

// |lambda|
int weight(const Partition& lam);

// Column counts of the Young diagram; an involution.
Partition conjugate(const Partition& lam);

// Dominance order: all partial sums of lam >= those of mu.
// Throws std::invalid_argument if |lam| != |mu|.
bool dominates(const Partition& lam, const Partition& mu);

// (m - lam_k, ..., m - lam_1) with zero parts dropped.  Requires m >= lam_1.
Partition complement(int m, const Partition& lam);

// Multiset union of parts, sorted weakly decreasing.
Partition union_sort(const Partition& lam, const Partition& mu);

// All partitions of n with parts <= max_part, lexicographically descending.
std::vector<Partition> enumerate_partitions(int n, int max_part);

std::string to_string(const Partition& lam);

}  // namespace rv

#endif
