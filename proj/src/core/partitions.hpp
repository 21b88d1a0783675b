#pragma once

#include <string>
#include <vector>

namespace genus_forge {

using Partition = std::vector<int>;  // parts in descending order

// All partitions of n, each with parts descending, listed in ascending
// lexicographic order ([1,...,1] first, [n] last).
const std::vector<Partition>& partitions(int n);

// multiplicities[m] = number of parts equal to m (index 0 unused).
std::vector<int> multiplicities(const Partition& p, int n);

// "c1^3c2" style name of the Chern monomial of a partition.
std::string chern_key(const Partition& p);

// Weak compositions of n into k nonnegative parts.
std::vector<std::vector<int>> weak_compositions(int n, int k);

}  // namespace genus_forge
