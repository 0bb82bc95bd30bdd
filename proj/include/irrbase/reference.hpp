// reference.hpp
// Independent brute-force oracles for the statistics, used only to
// validate the pruned searches at small scale. Everything here works on
// explicit element lists: stabilizers are filters, subsets are bitmasks,
// no orbit pruning, no stabilizer chains.
#pragma once

#include <cstddef>
#include <vector>

#include "irrbase/permgroup.hpp"

namespace irrbase {
namespace reference {

// Every element, by breadth-first closure over the generators.
std::vector<Perm> element_list(const PermGroup& g, std::size_t cap = 2000000);

struct Stats {
  int b = 0, I = 0, B = 0, H = 0;
};

// Unpruned b (iterative deepening over all point sequences), I (DFS over
// all strictly-descending sequences), B and H (scan of all 2^n subsets).
// Requires degree <= 20 for the subset scan; intended for degree <= 8.
Stats stats(const PermGroup& g);

// Least k such that, for every tuple length l with k <= l <= max_len and
// every pair of length-l tuples (repeated entries allowed), k-subtuple
// completeness implies the tuples lie in the same orbit. Tuples are
// enumerated literally over the full n^l space; the first tuple ranges
// over orbit representatives, which is an exact symmetry of the
// definition. Returns max_len + 1 if every k <= max_len has a violation.
int relational_complexity(const PermGroup& g, int max_len = 5);

}  // namespace reference
}  // namespace irrbase
