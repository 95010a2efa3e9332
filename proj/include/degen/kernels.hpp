#pragma once

// Hot loops with an OpenMP version and a serial reference. Both return
// identical results; the serial one is what the tests trust.

#include <vector>

#include "degen/chowcomplex.hpp"
#include "degen/zlattice.hpp"

namespace degen::kernels {

// T^i_j for i in [-d, d], j in [0, d], stored at (i + d) * (d + 1) + j.
std::vector<HomologyData> t_group_grid_serial(const std::vector<ChowComplexRow>& rows, int d);
std::vector<HomologyData> t_group_grid_parallel(const std::vector<ChowComplexRow>& rows, int d);

// All l in [-bound, bound]^n, l != 0, first nonzero entry positive, with
// sum l_i v_i = 0 and sum l_i s_i = 0 mod p^exponent. Sorted lexicographically.
std::vector<std::vector<long>> box_relation_search_serial(const std::vector<long>& valuations,
                                                          const std::vector<BigInt>& residues, const BigInt& p, long exponent,
                                                          long bound);
std::vector<std::vector<long>> box_relation_search_parallel(const std::vector<long>& valuations,
                                                            const std::vector<BigInt>& residues, const BigInt& p, long exponent,
                                                            long bound);

}  // namespace degen::kernels
