#ifndef MOTIVOL_ETA_HPP
#define MOTIVOL_ETA_HPP

#include "motivol/class_function.hpp"

#include <vector>

namespace motivol {

// Conjc(G)_{C,n}: classes D such that some member C' of C sits inside D with
// |C'| = |D| / (|D| ^ n). Encodes which decomposition class a degree-n point
// acquires in an everywhere-unramified cover.
std::vector<int> eta_support(const GroupPtr& group, int conjc_index, long n);

// eta_class = sum of theta_D over the support
ClassFunction eta_class(const GroupPtr& group, int conjc_index, long n);

// cyclic case by orders alone: 1 iff |C| = r / (n ^ r)
int eta_indicator(long extension_degree, long subgroup_order, long n);

}  // namespace motivol

#endif
