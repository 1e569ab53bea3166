#pragma once

#include <set>
#include <vector>

#include "siso/iet.hpp"

// Brute-force cross checks. Everything here recomputes dynamics by direct
// simulation so the main library is never in its own oracle loop.
namespace oracle {

// Letter sequence of the exchange orbit of x0: w[i] names the interval
// (by top position) containing the i-th iterate. x0 must be generic, i.e.
// the orbit may never land on an interior mark.
std::vector<int> iet_orbit_coding(const siso::IntervalExchange& e,
                                  const siso::Scalar& x0, int len);

std::set<std::vector<int>> factor_set(const std::vector<int>& w, int m);
long long factor_count(const std::vector<int>& w, int m);

// Every length-R window of w contains every length-n factor of w.
bool uniformly_recurrent(const std::vector<int>& w, int n, int R);

// Winner pattern of the two-interval exchange with top lengths (l0, l1) and
// the swap permutation, by plain subtraction.
std::vector<siso::RauzyKind> two_iet_kind_pattern(siso::Scalar l0, siso::Scalar l1,
                                                  int steps);

}  // namespace oracle
