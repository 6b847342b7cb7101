#pragma once

// Term-by-term transcriptions of the published small-beta formulas, one per
// case branch. They are independent of the residue engine in asymptotics and
// serve as its cross-check; the *_generic variants evaluate the simple-pole
// formula at any s where it is defined (used for epsilon-limit checks).

#include "besselsum/expansion.hpp"
#include "besselsum/manifolds.hpp"

namespace besselsum::closed_forms {

Expansion h(double s, double x, double order);
Expansion h0(double s, double order);
Expansion g(int d, double s, double order);
Expansion f(const ManifoldModel& model, double s, double x, double order);
Expansion f0(const ManifoldModel& model, double s, double order);

Expansion h_generic(double s, double x, double order);
Expansion h0_generic(double s, double order);
Expansion g_generic(int d, double s, double order);
Expansion f_generic(const ManifoldModel& model, double s, double x, double order);
Expansion f0_generic(const ManifoldModel& model, double s, double order);

}  // namespace besselsum::closed_forms
