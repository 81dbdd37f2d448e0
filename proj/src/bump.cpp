#include "mnv/bump.hpp"

#include <cmath>

namespace mnv {

namespace {
double f(double t) { return (t > 1e-12) ? std::exp(-1.0 / t) : 0.0; }
double fp(double t) { return (t > 1e-12) ? std::exp(-1.0 / t) / (t * t) : 0.0; }
}  // namespace

double RadialPlateau::value(double s) const {
  if (s <= s1) return 1.0;
  if (s >= s2) return 0.0;
  const double t = (s - s1) / (s2 - s1);
  const double a = f(t), b = f(1.0 - t);
  return b / (a + b);
}

double RadialPlateau::dvalue(double s) const {
  if (s <= s1 || s >= s2) return 0.0;
  const double t = (s - s1) / (s2 - s1);
  const double a = f(t), b = f(1.0 - t);
  const double denom = (a + b) * (a + b);
  const double dwdt = (-fp(1.0 - t) * a - b * fp(t)) / denom;
  return dwdt / (s2 - s1);
}

}  // namespace mnv
