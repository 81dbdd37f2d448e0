#pragma once

namespace mnv {

// Smooth (C-infinity) plateau in the squared radius s: value 1 for s <= s1,
// 0 for s >= s2, with the exp(-1/t) ramp in between. dvalue is d/ds.
struct RadialPlateau {
  double s1 = 0.0;
  double s2 = 1.0;

  double value(double s) const;
  double dvalue(double s) const;
};

}  // namespace mnv
