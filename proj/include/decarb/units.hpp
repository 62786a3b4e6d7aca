#pragma once

// Unit conventions used throughout the library.  GGDP is carried in
// trillion $/yr, emissions in Gt CO2/yr, intensity in Gt CO2 per trillion $,
// the MAC coefficient alpha in billion $ per (Gt CO2/yr).  With those units
// annual expenditures alpha*mu*g*k come out in billion $/yr directly; the
// factor below appears wherever billions meet trillions (burden, cost
// fractions, beta in years).

namespace decarb::units {

// 1 trillion $ = 1000 billion $.
inline constexpr double billion_per_trillion = 1.0e3;

// PgC -> Gt CO2, molar mass ratio of CO2 to C.
inline constexpr double gt_co2_per_pgc = 44.0 / 12.0;

inline constexpr double pgc_to_gt_co2(double pgc) { return pgc * gt_co2_per_pgc; }

}  // namespace decarb::units
