#pragma once

#include <array>

namespace filmseries::reference {

/// Constants of the water vapour / lithium bromide system used by the printed tables.
inline constexpr double kGamma = -0.03421;
inline constexpr double kEpsilon = 2.64489e-3;

struct PrintedRow {
  double p;
  double lhs;
  double rhs;
};

/// Printed footnote residuals (percent) for the 25 printed roots.
inline constexpr std::array<double, 25> kTable1ResidualPct = {
    0.0993, 0.0991, 0.0999, 0.0951, 0.1032, 0.1182, 0.1262, 0.1620, 0.2372,
    1.0935, 0.2518, 0.0904, 0.0664, 0.0461, 0.0287, 0.0399, 0.0836, 0.1187,
    0.2546, 0.8836, 0.9581, 0.4222, 0.3212, 0.2747, 0.2597};

/// Formula 1, 25 printed roots.
inline constexpr std::array<PrintedRow, 11> kTable2 = {{
    {1e-4, 0.04973, 0.04973},
    {1e-3, 0.04974, 0.04974},
    {1e-2, 0.04989, 0.04989},
    {1e-1, 0.05131, 0.05131},
    {1e0, 0.06457, 0.06457},
    {1e1, 0.14602, 0.14607},
    {1e2, 0.35950, 0.35995},
    {1e3, 0.56938, 0.57284},
    {1e4, 0.58911, 0.60049},
    {1e5, 0.58757, 0.60051},
    {1e6, 0.58761, 0.60051},
}};

/// Formula 2, 25 printed roots.
inline constexpr std::array<PrintedRow, 11> kTable3 = {{
    {1e-4, 0.96695, 0.96695},
    {1e-3, 0.96723, 0.96723},
    {1e-2, 0.96999, 0.97003},
    {1e-1, 0.99739, 0.99785},
    {1e0, 1.25209, 1.25663},
    {1e1, 2.81978, 2.86524},
    {1e2, 7.15260, 7.60546},
    {1e3, 15.22671, 19.57211},
    {1e4, 26.77400, 60.05292},
    {1e5, 31.43094, 189.89883},
    {1e6, 32.06626, 600.51281},
}};

}  // namespace filmseries::reference
