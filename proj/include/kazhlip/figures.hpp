#pragma once

#include <string>
#include <vector>

#include "kazhlip/numeric.hpp"

namespace kazhlip {

enum class FigureKind { phi_branches, phi_inv_branches };

struct Grid {
  Real start;
  Real end;
  Real step;
};

struct FigureRow {
  Real t;
  Real first;   // e^{2t}, or log(t)/2
  Real second;  // 4(2 - t^2)^{-2}, or sqrt2 (1 - t^{-1/2})^{1/2}
  Real combined;  // max for Phi, min for Phi^{-1}
};

// Grid points start, start + step, ... up to end inclusive. Throws
// DomainError if the grid leaves [0, sqrt 2) (Phi) or [1, inf) (Phi^{-1}),
// or if step <= 0.
std::vector<FigureRow> figure_rows(FigureKind kind, const Grid& grid);

// t,<branch1>,<branch2>,<max|min>
std::string figure_csv(FigureKind kind, const Grid& grid);
// 800x600 SVG with both branches as polylines and the crossover marked.
std::string figure_svg(FigureKind kind, const Grid& grid);

}  // namespace kazhlip
