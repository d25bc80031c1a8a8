#include <doctest.h>

#include <sstream>

#include "kazhlip/bounds.hpp"
#include "kazhlip/errors.hpp"
#include "kazhlip/figures.hpp"

using namespace kazhlip;

TEST_CASE("Phi table ordering: exponential branch above before the crossover") {
  const Real t_star = phi_crossover();
  const auto rows = figure_rows(FigureKind::phi_branches, {Real(0), Real("1.3"), Real("0.01")});
  CHECK(rows.size() == 131);
  CHECK(rows.front().combined == 1);
  for (const auto& r : rows) {
    if (r.t > 0 && r.t < t_star) CHECK(r.first > r.second);
    if (r.t > t_star) CHECK(r.first < r.second);
    CHECK(r.combined == std::max(r.first, r.second));
  }
}

TEST_CASE("Phi inverse table ordering: log branch is the min up to Phi(t*)") {
  const Real switch_at = phi_exp_branch(phi_crossover());
  const auto rows = figure_rows(FigureKind::phi_inv_branches, {Real(1), Real(40), Real("0.5")});
  CHECK(rows.front().combined == 0);
  for (const auto& r : rows) {
    if (r.t < switch_at && r.t > 1) CHECK(r.first < r.second);
    if (r.t > switch_at) CHECK(r.first > r.second);
  }
}

TEST_CASE("grids outside the domain are rejected") {
  CHECK_THROWS_AS(figure_rows(FigureKind::phi_branches, {Real(0), Real("1.5"), Real("0.1")}), DomainError);
  CHECK_THROWS_AS(figure_rows(FigureKind::phi_inv_branches, {Real("0.5"), Real(2), Real("0.1")}), DomainError);
  CHECK_THROWS_AS(figure_rows(FigureKind::phi_branches, {Real(0), Real(1), Real(0)}), DomainError);
}

TEST_CASE("CSV and SVG emission") {
  const std::string csv = figure_csv(FigureKind::phi_branches, {Real(0), Real(1), Real("0.5")});
  CHECK(csv ==
        "t,exp_branch,rational_branch,phi\n"
        "0,1,1,1\n"
        "0.5,2.71828182845905,1.30612244897959,2.71828182845905\n"
        "1,7.38905609893065,4,7.38905609893065\n");
  const std::string svg = figure_svg(FigureKind::phi_inv_branches, {Real(1), Real(20), Real("0.25")});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("stroke=\"green\"") != std::string::npos);
  CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
  CHECK(svg.find("fill=\"red\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
