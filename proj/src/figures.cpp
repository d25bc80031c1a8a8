#include "kazhlip/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kazhlip/bounds.hpp"
#include "kazhlip/errors.hpp"

namespace kazhlip {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kMargin = 60;

struct Labels {
  const char* first;
  const char* second;
  const char* combined;
  const char* first_legend;
  const char* second_legend;
};

Labels labels(FigureKind kind) {
  if (kind == FigureKind::phi_branches) {
    return {"exp_branch", "rational_branch", "phi", "e^{2t}", "4(2-t^2)^{-2}"};
  }
  return {"log_branch", "sqrt_branch", "phi_inv", "(1/2)log(t)", "sqrt(2)(1-t^{-1/2})^{1/2}"};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<FigureRow> figure_rows(FigureKind kind, const Grid& grid) {
  if (!(grid.step > 0)) throw DomainError("grid.step: must be positive");
  if (grid.end < grid.start) throw DomainError("grid: end must not precede start");
  if (kind == FigureKind::phi_branches) {
    if (grid.start < 0 || !(grid.end * grid.end < 2)) throw DomainError("grid: Phi is defined on [0, sqrt 2)");
  } else if (grid.start < 1) {
    throw DomainError("grid: Phi^-1 is defined on [1, inf)");
  }
  std::vector<FigureRow> rows;
  // Points are start + i * step; the slack absorbs rounding of end.
  const Real slack = grid.step * Real("1e-9");
  for (long i = 0;; ++i) {
    Real t = grid.start + grid.step * i;
    if (t > grid.end + slack) break;
    if (t > grid.end) t = grid.end;
    FigureRow row;
    if (kind == FigureKind::phi_branches) {
      row.first = phi_exp_branch(t);
      row.second = phi_rational_branch(t);
      row.combined = std::max(row.first, row.second);
    } else {
      row.first = phi_inv_log_branch(t);
      row.second = phi_inv_sqrt_branch(t);
      row.combined = std::min(row.first, row.second);
    }
    row.t = std::move(t);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure_csv(FigureKind kind, const Grid& grid) {
  const auto l = labels(kind);
  std::ostringstream out;
  out << "t," << l.first << ',' << l.second << ',' << l.combined << '\n';
  for (const auto& r : figure_rows(kind, grid)) {
    out << format_real(r.t) << ',' << format_real(r.first) << ',' << format_real(r.second) << ','
        << format_real(r.combined) << '\n';
  }
  return out.str();
}

std::string figure_svg(FigureKind kind, const Grid& grid) {
  const auto rows = figure_rows(kind, grid);
  const auto l = labels(kind);
  const double x0 = rows.front().t.convert_to<double>();
  double x1 = rows.back().t.convert_to<double>();
  if (x1 <= x0) x1 = x0 + 1;
  double y1 = 0;
  for (const auto& r : rows) y1 = std::max({y1, r.first.convert_to<double>(), r.second.convert_to<double>()});
  if (y1 <= 0) y1 = 1;
  const double y0 = 0;  // Both figures start their vertical axis at 0.

  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };
  auto polyline = [&](bool first, const char* color) {
    std::string pts;
    for (const auto& r : rows) {
      if (!pts.empty()) pts += ' ';
      pts += fmt(sx(r.t.convert_to<double>())) + "," + fmt(sy((first ? r.first : r.second).convert_to<double>()));
    }
    return "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kHeight - kMargin) << "\" x2=\"" << fmt(kWidth - kMargin)
      << "\" y2=\"" << fmt(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(kMargin) << "\" y2=\""
      << fmt(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5;
    const double yv = y0 + (y1 - y0) * i / 5;
    char xl[32], yl[32];
    std::snprintf(xl, sizeof xl, "%.3g", xv);
    std::snprintf(yl, sizeof yl, "%.3g", yv);
    out << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << fmt(kHeight - kMargin + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << xl << "</text>\n";
    out << "<text x=\"" << fmt(kMargin - 8) << "\" y=\"" << fmt(sy(yv) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << yl << "</text>\n";
  }
  out << polyline(true, "green") << polyline(false, "blue");

  // Crossover: t* for Phi, Phi(t*) for Phi^{-1}.
  const Real t_star = phi_crossover();
  const Real cross_x = kind == FigureKind::phi_branches ? t_star : phi_exp_branch(t_star);
  const Real cross_y = kind == FigureKind::phi_branches ? phi_exp_branch(t_star) : t_star;
  const double cx = cross_x.convert_to<double>();
  if (cx >= x0 && cx <= x1) {
    out << "<line x1=\"" << fmt(sx(cx)) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(sx(cx)) << "\" y2=\""
        << fmt(kHeight - kMargin) << "\" stroke=\"gray\" stroke-dasharray=\"4,4\"/>\n";
    out << "<circle cx=\"" << fmt(sx(cx)) << "\" cy=\"" << fmt(sy(cross_y.convert_to<double>()))
        << "\" r=\"4\" fill=\"red\"/>\n";
  }
  out << "<text x=\"" << fmt(kMargin + 10) << "\" y=\"" << fmt(kMargin - 30) << "\" font-size=\"14\" fill=\"green\">"
      << l.first_legend << "</text>\n";
  out << "<text x=\"" << fmt(kMargin + 10) << "\" y=\"" << fmt(kMargin - 12) << "\" font-size=\"14\" fill=\"blue\">"
      << l.second_legend << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace kazhlip
