#include "qhurwitz/matrixmodel/audits.hpp"

#include "qhurwitz/numeric/quadrature.hpp"

namespace qhurwitz::matrixmodel {

namespace mp = boost::multiprecision;
using numeric::Complex;

namespace {

// Nodes and weights on [0, ∞) from ζ = t/(1-t), composite over t panels.
void half_line_rule(int panels, int per_panel, std::vector<Real>& z, std::vector<Real>& w) {
  const auto& g = numeric::gauss_legendre(per_panel);
  for (int p = 0; p < panels; ++p) {
    const Real a = Real(p) / panels, b = Real(p + 1) / panels;
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      Real t = mid + half * g.nodes[i];
      Real om = 1 - t;
      z.push_back(t / om);
      w.push_back(g.weights[i] * half / (om * om));
    }
  }
}

}  // namespace

AuditCase andreiev_n2() {
  std::vector<Real> z, w;
  half_line_rule(16, 40, z, w);
  std::vector<Real> rows;
  for (std::size_t a = 0; a < z.size(); ++a) {
    std::vector<Real> inner;
    for (std::size_t b = 0; b < z.size(); ++b) {
      // det(ζ_j^{i-1}) for i, j ∈ {1, 2} is ζ_2 - ζ_1.
      Real d = z[b] - z[a];
      inner.push_back(w[b] * d * d * mp::exp(-z[b]));
    }
    rows.push_back(w[a] * mp::exp(-z[a]) * numeric::pairwise_sum(inner));
  }
  AuditCase c;
  c.label = "andreiev n=2, f_i = g_i = zeta^(i-1), e^-zeta";
  c.quadrature = numeric::pairwise_sum(rows);
  // moments m_0 = 1, m_1 = 1, m_2 = 2
  c.closed_form = 2 * (Real(1) * 2 - Real(1) * 1);
  c.residual = mp::abs(c.quadrature - c.closed_form);
  return c;
}

AuditCase hciz_n2(const Real& y1, const Real& y2, const Real& z1, const Real& z2) {
  // U = [[e^{iξ1} cos η, e^{iξ2} sin η], [-e^{-iξ2} sin η, e^{-iξ1} cos η]];
  // normalized Haar density sin η cos η / (2π²) on [0, π/2] × [0, 2π)².
  const Real pi = numeric::pi();
  const auto& ge = numeric::gauss_legendre(48);
  const auto& gx = numeric::gauss_legendre(6);
  std::vector<Real> terms;
  for (std::size_t a = 0; a < ge.nodes.size(); ++a) {
    const Real eta = pi / 4 * (ge.nodes[a] + 1);
    const Real we = ge.weights[a] * pi / 4;
    const Real ce = mp::cos(eta), se = mp::sin(eta);
    for (std::size_t b = 0; b < gx.nodes.size(); ++b) {
      const Real x1 = pi * (gx.nodes[b] + 1);
      for (std::size_t c = 0; c < gx.nodes.size(); ++c) {
        const Real x2 = pi * (gx.nodes[c] + 1);
        Complex u[2][2] = {{numeric::expi(x1) * ce, numeric::expi(x2) * se},
                           {-(numeric::expi(-x2) * se), numeric::expi(-x1) * ce}};
        const Real y[2] = {y1, y2}, zz[2] = {z1, z2};
        // tr(Y U Z U†) = Σ_{ij} y_i z_j |U_ij|²
        Real tr = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            const Complex& e = u[i][j];
            tr += y[i] * zz[j] * (e.re * e.re + e.im * e.im);
          }
        terms.push_back(we * gx.weights[b] * pi * gx.weights[c] * pi * se * ce / (2 * pi * pi) * mp::exp(tr));
      }
    }
  }
  AuditCase out;
  out.label = "hciz n=2, Y=diag(" + numeric::to_string(y1, 6) + "," + numeric::to_string(y2, 6) + "), Z=diag(" +
              numeric::to_string(z1, 6) + "," + numeric::to_string(z2, 6) + ")";
  out.quadrature = numeric::pairwise_sum(terms);
  const Real u = (y1 - y2) * (z1 - z2);
  const Real ratio = u == 0 ? Real(1) : Real(mp::expm1(u) / u);
  out.closed_form = mp::exp(y1 * z2 + y2 * z1) * ratio;
  out.residual = mp::abs(out.quadrature - out.closed_form);
  return out;
}

std::vector<AuditCase> hciz_n2_cases() {
  return {hciz_n2(Real(0), Real(0), Real(0), Real(0)), hciz_n2(Real(1), Real(0), Real(1), Real(0)),
          hciz_n2(Real("0.7"), Real("-0.4"), Real("1.3"), Real("0.2"))};
}

}  // namespace qhurwitz::matrixmodel
