#include "qhurwitz/mellin/contour.hpp"

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/core/parallel.hpp"
#include "qhurwitz/numeric/quadrature.hpp"

namespace qhurwitz::mellin {

namespace mp = boost::multiprecision;

namespace {

constexpr int kPanelsPerUnit = 2;
constexpr int kArcPanels = 4;

}  // namespace

ContourSpec ContourSpec::for_kernel(int k) {
  ContourSpec c;
  c.left_turn = Real(1 - k) - Real(0.5);
  return c;
}

std::function<Real(const Real&)> multiplier_growth(const Real& x_max, int m_max) {
  const Real lx = mp::log(x_max);
  const Real pd = numeric::pi() * Real(0.25);
  return [lx, m_max, pd](const Real& s) {
    Real g = pd;
    if (s * lx > 0) g += s * lx;
    if (m_max > 0 && s > 1) g += m_max * mp::log(s);
    return g;
  };
}

KernelGrid::KernelGrid(const MBKernel& kern, ContourSpec spec, const std::function<Real(const Real&)>& growth)
    : k_(kern.k()), spec_(std::move(spec)) {
  if (!(spec_.delta > 0 && spec_.delta < Real(0.5))) raise(ErrorCode::InvalidArgument, "contour offset must lie in (0, 1/2)");
  if (spec_.nodes_per_unit < kPanelsPerUnit) raise(ErrorCode::InvalidArgument, "too few contour nodes");
  const Real& d = spec_.delta;
  const Real c0 = spec_.left_turn + d;
  // Poles of the Γ(s + c_m) factors lie at s ≤ 1/β; keep them outside.
  if (spec_.left_turn <= 1 / kern.params().beta + d)
    raise(ErrorCode::WrongRegion, "contour turn would enclose poles of the Gamma product");

  // Upper-leg profile at integer steps past c0.
  auto log_integrand = [&](const Real& t) {
    Complex la = kern.log_eval(Complex(t, d));
    return la.re + growth(t);
  };
  Real peak = log_integrand(c0);
  const double log_tol = mp::log(spec_.trunc_tol).convert_to<double>();
  if (spec_.s_max == 0) {
    Real t = mp::ceil(c0);
    bool done = false;
    for (int step = 0; step < 400 && !done; ++step, t += 1) {
      Real v = log_integrand(t);
      if (v > peak) peak = v;
      // Require decay by the target and a falling profile past the peak.
      if (v - peak < log_tol && v < log_integrand(t - Real(0.5))) {
        spec_.s_max = t;
        done = true;
      }
    }
    if (!done) raise(ErrorCode::ContourTooShort, "integrand did not decay within the kernel range");
  } else {
    for (Real t = mp::ceil(c0); t < spec_.s_max; t += 1) {
      Real v = log_integrand(t);
      if (v > peak) peak = v;
    }
  }
  Real end = log_integrand(spec_.s_max);
  trunc_bound_ = mp::exp(end - peak);
  if (trunc_bound_ > spec_.trunc_tol)
    raise(ErrorCode::ContourTooShort, "integrand at S_max is " + numeric::to_string(trunc_bound_, 6) + " of its peak");

  const int per_panel = spec_.nodes_per_unit / kPanelsPerUnit;
  const auto& rule = numeric::gauss_legendre(per_panel);
  const Complex inv2pii = Complex(Real(0), Real(-1) / (2 * numeric::pi()));

  // Legs: panel boundaries c0, c0 + h, ..., S_max with the last panel short.
  const Real h = Real(1) / kPanelsPerUnit;
  std::vector<Real> edges{c0};
  while (edges.back() + h < spec_.s_max) edges.push_back(edges.back() + h);
  edges.push_back(spec_.s_max);

  // Upper leg, right to left.
  for (std::size_t p = edges.size() - 1; p-- > 0;) {
    const Real a = edges[p + 1], b = edges[p];
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s_.push_back(Complex(mid + half * rule.nodes[i], d));
      w_.push_back(inv2pii * (rule.weights[i] * half));
    }
  }
  // Turn: θ from π/2 to 3π/2, s = c0 + δe^{iθ}, ds = iδe^{iθ}dθ.
  const Real pi = numeric::pi();
  for (int p = 0; p < kArcPanels; ++p) {
    const Real a = pi / 2 + pi * p / kArcPanels, b = pi / 2 + pi * (p + 1) / kArcPanels;
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      Complex e = numeric::expi(mid + half * rule.nodes[i]);
      s_.push_back(Complex(c0) + e * d);
      w_.push_back(inv2pii * (Complex(Real(0), d) * e) * (rule.weights[i] * half));
    }
  }
  // Lower leg, left to right.
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const Real a = edges[p], b = edges[p + 1];
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s_.push_back(Complex(mid + half * rule.nodes[i], -d));
      w_.push_back(inv2pii * (rule.weights[i] * half));
    }
  }
  logA_.resize(s_.size());
  parallel_for(s_.size(), [&](std::size_t i) { logA_[i] = kern.log_eval(s_[i]); });
}

Complex KernelGrid::integrate(const std::function<Complex(const Complex& s, const Complex& logA)>& f) const {
  std::vector<Complex> terms(s_.size());
  for (std::size_t i = 0; i < s_.size(); ++i) terms[i] = w_[i] * f(s_[i], logA_[i]);
  return numeric::pairwise_sum(terms);
}

namespace {

MellinValue finish(const Complex& v, const KernelGrid& g) {
  const Real scale = mp::max(Real(1), numeric::abs(v));
  if (mp::abs(v.im) > 10 * g.spec().trunc_tol * scale)
    raise(ErrorCode::NonRealResult, "contour integral has imaginary part " + numeric::to_string(v.im, 6));
  return {v.re, v.im, g.truncation_bound(), g.size()};
}

Complex spow(const Complex& s, int m) {
  Complex r(Real(1));
  for (int i = 0; i < m; ++i) r *= s;
  return r;
}

}  // namespace

MellinValue phi_mellin_eval(const Real& x, const KernelGrid& grid, int euler_power) {
  if (!(x > 0)) raise(ErrorCode::InvalidArgument, "Mellin evaluation needs x > 0");
  const Real lx = mp::log(x);
  const Real pi = numeric::pi();
  Complex v = grid.integrate([&](const Complex& s, const Complex& la) {
    return numeric::exp(la + s * lx) * numeric::cos(s * pi) * spow(s, euler_power);
  });
  return finish(-v, grid);
}

MellinValue mellin_raw(const Real& x, const KernelGrid& grid, int euler_power) {
  if (!(x > 0)) raise(ErrorCode::InvalidArgument, "Mellin evaluation needs x > 0");
  const Real lx = mp::log(x);
  Complex v = grid.integrate([&](const Complex& s, const Complex& la) {
    return numeric::exp(la + s * lx) * spow(s, euler_power);
  });
  return finish(v, grid);
}

Real kernel_residue(const MBKernel& kern, int pole, const Real& x, int nodes) {
  const Real r = Real(0.25);
  const Real lx = mp::log(x);
  const Real pi = numeric::pi();
  // (1/2πi)∮ f ds over s = p + re^{iθ} is the mean of f(s)·re^{iθ}.
  std::vector<Complex> terms(static_cast<std::size_t>(nodes));
  parallel_for(terms.size(), [&](std::size_t i) {
    Complex e = numeric::expi(2 * pi * static_cast<long>(i) / nodes);
    Complex s = Complex(Real(pole)) + e * r;
    terms[i] = numeric::exp(kern.log_eval(s) + s * lx) * e * r;
  });
  Complex sum = numeric::pairwise_sum(terms);
  return sum.re / nodes;
}

EnclosureAudit pole_enclosure_audit(const MBKernel& kern, const Real& x, int nodes_per_unit) {
  const int k = kern.k();
  auto growth = multiplier_growth(mp::max(x, Real(1)), 0);
  ContourSpec a = ContourSpec::for_kernel(k);
  a.nodes_per_unit = nodes_per_unit;
  KernelGrid ga(kern, a, growth);
  ContourSpec b = a;
  b.left_turn = Real(1 - k) + Real(0.5);
  b.s_max = ga.spec().s_max;
  KernelGrid gb(kern, b, growth);
  EnclosureAudit out;
  out.with_first_pole = mellin_raw(x, ga).value;
  out.without_first_pole = mellin_raw(x, gb).value;
  out.residue = kernel_residue(kern, 1 - k, x);
  out.residual = mp::abs(out.with_first_pole - out.without_first_pole - out.residue);
  return out;
}

}  // namespace qhurwitz::mellin
