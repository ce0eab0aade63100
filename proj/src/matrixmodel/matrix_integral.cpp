#include "qhurwitz/matrixmodel/matrix_integral.hpp"

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/core/parallel.hpp"
#include "qhurwitz/numeric/linalg.hpp"

namespace qhurwitz::matrixmodel {

namespace mp = boost::multiprecision;

const char* convention_name(EntryConvention c) {
  return c == EntryConvention::calibrated ? "-(1/2 pi i) int A s^m (-beta x)^s ds" : "(1/2 pi i) int A s^m e^{ys} ds";
}

ReducedIntegrand ReducedIntegrand::make(int n, const basis::NumericParams& p, const Real& x_max, int nodes_per_unit) {
  ReducedIntegrand r;
  r.n = n;
  r.kernel = std::make_unique<mellin::MBKernel>(n, p);
  mellin::ContourSpec spec = mellin::ContourSpec::for_kernel(n);
  spec.nodes_per_unit = nodes_per_unit;
  r.grid = std::make_unique<mellin::KernelGrid>(*r.kernel, spec, mellin::multiplier_growth(x_max, n - 1));
  return r;
}

namespace {

Real factorial_product(int n) {
  Real p = 1, f = 1;
  for (int i = 1; i <= n; ++i) {
    f *= i;
    p *= f;
  }
  return p;
}

}  // namespace

ZValue z_reduced(const ExternalSource& src, const ReducedIntegrand& red, const RhoTable& rho, EntryConvention conv) {
  const int n = src.n();
  if (red.n != n) raise(ErrorCode::InvalidArgument, "reduced integrand built for a different n");
  basis::require_distinct(src.y);
  const Real mb = -rho.params().beta;
  ZValue out;
  out.entries.assign(static_cast<std::size_t>(n), std::vector<Real>(static_cast<std::size_t>(n)));
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  parallel_for(cells, [&](std::size_t c) {
    const int i = static_cast<int>(c) / n, j = static_cast<int>(c) % n;
    const Real& xj = src.x[static_cast<std::size_t>(j)];
    Real v = conv == EntryConvention::calibrated ? Real(-mellin::mellin_raw(Real(mb * xj), *red.grid, i).value)
                                                 : mellin::mellin_raw(xj, *red.grid, i).value;
    out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  });
  out.z = factorial_product(n) / numeric::vandermonde(src.y) * numeric::det(out.entries);
  return out;
}

Real matrix_model_prefactor(const ExternalSource& src, const Real& beta) {
  const int n = src.n();
  Real px = 1;
  for (const auto& v : src.x) px *= mp::pow(v, n - 1);
  return mp::pow(beta, n * (n - 1) / 2) * px * numeric::vandermonde(src.y) /
         (factorial_product(n) * numeric::vandermonde(src.x));
}

MatrixModelValue tau_from_matrix_model(const ExternalSource& src, const ReducedIntegrand& red, const RhoTable& rho,
                                       bool with_literal) {
  const int n = src.n();
  const Real& beta = rho.params().beta;
  MatrixModelValue v;
  v.z = z_reduced(src, red, rho, EntryConvention::calibrated).z;
  v.prefactor = matrix_model_prefactor(src, beta);
  v.normalization = wronskian_constant(n, rho) / mp::pow(beta, n * (n - 1) / 2);
  v.tau = v.prefactor * v.z * v.normalization;
  if (with_literal) {
    v.z_literal = z_reduced(src, red, rho, EntryConvention::literal).z;
    v.tau_literal = v.prefactor * v.z_literal;
  }
  return v;
}

}  // namespace qhurwitz::matrixmodel
