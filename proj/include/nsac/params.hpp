#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsac {

enum class LatentKind { Linear, Arctan };

/// Latent-heat class: either ell(s) = lambda*s or the bounded sublinear
/// profile ell(s) = arctan(s).  The sublinear constants (L, C_ell, gamma)
/// describe the envelope 0 <= ell <= L and the decay floor
/// (1+s^gamma)^{-1} <= C_ell * ell'(s) for s >= 1.
struct LatentHeatSpec {
  LatentKind kind = LatentKind::Arctan;
  double lambda = 1.0;  // linear slope; for arctan, the Lipschitz bound ell(s) <= lambda*s
  double L = std::numbers::pi / 2.0;  // sup ell (arctan); unbounded for linear
  double C_ell = 1.0;                 // sublinear decay-floor constant
  double gamma = 2.0;                 // sublinear decay-floor exponent

  static LatentHeatSpec linear(double slope) {
    LatentHeatSpec s;
    s.kind = LatentKind::Linear;
    s.lambda = slope;
    s.L = std::numeric_limits<double>::infinity();
    return s;
  }
  static LatentHeatSpec arctan() { return LatentHeatSpec{}; }

  bool bounded() const { return kind == LatentKind::Arctan; }

  // ell'(0): slope at the origin, used for the delta admissibility bound.
  double dell0() const { return kind == LatentKind::Linear ? lambda : 1.0; }
};

enum class ViscosityProfile { Constant, RationalDecay };

/// All physical and constitutive parameters of the model.
struct ModelParams {
  double eps = 0.04;     // interface width
  double alpha = 0.75;   // specific heat exponent, c_V = s^alpha
  double beta = 2.0;     // conductivity exponent
  double kappa1 = 0.1;   // conductivity offset
  double kappa2 = 0.1;   // conductivity power coefficient
  double nu1 = 0.1;      // viscosity lower bound
  double nu2 = 0.1;      // viscosity upper bound
  ViscosityProfile nu_profile = ViscosityProfile::Constant;
  LatentHeatSpec latent = LatentHeatSpec::arctan();
  double delta = 1e-4;   // regularization level (0 disables the delta-family)
  double delta0 = 0.9;   // admissible-delta fraction: delta < delta0 * ell'(0)
};

struct ParamError {
  std::string field;
  std::string message;
};

/// Structural checks on ModelParams.  Returns one entry per violated
/// invariant; empty means admissible.
inline std::vector<ParamError> check_params(const ModelParams& p) {
  std::vector<ParamError> errs;
  auto bad = [&](const char* f, std::string m) { errs.push_back({f, std::move(m)}); };
  if (!(p.eps > 0.0)) bad("model.eps", "eps must be > 0");
  if (!(p.alpha > 0.5 && p.alpha <= 1.0)) bad("model.alpha", "alpha must lie in (0.5, 1]");
  if (!(p.beta >= 2.0)) bad("model.beta", "beta must be >= 2");
  if (!(p.kappa1 > 0.0)) bad("model.kappa1", "kappa1 must be > 0");
  if (!(p.kappa2 > 0.0)) bad("model.kappa2", "kappa2 must be > 0");
  if (!(p.nu1 > 0.0 && p.nu1 <= p.nu2)) bad("model.nu1", "viscosity bounds must satisfy 0 < nu1 <= nu2");
  if (!(p.delta >= 0.0)) bad("model.delta", "delta must be >= 0");
  if (!(p.delta0 > 0.0 && p.delta0 < 1.0)) bad("model.delta0", "delta0 must lie in (0, 1)");
  if (p.latent.bounded() && p.delta > 0.0 && !(p.delta < p.delta0 * p.latent.dell0()))
    bad("model.delta", "delta must satisfy delta < delta0 * dell(0) = " +
                           std::to_string(p.delta0 * p.latent.dell0()));
  if (p.latent.kind == LatentKind::Linear && !(p.latent.lambda > 0.0))
    bad("model.lambda", "linear latent-heat slope must be > 0");
  return errs;
}

inline void require_valid(const ModelParams& p) {
  auto errs = check_params(p);
  if (errs.empty()) return;
  std::string joined;
  for (const auto& e : errs) {
    if (!joined.empty()) joined += "; ";
    joined += e.field + ": " + e.message;
  }
  throw std::invalid_argument("invalid model parameters: " + joined);
}

}  // namespace nsac
