#pragma once

#include <map>
#include <string>
#include <vector>

#include "gns/geometry.hpp"
#include "gns/mh_kernel.hpp"
#include "gns/param_space.hpp"

namespace gns {

// Raw log-likelihoods (all unnormalised; the sampler has to recover the
// normalisation as the evidence).

/// kappa * cos(theta - mu). kappa must be >= 0.
double von_mises_log_l(double theta, double mu, double kappa);

/// Equal-weight mixture of two von Mises products on the 2-torus [0,2pi)^2,
/// centred at (0.1, 0.1) and (2pi-0.1, 2pi-0.1) with a shared kappa. The
/// modes sit on opposite sides of the seam, 0.2 rad apart through it.
double edge_bimodal_torus_log_l(const Point& p, double kappa);

/// kappa * (m_hat . n_hat) for n_hat = angles_to_cart(p[0], p[1]).
double vmf_sphere_log_l(const Point& p, const UnitVec3& m_hat, double kappa);

/// Equal-weight mixture of von Mises-Fisher components at m_hat and -m_hat.
double antipodal_vmf_mixture_log_l(const Point& p, const UnitVec3& m_hat,
                                   double kappa);

/// -1/2 sum ((p_i - mean_i) / sigma_i)^2 on an all-Linear space.
double gaussian_box_log_l(const Point& p, const std::vector<double>& mean,
                          const std::vector<double>& sigma);

/// A named likelihood bound to its parameter space and effective parameters.
struct ModelSpec {
  std::string name;
  ParameterSpace space;
  std::map<std::string, double> parameters;
  LogLikelihoodFn log_likelihood;
  std::vector<std::string> dimension_names;  // CSV column labels
};

struct ModelParamInfo {
  std::string name;
  double default_value;
  std::string doc;
};

struct ModelInfo {
  std::string name;
  std::string summary;
  std::vector<ModelParamInfo> params;
};

/// Catalogue of the models selectable by name in a run config.
const std::vector<ModelInfo>& model_catalog();

/// Builds a model from its name and a parameter map. Unknown names or
/// parameters and out-of-range values throw std::invalid_argument with a
/// message naming the offender (and a suggestion where one is close).
ModelSpec make_model(const std::string& name,
                     const std::map<std::string, double>& params);

}  // namespace gns
