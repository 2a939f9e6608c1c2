#include "gns/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gns/logsumexp.hpp"
#include "gns/suggest.hpp"

namespace gns {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLogHalf = -0.6931471805599453;  // log(1/2)
}  // namespace

double von_mises_log_l(double theta, double mu, double kappa) {
  if (kappa < 0.0) {
    throw std::invalid_argument("von_mises: kappa must be >= 0");
  }
  return kappa * std::cos(theta - mu);
}

double edge_bimodal_torus_log_l(const Point& p, double kappa) {
  if (p.coords.size() != 2) {
    throw std::invalid_argument(
        "edge_bimodal_torus: expects two circular dimensions");
  }
  const double t0 = p.coords[0];
  const double t1 = p.coords[1];
  // Component B sits at (2pi - 0.1, 2pi - 0.1) == (-0.1, -0.1).
  const double a = kappa * (std::cos(t0 - 0.1) + std::cos(t1 - 0.1));
  const double b = kappa * (std::cos(t0 + 0.1) + std::cos(t1 + 0.1));
  return kLogHalf + log_add_exp(a, b);
}

double vmf_sphere_log_l(const Point& p, const UnitVec3& m_hat, double kappa) {
  const UnitVec3 n_hat = angles_to_cart(p.coords[0], p.coords[1]);
  return kappa * m_hat.dot(n_hat);
}

double antipodal_vmf_mixture_log_l(const Point& p, const UnitVec3& m_hat,
                                   double kappa) {
  const UnitVec3 n_hat = angles_to_cart(p.coords[0], p.coords[1]);
  const double lin = kappa * m_hat.dot(n_hat);
  return kLogHalf + log_add_exp(lin, -lin);
}

double gaussian_box_log_l(const Point& p, const std::vector<double>& mean,
                          const std::vector<double>& sigma) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const double r = (p.coords[i] - mean[i]) / sigma[i];
    acc += r * r;
  }
  return -0.5 * acc;
}

const std::vector<ModelInfo>& model_catalog() {
  static const std::vector<ModelInfo> catalog = {
      {"von_mises",
       "single von Mises mode on the circle [0, 2pi)",
       {{"kappa", 5.0, "concentration, >= 0"},
        {"mu", 1.0, "mode location in [0, 2pi)"}}},
      {"edge_bimodal_torus",
       "equal-weight von Mises mixture on [0, 2pi)^2 with modes straddling "
       "the seam at (0.1, 0.1) and (2pi-0.1, 2pi-0.1)",
       {{"kappa", 10.0, "shared concentration, >= 0"}}},
      {"vmf_sphere",
       "von Mises-Fisher mode on the unit sphere (theta, phi)",
       {{"kappa", 10.0, "concentration, >= 0"},
        {"mu_theta", 1.0, "mode polar angle in [0, pi]"},
        {"mu_phi", 0.5, "mode azimuth in [0, 2pi)"}}},
      {"antipodal_vmf_mixture",
       "equal-weight von Mises-Fisher mixture at m and -m on the sphere",
       {{"kappa", 10.0, "shared concentration, >= 0"},
        {"mu_theta", 1.0, "first mode polar angle in [0, pi]"},
        {"mu_phi", 0.5, "first mode azimuth in [0, 2pi)"}}},
      {"gaussian_box",
       "isotropic Gaussian on the all-Linear box [lo, hi]^dim",
       {{"dim", 1.0, "number of linear dimensions, integer 1..32"},
        {"mean", 0.5, "per-dimension mean, inside [lo, hi]"},
        {"sigma", 0.05, "per-dimension width, > 0"},
        {"lo", 0.0, "box lower bound"},
        {"hi", 1.0, "box upper bound"}}},
  };
  return catalog;
}

namespace {

const ModelInfo& find_info(const std::string& name) {
  std::vector<std::string> names;
  for (const auto& info : model_catalog()) {
    if (info.name == name) return info;
    names.push_back(info.name);
  }
  std::string msg = "unknown model \"" + name + "\"";
  const std::string near = detail::closest_match(name, names);
  if (!near.empty()) msg += " (did you mean \"" + near + "\"?)";
  throw std::invalid_argument(msg);
}

std::map<std::string, double> resolve_params(
    const ModelInfo& info, const std::map<std::string, double>& given) {
  std::map<std::string, double> out;
  std::vector<std::string> known;
  for (const auto& p : info.params) {
    out[p.name] = p.default_value;
    known.push_back(p.name);
  }
  for (const auto& [key, value] : given) {
    if (!out.count(key)) {
      std::string msg =
          "model " + info.name + ": unknown parameter \"" + key + "\"";
      const std::string near = detail::closest_match(key, known);
      if (!near.empty()) msg += " (did you mean \"" + near + "\"?)";
      throw std::invalid_argument(msg);
    }
    out[key] = value;
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

ModelSpec make_model(const std::string& name,
                     const std::map<std::string, double>& params) {
  const ModelInfo& info = find_info(name);
  auto p = resolve_params(info, params);

  if (name == "von_mises") {
    const double kappa = p.at("kappa");
    const double mu = p.at("mu");
    require(kappa >= 0.0, "model von_mises: kappa must be >= 0");
    require(mu >= 0.0 && mu < kTwoPi, "model von_mises: mu must lie in [0, 2pi)");
    return {name, ParameterSpace::circle(0.0, kTwoPi), p,
            [mu, kappa](const Point& pt) {
              return kappa * std::cos(pt.coords[0] - mu);
            },
            {"theta"}};
  }

  if (name == "edge_bimodal_torus") {
    const double kappa = p.at("kappa");
    require(kappa >= 0.0, "model edge_bimodal_torus: kappa must be >= 0");
    return {name, ParameterSpace::torus(2, 0.0, kTwoPi), p,
            [kappa](const Point& pt) {
              return edge_bimodal_torus_log_l(pt, kappa);
            },
            {"theta0", "theta1"}};
  }

  if (name == "vmf_sphere" || name == "antipodal_vmf_mixture") {
    const double kappa = p.at("kappa");
    const double mu_theta = p.at("mu_theta");
    const double mu_phi = p.at("mu_phi");
    require(kappa >= 0.0, "model " + name + ": kappa must be >= 0");
    require(mu_theta >= 0.0 && mu_theta <= std::numbers::pi,
            "model " + name + ": mu_theta must lie in [0, pi]");
    require(mu_phi >= 0.0 && mu_phi < kTwoPi,
            "model " + name + ": mu_phi must lie in [0, 2pi)");
    const UnitVec3 m_hat = angles_to_cart(mu_theta, mu_phi);
    LogLikelihoodFn fn;
    if (name == "vmf_sphere") {
      fn = [m_hat, kappa](const Point& pt) {
        return vmf_sphere_log_l(pt, m_hat, kappa);
      };
    } else {
      fn = [m_hat, kappa](const Point& pt) {
        return antipodal_vmf_mixture_log_l(pt, m_hat, kappa);
      };
    }
    return {name, ParameterSpace::sphere(), p, std::move(fn), {"theta", "phi"}};
  }

  // gaussian_box
  const double dim_real = p.at("dim");
  const double mean = p.at("mean");
  const double sigma = p.at("sigma");
  const double lo = p.at("lo");
  const double hi = p.at("hi");
  require(dim_real == std::floor(dim_real) && dim_real >= 1.0 &&
              dim_real <= 32.0,
          "model gaussian_box: dim must be an integer in 1..32");
  require(lo < hi, "model gaussian_box: requires lo < hi");
  require(sigma > 0.0, "model gaussian_box: sigma must be > 0");
  require(mean >= lo && mean <= hi,
          "model gaussian_box: mean must lie inside [lo, hi]");
  const auto dim = static_cast<std::size_t>(dim_real);
  const std::vector<double> means(dim, mean);
  const std::vector<double> sigmas(dim, sigma);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
  return {name, ParameterSpace::box(dim, lo, hi), p,
          [means, sigmas](const Point& pt) {
            return gaussian_box_log_l(pt, means, sigmas);
          },
          std::move(labels)};
}

}  // namespace gns
