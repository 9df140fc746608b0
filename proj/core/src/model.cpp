#include "aip/model.hpp"

#include <algorithm>
#include <cmath>

#include "aip/logsum.hpp"

namespace aip {

namespace {

std::vector<double> sorted_uniform_depths(int k, double z_max, RngStream& rng) {
  std::vector<double> z(k);
  for (auto& zi : z) zi = rng.uniform(0.0, z_max);
  std::sort(z.begin(), z.end());
  return z;
}

bool strictly_ascending_in(const std::vector<double>& z, double z_max) {
  double prev = 0.0;
  for (double zi : z) {
    if (!(zi > prev) || !(zi < z_max)) return false;
    prev = zi;
  }
  return true;
}

}  // namespace

ParticleState sample_prior(const PriorSpec& prior, RngStream& rng) {
  ParticleState s;
  s.model.kappa = rng.uniform_int(prior.kappa_max + 1);
  s.model.lambda = rng.uniform_int(prior.lambda_max + 1);
  s.phi_b = rng.uniform(prior.phi_min, prior.phi_max);
  s.phi.resize(s.model.kappa);
  for (auto& p : s.phi) p = rng.uniform(prior.phi_min, prior.phi_max);
  s.z_sigma = sorted_uniform_depths(s.model.kappa, prior.z_max, rng);
  s.m.resize(s.model.lambda);
  for (auto& mi : s.m) mi = rng.uniform(prior.m_min, prior.m_max);
  s.z_m = sorted_uniform_depths(s.model.lambda, prior.z_max, rng);
  s.tau = rng.uniform(prior.tau_min, prior.tau_max);
  s.c = rng.uniform(prior.c_min, prior.c_max);
  return s;
}

double log_prior_density(const ParticleState& s, const PriorSpec& prior) {
  const int kappa = s.model.kappa;
  const int lambda = s.model.lambda;
  if (kappa < 0 || kappa > prior.kappa_max) return kNegInf;
  if (lambda < 0 || lambda > prior.lambda_max) return kNegInf;
  if (int(s.phi.size()) != kappa || int(s.z_sigma.size()) != kappa) return kNegInf;
  if (int(s.m.size()) != lambda || int(s.z_m.size()) != lambda) return kNegInf;

  auto in = [](double x, double lo, double hi) { return x >= lo && x <= hi; };
  if (!in(s.phi_b, prior.phi_min, prior.phi_max)) return kNegInf;
  for (double p : s.phi)
    if (!in(p, prior.phi_min, prior.phi_max)) return kNegInf;
  for (double mi : s.m)
    if (!in(mi, prior.m_min, prior.m_max)) return kNegInf;
  if (!in(s.tau, prior.tau_min, prior.tau_max)) return kNegInf;
  if (!in(s.c, prior.c_min, prior.c_max)) return kNegInf;
  if (!strictly_ascending_in(s.z_sigma, prior.z_max)) return kNegInf;
  if (!strictly_ascending_in(s.z_m, prior.z_max)) return kNegInf;

  double lp = -std::log(double(prior.kappa_max + 1)) - std::log(double(prior.lambda_max + 1));
  // ordered depths: kappa!/z_max^kappa per stack
  lp += std::lgamma(kappa + 1.0) - kappa * std::log(prior.z_max);
  lp += std::lgamma(lambda + 1.0) - lambda * std::log(prior.z_max);
  const double log_phi_range = std::log(prior.phi_max - prior.phi_min);
  lp -= (kappa + 1) * log_phi_range;  // phi_b and each layer phi
  lp -= lambda * std::log(prior.m_max - prior.m_min);
  lp -= std::log(prior.tau_max - prior.tau_min);
  lp -= std::log(prior.c_max - prior.c_min);
  return lp;
}

EarthProfile merge_profiles(const ParticleState& s) {
  EarthProfile p;
  p.tau = s.tau;
  p.c = s.c;
  p.interfaces.reserve(s.z_sigma.size() + s.z_m.size());
  std::merge(s.z_sigma.begin(), s.z_sigma.end(), s.z_m.begin(), s.z_m.end(),
             std::back_inserter(p.interfaces));
  p.interfaces.erase(std::unique(p.interfaces.begin(), p.interfaces.end()),
                     p.interfaces.end());

  const int n_seg = int(p.interfaces.size()) + 1;
  p.sigma_inf.resize(n_seg);
  p.m_seg.resize(n_seg);
  for (int seg = 0; seg < n_seg; ++seg) {
    const double top = seg == 0 ? 0.0 : p.interfaces[seg - 1];
    // region = count of interfaces at or above the segment top
    const auto cond_region = std::upper_bound(s.z_sigma.begin(), s.z_sigma.end(), top) -
                             s.z_sigma.begin();
    const auto charge_region = std::upper_bound(s.z_m.begin(), s.z_m.end(), top) -
                               s.z_m.begin();
    const double phi = cond_region < int(s.phi.size()) ? s.phi[cond_region] : s.phi_b;
    p.sigma_inf[seg] = std::pow(10.0, phi);
    p.m_seg[seg] = charge_region < int(s.m.size()) ? s.m[charge_region] : 0.0;
  }
  return p;
}

int state_dim(ModelIndex m) { return 3 + 2 * m.kappa + 2 * m.lambda; }

Eigen::VectorXd flatten(const ParticleState& s) {
  Eigen::VectorXd v(state_dim(s.model));
  int i = 0;
  v[i++] = s.phi_b;
  for (double x : s.phi) v[i++] = x;
  for (double x : s.z_sigma) v[i++] = x;
  for (double x : s.m) v[i++] = x;
  for (double x : s.z_m) v[i++] = x;
  v[i++] = s.tau;
  v[i++] = s.c;
  return v;
}

ParticleState unflatten(ModelIndex model, const Eigen::VectorXd& v) {
  ParticleState s;
  s.model = model;
  int i = 0;
  s.phi_b = v[i++];
  s.phi.resize(model.kappa);
  for (auto& x : s.phi) x = v[i++];
  s.z_sigma.resize(model.kappa);
  for (auto& x : s.z_sigma) x = v[i++];
  s.m.resize(model.lambda);
  for (auto& x : s.m) x = v[i++];
  s.z_m.resize(model.lambda);
  for (auto& x : s.z_m) x = v[i++];
  s.tau = v[i++];
  s.c = v[i++];
  return s;
}

int idx_cond_property(ModelIndex m, int region) {
  (void)m;
  return region;  // region 0 = phi_b at index 0, regions 1..kappa follow
}

int idx_cond_depth(ModelIndex m, int interface) {
  return m.kappa + interface;  // 1-based interface
}

int idx_charge_property(ModelIndex m, int region) {
  return 2 * m.kappa + region;  // 1-based region
}

int idx_charge_depth(ModelIndex m, int interface) {
  return 2 * m.kappa + m.lambda + interface;  // 1-based interface
}

}  // namespace aip
