#pragma once

#include <Eigen/Dense>
#include <vector>

#include "aip/rng.hpp"

namespace aip {

// Decoupled transdimensional layered model: one interface stack for
// conductivity, a second independent stack for chargeability.  A stack with
// k interfaces at ascending depths splits [0, inf) into k+1 regions; region
// i (1-based) lies between interface i-1 and interface i and carries the
// i-th property value, the region below the last interface carries the
// background value (background conductivity phi_b, background
// chargeability fixed at zero).

struct ModelIndex {
  int kappa = 0;   // conductive interface count
  int lambda = 0;  // chargeable interface count
  friend bool operator==(const ModelIndex&, const ModelIndex&) = default;
};

struct PriorSpec {
  int kappa_max = 9;
  int lambda_max = 9;
  double z_max = 400.0;  // m
  double phi_min = -4.0;  // log10 S/m
  double phi_max = 2.0;
  double m_min = 0.0;
  double m_max = 1.0;
  double tau_min = 0.0;  // s
  double tau_max = 1.0;
  double c_min = 0.0;
  double c_max = 1.0;

  int n_models() const { return (kappa_max + 1) * (lambda_max + 1); }
  int flat_index(ModelIndex m) const { return m.kappa * (lambda_max + 1) + m.lambda; }
  ModelIndex model_at(int flat) const {
    return {flat / (lambda_max + 1), flat % (lambda_max + 1)};
  }
  // uniform over the model grid
  double log_model_prior() const { return -std::log(double(n_models())); }
};

struct ParticleState {
  ModelIndex model;
  double phi_b = -1.0;            // log10 S/m
  std::vector<double> phi;        // per conductive region, size kappa
  std::vector<double> z_sigma;    // ascending conductive interface depths, size kappa
  std::vector<double> m;          // per chargeable region, size lambda
  std::vector<double> z_m;        // ascending chargeable interface depths, size lambda
  double tau = 0.5;               // s; inert when lambda == 0
  double c = 0.5;                 // inert when lambda == 0
};

// Merged physical profile: union of both interface stacks, one property
// pair per segment, deepest segment extends to infinity.
struct EarthProfile {
  std::vector<double> interfaces;  // ascending depths (m)
  std::vector<double> sigma_inf;   // per segment, S/m (size interfaces+1)
  std::vector<double> m_seg;       // per segment intrinsic chargeability
  double tau = 0.0;
  double c = 1.0;
};

ParticleState sample_prior(const PriorSpec& prior, RngStream& rng);

// Log joint prior density including the model prior p(kappa)p(lambda);
// -inf outside the support (bounds or unsorted depths).
double log_prior_density(const ParticleState& state, const PriorSpec& prior);

EarthProfile merge_profiles(const ParticleState& state);

// Flattened parameter vector [phi_b, phi.., z_sigma.., m.., z_m.., tau, c].
int state_dim(ModelIndex m);
Eigen::VectorXd flatten(const ParticleState& state);
ParticleState unflatten(ModelIndex model, const Eigen::VectorXd& v);

// Flat-vector index helpers for the layered layout.
int idx_cond_property(ModelIndex m, int region);    // region 1..kappa, or 0 -> phi_b
int idx_cond_depth(ModelIndex m, int interface);    // interface 1..kappa
int idx_charge_property(ModelIndex m, int region);  // region 1..lambda
int idx_charge_depth(ModelIndex m, int interface);  // interface 1..lambda

}  // namespace aip
