#include "wbflow/eos.hpp"

#include <cmath>
#include <stdexcept>

namespace wbflow {

namespace {

void require_admissible(double rho, double p_total) {
  if (!(rho >= kDensityFloor) || !std::isfinite(rho)) {
    throw std::domain_error("eos: density below floor or not finite");
  }
  if (!(p_total >= kPressureFloor) || !std::isfinite(p_total)) {
    throw std::domain_error("eos: pressure below floor or not finite");
  }
}

}  // namespace

EosModel EosModel::ideal(double gamma) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw std::domain_error("eos: gamma must be finite and > 1");
  }
  return {EosKind::ideal, gamma, 0.0};
}

EosModel EosModel::stiffened(double gamma, double p_inf) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw std::domain_error("eos: gamma must be finite and > 1");
  }
  if (!(p_inf >= 0.0) || !std::isfinite(p_inf)) {
    throw std::domain_error("eos: p_inf must be finite and >= 0");
  }
  return {EosKind::stiffened, gamma, p_inf};
}

double EosModel::pressure(double rho, double e) const {
  if (!(rho >= kDensityFloor) || !std::isfinite(rho) || !std::isfinite(e)) {
    throw std::domain_error("eos: inadmissible (rho, e)");
  }
  const double p = (gamma - 1.0) * rho * e - gamma * p_inf;
  if (!(p + p_inf >= kPressureFloor)) {
    throw std::domain_error("eos: pressure below floor");
  }
  return p;
}

double EosModel::internal_energy(double rho, double p) const {
  require_admissible(rho, p + p_inf);
  return (p + gamma * p_inf) / ((gamma - 1.0) * rho);
}

double EosModel::sound_speed2(double rho, double p) const {
  require_admissible(rho, p + p_inf);
  return gamma * (p + p_inf) / rho;
}

double EosModel::sound_speed(double rho, double p) const {
  return std::sqrt(sound_speed2(rho, p));
}

double EosModel::entropy_param(double rho, double p) const {
  require_admissible(rho, p + p_inf);
  return (p + p_inf) / std::pow(rho, gamma);
}

double EosModel::pressure_at_entropy(double rho, double k) const {
  if (!(rho >= kDensityFloor) || !(k > 0.0)) {
    throw std::domain_error("eos: inadmissible (rho, K)");
  }
  return k * std::pow(rho, gamma) - p_inf;
}

double EosModel::enthalpy(double rho, double k) const {
  if (!(rho >= kDensityFloor) || !(k > 0.0)) {
    throw std::domain_error("eos: inadmissible (rho, K)");
  }
  return gamma / (gamma - 1.0) * k * std::pow(rho, gamma - 1.0);
}

double EosModel::sound_speed2_at_entropy(double rho, double k) const {
  if (!(rho >= kDensityFloor) || !(k > 0.0)) {
    throw std::domain_error("eos: inadmissible (rho, K)");
  }
  return gamma * k * std::pow(rho, gamma - 1.0);
}

std::string EosModel::describe() const {
  if (kind == EosKind::ideal) {
    return "ideal(gamma=" + std::to_string(gamma) + ")";
  }
  return "stiffened(gamma=" + std::to_string(gamma) + ", p_inf=" + std::to_string(p_inf) + ")";
}

}  // namespace wbflow
