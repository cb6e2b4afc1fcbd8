#ifndef MORRAP_TESTS_FIXTURES_HPP
#define MORRAP_TESTS_FIXTURES_HPP

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "morrap/model.hpp"

namespace fixtures {

inline const std::string kConfigPath = std::string(MORRAP_DATA_DIR) + "/pharma_plant.json";

// Published plant data, transcribed independently of the bundled config.
inline const std::vector<double> kAlpha1e5{0.611360, 4.032464, 3.578225, 3.654303, 1.163718,
                                           2.966955, 2.045865, 2.649522, 1.982908, 3.516724};
inline const std::vector<double> kVolume{4, 5, 3, 2, 3, 4, 1, 1, 4, 4};
inline const std::vector<double> kWeight{9, 7, 5, 9, 9, 10, 6, 5, 8, 6};
inline const std::vector<double> kKmCrisp{0.622208, 0.654486, 0.686690, 0.718584, 0.749997,
                                          0.781410, 0.813304, 0.845507, 0.857470, 0.877782};

inline morrap::ProblemInstance plant(const std::vector<double>& r, int n_max) {
  morrap::ProblemInstance inst;
  for (std::size_t i = 0; i < 10; ++i) {
    morrap::SubsystemParams p;
    p.alpha = kAlpha1e5[i] * 1e-5;
    p.beta = 1.5;
    p.v = kVolume[i];
    p.w = kWeight[i];
    p.n_max = n_max;
    inst.subsystems.push_back(p);
  }
  inst.volume_limit = 289;
  inst.weight_limit = 483;
  inst.mission_time = 1000;
  inst.reliabilities = r;
  return inst;
}

struct Naive {
  double reliability = 1.0;
  double cost = 0.0;
  double volume = 0.0;
  double weight = 0.0;
  bool feasible = false;
};

// Straight transcription of the system reliability, cost and resource formulas.
inline Naive naive(const morrap::ProblemInstance& inst, const std::vector<int>& n) {
  Naive out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto& p = inst.subsystems[i];
    const double r = inst.reliabilities[i];
    const double ni = n[i];
    out.reliability *= 1.0 - std::pow(1.0 - r, ni);
    out.cost += p.alpha * std::pow(-inst.mission_time / std::log(r), p.beta) * (ni + std::exp(ni / 4.0));
    out.volume += p.v * ni * ni;
    out.weight += p.w * ni * std::exp(ni / 4.0);
  }
  out.feasible = out.volume <= inst.volume_limit && out.weight <= inst.weight_limit;
  return out;
}

inline morrap::ProblemInstance random_instance(std::mt19937_64& rng, std::size_t m, int n_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  morrap::ProblemInstance inst;
  double vol = 0, wt = 0;
  for (std::size_t i = 0; i < m; ++i) {
    morrap::SubsystemParams p;
    p.alpha = (0.5 + 4.0 * u(rng)) * 1e-5;
    p.beta = 1.0 + u(rng);
    p.v = 1.0 + std::floor(5 * u(rng));
    p.w = 4.0 + std::floor(7 * u(rng));
    p.n_max = n_max;
    vol += p.v * n_max * n_max;
    wt += p.w * n_max * std::exp(n_max / 4.0);
    inst.subsystems.push_back(p);
    inst.reliabilities.push_back(0.5 + 0.49 * u(rng));
  }
  inst.volume_limit = vol * (0.3 + 0.6 * u(rng));
  inst.weight_limit = wt * (0.3 + 0.6 * u(rng));
  inst.mission_time = 1000;
  return inst;
}

}  // namespace fixtures

#endif
