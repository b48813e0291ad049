#include "dessca/environment.hpp"

#include <stdexcept>

#include "dessca/cartpole.hpp"
#include "dessca/mountain_car.hpp"
#include "dessca/pmsm.hpp"

namespace dessca {

std::string_view to_string(EnvId id) {
  switch (id) {
    case EnvId::mountain_car: return "mountain_car";
    case EnvId::cartpole: return "cartpole";
    case EnvId::pmsm: return "pmsm";
  }
  throw std::invalid_argument("unknown environment id");
}

EnvId env_from_string(std::string_view name) {
  if (name == "mountain_car") return EnvId::mountain_car;
  if (name == "cartpole") return EnvId::cartpole;
  if (name == "pmsm") return EnvId::pmsm;
  throw std::invalid_argument("unknown environment: " + std::string(name) +
                              " (expected mountain_car, cartpole or pmsm)");
}

std::unique_ptr<Environment> make_environment(EnvId id, double gamma) {
  switch (id) {
    case EnvId::mountain_car: return std::make_unique<MountainCar>();
    case EnvId::cartpole: return std::make_unique<CartPole>();
    case EnvId::pmsm: return std::make_unique<Pmsm>(gamma);
  }
  throw std::invalid_argument("unknown environment id");
}

}  // namespace dessca
