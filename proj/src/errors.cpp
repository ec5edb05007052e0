#include "fracburgers/errors.hpp"

namespace fracburgers {

CflViolation::CflViolation(std::size_t node, std::size_t step, double number, double limit)
    : NumericalError("CFL violation at node " + std::to_string(node) + ", step " +
                     std::to_string(step) + ": number " + std::to_string(number) +
                     " exceeds " + std::to_string(limit)),
      node_(node),
      step_(step),
      number_(number),
      limit_(limit) {}

NoBlowupDetected::NoBlowupDetected(double horizon)
    : std::runtime_error("no blow-up detected below horizon " + std::to_string(horizon)),
      horizon_(horizon) {}

}  // namespace fracburgers
