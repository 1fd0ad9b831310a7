#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace invitelab {

/// Model constants of the invitation scheme. `lambda` is the arrival rate of
/// the unit-scale system; the simulated chain sees Lambda = lambda * r, while
/// alpha, beta, mu, gamma, epsilon stay fixed as r grows.
struct ModelParams {
    double lambda = 1.0;   ///< customer arrival rate per unit time (unit scale)
    double alpha = 0.0;    ///< probability an agent rejoins the queue after a service
    double beta = 1.0;     ///< invitation acceptance rate per unit time
    double mu = 1.0;       ///< service rate per unit time
    double gamma = 1.0;    ///< invitation jump size (integer for simulation)
    double epsilon = 1.0;  ///< feedback gain per unit time
    double r = 1.0;        ///< scale parameter

    double arrival_rate() const { return lambda * r; }

    // Operating point: pending-invitation and in-service levels at which the
    // agent inflow beta*X + mu*alpha*Z matches the customer inflow lambda*r.
    double x_center() const { return lambda * r * (1.0 - alpha) / beta; }
    double z_center() const { return lambda * r / mu; }
    double w_center() const { return 2.0 * lambda * r / mu; }

    /// Reflecting boundary of the centered, scaled pending-invitation coordinate.
    double x_min() const { return -lambda * (1.0 - alpha) / beta; }

    bool operator==(const ModelParams&) const = default;
};

/// Returns one message per violated bound; empty means the parameters are
/// usable. With `for_simulation`, gamma must additionally be an integer.
std::vector<std::string> validate_params(const ModelParams& p, bool for_simulation = false);

struct ParamsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse a JSON object with exactly the keys lambda, alpha, beta, mu, gamma,
/// epsilon, r (all numbers). Unknown or missing keys are rejected.
ModelParams params_from_json(const std::string& text);
ModelParams load_params_file(const std::filesystem::path& path);
std::string params_to_json(const ModelParams& p, int indent = -1);

}  // namespace invitelab
