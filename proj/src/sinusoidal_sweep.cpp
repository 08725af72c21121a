// Copyright 2026 The Mod2VQLS Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mod2vqls/optimizers.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>
#include <utility>

#include "mod2vqls/errors.hpp"

namespace mod2vqls::solver {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this amplitude a coordinate slice is treated as flat.
constexpr double kFlatAmplitude = 1e-14;

double wrapped_distance(double from, double to) {
    return std::abs(std::remainder(to - from, 2.0 * kPi));
}

class Sweeper {
  public:
    Sweeper(const Objective &objective, const OptimizerOptions &options)
        : objective_(objective), options_(options) {}

    MinimizeResult run(std::vector<double> x) {
        double current = 0.0;
        if (!evaluate(x, current)) {
            return finish();
        }
        if (x.empty()) {
            reason_ = StopReason::NoParameters;
            return finish();
        }
        for (;;) {
            double largest_move = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double old = x[j];
                double m0 = 0.0;
                double mp = 0.0;
                double mm = 0.0;
                if (!probe(x, j, 0.0, m0) || !probe(x, j, kPi / 2, mp) ||
                    !probe(x, j, -kPi / 2, mm)) {
                    return finish();
                }
                // f(t) = a + B cos t + C sin t with B = m0 - a, C = (mp - mm) / 2.
                const double a = 0.5 * (mp + mm);
                const double c_cos = m0 - a;
                const double c_sin = 0.5 * (mp - mm);
                if (std::hypot(c_cos, c_sin) > kFlatAmplitude) {
                    x[j] = std::atan2(-c_sin, -c_cos);
                } else {
                    x[j] = old;
                }
                largest_move = std::max(largest_move, wrapped_distance(old, x[j]));
            }
            if (!evaluate(x, current)) {
                return finish();
            }
            if (largest_move <= options_.final_radius) {
                reason_ = StopReason::StepFloor;
                return finish();
            }
        }
    }

  private:
    bool probe(std::vector<double> &x, std::size_t j, double angle, double &value) {
        const double saved = x[j];
        x[j] = angle;
        const bool more = evaluate(x, value);
        x[j] = saved;
        return more;
    }

    bool evaluate(const std::vector<double> &x, double &value) {
        if (evaluations_ >= options_.max_evaluations) {
            reason_ = StopReason::MaxIterations;
            return false;
        }
        value = objective_(x);
        ++evaluations_;
        if (!std::isfinite(value)) {
            throw InternalError("objective returned a non-finite value");
        }
        if (value < best_value_) {
            best_value_ = value;
            best_x_ = x;
        }
        if (value <= options_.target_value) {
            reason_ = StopReason::CostTolerance;
            return false;
        }
        return true;
    }

    MinimizeResult finish() const {
        return {best_x_, best_value_, evaluations_, reason_};
    }

    const Objective &objective_;
    OptimizerOptions options_;
    std::size_t evaluations_ = 0;
    double best_value_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
    StopReason reason_ = StopReason::MaxIterations;
};

} // namespace

MinimizeResult minimize_sinusoidal_sweep(const Objective &objective, std::vector<double> x0,
                                         const OptimizerOptions &options) {
    if (!(options.final_radius > 0.0)) {
        throw InvalidInput("sweep: final_radius must be positive");
    }
    if (options.max_evaluations == 0) {
        throw InvalidInput("sweep: max_evaluations must be at least 1");
    }
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw InvalidInput("sweep: start point must be finite");
        }
    }
    Sweeper sweeper(objective, options);
    return sweeper.run(std::move(x0));
}

} // namespace mod2vqls::solver
