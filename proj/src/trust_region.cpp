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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mod2vqls/errors.hpp"

namespace mod2vqls::solver {

std::string to_string(StopReason reason) {
    switch (reason) {
    case StopReason::CostTolerance:
        return "cost_tolerance";
    case StopReason::StepFloor:
        return "step_floor";
    case StopReason::MaxIterations:
        return "max_iterations";
    case StopReason::NoParameters:
        return "no_parameters";
    }
    return "unknown";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Simplex acceptability: every edge from the best vertex at most
// kFarFactor * rho long, every vertex at least kFlatFactor * rho from the
// opposite face.
constexpr double kFarFactor = 1.1;
constexpr double kFlatFactor = 0.25;
// Geometry-repair points are placed kRepairFactor * rho from the best vertex.
constexpr double kRepairFactor = 0.5;
// Steps achieving this fraction of the predicted decrease keep the radius.
constexpr double kSufficientDecrease = 0.1;

double next_radius(double rho, double floor) {
    const double ratio = rho / floor;
    if (ratio <= 16.0) {
        return floor;
    }
    if (ratio <= 250.0) {
        return std::sqrt(rho * floor);
    }
    return 0.1 * rho;
}

class Minimizer {
  public:
    Minimizer(const Objective &objective, const OptimizerOptions &options)
        : objective_(objective), options_(options) {}

    MinimizeResult run(const std::vector<double> &start) {
        const auto n = static_cast<Eigen::Index>(start.size());
        VectorXd x0 = Eigen::Map<const VectorXd>(start.data(), n);
        points_.assign(static_cast<std::size_t>(n) + 1, x0);
        values_.assign(static_cast<std::size_t>(n) + 1, 0.0);

        if (!evaluate(x0, values_[0])) {
            return finish();
        }
        if (n == 0) {
            reason_ = StopReason::NoParameters;
            return finish();
        }

        double rho = options_.initial_radius;
        for (Eigen::Index k = 0; k < n; ++k) {
            VectorXd p = x0;
            p[k] += rho;
            points_[static_cast<std::size_t>(k) + 1] = p;
            if (!evaluate(p, values_[static_cast<std::size_t>(k) + 1])) {
                return finish();
            }
        }

        bool recovering = false;
        bool repair_geometry = false;
        for (;;) {
            Model model = build_model(rho);
            if (!model.valid) {
                // Degenerate simplex: rebuild it around the best point.
                if (!rebuild_simplex(rho)) {
                    return finish();
                }
                continue;
            }

            if (recovering) {
                recovering = false;
                repair_geometry = true;
                if (model.acceptable) {
                    // The simplex is sound, so the failure reflects a radius
                    // too large for the linear model.
                    if (rho <= options_.final_radius) {
                        reason_ = StopReason::StepFloor;
                        return finish();
                    }
                    rho = next_radius(rho, options_.final_radius);
                    continue;
                }
            }
            if (repair_geometry) {
                if (!model.acceptable) {
                    if (!geometry_step(model, rho)) {
                        return finish();
                    }
                    continue;
                }
                repair_geometry = false;
            }

            const double gnorm = model.gradient.norm();
            if (!(gnorm > 0.0) || !std::isfinite(gnorm)) {
                recovering = true;
                continue;
            }

            const VectorXd step = -(rho / gnorm) * model.gradient;
            const VectorXd trial = points_[model.base] + step;
            double trial_value = 0.0;
            if (!evaluate(trial, trial_value)) {
                return finish();
            }
            const double predicted = rho * gnorm;
            const double actual = values_[model.base] - trial_value;

            if (auto drop = choose_vertex_to_drop(model, step, trial, actual, rho); drop) {
                points_[*drop] = trial;
                values_[*drop] = trial_value;
            }
            if (!(actual > 0.0 && actual >= kSufficientDecrease * predicted)) {
                recovering = true;
            }
        }
    }

  private:
    struct Model {
        bool valid = false;
        bool acceptable = false;
        std::size_t base = 0;
        std::vector<std::size_t> others; ///< vertex index of each column of d
        MatrixXd d;                      ///< columns: vertex - base
        MatrixXd d_inv;                  ///< row k is dual to column k of d
        VectorXd gradient;
        VectorXd edge_length;   ///< |d_k|
        VectorXd face_distance; ///< distance of vertex k from the opposite face
    };

    bool evaluate(const VectorXd &x, double &value) {
        if (evaluations_ >= options_.max_evaluations) {
            reason_ = StopReason::MaxIterations;
            return false;
        }
        value = objective_(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
        ++evaluations_;
        if (!std::isfinite(value)) {
            throw InternalError("objective returned a non-finite value");
        }
        if (!has_best_ || value < best_value_) {
            has_best_ = true;
            best_value_ = value;
            best_x_ = x;
        }
        if (value <= options_.target_value) {
            reason_ = StopReason::CostTolerance;
            return false;
        }
        return true;
    }

    Model build_model(double rho) const {
        Model m;
        const auto n = static_cast<Eigen::Index>(points_.size() - 1);
        m.base = static_cast<std::size_t>(
            std::distance(values_.begin(), std::min_element(values_.begin(), values_.end())));
        m.d.resize(n, n);
        VectorXd df(n);
        Eigen::Index col = 0;
        for (std::size_t k = 0; k < points_.size(); ++k) {
            if (k == m.base) {
                continue;
            }
            m.others.push_back(k);
            m.d.col(col) = points_[k] - points_[m.base];
            df[col] = values_[k] - values_[m.base];
            ++col;
        }
        Eigen::FullPivLU<MatrixXd> lu(m.d);
        if (!lu.isInvertible()) {
            return m;
        }
        m.d_inv = lu.inverse();
        // Interpolation: g . d_k = df_k for every column, i.e. d^T g = df.
        m.gradient = m.d_inv.transpose() * df;
        m.edge_length = m.d.colwise().norm().transpose();
        m.face_distance = m.d_inv.rowwise().norm().cwiseInverse();
        m.valid = m.gradient.allFinite();
        m.acceptable = m.edge_length.maxCoeff() <= kFarFactor * rho &&
                       m.face_distance.minCoeff() >= kFlatFactor * rho;
        return m;
    }

    // Replace the worst-placed vertex by a point normal to its opposite face.
    bool geometry_step(const Model &m, double rho) {
        Eigen::Index j = 0;
        if (m.edge_length.maxCoeff(&j) <= kFarFactor * rho) {
            m.face_distance.minCoeff(&j);
        }
        VectorXd dx = (kRepairFactor * rho * m.face_distance[j]) * m.d_inv.row(j).transpose();
        if (m.gradient.dot(dx) > 0.0) {
            dx = -dx;
        }
        const VectorXd p = points_[m.base] + dx;
        const std::size_t vertex = m.others[static_cast<std::size_t>(j)];
        double value = 0.0;
        if (!evaluate(p, value)) {
            return false;
        }
        points_[vertex] = p;
        values_[vertex] = value;
        return true;
    }

    // A trial point enters the simplex in place of the vertex whose removal
    // best preserves its shape. Points that did not improve on the base must
    // carry enough weight (> 1) to be worth keeping.
    std::optional<std::size_t> choose_vertex_to_drop(const Model &m, const VectorXd &step,
                                                     const VectorXd &trial, double actual,
                                                     double rho) const {
        const VectorXd weight = (m.d_inv * step).cwiseAbs();
        std::optional<Eigen::Index> drop;
        double threshold = actual > 0.0 ? 0.0 : 1.0;
        for (Eigen::Index k = 0; k < weight.size(); ++k) {
            if (weight[k] > threshold) {
                drop = k;
                threshold = weight[k];
            }
        }
        double longest = kFarFactor * rho;
        for (Eigen::Index k = 0; k < weight.size(); ++k) {
            const double sigbar = weight[k] * m.face_distance[k];
            if (sigbar >= kFlatFactor * rho || sigbar >= m.face_distance[k]) {
                const auto vertex = m.others[static_cast<std::size_t>(k)];
                const double dist =
                    actual > 0.0 ? (trial - points_[vertex]).norm() : m.edge_length[k];
                if (dist > longest) {
                    longest = dist;
                    drop = k;
                }
            }
        }
        if (!drop) {
            return std::nullopt;
        }
        return m.others[static_cast<std::size_t>(*drop)];
    }

    bool rebuild_simplex(double rho) {
        const VectorXd base = best_x_;
        points_[0] = base;
        values_[0] = best_value_;
        for (Eigen::Index k = 0; k < base.size(); ++k) {
            VectorXd p = base;
            p[k] += rho;
            points_[static_cast<std::size_t>(k) + 1] = p;
            if (!evaluate(p, values_[static_cast<std::size_t>(k) + 1])) {
                return false;
            }
        }
        return true;
    }

    MinimizeResult finish() const {
        MinimizeResult r;
        r.x.assign(best_x_.data(), best_x_.data() + best_x_.size());
        r.value = best_value_;
        r.evaluations = evaluations_;
        r.reason = reason_;
        return r;
    }

    const Objective &objective_;
    OptimizerOptions options_;
    std::vector<VectorXd> points_;
    std::vector<double> values_;
    std::size_t evaluations_ = 0;
    bool has_best_ = false;
    double best_value_ = std::numeric_limits<double>::infinity();
    VectorXd best_x_;
    StopReason reason_ = StopReason::MaxIterations;
};

} // namespace

MinimizeResult minimize_linear_trust_region(const Objective &objective, std::vector<double> x0,
                                            const OptimizerOptions &options) {
    if (!(options.final_radius > 0.0 && options.final_radius < options.initial_radius)) {
        throw InvalidInput("trust region: need 0 < final_radius < initial_radius");
    }
    if (options.max_evaluations == 0) {
        throw InvalidInput("trust region: max_evaluations must be at least 1");
    }
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw InvalidInput("trust region: start point must be finite");
        }
    }
    Minimizer minimizer(objective, options);
    return minimizer.run(x0);
}

} // namespace mod2vqls::solver
