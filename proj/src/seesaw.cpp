// Copyright 2026 The teamq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "teamq/quantum.hpp"

namespace teamq {

namespace {

using Weights = std::array<double, 16>;

double weight(const Weights& w, int ua, int ub, int xa, int xb) {
  return w[PolicyF::index(ua, ub, xa, xb)];
}

double objective(const Weights& w, const QuantumStrategy& s) {
  const PolicyF q = occupation_measure(s);
  double total = 0.0;
  for (std::size_t k = 0; k < 16; ++k) total += w[k] * q.entries()[k];
  return total;
}

// Projector onto the strictly negative eigenspace of a Hermitian operator.
Matrix2c negative_projector(const Matrix2c& g) {
  auto eig = eigen_hermitian(g);
  Matrix2c p;
  for (std::size_t k = 0; k < 2; ++k) {
    if (eig.values[k] < 0.0) p += outer_column(eig.vectors, k);
  }
  return p;
}

void update_rho(const Weights& w, QuantumStrategy& s) {
  Matrix4c h;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      for (int ua = 0; ua < 2; ++ua) {
        for (int ub = 0; ub < 2; ++ub) {
          double c = weight(w, ua, ub, xa, xb);
          if (c == 0.0) continue;
          h += kron(s.proj_a[xa][ua], s.proj_b[xb][ub]) * Complex(c);
        }
      }
    }
  }
  s.rho = outer_column(eigen_hermitian(h).vectors, 0);
}

void update_a(const Weights& w, QuantumStrategy& s) {
  const Matrix2c id = Matrix2c::identity();
  for (int xa = 0; xa < 2; ++xa) {
    Matrix2c g;
    for (int xb = 0; xb < 2; ++xb) {
      for (int ub = 0; ub < 2; ++ub) {
        double c = weight(w, 0, ub, xa, xb) - weight(w, 1, ub, xa, xb);
        if (c == 0.0) continue;
        g += partial_trace_b(kron(id, s.proj_b[xb][ub]) * s.rho) * Complex(c);
      }
    }
    // Symmetrise away rounding so the eigensolver sees a Hermitian input.
    g = (g + g.adjoint()) * Complex(0.5);
    s.proj_a[xa][0] = negative_projector(g);
    s.proj_a[xa][1] = id - s.proj_a[xa][0];
  }
}

void update_b(const Weights& w, QuantumStrategy& s) {
  const Matrix2c id = Matrix2c::identity();
  for (int xb = 0; xb < 2; ++xb) {
    Matrix2c g;
    for (int xa = 0; xa < 2; ++xa) {
      for (int ua = 0; ua < 2; ++ua) {
        double c = weight(w, ua, 0, xa, xb) - weight(w, ua, 1, xa, xb);
        if (c == 0.0) continue;
        g += partial_trace_a(kron(s.proj_a[xa][ua], id) * s.rho) * Complex(c);
      }
    }
    g = (g + g.adjoint()) * Complex(0.5);
    s.proj_b[xb][0] = negative_projector(g);
    s.proj_b[xb][1] = id - s.proj_b[xb][0];
  }
}

struct RestartOutcome {
  QuantumStrategy strategy;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<double> trace;
  double max_step_increase = 0.0;
};

RestartOutcome run_restart(const Weights& w, const SeesawOptions& options,
                           int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_projector = [&] {
    double theta = std::acos(1.0 - 2.0 * unit(rng));
    double phi = 2.0 * std::numbers::pi * unit(rng);
    return bloch_projector(theta, phi);
  };

  RestartOutcome out;
  QuantumStrategy& s = out.strategy;
  const Matrix2c id = Matrix2c::identity();
  for (int xi = 0; xi < 2; ++xi) {
    s.proj_a[xi][0] = random_projector();
    s.proj_a[xi][1] = id - s.proj_a[xi][0];
  }
  for (int xi = 0; xi < 2; ++xi) {
    s.proj_b[xi][0] = random_projector();
    s.proj_b[xi][1] = id - s.proj_b[xi][0];
  }
  update_rho(w, s);
  double current = objective(w, s);
  out.trace.push_back(current);

  auto record = [&](double value) {
    out.max_step_increase =
        std::max(out.max_step_increase, value - out.trace.back());
    out.trace.push_back(value);
  };

  for (int iter = 0; iter < options.max_iters; ++iter) {
    const double before = current;
    update_a(w, s);
    record(objective(w, s));
    update_b(w, s);
    record(objective(w, s));
    update_rho(w, s);
    current = objective(w, s);
    record(current);
    out.iterations = iter + 1;
    if (before - current < options.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = current;
  return out;
}

}  // namespace

SeesawResult seesaw_optimize(const ProblemInstance& instance,
                             const SeesawOptions& options) {
  if (options.restarts < 1) {
    throw std::invalid_argument("see-saw needs at least one restart");
  }
  if (options.max_iters < 0) {
    throw std::invalid_argument("see-saw max_iters must be nonnegative");
  }
  const Weights w = cost_weights_f(instance);
  const auto restarts = static_cast<std::size_t>(options.restarts);
  std::vector<RestartOutcome> outcomes(restarts);

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(restarts));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < restarts; r = next++) {
      outcomes[r] = run_restart(w, options, static_cast<int>(r));
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::size_t best = 0;
  double max_increase = 0.0;
  for (std::size_t r = 0; r < restarts; ++r) {
    if (outcomes[r].value < outcomes[best].value) best = r;
    max_increase = std::max(max_increase, outcomes[r].max_step_increase);
  }
  SeesawResult result;
  result.strategy = outcomes[best].strategy;
  result.value = outcomes[best].value;
  result.converged = outcomes[best].converged;
  result.best_restart = static_cast<int>(best);
  result.iterations = outcomes[best].iterations;
  result.trace = std::move(outcomes[best].trace);
  result.max_step_increase = max_increase;
  return result;
}

SeesawResult seesaw_optimize(const ProblemInstance& instance, int restarts,
                             int max_iters, std::uint64_t seed) {
  SeesawOptions options;
  options.restarts = restarts;
  options.max_iters = max_iters;
  options.seed = seed;
  return seesaw_optimize(instance, options);
}

}  // namespace teamq
