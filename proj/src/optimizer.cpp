/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/optimizer.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <memory>

namespace dynadapt {

std::vector<double> finite_difference_gradient(const Objective &f,
                                               std::span<const double> x,
                                               double step) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    probe[k] = x[k] + step;
    const double up = f(probe);
    probe[k] = x[k] - step;
    const double down = f(probe);
    probe[k] = x[k];
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

namespace {

struct Problem {
  const Objective &f;
  const Gradient &g;
  double step;
  std::size_t evaluations = 0;

  double value(std::span<const double> x) {
    ++evaluations;
    return f(x);
  }
  std::vector<double> gradient(std::span<const double> x) {
    evaluations += 2 * x.size();
    return g ? g(x, step) : finite_difference_gradient(f, x, step);
  }
};

std::span<const double> view(const gsl_vector *v) {
  return {v->data, v->size};
}

double gsl_f(const gsl_vector *v, void *params) {
  return static_cast<Problem *>(params)->value(view(v));
}

void gsl_df(const gsl_vector *v, void *params, gsl_vector *g) {
  const auto grad = static_cast<Problem *>(params)->gradient(view(v));
  for (std::size_t k = 0; k < grad.size(); ++k)
    gsl_vector_set(g, k, grad[k]);
}

void gsl_fdf(const gsl_vector *v, void *params, double *f, gsl_vector *g) {
  *f = gsl_f(v, params);
  gsl_df(v, params, g);
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fdfminimizer *m) const {
    gsl_multimin_fdfminimizer_free(m);
  }
};
struct VectorDeleter {
  void operator()(gsl_vector *v) const { gsl_vector_free(v); }
};

double norm2(std::span<const double> g) {
  double s = 0.0;
  for (double x : g)
    s += x * x;
  return std::sqrt(s);
}

MinimizeResult run_bfgs(const Objective &f, const Gradient &g,
                        const std::vector<double> &x0,
                        const OptimizerSettings &s) {
  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;

  Problem problem{f, g, s.fd_step};
  MinimizeResult out;
  out.x = x0;
  out.value = problem.value(x0);
  const std::size_t dim = x0.size();
  if (dim == 0 || norm2(problem.gradient(x0)) < s.gradient_tolerance) {
    out.converged = true;
    out.evaluations = problem.evaluations;
    return out;
  }

  std::unique_ptr<gsl_vector, VectorDeleter> start(gsl_vector_alloc(dim));
  for (std::size_t k = 0; k < dim; ++k)
    gsl_vector_set(start.get(), k, x0[k]);
  gsl_multimin_function_fdf fn{&gsl_f, &gsl_df, &gsl_fdf, dim, &problem};
  std::unique_ptr<gsl_multimin_fdfminimizer, MinimizerDeleter> m(
      gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2,
                                      dim));
  gsl_multimin_fdfminimizer_set(m.get(), &fn, start.get(), s.initial_step,
                                s.line_tolerance);

  bool converged = false;
  for (std::size_t iter = 0; iter < s.max_iterations; ++iter) {
    if (gsl_multimin_fdfminimizer_iterate(m.get()) != GSL_SUCCESS)
      break;
    if (gsl_multimin_test_gradient(m->gradient, s.gradient_tolerance) ==
        GSL_SUCCESS) {
      converged = true;
      break;
    }
  }
  if (!converged)
    // A stalled line search at round-off level still counts as converged.
    converged = norm2(view(m->gradient)) < 100.0 * s.gradient_tolerance;

  if (std::isfinite(m->f) && m->f < out.value) {
    out.value = m->f;
    out.x.assign(m->x->data, m->x->data + dim);
  }
  out.converged = converged;
  out.evaluations = problem.evaluations;
  return out;
}

} // namespace

MinimizeResult minimize(const Objective &f, std::vector<double> x0,
                        const OptimizerSettings &settings, Rng &rng,
                        const Gradient &gradient) {
  MinimizeResult best = run_bfgs(f, gradient, x0, settings);
  if (x0.empty())
    return best;
  std::normal_distribution<double> noise(0.0, settings.restart_sigma);
  for (std::size_t r = 0; r < settings.restarts; ++r) {
    std::vector<double> x = x0;
    for (auto &v : x)
      v += noise(rng);
    MinimizeResult trial = run_bfgs(f, gradient, x, settings);
    best.evaluations += trial.evaluations;
    if (trial.value < best.value - 1e-12) {
      trial.evaluations = best.evaluations;
      best = std::move(trial);
    }
  }
  return best;
}

} // namespace dynadapt
