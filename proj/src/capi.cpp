// Copyright 2026 The maxspec Authors
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

#include "maxspec/maxspec.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "appendix.hpp"
#include "enclosure.hpp"
#include "export.hpp"
#include "resolvent.hpp"
#include "rootfind.hpp"
#include "spectra.hpp"
#include "waveguide.hpp"

using namespace maxspec;

struct maxspec_roots {
  std::vector<Root> roots;
};

struct maxspec_model {
  WaveguideModel model;
};

struct maxspec_sweep {
  Sweep sweep;
};

namespace {

thread_local std::string last_error;

maxspec_status fail(maxspec_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs fn, mapping exceptions to status codes.
template <class Fn>
maxspec_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return MAXSPEC_OK;
  } catch (const InvalidArgument& e) {
    return fail(MAXSPEC_INVALID_ARGUMENT, e.what());
  } catch (const PoleProximity& e) {
    return fail(MAXSPEC_POLE_PROXIMITY, e.what());
  } catch (const BoundaryHit& e) {
    return fail(MAXSPEC_BOUNDARY_HIT, e.what());
  } catch (const NonConvergence& e) {
    return fail(MAXSPEC_NON_CONVERGENCE, e.what());
  } catch (const EmptyRange& e) {
    return fail(MAXSPEC_EMPTY_RANGE, e.what());
  } catch (const QuadratureFailure& e) {
    return fail(MAXSPEC_QUADRATURE_FAILURE, e.what());
  } catch (const NoQualifyingRoots& e) {
    return fail(MAXSPEC_NO_QUALIFYING_ROOTS, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MAXSPEC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(MAXSPEC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(MAXSPEC_INTERNAL_ERROR, "unknown error");
  }
}

void check_out(const void* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(nlohmann::json j) {
  round_numbers(j);
  return j.dump(2) + "\n";
}

Complex to_cpp(maxspec_complex z) { return {z.re, z.im}; }
maxspec_complex to_c(Complex z) { return {z.real(), z.imag()}; }

MaterialBounds to_cpp(const maxspec_bounds* b) {
  check_out(b, "bounds");
  MaterialBounds m;
  m.eps_min = b->eps_min;
  m.eps_max = b->eps_max;
  m.mu_min = b->mu_min;
  m.mu_max = b->mu_max;
  m.sigma_min = b->sigma_min;
  m.sigma_max = b->sigma_max;
  m.lambda_min = b->lambda_min;
  m.lambda_e_min = b->lambda_e_min;
  m.validate();
  return m;
}

SearchRect to_cpp(maxspec_rect r) { return SearchRect(r.re_lo, r.re_hi, r.im_lo, r.im_hi); }

RootFindOptions to_cpp(const maxspec_root_options* o) {
  RootFindOptions r;
  if (o == nullptr) return r;
  r.residual_tol = o->residual_tol;
  r.cluster_size = o->cluster_size;
  r.boundary_clearance = o->boundary_clearance;
  r.max_newton_iter = o->max_newton_iter;
  r.jitter_retries = o->jitter_retries;
  r.jitter = o->jitter;
  return r;
}

std::optional<double> c_max_of(double c_max) {
  if (c_max > 0.0) return c_max;
  return std::nullopt;
}

SpectrumSet essential_of(const WaveguideModel& m) {
  return m.variant == Variant::conductive ? essential_spectrum_conductive(m.L2, m.L3)
                                          : essential_spectrum_selfadjoint(m.L2, m.L3);
}

}  // namespace

extern "C" {

const char* maxspec_version(void) { return MAXSPEC_VERSION_STRING; }

const char* maxspec_status_name(maxspec_status status) {
  switch (status) {
    case MAXSPEC_OK: return "OK";
    case MAXSPEC_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case MAXSPEC_POLE_PROXIMITY: return "POLE_PROXIMITY";
    case MAXSPEC_BOUNDARY_HIT: return "BOUNDARY_HIT";
    case MAXSPEC_NON_CONVERGENCE: return "NON_CONVERGENCE";
    case MAXSPEC_EMPTY_RANGE: return "EMPTY_RANGE";
    case MAXSPEC_QUADRATURE_FAILURE: return "QUADRATURE_FAILURE";
    case MAXSPEC_NO_QUALIFYING_ROOTS: return "NO_QUALIFYING_ROOTS";
    case MAXSPEC_INTERNAL_ERROR: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

const char* maxspec_last_error(void) { return last_error.c_str(); }

void maxspec_string_free(char* s) { delete[] s; }

maxspec_bounds maxspec_bounds_default(void) {
  return maxspec_bounds{1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
}

maxspec_status maxspec_enclosure_contains(maxspec_complex w, const maxspec_bounds* b,
                                          double boundary_tol, int* inside) {
  return guarded([&] {
    check_out(inside, "inside");
    *inside = enclosure_contains(to_cpp(w), to_cpp(b), boundary_tol) ? 1 : 0;
  });
}

maxspec_status maxspec_spectral_free_gap(const maxspec_bounds* b, double* gap) {
  return guarded([&] {
    check_out(gap, "gap");
    *gap = spectral_free_gap(to_cpp(b));
  });
}

maxspec_status maxspec_threshold_case_of(const maxspec_bounds* b, maxspec_threshold_case* c) {
  return guarded([&] {
    check_out(c, "case");
    *c = static_cast<maxspec_threshold_case>(threshold_case(to_cpp(b)));
  });
}

maxspec_status maxspec_enclosure_boundary_csv(const maxspec_bounds* b, double im_lo, double im_hi,
                                              int n, char** csv) {
  return guarded([&] {
    check_out(csv, "csv");
    *csv = copy_string(enclosure_csv(enclosure_boundary_samples(to_cpp(b), im_lo, im_hi, n)));
  });
}

maxspec_status maxspec_resolvent_bound(maxspec_complex w, const maxspec_bounds* b, int* present,
                                       double* bound) {
  return guarded([&] {
    check_out(present, "present");
    check_out(bound, "bound");
    const auto r = resolvent_bound(to_cpp(w), to_cpp(b));
    *present = r ? 1 : 0;
    *bound = r ? *r : 0.0;
  });
}

maxspec_status maxspec_resolvent_grid_csv(const maxspec_bounds* b, maxspec_rect window, int nx,
                                          int ny, char** csv) {
  return guarded([&] {
    check_out(csv, "csv");
    *csv = copy_string(resolvent_csv(resolvent_levelgrid(to_cpp(b), to_cpp(window), nx, ny)));
  });
}

maxspec_status maxspec_essential_spectrum_json(maxspec_variant variant, double L2, double L3,
                                               char** json) {
  return guarded([&] {
    check_out(json, "json");
    require(variant == MAXSPEC_CONDUCTIVE || variant == MAXSPEC_PERMITTIVITY, "unknown variant");
    WaveguideModel m;
    m.L2 = L2;
    m.L3 = L3;
    m.variant = variant == MAXSPEC_CONDUCTIVE ? Variant::conductive : Variant::permittivity;
    // The essential spectrum does not depend on delta.
    if (m.variant == Variant::permittivity) m.delta = 1.0;
    m.validate();
    *json = copy_string(dump(essential_of(m).to_json()));
  });
}

maxspec_status maxspec_pollution_set_json(double eps_inf, double mu_inf, double lambda_e_min,
                                          double sigma_max, double eps_min, char** json) {
  return guarded([&] {
    check_out(json, "json");
    nlohmann::json j;
    j["pollution"] = pollution_enclosure(eps_inf, mu_inf, lambda_e_min).to_json();
    j["imag_segment"] = imaginary_segment(sigma_max, eps_min).to_json();
    *json = copy_string(dump(j));
  });
}

maxspec_root_options maxspec_root_options_default(void) {
  const RootFindOptions r;
  return maxspec_root_options{r.residual_tol,    r.cluster_size,   r.boundary_clearance,
                              r.max_newton_iter, r.jitter_retries, r.jitter};
}

maxspec_status maxspec_polynomial_roots(const maxspec_complex* coeffs, size_t n_coeffs,
                                        maxspec_rect rect, const maxspec_root_options* options,
                                        maxspec_roots** out) {
  return guarded([&] {
    check_out(out, "out");
    check_out(coeffs, "coeffs");
    require(n_coeffs >= 1, "need at least one coefficient");
    std::vector<Complex> a;
    for (size_t k = 0; k < n_coeffs; ++k) {
      a.push_back(to_cpp(coeffs[k]));
      require_finite(a.back(), "coefficient");
    }
    AnalyticFn p = [a](Complex z) {
      Complex v = 0.0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * z + *it;
      return v;
    };
    auto holder = std::make_unique<maxspec_roots>();
    holder->roots = find_roots(p, to_cpp(rect), PoleList{}, to_cpp(options));
    *out = holder.release();
  });
}

maxspec_status maxspec_product_roots(const maxspec_complex* zeros, const int* orders, size_t n,
                                     maxspec_rect rect, const maxspec_root_options* options,
                                     maxspec_roots** out) {
  return guarded([&] {
    check_out(out, "out");
    require(n == 0 || (zeros != nullptr && orders != nullptr), "zeros and orders must not be NULL");
    std::vector<std::pair<Complex, int>> factors;
    for (size_t k = 0; k < n; ++k) {
      require_finite(to_cpp(zeros[k]), "zero");
      require(orders[k] >= 1, "orders must be positive");
      factors.emplace_back(to_cpp(zeros[k]), orders[k]);
    }
    AnalyticFn p = [factors](Complex z) {
      Complex v = 1.0;
      for (const auto& [a, m] : factors) {
        for (int j = 0; j < m; ++j) v *= z - a;
      }
      return v;
    };
    auto holder = std::make_unique<maxspec_roots>();
    holder->roots = find_roots(p, to_cpp(rect), PoleList{}, to_cpp(options));
    *out = holder.release();
  });
}

size_t maxspec_roots_count(const maxspec_roots* roots) {
  return roots == nullptr ? 0 : roots->roots.size();
}

maxspec_status maxspec_roots_get(const maxspec_roots* roots, size_t i, maxspec_root* out) {
  return guarded([&] {
    check_out(roots, "roots");
    check_out(out, "out");
    require(i < roots->roots.size(), "root index out of range");
    const Root& r = roots->roots[i];
    out->location = to_c(r.location);
    out->multiplicity = r.multiplicity;
    out->residual = r.residual;
    out->mode_constant = r.mode_constant;
    out->n2 = r.modes.empty() ? -1 : r.modes.front().first;
    out->n3 = r.modes.empty() ? -1 : r.modes.front().second;
    out->sign = r.sign_branch ? *r.sign_branch : 0;
  });
}

maxspec_status maxspec_roots_csv(const maxspec_roots* roots, char** csv) {
  return guarded([&] {
    check_out(roots, "roots");
    check_out(csv, "csv");
    *csv = copy_string(roots_csv(roots->roots));
  });
}

maxspec_status maxspec_branch_asymptote(const maxspec_roots* roots, double re_min, double re_max,
                                        double* deviation) {
  return guarded([&] {
    check_out(roots, "roots");
    check_out(deviation, "deviation");
    *deviation = re_max > 0.0 ? branch_asymptote_check(roots->roots, re_min, re_max)
                              : branch_asymptote_check(roots->roots, re_min);
  });
}

void maxspec_roots_destroy(maxspec_roots* roots) { delete roots; }

maxspec_status maxspec_model_create(maxspec_variant variant, double L2, double L3, double delta,
                                    maxspec_model** out) {
  return guarded([&] {
    check_out(out, "out");
    require(variant == MAXSPEC_CONDUCTIVE || variant == MAXSPEC_PERMITTIVITY, "unknown variant");
    auto holder = std::make_unique<maxspec_model>();
    WaveguideModel& m = holder->model;
    m.L2 = L2;
    m.L3 = L3;
    m.variant = variant == MAXSPEC_CONDUCTIVE ? Variant::conductive : Variant::permittivity;
    m.delta = variant == MAXSPEC_PERMITTIVITY ? delta : 0.0;
    m.validate();
    *out = holder.release();
  });
}

maxspec_status maxspec_model_set_truncation(maxspec_model* model, double X) {
  return guarded([&] {
    check_out(model, "model");
    WaveguideModel m = model->model;
    if (X == 0.0) {
      m.X.reset();
    } else {
      m.X = X;
    }
    m.validate();
    model->model = m;
  });
}

void maxspec_model_destroy(maxspec_model* model) { delete model; }

maxspec_status maxspec_default_c_max(const maxspec_model* model, maxspec_rect rect,
                                     double* c_max) {
  return guarded([&] {
    check_out(model, "model");
    check_out(c_max, "c_max");
    *c_max = default_c_max(model->model, to_cpp(rect));
  });
}

maxspec_status maxspec_eigenvalues(const maxspec_model* model, maxspec_rect rect, double c_max,
                                   const maxspec_root_options* options, maxspec_roots** out) {
  return guarded([&] {
    check_out(model, "model");
    check_out(out, "out");
    auto holder = std::make_unique<maxspec_roots>();
    const WaveguideModel& m = model->model;
    holder->roots = m.X ? eigenvalues_truncated(m, to_cpp(rect), c_max_of(c_max), to_cpp(options))
                        : eigenvalues_true(m, to_cpp(rect), c_max_of(c_max), to_cpp(options));
    *out = holder.release();
  });
}

maxspec_status maxspec_sweep_run(const maxspec_model* model, const double* X, size_t n_X,
                                 maxspec_rect rect, double c_max, double match_radius,
                                 const maxspec_root_options* options, maxspec_sweep** out) {
  return guarded([&] {
    check_out(model, "model");
    check_out(X, "X");
    check_out(out, "out");
    SweepOptions so;
    so.root = to_cpp(options);
    if (match_radius > 0.0) so.match_radius = match_radius;
    auto holder = std::make_unique<maxspec_sweep>();
    holder->sweep = truncation_sweep(model->model, std::vector<double>(X, X + n_X), to_cpp(rect),
                                     c_max_of(c_max), so);
    *out = holder.release();
  });
}

size_t maxspec_sweep_trajectory_count(const maxspec_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->sweep.trajectories.size();
}

maxspec_status maxspec_sweep_trajectory(const maxspec_sweep* sweep, size_t i,
                                        double* mode_constant, double* X,
                                        maxspec_complex* location, size_t capacity,
                                        size_t* n_points) {
  return guarded([&] {
    check_out(sweep, "sweep");
    require(i < sweep->sweep.trajectories.size(), "trajectory index out of range");
    const Trajectory& t = sweep->sweep.trajectories[i];
    if (mode_constant != nullptr) *mode_constant = t.c;
    if (n_points != nullptr) *n_points = t.points.size();
    for (size_t k = 0; k < t.points.size() && k < capacity; ++k) {
      if (X != nullptr) X[k] = t.points[k].X;
      if (location != nullptr) location[k] = to_c(t.points[k].location);
    }
  });
}

int maxspec_sweep_ambiguous_matches(const maxspec_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->sweep.ambiguous_matches;
}

maxspec_status maxspec_sweep_csv(const maxspec_sweep* sweep, char** csv) {
  return guarded([&] {
    check_out(sweep, "sweep");
    check_out(csv, "csv");
    *csv = copy_string(sweep_csv(sweep->sweep));
  });
}

maxspec_status maxspec_sweep_trajectories_csv(const maxspec_sweep* sweep, char** csv) {
  return guarded([&] {
    check_out(sweep, "sweep");
    check_out(csv, "csv");
    *csv = copy_string(trajectories_csv(sweep->sweep));
  });
}

void maxspec_sweep_destroy(maxspec_sweep* sweep) { delete sweep; }

maxspec_status maxspec_pollution_report(const maxspec_sweep* sweep,
                                        const maxspec_roots* true_roots, double tol,
                                        int counts[5], char** json) {
  return guarded([&] {
    check_out(sweep, "sweep");
    check_out(true_roots, "true_roots");
    const WaveguideModel& m = sweep->sweep.model;
    const double L = std::max(m.L2, m.L3);
    const SpectrumSet pollution = pollution_enclosure(1.0, 1.0, kPi * kPi / (L * L));
    const double sigma = m.variant == Variant::conductive ? 1.0 : 0.0;
    const SpectrumSet segment = imaginary_segment(sigma, 1.0);
    const PollutionReport report =
        pollution_report(sweep->sweep, true_roots->roots, essential_of(m), pollution, segment, tol);
    const Classification kinds[5] = {
        Classification::converged_to_eigenvalue, Classification::in_essential,
        Classification::pollution_candidate, Classification::violation,
        Classification::unconverged};
    if (counts != nullptr) {
      for (int k = 0; k < 5; ++k) counts[k] = report.count(kinds[k]);
    }
    if (json != nullptr) {
      nlohmann::json j;
      j["variant"] = to_string(m.variant);
      j["X"] = sweep->sweep.X_list;
      j["tolerance"] = tol;
      j["ambiguous_matches"] = sweep->sweep.ambiguous_matches;
      nlohmann::json totals;
      for (Classification k : kinds) totals[to_string(k)] = report.count(k);
      j["counts"] = totals;
      j["verdicts"] = nlohmann::json::array();
      for (const TrajectoryVerdict& v : report.verdicts) {
        const Trajectory& t = sweep->sweep.trajectories[v.trajectory];
        j["verdicts"].push_back({{"trajectory", v.trajectory},
                                 {"c", t.c},
                                 {"limit", {v.limit.real(), v.limit.imag()}},
                                 {"kind", to_string(v.kind)},
                                 {"distance_eigenvalue", v.distance_eigenvalue},
                                 {"distance_essential", v.distance_essential},
                                 {"tolerance", v.tolerance}});
      }
      *json = copy_string(dump(j));
    }
  });
}

maxspec_status maxspec_dtn_sign_pattern(double nu, double L2, double L3, int n_modes,
                                        maxspec_sign_pattern* pattern) {
  return guarded([&] {
    check_out(pattern, "pattern");
    *pattern = static_cast<maxspec_sign_pattern>(dtn_sign_pattern(dtn_entries(nu, L2, L3, n_modes)));
  });
}

maxspec_status maxspec_weyl_decay_ratio(double kappa, double L2, double L3, double* ratio) {
  return guarded([&] {
    check_out(ratio, "ratio");
    *ratio = weyl_decay_ratio(kappa, L2, L3);
  });
}

maxspec_status maxspec_fourier_symbol_det(maxspec_complex w, double xi, int n2, int n3, double L2,
                                          double L3, maxspec_complex* numeric,
                                          maxspec_complex* closed_form) {
  return guarded([&] {
    const SymbolDeterminant d = fourier_symbol_det(to_cpp(w), xi, n2, n3, L2, L3);
    if (numeric != nullptr) *numeric = to_c(d.numeric);
    if (closed_form != nullptr) *closed_form = to_c(d.closed_form);
  });
}

maxspec_status maxspec_appendix_checks_json(char** json, int* all_pass) {
  return guarded([&] {
    check_out(json, "json");
    nlohmann::json j = nlohmann::json::array();
    bool ok = true;
    for (const CheckReport& r : appendix_checks()) {
      j.push_back(r.to_json());
      ok = ok && r.pass;
    }
    if (all_pass != nullptr) *all_pass = ok ? 1 : 0;
    *json = copy_string(dump(j));
  });
}

}  // extern "C"
