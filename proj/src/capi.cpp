#include "equilib/equilib.h"

#include <cstring>
#include <string>

#include "config.hpp"
#include "fip.hpp"
#include "monotonicity.hpp"
#include "solvers.hpp"

struct eq_config {
  equilib::ProblemConfig cfg;
};

struct eq_sample {
  equilib::PointSample sample;
};

struct eq_bifunction {
  equilib::Bifunction f;
  std::size_t dim;
};

namespace {

thread_local std::string g_last_error;

eq_status status_of(equilib::ErrorCode code) {
  return static_cast<eq_status>(static_cast<int>(code) + 1);
}

template <typename Body>
eq_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return EQ_OK;
  } catch (const equilib::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EQ_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return EQ_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw equilib::Error(equilib::ErrorCode::InvalidArgument, what);
}

equilib::Budget to_budget(const eq_budgets* b) {
  equilib::Budget out;
  if (b) {
    out.max_cycle_len = b->max_cycle_len;
    out.max_subset = b->max_subset;
    out.simplex_subdivisions = b->simplex_subdivisions;
    out.segment_subdivisions = b->segment_subdivisions;
  }
  return out;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* eq_version(void) { return "0.1.0"; }

const char* eq_status_name(eq_status status) {
  switch (status) {
    case EQ_OK: return "OK";
    case EQ_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  const int c = static_cast<int>(status) - 1;
  if (c < 0 || c > static_cast<int>(equilib::ErrorCode::SchemaError)) return "Unknown";
  static thread_local std::string name;
  name = std::string(equilib::to_string(static_cast<equilib::ErrorCode>(c)));
  return name.c_str();
}

const char* eq_last_error(void) { return g_last_error.c_str(); }

int eq_is_evaluation_error(eq_status status) {
  if (status == EQ_OK || status == EQ_INTERNAL_ERROR) return 0;
  return equilib::is_evaluation_error(
             static_cast<equilib::ErrorCode>(static_cast<int>(status) - 1))
             ? 1
             : 0;
}

eq_status eq_config_load_file(const char* path, eq_config** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new eq_config{equilib::load_config(path)};
  });
}

eq_status eq_config_load_string(const char* text, eq_config** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new eq_config{equilib::parse_config(text)};
  });
}

void eq_config_free(eq_config* cfg) { delete cfg; }

eq_status eq_run(const eq_config* cfg, const char* command, const eq_run_options* options,
                 char** out_json) {
  return guarded([&] {
    require(cfg && command && out_json, "null argument");
    equilib::RunFlags flags;
    if (options) {
      if (options->kind) flags.kind = options->kind;
      if (options->problem) flags.problem = options->problem;
      if (options->hypothesis) flags.hypothesis = options->hypothesis;
      if (options->tol >= 0) flags.tol = options->tol;
      if (options->resolution > 0) flags.resolution = options->resolution;
    }
    *out_json = dup_string(equilib::run_command(command, cfg->cfg, flags).dump(2));
  });
}

void eq_string_free(char* s) { std::free(s); }

eq_status eq_sample_box(const double* lo, const double* hi, size_t dim, unsigned resolution,
                        eq_sample** out) {
  return guarded([&] {
    require(lo && hi && out, "null argument");
    if (dim == 0) throw equilib::Error(equilib::ErrorCode::EmptyInput, "dimension must be >= 1");
    std::vector<equilib::Interval> bounds;
    for (size_t i = 0; i < dim; ++i) bounds.push_back({lo[i], hi[i]});
    auto domain = std::make_shared<const equilib::Domain>(equilib::Domain::box(bounds));
    *out = new eq_sample{equilib::sample_domain(domain, resolution)};
  });
}

eq_status eq_sample_points(const double* coords, size_t count, size_t dim, eq_sample** out) {
  return guarded([&] {
    require(coords && out, "null argument");
    if (count == 0 || dim == 0)
      throw equilib::Error(equilib::ErrorCode::EmptyInput, "empty point list");
    std::vector<equilib::Point> pts;
    for (size_t i = 0; i < count; ++i)
      pts.emplace_back(std::vector<double>(coords + i * dim, coords + (i + 1) * dim));
    auto domain = std::make_shared<const equilib::Domain>(equilib::Domain::finite_set(pts));
    *out = new eq_sample{equilib::sample_domain(domain, 1)};
  });
}

size_t eq_sample_size(const eq_sample* s) { return s ? s->sample.size() : 0; }

size_t eq_sample_dim(const eq_sample* s) { return s ? s->sample.dim() : 0; }

eq_status eq_sample_point(const eq_sample* s, size_t index, double* coords_out) {
  return guarded([&] {
    require(s && coords_out, "null argument");
    require(index < s->sample.size(), "index out of range");
    const auto& p = s->sample[index];
    for (size_t i = 0; i < p.dim(); ++i) coords_out[i] = p[i];
  });
}

void eq_sample_free(eq_sample* s) { delete s; }

eq_status eq_bifunction_parse(const char* text, size_t dim, eq_bifunction** out) {
  return guarded([&] {
    require(text && out, "null argument");
    if (dim == 0) throw equilib::Error(equilib::ErrorCode::EmptyInput, "dimension must be >= 1");
    *out = new eq_bifunction{equilib::expr::make_bifunction(text, dim), dim};
  });
}

eq_status eq_bifunction_eval(const eq_bifunction* f, const double* x, const double* y,
                             double* out) {
  return guarded([&] {
    require(f && x && y && out, "null argument");
    const equilib::Point px(std::vector<double>(x, x + f->dim));
    const equilib::Point py(std::vector<double>(y, y + f->dim));
    *out = f->f(px, py);
  });
}

void eq_bifunction_free(eq_bifunction* f) { delete f; }

eq_budgets eq_budgets_default(void) {
  const equilib::Budget b;
  return {b.max_cycle_len, b.max_subset, b.simplex_subdivisions, b.segment_subdivisions};
}

eq_status eq_check_property(const eq_bifunction* f, const eq_sample* s, eq_property property,
                            const eq_budgets* budgets, double tol, eq_verdict* verdict) {
  return guarded([&] {
    require(f && s && verdict, "null argument");
    require(property >= EQ_MONOTONE && property <= EQ_UPPER_SIGN, "unknown property");
    if (f->dim != s->sample.dim())
      throw equilib::Error(equilib::ErrorCode::DimensionMismatch,
                           "bifunction and sample dimensions differ");
    const auto cert =
        equilib::check_property(f->f, s->sample, static_cast<equilib::PropertyKind>(property),
                                to_budget(budgets), equilib::Tolerance(tol));
    *verdict = cert.holds() ? EQ_HOLDS : EQ_VIOLATED;
  });
}

eq_status eq_check_fip(const eq_bifunction* f, const eq_sample* s, int star,
                       const eq_budgets* budgets, double tol, eq_verdict* verdict) {
  return guarded([&] {
    require(f && s && verdict, "null argument");
    if (f->dim != s->sample.dim())
      throw equilib::Error(equilib::ErrorCode::DimensionMismatch,
                           "bifunction and sample dimensions differ");
    const auto b = to_budget(budgets);
    const equilib::Tolerance t(tol);
    const auto r = star ? equilib::check_fip_star(f->f, s->sample, b.max_subset,
                                                  b.simplex_subdivisions, t)
                        : equilib::check_fip(f->f, s->sample, b.max_subset, t);
    *verdict = r.holds() ? EQ_HOLDS : EQ_VIOLATED;
  });
}

eq_status eq_solve(const eq_bifunction* f, const eq_sample* s, const char* problem, double tol,
                   size_t* indices, size_t capacity, size_t* count) {
  return guarded([&] {
    require(f && s && problem && count, "null argument");
    require(indices || capacity == 0, "null index buffer");
    if (f->dim != s->sample.dim())
      throw equilib::Error(equilib::ErrorCode::DimensionMismatch,
                           "bifunction and sample dimensions differ");
    const std::string p = problem;
    require(p == "ep" || p == "mep", "problem must be \"ep\" or \"mep\"");
    const equilib::Tolerance t(tol);
    const auto set = p == "ep" ? equilib::solve_ep(f->f, s->sample, t)
                               : equilib::solve_mep(f->f, s->sample, t);
    *count = set.solutions.size();
    for (size_t i = 0; i < set.solutions.size() && i < capacity; ++i)
      indices[i] = set.solutions[i].index;
  });
}

}  // extern "C"
