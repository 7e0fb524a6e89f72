#include "pfrac/pfrac.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "pfrac/error.hpp"
#include "pfrac/io.hpp"

struct pfrac_input {
  pfrac::ArrangementInput value;
};

struct pfrac_decomposition {
  pfrac::Decomposition value;
  std::vector<pfrac::PointPolynomial> point_polynomials;
};

struct pfrac_report {
  pfrac::VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

pfrac_status to_status(pfrac::ErrorCode code) {
  using pfrac::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return PFRAC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return PFRAC_ERR_PARSE;
    case ErrorCode::BadDimension: return PFRAC_ERR_BAD_DIMENSION;
    case ErrorCode::ZeroVectorForm: return PFRAC_ERR_ZERO_VECTOR_FORM;
    case ErrorCode::NotSpanning: return PFRAC_ERR_NOT_SPANNING;
    case ErrorCode::SingularSystem: return PFRAC_ERR_SINGULAR_SYSTEM;
    case ErrorCode::DimensionMismatch: return PFRAC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::SubsetExplosion: return PFRAC_ERR_SUBSET_EXPLOSION;
    case ErrorCode::NuZero: return PFRAC_ERR_NU_ZERO;
    case ErrorCode::InternalInvariant: return PFRAC_ERR_INTERNAL;
    case ErrorCode::SamplingExhausted: return PFRAC_ERR_SAMPLING_EXHAUSTED;
  }
  return PFRAC_ERR_INTERNAL;
}

template <typename Fn>
pfrac_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return PFRAC_OK;
  } catch (const pfrac::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PFRAC_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PFRAC_ERR_INTERNAL;
  }
}

pfrac_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return PFRAC_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pfrac::PivotStrategy to_strategy(pfrac_strategy s) {
  switch (s) {
    case PFRAC_STRATEGY_LAST_REMOVABLE: return pfrac::PivotStrategy::LastRemovable;
    case PFRAC_STRATEGY_FIRST_REMOVABLE: return pfrac::PivotStrategy::FirstRemovable;
  }
  throw pfrac::Error(pfrac::ErrorCode::InvalidArgument, "unknown strategy value");
}

void check_format(pfrac_format f) {
  if (f != PFRAC_FORMAT_JSON && f != PFRAC_FORMAT_TEXT) {
    throw pfrac::Error(pfrac::ErrorCode::InvalidArgument, "unknown output format");
  }
}

}  // namespace

extern "C" {

const char* pfrac_version(void) { return "1.0.0"; }

const char* pfrac_status_name(pfrac_status status) {
  switch (status) {
    case PFRAC_OK: return "ok";
    case PFRAC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PFRAC_ERR_PARSE: return "parse error";
    case PFRAC_ERR_BAD_DIMENSION: return "bad dimension";
    case PFRAC_ERR_ZERO_VECTOR_FORM: return "zero vector form";
    case PFRAC_ERR_NOT_SPANNING: return "not spanning";
    case PFRAC_ERR_SINGULAR_SYSTEM: return "singular system";
    case PFRAC_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case PFRAC_ERR_SUBSET_EXPLOSION: return "subset explosion";
    case PFRAC_ERR_NU_ZERO: return "nu is zero";
    case PFRAC_ERR_INTERNAL: return "internal invariant violation";
    case PFRAC_ERR_SAMPLING_EXHAUSTED: return "sampling exhausted";
    case PFRAC_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* pfrac_last_error(void) { return g_last_error.c_str(); }

void pfrac_string_free(char* s) { std::free(s); }

pfrac_status pfrac_strategy_from_name(const char* name, pfrac_strategy* out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] {
    *out = pfrac::parse_strategy(name) == pfrac::PivotStrategy::LastRemovable
               ? PFRAC_STRATEGY_LAST_REMOVABLE
               : PFRAC_STRATEGY_FIRST_REMOVABLE;
  });
}

pfrac_status pfrac_input_parse(const char* json, pfrac_input** out) {
  if (!json || !out) return null_argument("json/out");
  *out = nullptr;
  return guarded([&] { *out = new pfrac_input{pfrac::io::parse_input(json)}; });
}

void pfrac_input_free(pfrac_input* input) { delete input; }

size_t pfrac_input_dimension(const pfrac_input* input) {
  return input ? input->value.dimension() : 0;
}

size_t pfrac_input_form_count(const pfrac_input* input) { return input ? input->value.size() : 0; }

pfrac_status pfrac_points_render(const pfrac_input* input, pfrac_format format, size_t max_xp,
                                 char** out) {
  if (!input || !out) return null_argument("input/out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    const auto points = pfrac::enumerate_points(input->value);
    const std::string s = format == PFRAC_FORMAT_JSON
                              ? pfrac::io::dump(pfrac::io::points_to_json(points))
                              : pfrac::io::points_text(input->value, points, max_xp);
    *out = copy_string(s);
  });
}

pfrac_status pfrac_points_count(const pfrac_input* input, size_t* out) {
  if (!input || !out) return null_argument("input/out");
  return guarded([&] { *out = pfrac::enumerate_points(input->value).size(); });
}

pfrac_status pfrac_generic_render(const pfrac_input* input, pfrac_format format, int* is_generic,
                                  char** out) {
  if (!input || !out) return null_argument("input/out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    const auto report = pfrac::is_generic(input->value);
    if (is_generic) *is_generic = report.generic ? 1 : 0;
    const std::string s = format == PFRAC_FORMAT_JSON
                              ? pfrac::io::dump(pfrac::io::genericity_to_json(report))
                              : pfrac::io::genericity_text(input->value, report);
    *out = copy_string(s);
  });
}

pfrac_status pfrac_decompose(const pfrac_input* input, pfrac_strategy strategy,
                             pfrac_decomposition** out) {
  if (!input || !out) return null_argument("input/out");
  *out = nullptr;
  return guarded([&] {
    auto d = pfrac::decompose(input->value, to_strategy(strategy));
    auto cps = pfrac::point_polynomials(d);
    *out = new pfrac_decomposition{std::move(d), std::move(cps)};
  });
}

pfrac_status pfrac_decomposition_parse(const pfrac_input* input, const char* json,
                                       pfrac_decomposition** out) {
  if (!input || !json || !out) return null_argument("input/json/out");
  *out = nullptr;
  return guarded([&] {
    auto loaded = pfrac::io::parse_decomposition(json, input->value);
    *out = new pfrac_decomposition{std::move(loaded.decomposition),
                                   std::move(loaded.point_polynomials)};
  });
}

void pfrac_decomposition_free(pfrac_decomposition* d) { delete d; }

size_t pfrac_decomposition_term_count(const pfrac_decomposition* d) {
  return d ? d->value.terms.size() : 0;
}

size_t pfrac_decomposition_point_count(const pfrac_decomposition* d) {
  return d ? d->value.points.size() : 0;
}

pfrac_status pfrac_decomposition_term(const pfrac_decomposition* d, size_t i, size_t* point_index,
                                      char** coeff) {
  if (!d || !point_index || !coeff) return null_argument("d/point_index/coeff");
  *coeff = nullptr;
  return guarded([&] {
    if (i >= d->value.terms.size()) {
      throw pfrac::Error(pfrac::ErrorCode::InvalidArgument, "term index out of range");
    }
    *point_index = d->value.terms[i].point_index;
    *coeff = copy_string(d->value.terms[i].coeff.to_string());
  });
}

pfrac_status pfrac_decomposition_render(const pfrac_decomposition* d, pfrac_format format,
                                        const pfrac_report* report, size_t max_xp,
                                        char** out) {
  if (!d || !out) return null_argument("d/out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    std::string s;
    if (format == PFRAC_FORMAT_JSON) {
      auto j = pfrac::io::decomposition_to_json(d->value, d->point_polynomials);
      if (report) j["verification"] = pfrac::io::report_to_json(report->value);
      s = pfrac::io::dump(j);
    } else {
      s = pfrac::io::decomposition_text(d->value, d->point_polynomials, max_xp);
      if (report) s += pfrac::io::report_text(report->value);
    }
    *out = copy_string(s);
  });
}

pfrac_status pfrac_verify(const pfrac_decomposition* d, size_t trials, uint64_t seed,
                          pfrac_report** out) {
  if (!d || !out) return null_argument("d/out");
  *out = nullptr;
  return guarded([&] {
    *out = new pfrac_report{pfrac::verify_all(d->value, d->point_polynomials, trials, seed)};
  });
}

void pfrac_report_free(pfrac_report* report) { delete report; }

int pfrac_report_passed(const pfrac_report* report) {
  return report && report->value.all_passed() ? 1 : 0;
}

pfrac_status pfrac_report_render(const pfrac_report* report, pfrac_format format, char** out) {
  if (!report || !out) return null_argument("report/out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    *out = copy_string(format == PFRAC_FORMAT_JSON
                           ? pfrac::io::dump(pfrac::io::report_to_json(report->value))
                           : pfrac::io::report_text(report->value));
  });
}

}  // extern "C"
