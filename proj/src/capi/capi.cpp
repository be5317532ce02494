#include "grasmult.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/grassmannian.hpp"
#include "core/hilbert.hpp"
#include "core/paths.hpp"
#include "core/reflections.hpp"
#include "core/shadow.hpp"
#include "core/verify.hpp"

struct grasmult_instance {
  grasmult::Instance inst;
};

struct grasmult_families {
  std::vector<grasmult::PathFamily> families;
  int d = 0;
};

struct grasmult_series {
  grasmult::HilbertSeries series;
};

namespace {

thread_local std::string g_last_error;

grasmult_status status_of(const grasmult::error& e) {
  switch (e.code()) {
    case grasmult::errc::invalid_argument: return GRASMULT_ERR_INVALID_ARGUMENT;
    case grasmult::errc::not_on_variety: return GRASMULT_ERR_NOT_ON_VARIETY;
    case grasmult::errc::budget_exceeded: return GRASMULT_ERR_BUDGET_EXCEEDED;
    case grasmult::errc::chain_violation: return GRASMULT_ERR_CHAIN_CONDITION;
    case grasmult::errc::internal: return GRASMULT_ERR_INTERNAL;
  }
  return GRASMULT_ERR_INTERNAL;
}

grasmult_status set_error(grasmult_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
grasmult_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const grasmult::error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GRASMULT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GRASMULT_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t effective_budget(std::uint64_t budget) {
  return budget == 0 ? grasmult::kDefaultBudget : budget;
}

}  // namespace

extern "C" {

const char* grasmult_version(void) { return "1.0.0"; }

uint32_t grasmult_api_version(void) { return GRASMULT_API_VERSION; }

const char* grasmult_last_error(void) { return g_last_error.c_str(); }

void grasmult_string_free(char* s) { delete[] s; }

grasmult_status grasmult_instance_create(int n, int d, const int* w, const int* tau,
                                         grasmult_instance** out) {
  if (!out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "out pointer is null");
  *out = nullptr;
  if (d > 0 && (!w || !tau))
    return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "w and tau are required when d > 0");
  return guarded([&]() {
    const grasmult::GrassmannianShape shape{n, d};
    const grasmult::CosetRep wrep(shape, std::vector<int>(w, w + (d > 0 ? d : 0)));
    const grasmult::CosetRep trep(shape, std::vector<int>(tau, tau + (d > 0 ? d : 0)));
    *out = new grasmult_instance{grasmult::build_instance(wrep, trep)};
    return GRASMULT_OK;
  });
}

void grasmult_instance_destroy(grasmult_instance* inst) { delete inst; }

int grasmult_instance_n(const grasmult_instance* inst) { return inst ? inst->inst.shape.n : -1; }

int grasmult_instance_d(const grasmult_instance* inst) { return inst ? inst->inst.shape.d : -1; }

grasmult_status grasmult_instance_kappa(const grasmult_instance* inst, int* out) {
  if (!inst || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  g_last_error.clear();
  std::copy(inst->inst.kappa.begin(), inst->inst.kappa.end(), out);
  return GRASMULT_OK;
}

grasmult_status grasmult_instance_sigma(const grasmult_instance* inst, int* out) {
  if (!inst || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  g_last_error.clear();
  std::copy(inst->inst.sigma.begin(), inst->inst.sigma.end(), out);
  return GRASMULT_OK;
}

grasmult_status grasmult_instance_start_point(const grasmult_instance* inst, int l, int* x,
                                              int* y) {
  if (!inst || !x || !y) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  if (l < 1 || l > inst->inst.shape.d)
    return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "path index out of range");
  g_last_error.clear();
  *x = inst->inst.starts[l - 1].x;
  *y = inst->inst.starts[l - 1].y;
  return GRASMULT_OK;
}

grasmult_status grasmult_instance_end_point(const grasmult_instance* inst, int q, int* x, int* y) {
  if (!inst || !x || !y) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  if (q < 1 || q > inst->inst.shape.d)
    return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "end-point index out of range");
  g_last_error.clear();
  *x = inst->inst.ends[q - 1].x;
  *y = inst->inst.ends[q - 1].y;
  return GRASMULT_OK;
}

grasmult_status grasmult_instance_pole_order(const grasmult_instance* inst, int64_t* out) {
  if (!inst || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  g_last_error.clear();
  *out = grasmult::pole_order(inst->inst);
  return GRASMULT_OK;
}

grasmult_status grasmult_multiplicity(const grasmult_instance* inst, grasmult_method method,
                                      uint64_t budget, char** result) {
  if (!inst || !result) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  *result = nullptr;
  return guarded([&]() {
    grasmult::bigint value;
    switch (method) {
      case GRASMULT_METHOD_DETERMINANT:
        value = grasmult::lgv_multiplicity(inst->inst);
        break;
      case GRASMULT_METHOD_PATHS: {
        grasmult::bigint count = 0;
        grasmult::for_each_family(inst->inst, effective_budget(budget),
                                  [&](const grasmult::PathFamily&) { count += 1; });
        value = count;
        break;
      }
      case GRASMULT_METHOD_REFLECTIONS:
        value = grasmult::enumerate_s1s2_sets(inst->inst, effective_budget(budget),
                                              grasmult::S1S2Universe::FullRectangle)
                    .size();
        break;
      default:
        return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "unknown method");
    }
    *result = copy_string(grasmult::to_decimal(value));
    return GRASMULT_OK;
  });
}

grasmult_status grasmult_hilbert_series(const grasmult_instance* inst, uint64_t budget,
                                        grasmult_series** out) {
  if (!inst || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = new grasmult_series{grasmult::hilbert_series(inst->inst, effective_budget(budget))};
    return GRASMULT_OK;
  });
}

void grasmult_series_destroy(grasmult_series* series) { delete series; }

grasmult_status grasmult_series_numerator(const grasmult_series* series, char** out) {
  if (!series || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  g_last_error.clear();
  std::string csv;
  const auto& coeffs = series->series.numerator.coefficients();
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (t) csv += ',';
    csv += grasmult::to_decimal(coeffs[t]);
  }
  if (coeffs.empty()) csv = "0";
  *out = copy_string(csv);
  return GRASMULT_OK;
}

int64_t grasmult_series_pole_order(const grasmult_series* series) {
  return series ? series->series.pole_order : -1;
}

int grasmult_series_conjectural(const grasmult_series* series) {
  return series && series->series.conjectural ? 1 : 0;
}

grasmult_status grasmult_series_value(const grasmult_series* series, uint32_t m, char** out) {
  if (!series || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = copy_string(grasmult::to_decimal(grasmult::hilbert_function(series->series, m)));
    return GRASMULT_OK;
  });
}

grasmult_status grasmult_enumerate_families(const grasmult_instance* inst, uint64_t budget,
                                            grasmult_families** out) {
  if (!inst || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() {
    auto families = grasmult::enumerate_families(inst->inst, effective_budget(budget));
    *out = new grasmult_families{std::move(families), inst->inst.shape.d};
    return GRASMULT_OK;
  });
}

void grasmult_families_destroy(grasmult_families* families) { delete families; }

uint64_t grasmult_families_count(const grasmult_families* families) {
  return families ? families->families.size() : 0;
}

grasmult_status grasmult_family_en_turns(const grasmult_families* families, uint64_t index,
                                         uint32_t* out) {
  if (!families || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= families->families.size())
    return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "family index out of range");
  g_last_error.clear();
  *out = static_cast<uint32_t>(grasmult::en_turns_family(families->families[index]));
  return GRASMULT_OK;
}

grasmult_status grasmult_family_steps(const grasmult_families* families, uint64_t index, int l,
                                      char** out) {
  if (!families || !out) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (index >= families->families.size())
    return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "family index out of range");
  if (l < 1 || l > families->d)
    return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "path index out of range");
  g_last_error.clear();
  *out = copy_string(grasmult::step_string(families->families[index].paths[l - 1]));
  return GRASMULT_OK;
}

grasmult_status grasmult_verify(int max_n, uint64_t budget, int* ok, char** report) {
  if (!ok) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "null argument");
  if (max_n < 0) return set_error(GRASMULT_ERR_INVALID_ARGUMENT, "max_n must be nonnegative");
  *ok = 0;
  if (report) *report = nullptr;
  return guarded([&]() {
    grasmult::VerifyOptions opts;
    opts.max_n = max_n;
    opts.budget = effective_budget(budget);
    const grasmult::VerifyResult result = grasmult::run_verification(opts);
    *ok = result.ok() ? 1 : 0;
    if (report) *report = copy_string(result.report());
    return GRASMULT_OK;
  });
}

}  // extern "C"
