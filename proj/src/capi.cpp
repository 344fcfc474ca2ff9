#include "arrlab/arrlab.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "arrlab/errors.hpp"
#include "arrlab/io.hpp"

struct arrlab_arrangement {
  arrlab::Arrangement arrangement;
  std::optional<arrlab::FiniteMatrixGroup> group;
};

struct arrlab_measure {
  arrlab::MeasureCloud cloud;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

arrlab_status record_error(const arrlab::Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case arrlab::ErrorCode::ParseError:
      return ARRLAB_ERR_PARSE;
    case arrlab::ErrorCode::Internal:
      return ARRLAB_ERR_INTERNAL;
    default:
      return ARRLAB_ERR_DOMAIN;
  }
}

arrlab_status record_argument_error(const char* message) {
  g_last_error = message;
  return ARRLAB_ERR_ARGUMENT;
}

template <typename Fn>
arrlab_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ARRLAB_OK;
  } catch (const arrlab::Error& e) {
    return record_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ARRLAB_ERR_INTERNAL;
  }
}

arrlab::SolveConfig config_from_json(const char* config_json) {
  arrlab::SolveConfig config;
  if (config_json == nullptr || config_json[0] == '\0') return config;
  nlohmann::json parsed = nlohmann::json::parse(config_json, nullptr, false);
  if (parsed.is_discarded())
    arrlab::fail(arrlab::ErrorCode::ParseError, "malformed solve config");
  config.seed = parsed.value("seed", config.seed);
  config.restarts = parsed.value("restarts", config.restarts);
  config.tol = parsed.value("tol", config.tol);
  config.max_evals = parsed.value("max_evals", config.max_evals);
  config.designated = parsed.value("designated", config.designated);
  if (parsed.contains("sigma_schedule"))
    config.sigma_schedule = parsed["sigma_schedule"].get<std::vector<double>>();
  return config;
}

std::vector<arrlab::MeasureCloud> collect_measures(const arrlab_measure* const* measures,
                                                   size_t measure_count) {
  if (measures == nullptr || measure_count == 0)
    arrlab::fail(arrlab::ErrorCode::BadParam, "need at least one measure");
  std::vector<arrlab::MeasureCloud> out;
  out.reserve(measure_count);
  for (size_t i = 0; i < measure_count; ++i) {
    if (measures[i] == nullptr)
      arrlab::fail(arrlab::ErrorCode::BadParam, "null measure handle");
    out.push_back(measures[i]->cloud);
  }
  return out;
}

}  // namespace

extern "C" {

const char* arrlab_version(void) { return "0.1.0"; }

const char* arrlab_last_error(void) { return g_last_error.c_str(); }

void arrlab_string_free(char* text) { std::free(text); }

arrlab_status arrlab_arrangement_parse(const char* json_text, arrlab_arrangement** out) {
  if (json_text == nullptr || out == nullptr)
    return record_argument_error("null argument to arrlab_arrangement_parse");
  return guarded([&]() {
    arrlab::ArrangementFile file = arrlab::parse_arrangement_json(json_text);
    *out = new arrlab_arrangement{std::move(file.arrangement), std::move(file.group)};
  });
}

void arrlab_arrangement_free(arrlab_arrangement* handle) { delete handle; }

arrlab_status arrlab_arrangement_to_json(const arrlab_arrangement* handle,
                                         char** json_out) {
  if (handle == nullptr || json_out == nullptr)
    return record_argument_error("null argument to arrlab_arrangement_to_json");
  return guarded([&]() {
    *json_out = copy_string(arrlab::arrangement_to_json(
        handle->arrangement, handle->group ? &*handle->group : nullptr));
  });
}

arrlab_status arrlab_arrangement_has_group(const arrlab_arrangement* handle,
                                           int* has_group) {
  if (handle == nullptr || has_group == nullptr)
    return record_argument_error("null argument to arrlab_arrangement_has_group");
  *has_group = handle->group.has_value() ? 1 : 0;
  return ARRLAB_OK;
}

arrlab_status arrlab_instance_build(const char* name, const char* params_json,
                                    arrlab_arrangement** out) {
  if (name == nullptr || out == nullptr)
    return record_argument_error("null argument to arrlab_instance_build");
  return guarded([&]() {
    nlohmann::json params = nlohmann::json::object();
    if (params_json != nullptr && params_json[0] != '\0') {
      params = nlohmann::json::parse(params_json, nullptr, false);
      if (params.is_discarded())
        arrlab::fail(arrlab::ErrorCode::ParseError, "malformed instance parameters");
    }
    const std::string which = name;
    arrlab::PaperInstance instance = [&]() {
      if (which == "example_12") return arrlab::example_12();
      if (which == "example_3_1") {
        const std::size_t n = params.value("n", 3);
        return arrlab::example_3_1(n);
      }
      if (which == "example_3_2") return arrlab::example_3_2();
      if (which == "test_arrangement_B" || which == "test_arrangement_b") {
        std::vector<long> parts = params.value("ration", std::vector<long>{1, 1});
        const std::size_t j = params.value("j", 2);
        return arrlab::test_arrangement_b(arrlab::Ration::from_parts(parts), j);
      }
      if (which == "test_arrangement_A" || which == "test_arrangement_a") {
        std::vector<long> parts = params.value("ration", std::vector<long>{1, 1});
        const std::size_t j = params.value("j", 1);
        return arrlab::test_arrangement_a(arrlab::Ration::from_parts(parts), j);
      }
      arrlab::fail(arrlab::ErrorCode::BadParam,
                   "unknown instance '" + which +
                       "' (expected example_12, example_3_1, example_3_2, "
                       "test_arrangement_B, test_arrangement_A)");
    }();
    *out = new arrlab_arrangement{std::move(instance.arrangement),
                                  std::move(instance.group)};
  });
}

arrlab_status arrlab_betti(const arrlab_arrangement* handle, const char* field,
                           char** betti_json_out) {
  if (handle == nullptr || field == nullptr || betti_json_out == nullptr)
    return record_argument_error("null argument to arrlab_betti");
  return guarded([&]() {
    const arrlab::FieldDescriptor f = arrlab::FieldDescriptor::parse(field);
    *betti_json_out =
        copy_string(arrlab::betti_to_json(arrlab::gm_betti(handle->arrangement, f)));
  });
}

arrlab_status arrlab_poset_dot(const arrlab_arrangement* handle, char** dot_out) {
  if (handle == nullptr || dot_out == nullptr)
    return record_argument_error("null argument to arrlab_poset_dot");
  return guarded([&]() {
    *dot_out =
        copy_string(arrlab::hasse_dot(arrlab::intersection_poset(handle->arrangement)));
  });
}

arrlab_status arrlab_blow_up(const arrlab_arrangement* handle, const char* choice,
                             arrlab_arrangement** arrangement_out, char** meta_json_out) {
  if (handle == nullptr || choice == nullptr)
    return record_argument_error("null argument to arrlab_blow_up");
  return guarded([&]() {
    arrlab::BlowUpOptions options;
    const std::string which = choice;
    if (which == "auto") {
      options.choice = arrlab::BlowUpChoice::Auto;
    } else if (which == "equivariant") {
      if (!handle->group)
        arrlab::fail(arrlab::ErrorCode::BadParam,
                     "equivariant blow-up needs a group in the arrangement file");
      options.choice = arrlab::BlowUpChoice::Equivariant;
      options.group = &*handle->group;
    } else {
      arrlab::fail(arrlab::ErrorCode::BadParam,
                   "blow-up choice must be 'auto' or 'equivariant'");
    }
    arrlab::BlowUpResult result = arrlab::blow_up(handle->arrangement, options);
    if (meta_json_out != nullptr)
      *meta_json_out = copy_string(arrlab::blowup_meta_to_json(result));
    if (arrangement_out != nullptr) {
      std::optional<arrlab::FiniteMatrixGroup> product_group;
      if (handle->group) {
        std::size_t copies = 0;
        for (const arrlab::BlowUpBlock& b : result.blocks) copies += b.codim;
        product_group = arrlab::diagonal_product_group(*handle->group, copies);
      }
      *arrangement_out = new arrlab_arrangement{std::move(result.arrangement),
                                                std::move(product_group)};
    }
  });
}

arrlab_status arrlab_check_theorem(const arrlab_arrangement* handle, const char* field,
                                   int connectivity_n, int apply_reduction,
                                   char** report_json_out, int* overall_out) {
  if (handle == nullptr || field == nullptr)
    return record_argument_error("null argument to arrlab_check_theorem");
  return guarded([&]() {
    if (!handle->group)
      arrlab::fail(arrlab::ErrorCode::BadParam,
                   "hypothesis check needs a group in the arrangement file");
    if (connectivity_n < 2)
      arrlab::fail(arrlab::ErrorCode::BadParam, "connectivity must be at least 2");
    arrlab::TheoremInput input{handle->arrangement, *handle->group,
                               arrlab::FieldDescriptor::parse(field),
                               static_cast<std::size_t>(connectivity_n),
                               apply_reduction != 0, arrlab::BlowUpChoice::Equivariant};
    const arrlab::HypothesisReport report = arrlab::check_theorem1(input);
    if (report_json_out != nullptr)
      *report_json_out = copy_string(arrlab::report_to_json(report));
    if (overall_out != nullptr) {
      switch (report.overall) {
        case arrlab::OverallVerdict::TheoremApplies: *overall_out = 0; break;
        case arrlab::OverallVerdict::NotApplicable: *overall_out = 1; break;
        case arrlab::OverallVerdict::Inconclusive: *overall_out = 2; break;
      }
    }
  });
}

arrlab_status arrlab_measure_parse_csv(const char* csv_text, arrlab_measure** out) {
  if (csv_text == nullptr || out == nullptr)
    return record_argument_error("null argument to arrlab_measure_parse_csv");
  return guarded([&]() {
    *out = new arrlab_measure{arrlab::MeasureCloud::from_csv(csv_text)};
  });
}

void arrlab_measure_free(arrlab_measure* handle) { delete handle; }

arrlab_status arrlab_fan_solve(const char* kind, const char* ration,
                               const arrlab_measure* const* measures, size_t measure_count,
                               const char* config_json, char** fan_json_out,
                               char** report_json_out, int* pass_out) {
  if (kind == nullptr || ration == nullptr)
    return record_argument_error("null argument to arrlab_fan_solve");
  return guarded([&]() {
    const std::string which = kind;
    arrlab::SolveKind solve_kind;
    if (which == "fan")
      solve_kind = arrlab::SolveKind::Fan;
    else if (which == "arrangement")
      solve_kind = arrlab::SolveKind::Arrangement;
    else
      arrlab::fail(arrlab::ErrorCode::BadParam, "kind must be 'fan' or 'arrangement'");
    const arrlab::Ration parsed_ration = arrlab::Ration::parse(ration);
    const std::vector<arrlab::MeasureCloud> clouds =
        collect_measures(measures, measure_count);
    const arrlab::SolveConfig config = config_from_json(config_json);
    arrlab::SolveResult result =
        arrlab::solve(solve_kind, clouds, parsed_ration, config);
    for (const std::string& w : result.warnings) result.report.notes.push_back(w);
    if (fan_json_out != nullptr)
      *fan_json_out = copy_string(arrlab::fan_to_json(result.fan));
    if (report_json_out != nullptr)
      *report_json_out = copy_string(arrlab::partition_report_to_json(result.report));
    if (pass_out != nullptr) *pass_out = result.pass ? 1 : 0;
  });
}

arrlab_status arrlab_fan_verify(const char* fan_json, const char* ration,
                                const arrlab_measure* const* measures, size_t measure_count,
                                double tol, char** report_json_out, int* pass_out) {
  if (fan_json == nullptr || ration == nullptr)
    return record_argument_error("null argument to arrlab_fan_verify");
  return guarded([&]() {
    const arrlab::Fan fan = arrlab::parse_fan_json(fan_json);
    const arrlab::Ration parsed_ration = arrlab::Ration::parse(ration);
    const std::vector<arrlab::MeasureCloud> clouds =
        collect_measures(measures, measure_count);
    const arrlab::PartitionReport report =
        arrlab::verify(fan, clouds, parsed_ration, tol);
    if (report_json_out != nullptr)
      *report_json_out = copy_string(arrlab::partition_report_to_json(report));
    if (pass_out != nullptr) *pass_out = report.pass ? 1 : 0;
  });
}

}  // extern "C"
