#include "arrlab/io.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "arrlab/errors.hpp"

namespace arrlab {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  fail(ErrorCode::ParseError, "rational entries must be integers or 'p/q' strings");
}

json rational_to_json_value(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt num = numerator(value);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max()) {
      return json(num.convert_to<long long>());
    }
  }
  return json(format_rational(value));
}

RationalMatrix matrix_from_json(const json& rows, std::size_t expected_cols) {
  if (!rows.is_array()) fail(ErrorCode::ParseError, "matrix must be an array of rows");
  const std::size_t nrows = rows.size();
  std::size_t ncols = expected_cols;
  if (nrows > 0) {
    if (!rows[0].is_array()) fail(ErrorCode::ParseError, "matrix rows must be arrays");
    ncols = rows[0].size();
  }
  if (expected_cols != 0 && ncols != expected_cols)
    fail(ErrorCode::ParseError, "matrix row length does not match the ambient dimension");
  RationalMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols)
      fail(ErrorCode::ParseError, "ragged matrix rows");
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rational_from_json(rows[i][j]);
  }
  return m;
}

json matrix_to_json_value(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json_value(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
  return parsed;
}

}  // namespace

ArrangementFile parse_arrangement_json(const std::string& text) {
  const json root = parse_text(text);
  if (!root.is_object() || !root.contains("ambient_dim") ||
      !root["ambient_dim"].is_number_integer())
    fail(ErrorCode::ParseError, "arrangement JSON needs an integer ambient_dim");
  const long long m_signed = root["ambient_dim"].get<long long>();
  if (m_signed < 1) fail(ErrorCode::ParseError, "ambient_dim must be positive");
  const std::size_t m = static_cast<std::size_t>(m_signed);

  Subspace ambient = Subspace::full(m);
  if (root.contains("ambient_forms") && !root["ambient_forms"].is_null()) {
    const RationalMatrix forms = matrix_from_json(root["ambient_forms"], m);
    if (forms.rows() > 0) ambient = Subspace::from_forms(m, forms);
  }

  std::vector<Subspace> members;
  std::vector<std::string> names;
  if (root.contains("members")) {
    if (!root["members"].is_array())
      fail(ErrorCode::ParseError, "members must be an array");
    for (const json& entry : root["members"]) {
      if (!entry.is_object() || !entry.contains("forms"))
        fail(ErrorCode::ParseError, "each member needs a forms matrix");
      RationalMatrix raw = matrix_from_json(entry["forms"], m);
      const RationalMatrix combined = stack_rows(ambient.forms(), raw);
      members.push_back(Subspace::from_forms(m, combined));
      names.push_back(entry.contains("name") && entry["name"].is_string()
                          ? entry["name"].get<std::string>()
                          : "L" + std::to_string(names.size()));
    }
  }

  ArrangementFile file{Arrangement(std::move(ambient), std::move(members), std::move(names)),
                       std::nullopt};

  if (root.contains("group") && !root["group"].is_null()) {
    const json& group = root["group"];
    if (!group.is_object() || !group.contains("generators") ||
        !group["generators"].is_array() || group["generators"].empty())
      fail(ErrorCode::ParseError, "group needs a non-empty generators array");
    std::vector<RationalMatrix> generators;
    for (const json& gen : group["generators"]) {
      RationalMatrix g = matrix_from_json(gen, m);
      if (g.rows() != m || g.cols() != m)
        fail(ErrorCode::ParseError, "generators must be ambient_dim x ambient_dim");
      generators.push_back(std::move(g));
    }
    file.group = FiniteMatrixGroup::generate(generators);
  }
  return file;
}

std::string arrangement_to_json(const Arrangement& a, const FiniteMatrixGroup* group) {
  json root;
  root["ambient_dim"] = a.ambient_dim();
  if (!a.ambient().is_full()) root["ambient_forms"] = matrix_to_json_value(a.ambient().forms());
  json members = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json entry;
    entry["name"] = a.names()[i];
    entry["forms"] = matrix_to_json_value(a.members()[i].forms());
    members.push_back(std::move(entry));
  }
  root["members"] = std::move(members);
  if (group != nullptr) {
    json generators = json::array();
    for (const GroupElement& g : group->generators())
      generators.push_back(matrix_to_json_value(g.matrix));
    root["group"]["generators"] = std::move(generators);
  }
  return dump(root);
}

std::string instance_to_json(const PaperInstance& instance) {
  json root = json::parse(arrangement_to_json(instance.arrangement, &instance.group));
  root["name"] = instance.name;
  if (!instance.notes.empty()) root["notes"] = instance.notes;
  return dump(root);
}

std::string betti_to_json(const BettiTable& table) {
  json root;
  root["field"] = table.field.name();
  root["reduced"] = table.reduced;
  json betti = json::object();
  for (const auto& [degree, value] : table.betti)
    betti[std::to_string(degree)] = value;
  root["betti"] = std::move(betti);
  return dump(root);
}

namespace {

json verdict_to_json(const ConditionVerdict& verdict) {
  json out;
  out["status"] = condition_status_name(verdict.status);
  out["reason"] = verdict.reason;
  return out;
}

}  // namespace

std::string report_to_json(const HypothesisReport& report) {
  json root;
  root["conditions"]["A"] = verdict_to_json(report.condition_a);
  root["conditions"]["B"] = verdict_to_json(report.condition_b);
  root["conditions"]["C"] = verdict_to_json(report.condition_c);
  root["conditions"]["D"] = verdict_to_json(report.condition_d);
  root["conditions"]["E"] = verdict_to_json(report.condition_e);
  root["overall"] = overall_verdict_name(report.overall);
  root["verdict"] = report.verdict_text;
  root["reduction_applied"] = report.reduction_applied;
  root["reduced_member_count"] = report.reduced_member_count;
  root["maximal_codim"] = report.maximal_codim;
  root["blowup"]["choice"] = report.blowup_choice_used;
  root["blowup"]["ambient_copies"] = report.blowup_copies;
  return dump(root);
}

std::string fan_to_json(const Fan& fan) {
  json root;
  root["u"] = fan.frame.u;
  root["w"] = fan.frame.w;
  root["n"] = fan.n;
  root["psi"] = fan.psi;
  return dump(root);
}

Fan parse_fan_json(const std::string& text) {
  const json root = parse_text(text);
  if (!root.is_object() || !root.contains("u") || !root.contains("w") ||
      !root.contains("n") || !root.contains("psi"))
    fail(ErrorCode::ParseError, "fan JSON needs u, w, n, psi");
  Fan fan;
  fan.frame.u = root["u"].get<std::vector<double>>();
  fan.frame.w = root["w"].get<std::vector<double>>();
  fan.n = root["n"].get<std::size_t>();
  fan.psi = root["psi"].get<std::vector<double>>();
  if (fan.frame.u.size() != fan.frame.w.size() || fan.frame.u.size() < 3)
    fail(ErrorCode::ParseError, "fan frame vectors must share dimension >= 3");
  fan.frame = make_frame(fan.frame.u, fan.frame.w);
  if (fan.psi.size() != fan.n || fan.n == 0)
    fail(ErrorCode::ParseError, "fan needs n cut angles");
  if (std::abs(fan.psi[0]) > 1e-12)
    fail(ErrorCode::ParseError, "the first cut angle must be 0");
  fan.psi[0] = 0.0;
  for (std::size_t s = 1; s < fan.n; ++s) {
    if (!(fan.psi[s] > fan.psi[s - 1]) || !(fan.psi[s] < 6.283185307179586477))
      fail(ErrorCode::ParseError, "cut angles must increase strictly inside [0, 2pi)");
  }
  return fan;
}

std::string partition_report_to_json(const PartitionReport& report) {
  json root;
  root["sector_masses"] = report.sector_masses;
  root["group_masses"] = report.group_masses;
  root["residual"] = report.residual;
  root["residual_max"] = report.residual_max;
  root["equipartition_error"] = report.equipartition_error;
  root["tol"] = report.tol;
  root["pass"] = report.pass;
  if (!report.notes.empty()) root["notes"] = report.notes;
  return dump(root);
}

std::string blowup_meta_to_json(const BlowUpResult& result) {
  json root;
  json blocks = json::array();
  for (const BlowUpBlock& b : result.blocks) {
    json entry;
    entry["copy_offset"] = b.copy_offset;
    entry["codim"] = b.codim;
    blocks.push_back(std::move(entry));
  }
  root["blocks"] = std::move(blocks);
  json forms = json::array();
  for (const RationalMatrix& m : result.chosen_forms)
    forms.push_back(matrix_to_json_value(m));
  root["chosen_forms"] = std::move(forms);
  if (!result.warnings.empty()) root["warnings"] = result.warnings;
  return dump(root);
}

}  // namespace arrlab
