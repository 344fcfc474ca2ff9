#pragma once

#include <optional>
#include <string>

#include "arrlab/arrangement.hpp"
#include "arrlab/checker.hpp"
#include "arrlab/fan.hpp"
#include "arrlab/homology.hpp"
#include "arrlab/instances.hpp"

namespace arrlab {

// Arrangement file: ambient dimension, optional ambient forms, named members,
// optional group generators. Rational entries are JSON integers or "p/q"
// strings. All emitters produce key-sorted, newline-terminated JSON.
struct ArrangementFile {
  Arrangement arrangement;
  std::optional<FiniteMatrixGroup> group;
};

ArrangementFile parse_arrangement_json(const std::string& text);
std::string arrangement_to_json(const Arrangement& a, const FiniteMatrixGroup* group);
std::string instance_to_json(const PaperInstance& instance);

std::string betti_to_json(const BettiTable& table);
std::string report_to_json(const HypothesisReport& report);

std::string fan_to_json(const Fan& fan);
Fan parse_fan_json(const std::string& text);

std::string partition_report_to_json(const PartitionReport& report);

std::string blowup_meta_to_json(const BlowUpResult& result);

}  // namespace arrlab
