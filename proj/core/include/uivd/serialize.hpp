#pragma once

#include <uivd/fis.hpp>
#include <uivd/modulator.hpp>
#include <uivd/oracle.hpp>
#include <uivd/picker.hpp>
#include <uivd/recognition.hpp>
#include <uivd/reduction.hpp>

#include <string>

// JSON text forms of the public types. Rationals are written as "p/q"
// strings so models round-trip bit-exactly.

namespace uivd {

std::string to_json(const ForbiddenSubgraph& f);
ForbiddenSubgraph fis_from_json(const std::string& text);

std::string to_json(const UnitIntervalModel& m);
UnitIntervalModel model_from_json(const std::string& text);

/// {"unit_interval": true, "ordering": [...], "model": [...]}
std::string to_json(const UnitIntervalCertificate& c);

std::string to_json(const Modulator& m);

/// One JSON object per line.
std::string to_jsonl(const ReductionTrace& t);
ReductionTrace trace_from_jsonl(const std::string& text);

std::string to_json(const PickReport& r);
std::string to_json(const Solution& s);

} // namespace uivd
