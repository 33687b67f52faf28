#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "regsys/generator.hpp"
#include "regsys/progressive.hpp"
#include "regsys/serial.hpp"
#include "regsys/signal.hpp"
#include "regsys/system.hpp"

// JSON file formats and CSV waveform export.
//
// Malformed JSON, wrong types and missing fields raise ParseError. Content
// that parses but breaks an invariant (duplicate truth-table rows, keys
// outside Δ_f, non-progressive schedules) raises the owning module's error.
namespace regsys::io {

using nlohmann::json;

json to_json(const GeneratorFn& g);
GeneratorFn generator_from_json(const json& j);

json to_json(const Signal& x);
Signal signal_from_json(const json& j);

json to_json(const ProgressiveFn& rho);
ProgressiveFn progressive_from_json(const json& j);

json to_json(const RegularSystem& f);
// A "generator" given as a string is a path, resolved against base_dir.
RegularSystem system_from_json(const json& j, const std::filesystem::path& base_dir = {});

json to_json(const VerificationReport& report);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

GeneratorFn load_generator(const std::filesystem::path& path);
Signal load_signal(const std::filesystem::path& path);
ProgressiveFn load_progressive(const std::filesystem::path& path);
RegularSystem load_system(const std::filesystem::path& path);

// Header "time,bit_0,...,bit_{n-1}", a "-inf" row with the initial value,
// then one row per event time t <= horizon.
void write_csv(std::ostream& out, const Signal& x, const RatTime& horizon);

}  // namespace regsys::io
