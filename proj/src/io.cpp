#include "regsys/io.hpp"

#include <fstream>
#include <ostream>

#include "regsys/error.hpp"

namespace regsys::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

const json& array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

RatTime rational(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_number_integer()) return RatTime(v.get<std::int64_t>());
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a rational string");
  return Rational::parse(v.get<std::string>());
}

BoolVec bits(const json& j, const char* key, std::size_t width) {
  BoolVec v = BoolVec::parse(text(j, key));
  if (v.width() != width) {
    throw DimensionError(std::string("field '") + key + "' has " + std::to_string(v.width()) +
                         " bits, expected " + std::to_string(width));
  }
  return v;
}

std::vector<TimedValue> timed_values(const json& list, const char* time_key, std::size_t width) {
  std::vector<TimedValue> out;
  for (const auto& e : list) out.push_back({rational(e, time_key), bits(e, "value", width)});
  return out;
}

json timed_values_json(const std::vector<TimedValue>& values, const char* time_key) {
  json out = json::array();
  for (const auto& e : values) out.push_back({{time_key, e.t.str()}, {"value", e.value.str()}});
  return out;
}

}  // namespace

json to_json(const GeneratorFn& g) {
  json rows = json::array();
  const std::size_t n = g.state_width();
  const std::size_t m = g.input_width();
  for (std::uint64_t r = 0; r < g.row_count(); ++r) {
    rows.push_back({{"state", BoolVec(n, r >> m).str()},
                    {"input", BoolVec(m, r & ((std::uint64_t{1} << m) - 1)).str()},
                    {"next", BoolVec(n, g.table()[r]).str()}});
  }
  json out = {{"state_width", n}, {"input_width", m}, {"rows", rows}};
  if (g.is_serial()) out["serial"] = {{"first", to_json(g.first())}, {"second", to_json(g.second())}};
  return out;
}

GeneratorFn generator_from_json(const json& j) {
  const std::size_t n = count(j, "state_width");
  const std::size_t m = count(j, "input_width");
  if (n == 0 || m == 0 || n > GeneratorFn::kMaxStateWidth || n + m > GeneratorFn::kMaxTableBits) {
    throw DimensionError("generator widths out of range");
  }
  std::vector<std::uint32_t> table(std::size_t{1} << (n + m));
  std::vector<bool> seen(table.size(), false);
  for (const auto& row : array(j, "rows")) {
    BoolVec mu = bits(row, "state", n);
    BoolVec lambda = bits(row, "input", m);
    const std::size_t r = (mu.code() << m) | lambda.code();
    if (seen[r]) {
      throw ValidationError("duplicate generator row for state " + mu.str() + ", input " + lambda.str());
    }
    seen[r] = true;
    table[r] = static_cast<std::uint32_t>(bits(row, "next", n).code());
  }
  for (std::size_t r = 0; r < seen.size(); ++r) {
    if (!seen[r]) {
      throw ValidationError("missing generator row for state " + BoolVec(n, r >> m).str() + ", input " +
                            BoolVec(m, r & ((std::size_t{1} << m) - 1)).str());
    }
  }
  GeneratorFn g(n, m, std::move(table));
  if (auto it = j.find("serial"); it != j.end()) {
    GeneratorFn composed = compose_serial(generator_from_json(field(*it, "first")),
                                          generator_from_json(field(*it, "second")));
    if (composed.table() != g.table() || composed.state_width() != n || composed.input_width() != m) {
      throw ValidationError("serial generator rows do not match the composition of its factors");
    }
    return composed;
  }
  return g;
}

json to_json(const Signal& x) {
  json tail;
  if (const auto* p = x.periodic()) {
    tail = {{"kind", "periodic"},
            {"start", p->start.str()},
            {"period", p->period.str()},
            {"pattern", timed_values_json(p->pattern, "offset")}};
  } else {
    tail = {{"kind", "constant"}};
  }
  return {{"width", x.width()},
          {"initial", x.initial().str()},
          {"switches", timed_values_json(x.switches(), "t")},
          {"tail", tail}};
}

Signal signal_from_json(const json& j) {
  const std::size_t n = count(j, "width");
  BoolVec initial = bits(j, "initial", n);
  std::vector<TimedValue> switches;
  if (j.contains("switches")) switches = timed_values(array(j, "switches"), "t", n);
  SignalTail tail = ConstantTail{};
  if (j.contains("tail")) {
    const json& t = field(j, "tail");
    const std::string kind = text(t, "kind");
    if (kind == "periodic") {
      tail = PeriodicTail{rational(t, "start"), rational(t, "period"),
                          timed_values(array(t, "pattern"), "offset", n)};
    } else if (kind != "constant") {
      throw ParseError("unknown signal tail kind '" + kind + "'");
    }
  }
  return Signal(n, initial, std::move(switches), std::move(tail));
}

json to_json(const ProgressiveFn& rho) {
  return {{"width", rho.width()},
          {"prefix", timed_values_json(rho.prefix(), "t")},
          {"tail",
           {{"start", rho.tail().start.str()},
            {"period", rho.tail().period.str()},
            {"pattern", timed_values_json(rho.tail().pattern, "offset")}}}};
}

ProgressiveFn progressive_from_json(const json& j) {
  const std::size_t n = count(j, "width");
  std::vector<TimedValue> prefix;
  if (j.contains("prefix")) prefix = timed_values(array(j, "prefix"), "t", n);
  const json& t = field(j, "tail");
  return ProgressiveFn(n, std::move(prefix),
                       ProgressiveTail{rational(t, "start"), rational(t, "period"),
                                       timed_values(array(t, "pattern"), "offset", n)});
}

json to_json(const RegularSystem& f) {
  json inputs = json::array();
  for (const auto& u : f.inputs()) inputs.push_back(to_json(u));
  json initial = json::array();
  for (const auto& e : f.initial_entries()) {
    json states = json::array();
    for (const auto& mu : e.states) states.push_back(mu.str());
    initial.push_back({{"input_index", e.input_index}, {"states", states}});
  }
  json computation = json::array();
  for (const auto& e : f.computation_entries()) {
    json rhos = json::array();
    for (const auto& rho : e.rhos) rhos.push_back(to_json(rho));
    computation.push_back({{"state", e.state.str()}, {"input_index", e.input_index}, {"rhos", rhos}});
  }
  return {{"generator", to_json(f.generator())},
          {"inputs", inputs},
          {"initial_fn", initial},
          {"computation_fn", computation}};
}

RegularSystem system_from_json(const json& j, const std::filesystem::path& base_dir) {
  const json& gj = field(j, "generator");
  GeneratorFn g = gj.is_string() ? load_generator(base_dir / gj.get<std::string>()) : generator_from_json(gj);
  const std::size_t n = g.state_width();

  std::vector<Signal> inputs;
  for (const auto& u : array(j, "inputs")) inputs.push_back(signal_from_json(u));

  std::vector<InitialEntry> initial;
  for (const auto& e : array(j, "initial_fn")) {
    std::vector<BoolVec> states;
    for (const auto& s : array(e, "states")) {
      if (!s.is_string()) throw ParseError("initial_fn states must be bit strings");
      BoolVec mu = BoolVec::parse(s.get<std::string>());
      require_width(mu, n, "initial_fn state");
      states.push_back(mu);
    }
    initial.push_back({count(e, "input_index"), std::move(states)});
  }

  std::vector<ComputationEntry> computation;
  for (const auto& e : array(j, "computation_fn")) {
    std::vector<ProgressiveFn> rhos;
    for (const auto& r : array(e, "rhos")) rhos.push_back(progressive_from_json(r));
    computation.push_back({bits(e, "state", n), count(e, "input_index"), std::move(rhos)});
  }
  return RegularSystem(std::move(g), std::move(inputs), std::move(initial), std::move(computation));
}

json to_json(const VerificationReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json entry = {{"input_index", c.input_index},
                  {"lemma6", c.lemma6},
                  {"lemma8", c.lemma8},
                  {"theorem22", c.theorem22}};
    if (const auto& ce = c.counterexample) {
      json cj = {{"check", ce->check}, {"detail", ce->detail}};
      if (ce->witness) {
        cj["witness"] = {{"mu", ce->witness->mu.str()},
                         {"rho", to_json(ce->witness->rho)},
                         {"x", to_json(ce->witness->x)},
                         {"delta", ce->witness->delta.str()},
                         {"rho2", to_json(ce->witness->rho2)},
                         {"y", to_json(ce->witness->y)}};
      }
      if (ce->expected) cj["expected"] = to_json(*ce->expected);
      if (ce->actual) cj["actual"] = to_json(*ce->actual);
      entry["counterexample"] = cj;
    }
    cases.push_back(entry);
  }
  return {{"overall", report.overall}, {"cases", cases}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

namespace {

template <typename Fn>
auto load(const std::filesystem::path& path, Fn&& fn) {
  json j = read_json_file(path);
  try {
    return fn(j);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

GeneratorFn load_generator(const std::filesystem::path& path) {
  return load(path, [](const json& j) { return generator_from_json(j); });
}

Signal load_signal(const std::filesystem::path& path) {
  return load(path, [](const json& j) { return signal_from_json(j); });
}

ProgressiveFn load_progressive(const std::filesystem::path& path) {
  return load(path, [](const json& j) { return progressive_from_json(j); });
}

RegularSystem load_system(const std::filesystem::path& path) {
  return load(path, [&](const json& j) { return system_from_json(j, path.parent_path()); });
}

void write_csv(std::ostream& out, const Signal& x, const RatTime& horizon) {
  auto row = [&](const std::string& time, const BoolVec& v) {
    out << time;
    for (std::size_t i = 0; i < v.width(); ++i) out << ',' << (v[i] ? '1' : '0');
    out << '\n';
  };
  out << "time";
  for (std::size_t i = 0; i < x.width(); ++i) out << ",bit_" << i;
  out << '\n';
  row("-inf", x.initial());
  for (const auto& t : x.event_sequence().points_until(horizon)) row(t.str(), x.at(t));
}

}  // namespace regsys::io
