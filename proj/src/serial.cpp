#include "regsys/serial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "regsys/error.hpp"
#include "regsys/orbit.hpp"

namespace regsys {
namespace {

std::size_t downstream_index(const RegularSystem& h, const Signal& x) {
  auto j = h.find_input(x);
  if (!j) throw CompositionError("state signal " + to_string(x) + " is not an admissible input of h");
  return *j;
}

bool contains(const std::vector<BoolVec>& v, const BoolVec& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// A signal set that remembers how each member was generated.
struct TaggedSet {
  SignalSet set;
  std::vector<SerialWitness> origin;

  void add(const Signal& z, SerialWitness w) {
    if (set.insert(z)) origin.push_back(std::move(w));
  }
  const SerialWitness& origin_of(const Signal& z) const { return origin.at(*set.index_of(z)); }
};

using TupleVisitor = std::function<void(const SerialWitness&, const Signal& composed_orbit)>;

// Walks the generation data of (h*f)(u) directly, without i and π.
void for_each_generation_tuple(const RegularSystem& f, const RegularSystem& h, std::size_t k,
                               const TupleVisitor& visit) {
  const Signal& u = f.inputs().at(k);
  const GeneratorFn composed = compose_serial(f.generator(), h.generator());
  for (const auto& mu : f.initial_states(k)) {
    for (const auto& rho : f.computations(mu, k)) {
      Signal x = orbit(f.generator(), rho, mu, u);
      const std::size_t j = downstream_index(h, x);
      for (const auto& delta : h.initial_states(j)) {
        for (const auto& rho2 : h.computations(delta, j)) {
          Signal y = orbit(h.generator(), rho2, delta, x);
          Signal z = orbit(composed, product_progressive(rho, rho2), concat(mu, delta), u);
          visit(SerialWitness{mu, rho, x, delta, rho2, y}, z);
        }
      }
    }
  }
}

TaggedSet direct_tagged(const RegularSystem& f, const RegularSystem& h, std::size_t k,
                        const TupleVisitor& also = {}) {
  TaggedSet out{SignalSet(f.state_width() + h.state_width()), {}};
  for_each_generation_tuple(f, h, k, [&](const SerialWitness& w, const Signal& z) {
    if (also) also(w, z);
    out.add(z, w);
  });
  return out;
}

TaggedSet regular_tagged(const RegularSystem& f, const RegularSystem& h, std::size_t k,
                         SerialVariant variant) {
  const Signal& u = f.inputs().at(k);
  const std::size_t n = f.state_width();
  const std::size_t p = h.state_width();
  const GeneratorFn composed = compose_serial(f.generator(), h.generator());
  TaggedSet out{SignalSet(n + p), {}};
  for (const auto& mu_delta : build_serial_initial(f, h, k, variant)) {
    for (const auto& [rho, rho2] : build_serial_computation(f, h, mu_delta, k, variant)) {
      Signal z = orbit(composed, product_progressive(rho, rho2), mu_delta, u);
      const BoolVec mu = mu_delta.head(n);
      const BoolVec delta = mu_delta.tail(p);
      Signal x = orbit(f.generator(), rho, mu, u);
      Signal y = orbit(h.generator(), rho2, delta, x);
      out.add(z, SerialWitness{mu, rho, x, delta, rho2, y});
    }
  }
  return out;
}

// First member present in one set and not the other, with its origin.
std::optional<Counterexample> set_mismatch(const std::string& check, const SignalSet& expected,
                                           const TaggedSet* expected_tags, const TaggedSet& actual,
                                           const std::string& expected_name) {
  if (auto extra = actual.set.first_missing_from(expected)) {
    return Counterexample{check, "generated via i and π but missing from the " + expected_name,
                          actual.origin_of(*extra), std::nullopt, *extra};
  }
  if (auto missing = expected.first_missing_from(actual.set)) {
    std::optional<SerialWitness> w;
    if (expected_tags) w = expected_tags->origin_of(*missing);
    return Counterexample{check, "in the " + expected_name + " but not generated via i and π", w,
                          *missing, std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(SerialVariant v) {
  switch (v) {
    case SerialVariant::kFaithful: return "faithful";
    case SerialVariant::kDropDeltaFilter: return "drop-delta-filter";
    case SerialVariant::kSingleWitness: return "single-witness";
  }
  return "unknown";
}

SerialVariant serial_variant_from_string(const std::string& name) {
  for (auto v : {SerialVariant::kFaithful, SerialVariant::kDropDeltaFilter, SerialVariant::kSingleWitness}) {
    if (to_string(v) == name) return v;
  }
  throw ValidationError("unknown construction variant '" + name + "'");
}

SignalSet serial_set_oracle(const RegularSystem& f, const RegularSystem& h, std::size_t input_index) {
  SignalSet out(f.state_width() + h.state_width());
  for (const auto& x : evaluate_system(f, input_index)) {
    for (const auto& y : evaluate_system(h, downstream_index(h, x))) {
      out.insert(product_signal(x, y));
    }
  }
  return out;
}

std::vector<BoolVec> build_serial_initial(const RegularSystem& f, const RegularSystem& h,
                                          std::size_t input_index, SerialVariant variant) {
  const Signal& u = f.inputs().at(input_index);
  std::vector<BoolVec> out;
  for (const auto& mu : f.initial_states(input_index)) {
    const auto& rhos = f.computations(mu, input_index);
    const std::size_t witnesses = variant == SerialVariant::kSingleWitness ? 1 : rhos.size();
    for (std::size_t r = 0; r < witnesses; ++r) {
      Signal x = orbit(f.generator(), rhos[r], mu, u);
      for (const auto& delta : h.initial_states(downstream_index(h, x))) {
        BoolVec pair = concat(mu, delta);
        if (!contains(out, pair)) out.push_back(pair);
      }
    }
  }
  return out;
}

std::vector<std::pair<ProgressiveFn, ProgressiveFn>> build_serial_computation(
    const RegularSystem& f, const RegularSystem& h, const BoolVec& mu_delta, std::size_t input_index,
    SerialVariant variant) {
  if (!contains(build_serial_initial(f, h, input_index, variant), mu_delta)) {
    throw ValidationError("(" + mu_delta.str() + ", input " + std::to_string(input_index) +
                          ") is outside the domain of the serial computation function");
  }
  const Signal& u = f.inputs().at(input_index);
  const BoolVec mu = mu_delta.head(f.state_width());
  const BoolVec delta = mu_delta.tail(h.state_width());

  struct Stage {
    const ProgressiveFn* rho;
    std::size_t downstream;
    bool admits_delta;
  };
  std::vector<Stage> stages;
  for (const auto& rho : f.computations(mu, input_index)) {
    const std::size_t j = downstream_index(h, orbit(f.generator(), rho, mu, u));
    stages.push_back({&rho, j, contains(h.initial_states(j), delta)});
  }

  std::vector<std::pair<ProgressiveFn, ProgressiveFn>> out;
  const Stage* witness = nullptr;
  for (const auto& s : stages) {
    if (s.admits_delta) {
      witness = &s;
      break;
    }
  }
  for (const auto& s : stages) {
    const Stage* source = &s;
    if (!s.admits_delta) {
      if (variant != SerialVariant::kDropDeltaFilter || witness == nullptr) continue;
      source = witness;
    }
    for (const auto& rho2 : h.computations(delta, source->downstream)) out.emplace_back(*s.rho, rho2);
  }
  return out;
}

SignalSet serial_regular(const RegularSystem& f, const RegularSystem& h, std::size_t input_index,
                         SerialVariant variant) {
  return regular_tagged(f, h, input_index, variant).set;
}

SignalSet serial_direct(const RegularSystem& f, const RegularSystem& h, std::size_t input_index) {
  return direct_tagged(f, h, input_index).set;
}

SignalSet classical_composition(const RegularSystem& f, const RegularSystem& h,
                                std::size_t input_index) {
  SignalSet out(h.state_width());
  for (const auto& x : evaluate_system(f, input_index)) {
    for (const auto& y : evaluate_system(h, downstream_index(h, x))) out.insert(y);
  }
  return out;
}

bool check_lemma6(const GeneratorFn& g_f, const GeneratorFn& g_h, const BoolVec& mu,
                  const BoolVec& delta, const ProgressiveFn& rho, const ProgressiveFn& rho2,
                  const Signal& u) {
  Signal x = orbit(g_f, rho, mu, u);
  Signal y = orbit(g_h, rho2, delta, x);
  Signal z = orbit(compose_serial(g_f, g_h), product_progressive(rho, rho2), concat(mu, delta), u);
  return signals_equal(product_signal(x, y), z);
}

VerificationReport verify_serial_theorem(const RegularSystem& f, const RegularSystem& h,
                                         SerialVariant variant) {
  if (auto space = check_state_space(f, h); !space) {
    throw CompositionError("f(u) is not contained in the inputs of h for input " +
                           std::to_string(space.witness->first) + ": " + to_string(space.witness->second));
  }
  VerificationReport report;
  for (std::size_t k = 0; k < f.inputs().size(); ++k) {
    CaseResult result;
    result.input_index = k;

    TaggedSet direct = direct_tagged(f, h, k, [&](const SerialWitness& w, const Signal& z) {
      Signal pair = product_signal(w.x, w.y);
      if (!signals_equal(pair, z)) {
        if (result.lemma6) {
          result.counterexample = Counterexample{"lemma6", "staged orbits differ from the composed orbit",
                                                 w, pair, z};
        }
        result.lemma6 = false;
      }
    });
    TaggedSet regular = regular_tagged(f, h, k, variant);
    SignalSet oracle = serial_set_oracle(f, h, k);

    auto lemma8 = set_mismatch("lemma8", direct.set, &direct, regular, "directly generated set");
    result.lemma8 = !lemma8;
    auto theorem22 = set_mismatch("theorem22", oracle, nullptr, regular, "serial connection");
    result.theorem22 = !theorem22;
    if (!result.counterexample) result.counterexample = lemma8 ? lemma8 : theorem22;

    report.overall = report.overall && result.passed();
    report.cases.push_back(std::move(result));
  }
  return report;
}

std::string summarize(const VerificationReport& report) {
  auto flag = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << "input " << c.input_index << ": lemma6 " << flag(c.lemma6) << ", lemma8 " << flag(c.lemma8)
        << ", theorem22 " << flag(c.theorem22) << "\n";
    if (const auto& ce = c.counterexample) {
      out << "  counterexample (" << ce->check << "): " << ce->detail << "\n";
      if (ce->witness) {
        const auto& w = *ce->witness;
        out << "    mu=" << w.mu << " delta=" << w.delta << "\n"
            << "    x=" << to_string(w.x) << "\n"
            << "    y=" << to_string(w.y) << "\n";
      }
      if (ce->expected) out << "    expected " << to_string(*ce->expected) << "\n";
      if (ce->actual) out << "    actual   " << to_string(*ce->actual) << "\n";
    }
  }
  out << "overall: " << (report.overall ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace regsys
