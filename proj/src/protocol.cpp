// Copyright 2026 The Photonic Basis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonic/protocol.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "photonic/error.hpp"

namespace photonic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool finite(const Vec3& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

std::string vec_str(const Vec3& v) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
  return os.str();
}

bool stores_photon(const QState& s) {
  for (std::size_t i : support(s))
    if (s.basis().element(i).has_entangled_slot()) return true;
  return false;
}

class Engine {
 public:
  Engine(const QState& initial, const RunOptions& opts) : state_(initial), rng_(opts.seed.value_or(0)), opts_(opts) {}

  void apply(std::size_t step, const ProtocolStep& ps, TraceEntry& entry, Trace& trace) {
    std::visit(overloaded{
                   [&](const Prepare& p) { do_prepare(p); },
                   [&](const LaserOn& p) { do_laser(p); },
                   [&](const Wait& p) { do_wait(p, entry, trace, step); },
                   [&](const InduceTransition& p) { do_induce(p); },
                   [&](const Erase& p) { do_erase(p); },
                   [&](const Decohere& p) { do_decohere(p, entry, trace, step); },
               },
               ps.action);
  }

  const QState& state() const { return state_; }
  Vec3 ledger() const { return ledger_; }

 private:
  const Basis& basis() const { return state_.basis(); }

  void do_prepare(const Prepare& p) {
    const std::size_t i = resolve(basis(), p.element);
    state_ = window_state(state_.basis_ptr(), i).advanced(state_.time_tag());
  }

  void do_laser(const LaserOn& p) {
    if (!std::isfinite(p.duration) || p.duration < 0.0)
      throw Error(ErrorKind::invalid_argument, "laser duration must be >= 0");
    const ModeLabel& mode = basis().registry().mode(p.mode);
    Vec3 dir = mode.unit_direction();
    if (p.direction) {
      const double len = p.direction->norm();
      if (!finite(*p.direction) || len == 0.0)
        throw Error(ErrorKind::invalid_argument, "laser direction must be non-zero");
      dir = (1.0 / len) * *p.direction;
    }
    CouplingModel cm;
    for (const auto& c : p.couplings) {
      const std::size_t a = resolve(basis(), c.a);
      const std::size_t b = resolve(basis(), c.b);
      const BasisElement& ea = basis().element(a);
      const BasisElement& eb = basis().element(b);
      Complex v;
      if (c.strength) {
        v = *c.strength;
      } else {
        if (ea.labels.size() != 1 || eb.labels.size() != 1)
          throw Error(ErrorKind::invalid_argument,
                      "coupling " + basis().ket(a) + " <-> " + basis().ket(b) + " needs an explicit strength");
        v = basis().registry().transitions().get(ea.labels[0], eb.labels[0]);
      }
      if (v == Complex{})
        throw Error(ErrorKind::precondition,
                    "dark transition: " + basis().ket(a) + " <-> " + basis().ket(b) + " has zero coupling");
      cm.couple(ea, eb, v);
    }
    const Hamiltonian h = build_hamiltonian(state_.basis_ptr(), cm);
    state_ = propagate(state_, h, p.duration);
    ledger_ += mode.omega * dir;
  }

  void do_wait(const Wait& p, TraceEntry& entry, Trace& trace, std::size_t step) {
    if (p.duration && (!std::isfinite(*p.duration) || *p.duration < 0.0))
      throw Error(ErrorKind::invalid_argument, "wait duration must be >= 0");
    if (p.rate && (!std::isfinite(*p.rate) || *p.rate <= 0.0))
      throw Error(ErrorKind::invalid_argument, "decay rate must be > 0");
    if (!p.duration && !p.rate) throw Error(ErrorKind::invalid_argument, "wait needs a duration or a rate");

    if (opts_.mode == RunMode::deterministic || !p.rate) {
      state_ = state_.advanced(p.duration ? *p.duration : 1.0 / *p.rate);
      return;
    }
    std::exponential_distribution<double> life(*p.rate);
    const double tau = life(rng_);
    const double dt = p.duration ? std::min(*p.duration, tau) : tau;
    const bool fires = p.decay && (!p.duration || tau <= *p.duration);
    state_ = state_.advanced(p.duration ? *p.duration : dt);
    if (!fires) return;
    const std::size_t emit = resolve(basis(), p.decay->emit);
    if (std::abs(state_.amp(emit)) <= 1e-10) {
      trace.annotations.push_back({step, "decay channel " + basis().ket(emit) + " is empty"});
      return;
    }
    DecohereOptions o;
    o.mode = p.decay->mode;
    o.direction = p.decay->direction;
    o.R = p.decay->R;
    auto res = decohere(state_, emit, resolve(basis(), p.decay->target), o);
    record(res.record, entry, trace);
    state_ = res.residual;
  }

  void do_induce(const InduceTransition& p) {
    std::vector<Complex> amps = state_.amps();
    for (const auto& t : p.transfers) {
      if (!(t.fraction > 0.0 && t.fraction <= 1.0))
        throw Error(ErrorKind::invalid_argument, "transfer fraction must be in (0, 1]");
      const std::size_t f = resolve(basis(), t.from);
      const std::size_t g = resolve(basis(), t.to);
      if (f == g) throw Error(ErrorKind::invalid_argument, "transfer needs two distinct elements");
      const Complex a = amps[f], b = amps[g];
      if (t.fraction == 1.0) {
        // Rotation in the (from, to) plane that empties `from` and keeps the phase of `to`.
        const double r = std::hypot(std::abs(a), std::abs(b));
        if (r == 0.0) continue;
        const Complex ph = std::abs(b) > 0.0 ? b / std::abs(b) : a / std::abs(a);
        amps[f] = 0.0;
        amps[g] = r * ph;
      } else {
        const double s = std::sqrt(t.fraction), c = std::sqrt(1.0 - t.fraction);
        const Complex mi(0.0, -1.0);
        amps[f] = c * a + mi * s * b;
        amps[g] = mi * s * a + c * b;
      }
    }
    state_ = state_.with_amps(std::move(amps));
  }

  void do_erase(const Erase& p) {
    std::vector<std::size_t> idx;
    for (const auto& e : p.elements) idx.push_back(resolve(basis(), e));
    state_ = erase(state_, idx, p.renormalize);
  }

  void do_decohere(const Decohere& p, TraceEntry& entry, Trace& trace, std::size_t step) {
    const std::size_t emit = resolve(basis(), p.emit);
    const std::size_t target = resolve(basis(), p.target);
    DecohereOptions o;
    o.mode = p.mode;
    o.R = p.R;
    if (p.rule == DirectionRule::explicit_vector) {
      o.direction = p.direction;
    } else if (p.rule == DirectionRule::conserve) {
      if (ledger_.norm() == 0.0)
        throw Error(ErrorKind::precondition, "momentum ledger is empty; no direction to conserve");
      o.direction = ledger_;
    }
    auto res = decohere(state_, emit, target, o);
    if (p.rule == DirectionRule::conserve) {
      if (std::abs(ledger_.norm() - res.record.mode.omega) > kResonanceTol)
        throw Error(ErrorKind::precondition, "ledger " + vec_str(ledger_) + " cannot be carried by one " +
                                                 res.record.mode.id + " photon");
      res.record.k = ledger_;
    }
    if (p.induced) {
      trace.annotations.push_back({step, "induced emission of one " + res.record.mode.id + " photon along " +
                                             vec_str(res.record.direction) + " (carries one photon in excess)"});
    } else {
      record(res.record, entry, trace);
    }
    state_ = p.branch == Branch::residual ? res.residual : res.emitted_branch;
  }

  void record(const EmissionRecord& rec, TraceEntry& entry, Trace& trace) {
    ledger_ -= rec.k;
    entry.emissions.push_back(rec);
    trace.emissions.push_back(rec);
  }

  QState state_;
  Vec3 ledger_;
  std::mt19937_64 rng_;
  RunOptions opts_;
};

}  // namespace

std::size_t resolve(const Basis& b, const ElementRef& ref) {
  if (const auto* i = std::get_if<std::size_t>(&ref)) {
    if (*i >= b.size())
      throw Error(ErrorKind::not_found, "basis index " + std::to_string(*i) + " out of range");
    return *i;
  }
  return b.index_of(b.complete(std::get<BasisElement>(ref)));
}

std::string kind_name(const StepAction& a) {
  static const char* names[] = {"prepare", "laser_on", "wait", "induce_transition", "erase", "decohere"};
  return names[a.index()];
}

Trace run(const QState& initial, const std::vector<ProtocolStep>& steps, const RunOptions& opts) {
  if (opts.mode == RunMode::stochastic && !opts.seed)
    throw Error(ErrorKind::invalid_argument, "stochastic mode needs a seed");
  Engine engine(initial, opts);
  Trace trace;
  trace.entries.push_back({0, "initial", "initial", initial, {}, 0, {}, stores_photon(initial)});
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ProtocolStep& ps = steps[i];
    TraceEntry entry{i + 1, ps.label, kind_name(ps.action), initial, {}, 0, {}, false};
    try {
      engine.apply(i, ps, entry, trace);
    } catch (const StepError&) {
      throw;
    } catch (const std::exception& e) {
      throw StepError(i, (ps.label.empty() ? kind_name(ps.action) : ps.label) + ": " + e.what());
    }
    if (!ps.note.empty()) trace.annotations.push_back({i, ps.note});
    entry.state = engine.state();
    entry.emission_count = trace.emissions.size();
    entry.momentum = engine.ledger();
    entry.finite_lifetime = stores_photon(entry.state);
    trace.entries.push_back(std::move(entry));
  }
  return trace;
}

std::vector<TemplateMismatch> check_templates(const Trace& trace, const std::vector<SupportTemplate>& templates,
                                              double tol) {
  std::vector<TemplateMismatch> out;
  for (const auto& t : templates) {
    if (t.entry >= trace.entries.size()) {
      out.push_back({t.label, t.entry, "trace has only " + std::to_string(trace.entries.size()) + " entries"});
      continue;
    }
    const QState& s = trace.entries[t.entry].state;
    std::set<std::size_t> listed;
    for (const auto& e : t.entries) {
      std::size_t i = 0;
      try {
        i = resolve(s.basis(), e.element);
      } catch (const Error& err) {
        out.push_back({t.label, t.entry, err.what()});
        continue;
      }
      listed.insert(i);
      const double mag = std::abs(s.amp(i));
      bool ok = false;
      switch (e.expect) {
        case '1': ok = std::abs(mag - 1.0) <= 1e-9; break;
        case 'C': ok = mag > tol; break;
        case '0': ok = mag <= tol; break;
        default: break;
      }
      if (!ok) {
        std::ostringstream os;
        os.precision(12);
        os << s.basis().ket(i) << ": expected " << e.expect << ", |amp| = " << mag;
        out.push_back({t.label, t.entry, os.str()});
      }
    }
    if (!t.strict) continue;
    for (std::size_t i : support(s, tol))
      if (!listed.contains(i))
        out.push_back({t.label, t.entry, s.basis().ket(i) + ": unlisted element is nonzero"});
  }
  return out;
}

}  // namespace photonic
