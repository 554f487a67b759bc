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

#include "photonic/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "photonic/error.hpp"
#include "photonic/spin.hpp"

namespace photonic {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::parse, (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& need(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(sub(path, key), "missing field");
  return *it;
}

const json* opt(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Complex cnum(const json& j, const std::string& path) {
  if (j.is_number()) return num(j, path);
  if (j.is_array() && j.size() == 2) return {num(j[0], at(path, 0)), num(j[1], at(path, 1))};
  fail(path, "expected a number or [re, im]");
}

Vec3 vec(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [x, y, z]");
  return {num(j[0], at(path, 0)), num(j[1], at(path, 1)), num(j[2], at(path, 2))};
}

ENKey key(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [j, k]");
  return {integer(j[0], at(path, 0)), integer(j[1], at(path, 1))};
}

// Wraps library errors raised while building objects from a JSON node.
template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

BasisElement element_from(const json& j, const std::string& path) {
  BasisElement e;
  e.partition = str(need(j, path, "partition"), sub(path, "partition"));
  const json& labels = array(need(j, path, "labels"), sub(path, "labels"));
  for (std::size_t i = 0; i < labels.size(); ++i) e.labels.push_back(key(labels[i], at(sub(path, "labels"), i)));
  if (const json* ph = opt(j, path, "photons")) {
    array(*ph, sub(path, "photons"));
    for (std::size_t i = 0; i < ph->size(); ++i) {
      const std::string p = at(sub(path, "photons"), i);
      PhotonSlot s;
      s.mode = str(need((*ph)[i], p, "mode"), sub(p, "mode"));
      s.n = integer(need((*ph)[i], p, "n"), sub(p, "n"));
      if (const json* g = opt((*ph)[i], p, "guise")) {
        const std::string gs = str(*g, sub(p, "guise"));
        if (gs == "product") s.guise = Guise::product;
        else if (gs == "entangled") s.guise = Guise::entangled;
        else fail(sub(p, "guise"), "expected \"product\" or \"entangled\"");
      }
      e.photons.push_back(s);
    }
  }
  if (const json* ph = opt(j, path, "phase")) {
    const std::string p = str(*ph, sub(path, "phase"));
    if (p == "incoming") e.phase = PhaseTag::incoming;
    else if (p == "outgoing") e.phase = PhaseTag::outgoing;
    else if (p != "none") fail(sub(path, "phase"), "expected incoming, outgoing or none");
  }
  return e;
}

ElementRef ref_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.get<long long>() < 0) fail(path, "index must be >= 0");
    return static_cast<std::size_t>(j.get<long long>());
  }
  return element_from(j, path);
}

ordered_json element_json(const BasisElement& e) {
  ordered_json j;
  j["partition"] = e.partition;
  ordered_json labels = ordered_json::array();
  for (ENKey k : e.labels) labels.push_back({k.j, k.k});
  j["labels"] = labels;
  ordered_json ph = ordered_json::array();
  for (const auto& s : e.photons) {
    if (s.n == 0 && s.guise == Guise::product) continue;  // implied vacuum
    ph.push_back({{"mode", s.mode}, {"n", s.n}, {"guise", s.guise == Guise::product ? "product" : "entangled"}});
  }
  j["photons"] = ph;
  if (e.phase != PhaseTag::none) j["phase"] = e.phase == PhaseTag::incoming ? "incoming" : "outgoing";
  return j;
}

ordered_json ref_json(const ElementRef& r) {
  if (const auto* i = std::get_if<std::size_t>(&r)) return *i;
  return element_json(std::get<BasisElement>(r));
}

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

ordered_json cnum_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return ordered_json::array({z.real(), z.imag()});
}

std::shared_ptr<const Basis> basis_from(const json& doc, const std::string& root) {
  std::vector<ENLabel> levels;
  const json& lv = array(need(doc, root, "levels"), sub(root, "levels"));
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const std::string p = at(sub(root, "levels"), i);
    const int j = integer(need(lv[i], p, "j"), sub(p, "j"));
    const int k = integer(need(lv[i], p, "k"), sub(p, "k"));
    const double e = num(need(lv[i], p, "energy"), sub(p, "energy"));
    levels.push_back(guarded(p, [&] { return ENLabel::make(j, k, e); }));
  }
  std::vector<ModeLabel> modes;
  if (const json* md = opt(doc, root, "modes")) {
    array(*md, sub(root, "modes"));
    for (std::size_t i = 0; i < md->size(); ++i) {
      const std::string p = at(sub(root, "modes"), i);
      const std::string id = str(need((*md)[i], p, "id"), sub(p, "id"));
      const double w = num(need((*md)[i], p, "omega"), sub(p, "omega"));
      const json* d = opt((*md)[i], p, "dir");
      const Vec3 dir = d ? vec(*d, sub(p, "dir")) : Vec3{0.0, 0.0, 1.0};
      modes.push_back(guarded(p, [&] { return ModeLabel::make(id, w, dir); }));
    }
  }
  TransitionIntegrals t;
  if (const json* cp = opt(doc, root, "couplings")) {
    array(*cp, sub(root, "couplings"));
    for (std::size_t i = 0; i < cp->size(); ++i) {
      const std::string p = at(sub(root, "couplings"), i);
      t.set(key(need((*cp)[i], p, "from"), sub(p, "from")), key(need((*cp)[i], p, "to"), sub(p, "to")),
            cnum(need((*cp)[i], p, "value"), sub(p, "value")));
    }
  }
  auto reg = guarded(root, [&] { return std::make_shared<const Registry>(levels, modes, t); });

  std::vector<PartitionScheme> parts;
  if (const json* pt = opt(doc, root, "partitions")) {
    array(*pt, sub(root, "partitions"));
    for (std::size_t i = 0; i < pt->size(); ++i) {
      const std::string p = at(sub(root, "partitions"), i);
      const std::string id = str(need((*pt)[i], p, "id"), sub(p, "id"));
      std::vector<std::vector<int>> blocks;
      const json& bl = array(need((*pt)[i], p, "blocks"), sub(p, "blocks"));
      for (std::size_t b = 0; b < bl.size(); ++b) {
        std::vector<int> block;
        for (std::size_t c = 0; c < array(bl[b], at(sub(p, "blocks"), b)).size(); ++c)
          block.push_back(integer(bl[b][c], at(at(sub(p, "blocks"), b), c)));
        blocks.push_back(block);
      }
      std::vector<std::vector<ENKey>> labels;
      const json& lb = array(need((*pt)[i], p, "labels"), sub(p, "labels"));
      for (std::size_t b = 0; b < lb.size(); ++b) {
        std::vector<ENKey> ks;
        for (std::size_t c = 0; c < array(lb[b], at(sub(p, "labels"), b)).size(); ++c)
          ks.push_back(key(lb[b][c], at(at(sub(p, "labels"), b), c)));
        labels.push_back(ks);
      }
      parts.push_back(guarded(p, [&] { return PartitionScheme::make(id, blocks, labels); }));
    }
  } else {
    std::vector<ENKey> all;
    for (const auto& l : levels) all.push_back(l.key());
    parts.push_back(guarded(root, [&] { return PartitionScheme::make("A", {{1}}, {all}); }));
  }

  if (const json* el = opt(doc, root, "elements")) {
    array(*el, sub(root, "elements"));
    std::vector<BasisElement> elements;
    for (std::size_t i = 0; i < el->size(); ++i) elements.push_back(element_from((*el)[i], at(sub(root, "elements"), i)));
    return guarded(sub(root, "elements"), [&] {
      auto probe = std::make_shared<const Basis>(reg, parts, std::vector<BasisElement>{});
      for (auto& e : elements) e = probe->complete(e);
      return std::make_shared<const Basis>(reg, parts, elements);
    });
  }
  int n_max = 1;
  if (const json* n = opt(doc, root, "n_max")) n_max = integer(*n, sub(root, "n_max"));
  return guarded(root, [&] { return enumerate_basis(reg, parts, n_max); });
}

ordered_json basis_config_json(const Basis& b) {
  ordered_json j;
  ordered_json levels = ordered_json::array();
  for (const auto& l : b.registry().levels()) levels.push_back({{"j", l.j}, {"k", l.k_sub}, {"energy", l.energy}});
  j["levels"] = levels;
  ordered_json modes = ordered_json::array();
  for (const auto& m : b.registry().modes())
    modes.push_back({{"id", m.id}, {"omega", m.omega}, {"dir", vec_json(m.unit_direction())}});
  j["modes"] = modes;
  ordered_json cps = ordered_json::array();
  for (const auto& [k, v] : b.registry().transitions().entries())
    cps.push_back({{"from", {k.first.j, k.first.k}}, {"to", {k.second.j, k.second.k}}, {"value", cnum_json(v)}});
  j["couplings"] = cps;
  ordered_json parts = ordered_json::array();
  for (const auto& p : b.partitions()) {
    ordered_json labels = ordered_json::array();
    for (const auto& bl : p.block_labels) {
      ordered_json ks = ordered_json::array();
      for (ENKey k : bl) ks.push_back({k.j, k.k});
      labels.push_back(ks);
    }
    parts.push_back({{"id", p.id}, {"blocks", p.blocks}, {"labels", labels}});
  }
  j["partitions"] = parts;
  if (b.n_max()) {
    j["n_max"] = *b.n_max();
  } else {
    ordered_json el = ordered_json::array();
    for (const auto& e : b.elements()) el.push_back(element_json(e));
    j["elements"] = el;
  }
  return j;
}

std::optional<Vec3> opt_vec(const json& j, const std::string& path, const char* k) {
  if (const json* v = opt(j, path, k)) return vec(*v, sub(path, k));
  return std::nullopt;
}

std::optional<std::string> opt_str(const json& j, const std::string& path, const char* k) {
  if (const json* v = opt(j, path, k)) return str(*v, sub(path, k));
  return std::nullopt;
}

ProtocolStep step_from(const json& j, const std::string& path) {
  const std::string kind = str(need(j, path, "kind"), sub(path, "kind"));
  ProtocolStep ps;
  if (const json* l = opt(j, path, "label")) ps.label = str(*l, sub(path, "label"));
  if (const json* n = opt(j, path, "note")) ps.note = str(*n, sub(path, "note"));
  if (kind == "prepare") {
    ps.action = Prepare{ref_from(need(j, path, "element"), sub(path, "element"))};
  } else if (kind == "laser_on") {
    LaserOn l;
    l.mode = str(need(j, path, "mode"), sub(path, "mode"));
    l.direction = opt_vec(j, path, "direction");
    l.duration = num(need(j, path, "duration"), sub(path, "duration"));
    if (const json* c = opt(j, path, "couplings")) {
      array(*c, sub(path, "couplings"));
      for (std::size_t i = 0; i < c->size(); ++i) {
        const std::string p = at(sub(path, "couplings"), i);
        DriveCoupling d{ref_from(need((*c)[i], p, "a"), sub(p, "a")), ref_from(need((*c)[i], p, "b"), sub(p, "b")),
                        std::nullopt};
        if (const json* s = opt((*c)[i], p, "strength")) d.strength = cnum(*s, sub(p, "strength"));
        l.couplings.push_back(std::move(d));
      }
    }
    ps.action = std::move(l);
  } else if (kind == "wait") {
    Wait w;
    if (const json* d = opt(j, path, "duration")) w.duration = num(*d, sub(path, "duration"));
    if (const json* r = opt(j, path, "rate")) w.rate = num(*r, sub(path, "rate"));
    if (const json* d = opt(j, path, "decay")) {
      const std::string p = sub(path, "decay");
      DecayChannel c{ref_from(need(*d, p, "emit"), sub(p, "emit")), ref_from(need(*d, p, "target"), sub(p, "target")),
                     opt_str(*d, p, "mode"), opt_vec(*d, p, "direction"), opt_vec(*d, p, "R").value_or(Vec3{})};
      w.decay = std::move(c);
    }
    ps.action = std::move(w);
  } else if (kind == "induce_transition") {
    InduceTransition t;
    const json& tr = array(need(j, path, "transfers"), sub(path, "transfers"));
    for (std::size_t i = 0; i < tr.size(); ++i) {
      const std::string p = at(sub(path, "transfers"), i);
      Transfer x{ref_from(need(tr[i], p, "from"), sub(p, "from")), ref_from(need(tr[i], p, "to"), sub(p, "to")), 1.0};
      if (const json* f = opt(tr[i], p, "fraction")) x.fraction = num(*f, sub(p, "fraction"));
      t.transfers.push_back(std::move(x));
    }
    ps.action = std::move(t);
  } else if (kind == "erase") {
    Erase e;
    const json& el = array(need(j, path, "elements"), sub(path, "elements"));
    for (std::size_t i = 0; i < el.size(); ++i) e.elements.push_back(ref_from(el[i], at(sub(path, "elements"), i)));
    if (const json* r = opt(j, path, "renormalize")) e.renormalize = boolean(*r, sub(path, "renormalize"));
    ps.action = std::move(e);
  } else if (kind == "decohere") {
    Decohere d;
    d.emit = ref_from(need(j, path, "emit"), sub(path, "emit"));
    d.target = ref_from(need(j, path, "target"), sub(path, "target"));
    d.mode = opt_str(j, path, "mode");
    if (const json* dir = opt(j, path, "direction")) {
      if (dir->is_string()) {
        if (dir->get<std::string>() != "conserve") fail(sub(path, "direction"), "expected [x, y, z] or \"conserve\"");
        d.rule = DirectionRule::conserve;
      } else {
        d.rule = DirectionRule::explicit_vector;
        d.direction = vec(*dir, sub(path, "direction"));
      }
    }
    d.R = opt_vec(j, path, "R").value_or(Vec3{});
    if (const json* b = opt(j, path, "branch")) {
      const std::string bs = str(*b, sub(path, "branch"));
      if (bs == "residual") d.branch = Branch::residual;
      else if (bs == "emitted") d.branch = Branch::emitted;
      else fail(sub(path, "branch"), "expected \"residual\" or \"emitted\"");
    }
    if (const json* i = opt(j, path, "induced")) d.induced = boolean(*i, sub(path, "induced"));
    ps.action = std::move(d);
  } else {
    fail(sub(path, "kind"), "unknown step kind '" + kind + "'");
  }
  return ps;
}

ordered_json step_json(const ProtocolStep& ps) {
  ordered_json j;
  j["kind"] = kind_name(ps.action);
  j["label"] = ps.label;
  if (!ps.note.empty()) j["note"] = ps.note;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Prepare>) {
          j["element"] = ref_json(a.element);
        } else if constexpr (std::is_same_v<T, LaserOn>) {
          j["mode"] = a.mode;
          if (a.direction) j["direction"] = vec_json(*a.direction);
          ordered_json cs = ordered_json::array();
          for (const auto& c : a.couplings) {
            ordered_json x{{"a", ref_json(c.a)}, {"b", ref_json(c.b)}};
            if (c.strength) x["strength"] = cnum_json(*c.strength);
            cs.push_back(x);
          }
          j["couplings"] = cs;
          j["duration"] = a.duration;
        } else if constexpr (std::is_same_v<T, Wait>) {
          if (a.duration) j["duration"] = *a.duration;
          if (a.rate) j["rate"] = *a.rate;
          if (a.decay) {
            ordered_json d{{"emit", ref_json(a.decay->emit)}, {"target", ref_json(a.decay->target)}};
            if (a.decay->mode) d["mode"] = *a.decay->mode;
            if (a.decay->direction) d["direction"] = vec_json(*a.decay->direction);
            d["R"] = vec_json(a.decay->R);
            j["decay"] = d;
          }
        } else if constexpr (std::is_same_v<T, InduceTransition>) {
          ordered_json ts = ordered_json::array();
          for (const auto& t : a.transfers)
            ts.push_back({{"from", ref_json(t.from)}, {"to", ref_json(t.to)}, {"fraction", t.fraction}});
          j["transfers"] = ts;
        } else if constexpr (std::is_same_v<T, Erase>) {
          ordered_json es = ordered_json::array();
          for (const auto& e : a.elements) es.push_back(ref_json(e));
          j["elements"] = es;
          j["renormalize"] = a.renormalize;
        } else {
          j["emit"] = ref_json(a.emit);
          j["target"] = ref_json(a.target);
          if (a.mode) j["mode"] = *a.mode;
          if (a.rule == DirectionRule::conserve) j["direction"] = "conserve";
          if (a.rule == DirectionRule::explicit_vector) j["direction"] = vec_json(a.direction);
          j["R"] = vec_json(a.R);
          j["branch"] = a.branch == Branch::residual ? "residual" : "emitted";
          j["induced"] = a.induced;
        }
      },
      ps.action);
  return j;
}

std::vector<SupportTemplate> templates_from(const json& j, const std::string& path) {
  std::vector<SupportTemplate> out;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    SupportTemplate t;
    if (const json* l = opt(j[i], p, "label")) t.label = str(*l, sub(p, "label"));
    const int e = integer(need(j[i], p, "entry"), sub(p, "entry"));
    if (e < 0) fail(sub(p, "entry"), "must be >= 0");
    t.entry = static_cast<std::size_t>(e);
    if (const json* s = opt(j[i], p, "strict")) t.strict = boolean(*s, sub(p, "strict"));
    const json& es = array(need(j[i], p, "entries"), sub(p, "entries"));
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string q = at(sub(p, "entries"), k);
      const std::string ex = str(need(es[k], q, "expect"), sub(q, "expect"));
      if (ex != "1" && ex != "C" && ex != "0") fail(sub(q, "expect"), "expected \"1\", \"C\" or \"0\"");
      t.entries.push_back({ref_from(need(es[k], q, "element"), sub(q, "element")), ex[0]});
    }
    out.push_back(std::move(t));
  }
  return out;
}

ordered_json templates_json(const std::vector<SupportTemplate>& ts, const Basis& basis) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : ts) {
    ordered_json es = ordered_json::array();
    for (const auto& e : t.entries) {
      const std::size_t i = resolve(basis, e.element);
      es.push_back({{"element", element_json(basis.element(i))}, {"index", i}, {"expect", std::string(1, e.expect)}});
    }
    arr.push_back({{"label", t.label}, {"entry", t.entry}, {"strict", t.strict}, {"entries", es}});
  }
  return arr;
}

std::string row(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ',';
    out += c;
    first = false;
  }
  return out + "\n";
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::shared_ptr<const Basis> basis_from_config(const std::string& json_text) {
  return basis_from(parse_text(json_text), "");
}

Script script_from_json(const std::string& json_text, const std::filesystem::path& base_dir) {
  const json doc = parse_text(json_text);
  const json& cfg = need(doc, "", "basis_config");
  std::shared_ptr<const Basis> basis;
  if (cfg.is_string()) {
    std::filesystem::path p = cfg.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    std::ifstream in(p);
    if (!in) fail("basis_config", "cannot read '" + p.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      basis = basis_from_config(ss.str());
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, p.string() + ": " + e.what());
    }
  } else {
    basis = basis_from(cfg, "basis_config");
  }
  const ElementRef init = ref_from(need(doc, "", "initial"), "initial");
  QState initial = guarded("initial", [&] { return window_state(basis, resolve(*basis, init)); });

  std::vector<ProtocolStep> steps;
  if (const json* st = opt(doc, "", "steps")) {
    array(*st, "steps");
    for (std::size_t i = 0; i < st->size(); ++i) steps.push_back(step_from((*st)[i], at("steps", i)));
  }
  RunOptions o;
  if (const json* m = opt(doc, "", "mode")) {
    const std::string ms = str(*m, "mode");
    if (ms == "stochastic") o.mode = RunMode::stochastic;
    else if (ms != "deterministic") fail("mode", "expected \"deterministic\" or \"stochastic\"");
  }
  if (const json* s = opt(doc, "", "seed")) {
    if (!s->is_number_unsigned()) fail("seed", "expected a non-negative integer");
    o.seed = s->get<std::uint64_t>();
  }
  std::vector<SupportTemplate> ts;
  if (const json* t = opt(doc, "", "templates")) ts = templates_from(*t, "templates");
  return {basis, initial, std::move(steps), o, std::move(ts)};
}

std::string script_to_json(const Scenario& s, RunOptions options) {
  ordered_json j;
  j["name"] = s.name;
  j["basis_config"] = basis_config_json(*s.basis);
  const auto sup = support(s.initial);
  if (sup.size() != 1) throw Error(ErrorKind::precondition, "only window initial states can be exported");
  j["initial"] = element_json(s.basis->element(sup.front()));
  ordered_json steps = ordered_json::array();
  for (const auto& st : s.steps) steps.push_back(step_json(st));
  j["steps"] = steps;
  j["mode"] = options.mode == RunMode::stochastic ? "stochastic" : "deterministic";
  if (options.seed) j["seed"] = *options.seed;
  return j.dump(1) + "\n";
}

Scenario builtin_scenario(const std::string& name, const std::string& params_json) {
  const json doc = params_json.empty() ? json::object() : parse_text(params_json);
  if (!doc.is_object()) fail("", "parameters must be an object");
  auto get_num = [&](const char* k, double& v) {
    if (const json* x = opt(doc, "", k)) v = num(*x, k);
  };
  auto get_vec = [&](const char* k, Vec3& v) {
    if (const json* x = opt(doc, "", k)) v = vec(*x, k);
  };
  auto get_opt_vec = [&](const char* k, std::optional<Vec3>& v) {
    auto it = doc.find(k);
    if (it == doc.end()) return;
    if (it->is_null()) v.reset();
    else v = vec(*it, k);
  };
  std::set<std::string> known;
  auto check_known = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) known.insert(k);
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (!known.contains(it.key())) fail(it.key(), "unknown parameter for builtin '" + name + "'");
  };
  if (name == "lambda") {
    check_known({"e1", "e2", "drive", "duration", "k", "k_perp", "R"});
    LambdaParams p;
    get_num("e1", p.e1);
    get_num("e2", p.e2);
    get_num("drive", p.drive);
    get_num("duration", p.duration);
    get_vec("k", p.k);
    get_vec("k_perp", p.k_perp);
    get_vec("R", p.R);
    return lambda_scenario(p);
  }
  if (name == "halted-light") {
    check_known({"e1", "e2", "drive", "duration", "delay", "revival", "k_forward", "k_plus", "k_minus", "R"});
    HaltedLightParams p;
    get_num("e1", p.e1);
    get_num("e2", p.e2);
    get_num("drive", p.drive);
    get_num("duration", p.duration);
    get_num("delay", p.delay);
    if (const json* r = opt(doc, "", "revival")) p.revival = boolean(*r, "revival");
    get_opt_vec("k_forward", p.k_forward);
    get_opt_vec("k_plus", p.k_plus);
    get_opt_vec("k_minus", p.k_minus);
    get_vec("R", p.R);
    return halted_light_scenario(p);
  }
  if (name == "dissociation") {
    check_known({"outcome", "drive", "drive_strength", "duration", "wait", "k_in", "R"});
    DissociationParams p;
    if (const json* o = opt(doc, "", "outcome")) p.outcome = integer(*o, "outcome");
    if (const json* d = opt(doc, "", "drive")) p.drive = boolean(*d, "drive");
    get_num("drive_strength", p.drive_strength);
    get_num("duration", p.duration);
    get_num("wait", p.wait);
    get_vec("k_in", p.k_in);
    get_vec("R", p.R);
    return one_photon_dissociation_scenario(p);
  }
  throw Error(ErrorKind::invalid_argument, "unknown builtin '" + name + "' (lambda, halted-light, dissociation)");
}

std::vector<SupportTemplate> templates_from_json(const std::string& json_text) {
  const json doc = parse_text(json_text);
  if (doc.is_array()) return templates_from(doc, "templates");
  return templates_from(need(doc, "", "templates"), "templates");
}

std::string templates_to_json(const std::vector<SupportTemplate>& templates, const Basis& basis) {
  ordered_json j;
  j["templates"] = templates_json(templates, basis);
  return j.dump(1) + "\n";
}

std::string trace_to_csv(const Trace& t) {
  std::string out = "step,time,kind,index,re,im,mode,kx,ky,kz,Rx,Ry,Rz\n";
  for (const auto& e : t.entries) {
    const std::string step = std::to_string(e.step), time = fmt(e.state.time_tag());
    for (std::size_t i = 0; i < e.state.size(); ++i) {
      const Complex a = e.state.amp(i);
      if (a == Complex{}) continue;
      out += row({step, time, "amp", std::to_string(i), fmt(a.real()), fmt(a.imag()), "", "", "", "", "", "", ""});
    }
    for (const auto& r : e.emissions) {
      out += row({step, time, "emission", std::to_string(r.source_index), fmt(r.amplitude.real()),
                  fmt(r.amplitude.imag()), r.mode.id, fmt(r.k.x), fmt(r.k.y), fmt(r.k.z), fmt(r.R.x), fmt(r.R.y),
                  fmt(r.R.z)});
    }
    for (const auto& a : t.annotations)
      if (a.step + 1 == e.step)
        out += row({step, time, "annotation", "", "", "", quote(a.text), "", "", "", "", "", ""});
    out += row({step, time, "ledger", "", "", "", "", fmt(e.momentum.x), fmt(e.momentum.y), fmt(e.momentum.z), "",
                "", ""});
  }
  return out;
}

SecularConfig secular_from_json(const std::string& json_text) {
  const json doc = parse_text(json_text);
  SecularConfig cfg;
  if (const json* th = opt(doc, "", "threshold")) cfg.threshold = num(*th, "threshold");
  if (const json* m = opt(doc, "", "matrix")) {
    if (!m->is_array() || m->size() != 4) fail("matrix", "expected a 4x4 array");
    cfg.matrix = CMatrix(4);
    for (std::size_t r = 0; r < 4; ++r) {
      if (!(*m)[r].is_array() || (*m)[r].size() != 4) fail(at("matrix", r), "expected 4 entries");
      for (std::size_t c = 0; c < 4; ++c) cfg.matrix(r, c) = cnum((*m)[r][c], at(at("matrix", r), c));
    }
    if (!cfg.matrix.is_hermitian(1e-12)) throw Error(ErrorKind::invalid_argument, "matrix: not Hermitian");
    return cfg;
  }
  FourStateParams p;
  if (const json* e = opt(doc, "", "levels")) {
    if (!e->is_array() || e->size() != 4) fail("levels", "expected [E0, E1, E2, E3]");
    p.e0 = num((*e)[0], "levels[0]");
    p.e1 = num((*e)[1], "levels[1]");
    p.e2 = num((*e)[2], "levels[2]");
    p.e3 = num((*e)[3], "levels[3]");
  }
  if (const json* v = opt(doc, "", "V01")) p.v01 = cnum(*v, "V01");
  if (const json* v = opt(doc, "", "V12")) p.v12 = cnum(*v, "V12");
  if (const json* v = opt(doc, "", "V13")) p.v13 = cnum(*v, "V13");
  cfg.matrix = four_state_matrix(p);
  return cfg;
}

bool SecularReport::passed() const {
  for (const auto& c : claims)
    if (c.verdict == "FAIL") return false;
  return true;
}

std::string SecularReport::to_csv() const {
  std::string out = "index,eigenvalue\n";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) out += row({std::to_string(i), fmt(eigenvalues[i])});
  out += "anchor,anchor_level,root_index,root_eigenvalue,abs_c0,abs_c1,abs_c2,abs_c3,ratio_c2_c3,order,verdict\n";
  for (const auto& c : claims) {
    std::string order;
    for (int k : c.order) order += (order.empty() ? "" : " ") + std::to_string(k);
    out += row({c.anchor_name, fmt(c.anchor), std::to_string(c.root_index), fmt(c.root_value), fmt(c.abs_c[0]),
                fmt(c.abs_c[1]), fmt(c.abs_c[2]), fmt(c.abs_c[3]), c.ratio ? fmt(*c.ratio) : "N/A", order,
                c.verdict});
  }
  return out;
}

SecularReport secular_report(const SecularConfig& cfg) {
  if (cfg.matrix.dim() != 4) throw Error(ErrorKind::invalid_argument, "secular model must be 4x4");
  SecularReport rep;
  bool coupled = false;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c && cfg.matrix(r, c) != Complex{}) coupled = true;
  const struct {
    const char* name;
    std::size_t level;
  } anchors[] = {{"E1", 1}, {"E0", 0}};
  for (const auto& a : anchors) {
    const double anchor = cfg.matrix(a.level, a.level).real();
    const SecularSolution sol = solve_secular(cfg.matrix, anchor);
    if (rep.eigenvalues.empty()) rep.eigenvalues = sol.eigenvalues;
    SecularClaim c;
    c.anchor_name = a.name;
    c.anchor = anchor;
    c.root_index = sol.root_index;
    c.root_value = sol.eigenvalues[sol.root_index];
    for (const auto& z : sol.root_vector()) c.abs_c.push_back(std::abs(z));
    c.order = {1, 2, 3};
    std::stable_sort(c.order.begin(), c.order.end(), [&](int x, int y) { return c.abs_c[x] > c.abs_c[y]; });
    if (c.abs_c[3] > 0.0) c.ratio = c.abs_c[2] / c.abs_c[3];
    if (!coupled) {
      c.verdict = "N/A";
    } else if (a.level == 1) {
      c.verdict = c.order == std::vector<int>{1, 2, 3} && c.ratio && *c.ratio >= cfg.threshold ? "PASS" : "FAIL";
    } else {
      c.verdict = c.abs_c[3] > c.abs_c[2] ? "PASS" : "FAIL";
    }
    rep.claims.push_back(std::move(c));
  }
  return rep;
}

std::string atto_to_csv(const AttoState& a) {
  std::string out = "harmonic,omega,index,re,im\n";
  for (std::size_t s = 0; s < a.omegas.size(); ++s) {
    const Complex z = a.state.amp(a.root_indices[s]);
    out += row({std::to_string(s), fmt(a.omegas[s]), std::to_string(a.root_indices[s]), fmt(z.real()), fmt(z.imag())});
  }
  return out;
}

std::string slits_to_csv(const std::vector<SlitSample>& pattern) {
  std::string out = "x,intensity\n";
  for (const auto& s : pattern) out += row({fmt(s.x), fmt(s.intensity)});
  out += "# visibility," + fmt(visibility(pattern)) + "\n";
  return out;
}

std::string spin_report() {
  std::string out;
  const std::vector<SpinSpaceFunction> fs{singlet(), triplet(1), triplet(0), triplet(-1)};
  for (const auto& f : fs) {
    const auto sw = permute_labels(f, PermuteWhich::spin);
    const auto sp = permute_labels(f, PermuteWhich::space);
    const auto both = permute_labels(f, PermuteWhich::both);
    auto parity = [&](const SpinSpaceFunction& g) { return std::real(inner(f, g)) > 0 ? "+" : "-"; };
    out += pretty(f) + "\n";
    out += "  S^2 = " + fmt(s2_expectation(f)) + ", S_z = " + fmt(sz_expectation(f)) +
           ", parity spin/space/both = " + parity(sw) + "/" + parity(sp) + "/" + parity(both) + "\n";
  }
  return out;
}

}  // namespace photonic
