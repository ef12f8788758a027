#include "vlink/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

using nlohmann::json;

std::string surface_presentation_to_json(const SurfacePresentation& sp) {
  json j;
  j["sheets"] = sp.sheets;
  j["curves"] = json::array();
  for (const auto& c : sp.curves) {
    j["curves"].push_back({{"id", c.id},
                           {"a", c.under_in},
                           {"b", c.over_in},
                           {"c", c.over_out},
                           {"d", c.under_out},
                           {"sign", c.sign}});
  }
  j["triples"] = sp.triples;
  return j.dump(2);
}

SurfacePresentation surface_presentation_from_json(const std::string& text) {
  json j = json::parse(text);
  SurfacePresentation sp;
  sp.sheets = j.at("sheets").get<std::vector<std::string>>();
  for (const auto& c : j.at("curves")) {
    SurfaceCurve curve;
    curve.id = c.at("id").get<std::string>();
    curve.under_in = c.at("a").get<std::string>();
    curve.over_in = c.at("b").get<std::string>();
    curve.over_out = c.at("c").get<std::string>();
    curve.under_out = c.at("d").get<std::string>();
    curve.sign = c.at("sign").get<int>();
    if (curve.sign != 1 && curve.sign != -1) throw SurfaceError("curve sign must be +1/-1");
    sp.curves.push_back(std::move(curve));
  }
  if (j.contains("triples")) {
    sp.triples = j.at("triples").get<std::vector<std::array<std::string, 3>>>();
  }
  return sp;
}

namespace {

void check_sheet_refs(const SurfacePresentation& sp) {
  std::set<std::string> sheets(sp.sheets.begin(), sp.sheets.end());
  if (sheets.size() != sp.sheets.size()) throw SurfaceError("duplicate sheet token");
  for (const auto& c : sp.curves) {
    for (const auto* s : {&c.under_in, &c.over_in, &c.over_out, &c.under_out}) {
      if (!sheets.count(*s)) {
        throw SurfaceError("curve '" + c.id + "' references undeclared sheet '" + *s + "'");
      }
    }
  }
  for (const auto& t : sp.triples) {
    std::set<std::string> ids;
    for (const auto& c : sp.curves) ids.insert(c.id);
    for (const auto& ref : t) {
      if (!ids.count(ref)) throw SurfaceError("triple references unknown curve '" + ref + "'");
    }
  }
}

}  // namespace

SurfacePresentation spin(const GaussCode& code) {
  validate_code(code);
  SurfacePresentation sp;
  auto sas = semi_arcs(code);
  std::map<SemiArc, int> sa_index;
  for (int i = 0; i < static_cast<int>(sas.size()); ++i) {
    sa_index[sas[i]] = i;
    sp.sheets.push_back("s" + std::to_string(i));
  }
  for (const auto& cg : crossing_geometry(code)) {
    SurfaceCurve c;
    c.id = "c" + std::to_string(cg.crossing);
    c.under_in = sp.sheets[sa_index.at(cg.under_in)];
    c.over_in = sp.sheets[sa_index.at(cg.over_in)];
    c.over_out = sp.sheets[sa_index.at(cg.over_out)];
    c.under_out = sp.sheets[sa_index.at(cg.under_out)];
    c.sign = cg.sign;
    sp.curves.push_back(std::move(c));
  }
  return sp;
}

Presentation presentation_from_surface(const SurfacePresentation& sp, Theory theory) {
  check_sheet_refs(sp);
  std::map<std::string, int> sheet_index;
  for (int i = 0; i < static_cast<int>(sp.sheets.size()); ++i) sheet_index[sp.sheets[i]] = i;

  Presentation p;
  p.theory = theory;

  if (theory == Theory::Biquandle) {
    p.generators = sp.sheets;
    for (const auto& c : sp.curves) {
      Term a = Term::make_gen(sheet_index.at(c.under_in));
      Term b = Term::make_gen(sheet_index.at(c.over_in));
      Term cc = Term::make_gen(sheet_index.at(c.over_out));
      Term d = Term::make_gen(sheet_index.at(c.under_out));
      if (c.sign > 0) {
        p.relations.push_back({std::move(cc), Term::binary(Op::BDown, b, a)});
        p.relations.push_back({std::move(d), Term::binary(Op::BUp, a, b)});
      } else {
        p.relations.push_back({std::move(cc), Term::binary(Op::BDownBar, b, a)});
        p.relations.push_back({std::move(d), Term::binary(Op::BUpBar, a, b)});
      }
    }
    if (!p.generators.empty()) p.meridian = 0;
    return p;
  }

  // Faces: sheets merged across the over side of every curve.
  int n = static_cast<int>(sp.sheets.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& c : sp.curves) {
    int a = find(sheet_index.at(c.over_in));
    int b = find(sheet_index.at(c.over_out));
    parent[a] = b;
  }
  std::map<int, int> face_of_root;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (!face_of_root.count(r)) {
      int idx = static_cast<int>(face_of_root.size());
      face_of_root[r] = idx;
      p.generators.push_back("f" + std::to_string(idx));
    }
  }
  auto face = [&](const std::string& sheet) {
    return face_of_root.at(find(sheet_index.at(sheet)));
  };

  for (const auto& c : sp.curves) {
    Term x = Term::make_gen(face(c.under_out));
    Term z = Term::make_gen(face(c.under_in));
    Term y = Term::make_gen(face(c.over_in));
    if (theory == Theory::Group) {
      Term rhs = c.sign > 0 ? Term::mul(y, Term::mul(std::move(z), Term::inv(y)))
                            : Term::mul(Term::inv(y), Term::mul(std::move(z), y));
      p.relations.push_back({std::move(x), std::move(rhs)});
    } else {
      p.relations.push_back(
          {std::move(x),
           Term::binary(c.sign > 0 ? Op::QUp : Op::QUpBar, std::move(z), std::move(y))});
    }
  }
  if (!p.generators.empty()) p.meridian = 0;
  return p;
}

SurfaceGaussCode spin_surface_gauss(const GaussCode& code) {
  validate_code(code);
  SurfaceGaussCode sgc;
  // One torus per link component: component x S^1.
  sgc.components.assign(code.components.size(), SurfaceComponent{1});
  for (const auto& [id, sign] : code.crossings) {
    MarkedCurve over, under;
    over.id = "c" + std::to_string(id) + "o";
    under.id = "c" + std::to_string(id) + "u";
    over.kind = under.kind = CurveKind::Closed;
    over.partner = under.id;
    under.partner = over.id;
    over.over = true;
    under.over = false;
    // Both lifts run along the S^1 fiber; the normal markings are chosen per
    // the crossing sign so the (over normal, under normal, arrow) frame is a
    // positive basis.
    over.arrow = under.arrow = "fiber+";
    over.normal = "n+";
    under.normal = sign > 0 ? "n+" : "n-";
    sgc.curves.push_back(std::move(over));
    sgc.curves.push_back(std::move(under));
  }
  // Fibers over distinct diagram points are parallel: no curve crossings.
  return sgc;
}

SurfaceValidation validate_surface_gauss(const SurfaceGaussCode& sgc) {
  std::map<std::string, const MarkedCurve*> by_id;
  for (const auto& c : sgc.curves) {
    if (by_id.count(c.id)) throw SurfaceError("duplicate curve id '" + c.id + "'");
    by_id[c.id] = &c;
  }
  for (const auto& c : sgc.curves) {
    if (!by_id.count(c.partner)) {
      throw SurfaceError("curve '" + c.id + "' has dangling partner '" + c.partner + "'");
    }
  }
  for (const auto& x : sgc.crossings) {
    for (const auto& id : x.curves) {
      if (!by_id.count(id)) throw SurfaceError("crossing references unknown curve '" + id + "'");
    }
  }

  SurfaceValidation v;
  auto violate = [&](int clause, std::string msg) {
    v.valid = false;
    v.violations.push_back({clause, std::move(msg)});
  };

  for (const auto& c : sgc.curves) {
    // Clause 1: every curve is closed or ends in a cusp; markings present.
    if (c.kind != CurveKind::Closed && c.kind != CurveKind::Cusped) {
      violate(1, "curve '" + c.id + "' is neither closed nor cusped");
    }
    if (c.arrow.empty() || c.normal.empty()) {
      violate(2, "curve '" + c.id + "' is missing arrow or normal markings");
    }
    // Clause 2: symmetric pairing with a distinct partner, one side over.
    if (c.partner == c.id) {
      violate(2, "curve '" + c.id + "' is partnered with itself");
      continue;
    }
    const MarkedCurve& p = *by_id.at(c.partner);
    if (p.partner != c.id) {
      violate(2, "partnering of '" + c.id + "' is not symmetric");
    } else if (c.id < p.id) {
      if (c.over == p.over) {
        violate(2, "pair '" + c.id + "'/'" + p.id + "' must have exactly one over mark");
      }
      // Clause 3: cusped curves pair with cusped curves, arrows agreeing.
      if ((c.kind == CurveKind::Cusped) != (p.kind == CurveKind::Cusped)) {
        violate(3, "cusped curve '" + (c.kind == CurveKind::Cusped ? c.id : p.id) +
                       "' is paired with a closed curve");
      } else if (c.kind == CurveKind::Cusped) {
        bool c_ok = c.arrow == "toward" || c.arrow == "away";
        bool p_ok = p.arrow == "toward" || p.arrow == "away";
        if (!c_ok || !p_ok) {
          violate(3, "cusped pair '" + c.id + "'/'" + p.id +
                         "' needs arrows 'toward' or 'away'");
        } else if (c.arrow != p.arrow) {
          violate(3, "cusped pair '" + c.id + "'/'" + p.id +
                         "' must point both toward or both away from the cusp");
        }
      }
    }
  }

  // Clause 4: crossings closed under partnering.
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& x : sgc.crossings) {
    pairs.insert({std::min(x.curves[0], x.curves[1]), std::max(x.curves[0], x.curves[1])});
  }
  for (const auto& x : sgc.crossings) {
    const auto& u = *by_id.at(x.curves[0]);
    const auto& w = *by_id.at(x.curves[1]);
    std::pair<std::string, std::string> mate{std::min(u.partner, w.partner),
                                             std::max(u.partner, w.partner)};
    if (!pairs.count(mate)) {
      violate(4, "curves '" + u.id + "' and '" + w.id +
                     "' cross but their partners do not (triple points appear three times)");
    }
  }
  return v;
}

std::string surface_gauss_to_json(const SurfaceGaussCode& sgc) {
  json j;
  j["components"] = json::array();
  for (const auto& c : sgc.components) j["components"].push_back({{"genus", c.genus}});
  j["curves"] = json::array();
  for (const auto& c : sgc.curves) {
    j["curves"].push_back({{"id", c.id},
                           {"kind", c.kind == CurveKind::Closed ? "closed" : "cusped"},
                           {"partner", c.partner},
                           {"over", c.over},
                           {"arrow", c.arrow},
                           {"normal", c.normal}});
  }
  j["crossings"] = json::array();
  for (const auto& x : sgc.crossings) {
    j["crossings"].push_back({{"curves", x.curves}, {"triple", x.triple}});
  }
  return j.dump(2);
}

SurfaceGaussCode surface_gauss_from_json(const std::string& text) {
  json j = json::parse(text);
  SurfaceGaussCode sgc;
  for (const auto& c : j.at("components")) {
    sgc.components.push_back({c.at("genus").get<int>()});
  }
  for (const auto& c : j.at("curves")) {
    MarkedCurve m;
    m.id = c.at("id").get<std::string>();
    std::string kind = c.at("kind").get<std::string>();
    if (kind == "closed") m.kind = CurveKind::Closed;
    else if (kind == "cusped") m.kind = CurveKind::Cusped;
    else throw SurfaceError("curve kind must be 'closed' or 'cusped'");
    m.partner = c.at("partner").get<std::string>();
    m.over = c.at("over").get<bool>();
    m.arrow = c.at("arrow").get<std::string>();
    m.normal = c.at("normal").get<std::string>();
    sgc.curves.push_back(std::move(m));
  }
  if (j.contains("crossings")) {
    for (const auto& x : j.at("crossings")) {
      CurveCrossing cc;
      cc.curves = x.at("curves").get<std::array<std::string, 2>>();
      if (x.contains("triple")) cc.triple = x.at("triple").get<std::string>();
      sgc.crossings.push_back(std::move(cc));
    }
  }
  return sgc;
}

// --- Yoshikawa diagrams ----------------------------------------------------

namespace {

MarkerPairing classify_pairing(const std::string& e1, const std::string& e2) {
  auto valid = [](const std::string& e) {
    return e == "1i" || e == "1o" || e == "2i" || e == "2o";
  };
  if (!valid(e1) || !valid(e2)) throw SurfaceError("marker end must be 1i, 1o, 2i or 2o");
  std::set<std::string> got{e1, e2};
  if (got == std::set<std::string>{"1i", "2o"} || got == std::set<std::string>{"2i", "1o"}) {
    return MarkerPairing::Coherent;
  }
  if (got == std::set<std::string>{"1i", "2i"} || got == std::set<std::string>{"1o", "2o"}) {
    return MarkerPairing::NonCoherent;
  }
  throw SurfaceError("pairing {" + e1 + "," + e2 + "} does not smooth the vertex");
}

}  // namespace

YoshikawaDiagram parse_yoshikawa(const std::string& text) {
  YoshikawaDiagram yd;
  std::map<std::string, int> crossing_ids;
  std::map<int, Role> first_role;
  std::map<int, int> crossing_seen;
  std::map<std::string, int> marker_ids;
  std::map<int, int> marker_seen;

  std::vector<std::vector<std::string>> comps(1);
  {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok == "/") comps.emplace_back();
      else comps.back().push_back(tok);
    }
  }

  for (const auto& comp_tokens : comps) {
    std::vector<YoshikawaElement> comp;
    bool empty_marker = false;
    for (const auto& tok : comp_tokens) {
      if (tok == "0") {
        empty_marker = true;
        continue;
      }
      if (tok[0] == 'M') {
        std::string body = tok.substr(1);
        std::string name, braces;
        auto brace = body.find('{');
        if (brace == std::string::npos) {
          name = body;
        } else {
          name = body.substr(0, brace);
          if (body.back() != '}') throw SurfaceError("marker token missing '}'");
          braces = body.substr(brace + 1, body.size() - brace - 2);
        }
        if (name.empty()) throw SurfaceError("marker token needs an id");
        auto [it, fresh] = marker_ids.try_emplace(name, static_cast<int>(marker_ids.size()) + 1);
        int id = it->second;
        if (fresh) {
          MarkedVertex v;
          v.id = id;
          if (!braces.empty()) {
            // "A:1i,2o;B:1i,2i" with no spaces
            std::map<char, MarkerPairing> got;
            std::istringstream parts(braces);
            std::string part;
            while (std::getline(parts, part, ';')) {
              if (part.size() < 4 || (part[0] != 'A' && part[0] != 'B') || part[1] != ':') {
                throw SurfaceError("bad marker pairing '" + part + "'");
              }
              auto comma = part.find(',');
              if (comma == std::string::npos) throw SurfaceError("bad marker pairing '" + part + "'");
              got[part[0]] = classify_pairing(part.substr(2, comma - 2), part.substr(comma + 1));
            }
            if (!got.count('A') || !got.count('B')) {
              throw SurfaceError("marker braces need both A and B pairings");
            }
            v.a = got['A'];
            v.b = got['B'];
          }
          yd.markers[id] = v;
        } else if (!braces.empty()) {
          throw SurfaceError("marker '" + name + "': pairings belong on the first occurrence");
        }
        int seen = ++marker_seen[id];
        if (seen > 2) throw SurfaceError("marker '" + name + "' appears more than twice");
        comp.push_back({true, {}, id, seen - 1});
      } else {
        if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U')) {
          throw SurfaceError("bad token '" + tok + "'");
        }
        char sign_ch = tok.back();
        if (sign_ch != '+' && sign_ch != '-') throw SurfaceError("bad token '" + tok + "'");
        std::string name = tok.substr(1, tok.size() - 2);
        Role role = tok[0] == 'O' ? Role::Over : Role::Under;
        int sign = sign_ch == '+' ? 1 : -1;
        auto [it, fresh] =
            crossing_ids.try_emplace(name, static_cast<int>(crossing_ids.size()) + 1);
        int id = it->second;
        if (fresh) {
          yd.crossings[id] = sign;
          first_role[id] = role;
        } else {
          if (yd.crossings[id] != sign) throw SurfaceError("sign mismatch at crossing " + name);
          if (crossing_seen[id] == 1 && first_role[id] == role) {
            throw SurfaceError("crossing '" + name + "' appears twice with the same role");
          }
        }
        if (++crossing_seen[id] > 2) throw SurfaceError("crossing '" + name + "' appears more than twice");
        YoshikawaElement el;
        el.is_marker = false;
        el.passage = {id, role};
        comp.push_back(el);
      }
    }
    if (empty_marker && !comp.empty()) throw SurfaceError("'0' must stand alone in a component");
    yd.components.push_back(std::move(comp));
  }

  for (const auto& [name, id] : crossing_ids) {
    if (crossing_seen[id] != 2) throw SurfaceError("crossing '" + name + "' appears only once");
  }
  for (const auto& [name, id] : marker_ids) {
    if (marker_seen[id] != 2) throw SurfaceError("marker '" + name + "' appears only once");
  }
  validate_yoshikawa_diagram(yd);
  return yd;
}

std::string serialize_yoshikawa(const YoshikawaDiagram& yd) {
  auto pairing_text = [](MarkerPairing p) {
    return p == MarkerPairing::Coherent ? "1i,2o" : "1i,2i";
  };
  std::ostringstream out;
  std::set<int> markers_written;
  for (size_t i = 0; i < yd.components.size(); ++i) {
    if (i) out << " / ";
    const auto& comp = yd.components[i];
    if (comp.empty()) {
      out << "0";
      continue;
    }
    for (size_t j = 0; j < comp.size(); ++j) {
      if (j) out << ' ';
      const auto& el = comp[j];
      if (el.is_marker) {
        out << 'M' << el.marker;
        if (markers_written.insert(el.marker).second) {
          const MarkedVertex& v = yd.markers.at(el.marker);
          out << "{A:" << pairing_text(v.a) << ";B:" << pairing_text(v.b) << "}";
        }
      } else {
        out << (el.passage.role == Role::Over ? 'O' : 'U') << el.passage.crossing
            << (yd.crossings.at(el.passage.crossing) > 0 ? '+' : '-');
      }
    }
  }
  return out.str();
}

void validate_yoshikawa_diagram(const YoshikawaDiagram& yd) {
  for (const auto& [id, v] : yd.markers) {
    if (v.a == v.b) {
      throw SurfaceError("marker " + std::to_string(id) +
                         ": A and B must be the two distinct planar pairings");
    }
  }
  // The underlying classical code (markers flattened away by the coherent
  // pairing would be checked by smooth(); here check the passage counts).
  std::map<int, int> over_seen, under_seen, marker_seen;
  for (const auto& comp : yd.components) {
    for (const auto& el : comp) {
      if (el.is_marker) {
        ++marker_seen[el.marker];
      } else {
        ++(el.passage.role == Role::Over ? over_seen : under_seen)[el.passage.crossing];
      }
    }
  }
  for (const auto& [id, sign] : yd.crossings) {
    if (over_seen[id] != 1 || under_seen[id] != 1) {
      throw SurfaceError("crossing " + std::to_string(id) +
                         " must appear exactly once as O and once as U");
    }
  }
  for (const auto& [id, v] : yd.markers) {
    if (marker_seen[id] != 2) {
      throw SurfaceError("marker " + std::to_string(id) + " must appear exactly twice");
    }
  }
}

namespace {

// Traversal machinery for smoothing: elements have an in end and an out end;
// edges run from one element's out end to the next element's in end. A dart
// is a directed edge; the successor through a classical passage keeps
// direction, while a smoothed marker connects ends by its chosen pairing.
struct SmoothTracer {
  const YoshikawaDiagram& yd;
  SmoothingChoice choice;

  struct Element {
    bool is_marker;
    Passage passage;
    int marker, marker_pass;
  };
  std::vector<Element> elements;          // global element list
  std::vector<std::pair<int, int>> edges;  // (from element, to element), out -> in
  std::map<std::pair<int, int>, int> marker_element;  // (marker, pass) -> element

  explicit SmoothTracer(const YoshikawaDiagram& d, SmoothingChoice c) : yd(d), choice(c) {
    for (const auto& comp : yd.components) {
      int base = static_cast<int>(elements.size());
      int k = static_cast<int>(comp.size());
      for (const auto& el : comp) {
        elements.push_back({el.is_marker, el.passage, el.marker, el.marker_pass});
        if (el.is_marker) {
          marker_element[{el.marker, el.marker_pass}] =
              static_cast<int>(elements.size()) - 1;
        }
      }
      for (int j = 0; j < k; ++j) edges.push_back({base + j, base + (j + 1) % k});
    }
  }

  // Ends: element e has in-end 2e, out-end 2e+1.
  int pair_end(int end) const {
    int e = end / 2;
    bool is_in = end % 2 == 0;
    const Element& el = elements[e];
    MarkerPairing p = choice == SmoothingChoice::A ? yd.markers.at(el.marker).a
                                                   : yd.markers.at(el.marker).b;
    int other = marker_element.at({el.marker, 1 - el.marker_pass});
    if (p == MarkerPairing::Coherent) {
      // 1i-2o, 2i-1o: in pairs with the other passage's out.
      return is_in ? 2 * other + 1 : 2 * other;
    }
    // 1i-2i, 1o-2o: in pairs with in, out with out.
    return is_in ? 2 * other : 2 * other + 1;
  }
};

}  // namespace

GaussCode smooth(const YoshikawaDiagram& yd, SmoothingChoice choice) {
  validate_yoshikawa_diagram(yd);
  SmoothTracer tracer(yd, choice);
  const auto& elements = tracer.elements;
  const auto& edges = tracer.edges;

  // Where each end attaches: the edge and whether the end is the edge's head.
  std::map<int, int> edge_at_out, edge_at_in;  // element -> edge index
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    edge_at_out[edges[i].first] = i;
    edge_at_in[edges[i].second] = i;
  }

  int ne = static_cast<int>(edges.size());
  // Dart 2i = edge i forward (toward its head), 2i+1 = backward.
  auto next_dart = [&](int dart) {
    int edge = dart / 2;
    bool forward = dart % 2 == 0;
    // The end we arrive at.
    int element = forward ? edges[edge].second : edges[edge].first;
    int end = forward ? 2 * element : 2 * element + 1;  // in-end if forward
    const auto& el = elements[element];
    int leave_end;
    if (!el.is_marker) {
      // Pass straight through the classical passage.
      leave_end = end % 2 == 0 ? 2 * element + 1 : 2 * element;
    } else {
      leave_end = tracer.pair_end(end);
    }
    // Leaving via an out-end continues forward on its outgoing edge; leaving
    // via an in-end continues backward along the edge whose head it is.
    if (leave_end % 2 == 1) {
      return 2 * edge_at_out.at(leave_end / 2);
    }
    return 2 * edge_at_in.at(leave_end / 2) + 1;
  };

  GaussCode out;
  std::vector<bool> used(2 * ne, false);
  std::map<int, std::array<bool, 2>> reversed_at;  // crossing -> {over, under} reversed

  // Seed at each component's first element so circles untouched by the
  // smoothing keep their original passage order.
  std::vector<int> seeds;
  {
    int base = 0;
    for (const auto& comp : yd.components) {
      if (!comp.empty()) seeds.push_back(2 * edge_at_in.at(base));
      base += static_cast<int>(comp.size());
    }
    for (int d = 0; d < 2 * ne; ++d) seeds.push_back(d);
  }
  for (int d : seeds) {
    if (used[d]) continue;
    std::vector<Passage> circle;
    int cur = d;
    do {
      used[cur] = true;
      int edge = cur / 2;
      bool forward = cur % 2 == 0;
      int element = forward ? edges[edge].second : edges[edge].first;
      const auto& el = elements[element];
      if (!el.is_marker) {
        bool entered_in = forward;  // arriving at the in-end means forward passage
        circle.push_back(el.passage);
        if (!entered_in) {
          reversed_at[el.passage.crossing][el.passage.role == Role::Over ? 0 : 1] = true;
        }
      }
      // Mark the mirror dart of the opposite orientation as used once the
      // whole circle closes; done below by tracing the reverse.
      cur = next_dart(cur);
    } while (cur != d);

    // Mark the reversed traversal used so each circle is emitted once.
    int rev = d ^ 1;
    if (!used[rev]) {
      int c2 = rev;
      do {
        used[c2] = true;
        c2 = next_dart(c2);
      } while (c2 != rev);
    }
    out.components.push_back(std::move(circle));
  }

  // Components with no passages at all (pure circles) survive unchanged.
  for (const auto& comp : yd.components) {
    if (comp.empty()) out.components.emplace_back();
  }
  if (out.components.empty()) out.components.emplace_back();

  for (const auto& [id, sign] : yd.crossings) {
    auto rev = reversed_at.count(id) ? reversed_at.at(id) : std::array<bool, 2>{false, false};
    out.crossings[id] = (rev[0] != rev[1]) ? -sign : sign;
  }
  out = normalize_ids(out);
  validate_code(out);
  return out;
}

ScreenVerdict screen_unlink(const GaussCode& code, std::uint64_t depth) {
  validate_code(code);
  GaussCode unlink;
  unlink.components.assign(code.components.size(), {});

  ScreenVerdict verdict;
  auto rep_code = report(code);
  auto rep_unlink = report(unlink);
  for (size_t i = 0; i < rep_code.counts.size(); ++i) {
    if (rep_code.counts[i].second != rep_unlink.counts[i].second) {
      verdict.status = ScreenStatus::Separated;
      verdict.witness = rep_code.counts[i].first + ": " +
                        std::to_string(rep_code.counts[i].second) + " vs unlink " +
                        std::to_string(rep_unlink.counts[i].second);
      return verdict;
    }
  }
  if (rep_code.rank != rep_unlink.rank) {
    verdict.status = ScreenStatus::Separated;
    verdict.witness = "abelianization rank: " + std::to_string(rep_code.rank) + " vs unlink " +
                      std::to_string(rep_unlink.rank);
    return verdict;
  }

  int max_crossings = std::max(static_cast<int>(code.crossings.size()) + 2, 4);
  SearchResult res = search_equivalence(code, unlink, reidemeister_moves(), max_crossings, depth);
  if (res.found) {
    verdict.status = ScreenStatus::CertifiedTrivial;
    verdict.path = std::move(res);
  } else {
    verdict.status = ScreenStatus::Indistinguishable;
  }
  return verdict;
}

YoshikawaVerdict validate_yoshikawa(const YoshikawaDiagram& yd, std::uint64_t depth) {
  YoshikawaVerdict v;
  v.a = screen_unlink(smooth(yd, SmoothingChoice::A), depth);
  v.b = screen_unlink(smooth(yd, SmoothingChoice::B), depth);
  v.accepted = v.a.status != ScreenStatus::Separated && v.b.status != ScreenStatus::Separated;
  return v;
}

const std::vector<std::pair<std::string, std::string>>& yoshikawa_move_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog = {
      {"y1", "birth or death of a marker-free simple circle"},
      {"y2", "cancel a pair of markers on a bigon whose smoothings agree"},
      {"y3", "slide a marker end across an adjacent classical crossing"},
      {"y4", "rotate the marker direction across a kink"},
      {"y5", "pass a strand over a marked vertex"},
      {"y6", "pass a strand under a marked vertex"},
      {"y7", "exchange the two resolutions of a pair of markers on a clasp"},
      {"y8", "slide two marked vertices past one another along parallel strands"},
  };
  return catalog;
}

}  // namespace vlink
