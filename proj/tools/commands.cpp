#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <sstream>

#include "session.hpp"
#include "tamex/error.hpp"
#include "tamex/linearize.hpp"
#include "tamex/link.hpp"
#include "tamex/random.hpp"
#include "tamex/stabilizer.hpp"

namespace tamex::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Plain report: one "key: value" line per field; a lone "result" prints bare.
void plain_value(std::ostream& out, const Json& v, int indent);

std::string plain_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt_double(v.get<double>());
  if (v.is_null()) return "none";
  return v.dump();
}

std::string compact(const Json& v) {
  if (!v.is_structured()) return plain_scalar(v);
  if (v.is_object()) return v.dump();
  std::string out = "[";
  bool first = true;
  for (const auto& x : v) {
    out += (first ? "" : ", ") + compact(x);
    first = false;
  }
  return out + "]";
}

bool all_scalars(const Json& v) {
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void plain_object(std::ostream& out, const Json& obj, int indent) {
  for (const auto& [k, v] : obj.items()) {
    out << std::string(indent, ' ') << k << ":";
    if (v.is_structured() && !(v.is_array() && all_scalars(v))) {
      out << "\n";
      plain_value(out, v, indent + 2);
    } else {
      out << " ";
      plain_value(out, v, 0);
      out << "\n";
    }
  }
}

void plain_value(std::ostream& out, const Json& v, int indent) {
  if (v.is_object()) {
    plain_object(out, v, indent);
  } else if (v.is_array() && all_scalars(v)) {
    out << std::string(indent, ' ') << "[";
    bool first = true;
    for (const auto& x : v) {
      out << (first ? "" : ", ") << plain_scalar(x);
      first = false;
    }
    out << "]";
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        out << std::string(indent, ' ') << "-";
        bool first = true;
        for (const auto& [k, y] : x.items()) {
          out << (first ? " " : "  ") << k << "=";
          if (y.is_structured()) out << y.dump();
          else out << plain_scalar(y);
          first = false;
        }
        out << "\n";
      } else {
        out << std::string(indent, ' ') << "- " << compact(x) << "\n";
      }
    }
  } else {
    out << std::string(indent, ' ') << plain_scalar(v);
  }
}

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(rational_str(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.str());
    rows.push_back(r);
  }
  return rows;
}

Json components_json(const TameWord& w) {
  Json a = Json::array();
  for (const auto& c : w.components()) a.push_back(c.str());
  return a;
}

// "2:1,0,3" is a2 >= 1*a1 + 3*a3 (one-based index).
AdmissibleInequality parse_inequality(const std::string& text, std::size_t n) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("inequality must look like I:m1,...,mn", 1, 1);
  AdmissibleInequality q;
  try {
    std::size_t i = std::stoul(text.substr(0, colon));
    if (i < 1) throw PreconditionError("inequality index is one-based");
    q.i = i - 1;
  } catch (const std::logic_error&) {
    throw ParseError("bad inequality index", 1, 1);
  }
  std::stringstream ss(text.substr(colon + 1));
  std::string tok;
  std::size_t col = colon + 2;
  while (std::getline(ss, tok, ',')) {
    try {
      long v = std::stol(tok);
      if (v < 0) throw ParseError("coefficients must be non-negative", 1, col);
      q.m.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw ParseError("bad coefficient '" + tok + "'", 1, col);
    }
    col += tok.size() + 1;
  }
  validate_inequality(q, n);
  return q;
}

// "[0,0,1]" points at an ideal point; "h:I:m1,..,mn:+" follows a hyperplane.
Direction parse_direction(const std::string& text, const Weight& alpha) {
  if (text.rfind("h:", 0) == 0) {
    auto last = text.rfind(':');
    if (last <= 2) throw ParseError("hyperplane direction must look like h:I:m1,m2,m3:+", 1, 1);
    std::string side = text.substr(last + 1);
    if (side != "+" && side != "-") throw ParseError("hyperplane side must be + or -", 1, last + 2);
    auto q = parse_inequality(text.substr(2, last - 2), alpha.size());
    return along_hyperplane(alpha, q, side == "+" ? 1 : -1);
  }
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  Weight g;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) g.push_back(parse_rational(tok));
  return toward_point(g);
}

Json point_json(const ValuationPoint& v) {
  return Json{{"frame", v.frame.str()}, {"weight", v.weight.str()}};
}

Json witness_json(const TameWord& f) {
  MovedWitness w = moved_valuation_witness(f);
  return Json{{"map", f.str()},
              {"point", w.point.str()},
              {"construction", w.construction},
              {"P", w.p.str()},
              {"Q", w.q.str()},
              {"nu(P)", val_str(w.nu_p)},
              {"nu(Q)", val_str(w.nu_q)},
              {"f.nu(P)", val_str(w.fnu_p)},
              {"f.nu(Q)", val_str(w.fnu_q)},
              {"certified", certify_witness(f, w)}};
}

Json link_summary(const LinkGraph& g) {
  Json r{{"alpha", "[" + weight_str(g.alpha) + "]"},
         {"frame", g.base_frame},
         {"frames", g.frames.size()},
         {"closed", g.closed},
         {"vertices", g.vertices.size()},
         {"edges", g.edges.size()}};
  return r;
}

Json cycle_json(const CycleInfo& c) {
  Json v = Json::array();
  for (auto x : c.vertices) v.push_back(x);
  return Json{{"length", std::isinf(c.length) ? Json("inf") : Json(c.length)}, {"vertices", v}};
}

// Large sentinels from the graph routines print as "none".
Json count_or_none(std::size_t v) { return v == SIZE_MAX ? Json(nullptr) : Json(v); }

struct Context {
  SessionConfig cfg;
  std::ostream& out;

  void emit(const Json& r) const {
    if (cfg.json) {
      out << r.dump(2) << "\n";
    } else if (r.is_object() && r.size() == 1 && r.contains("result")) {
      plain_value(out, r["result"], 0);
      out << "\n";
    } else {
      plain_value(out, r, 0);
    }
  }
  TameWord word(const std::string& arg) const { return read_word_or_identity(arg, cfg); }
  Weight weight(const std::string& arg) const {
    Weight w = parse_weight(arg);
    if (w.size() != cfg.n) throw DimensionMismatch("weight has " + std::to_string(w.size()) + " entries, expected " + std::to_string(cfg.n));
    return w;
  }
};

struct PointArgs {
  std::string f1, w1, f2, w2;
  void add(CLI::App* s) {
    s->add_option("--f1", f1, "frame of the first point (word file or inline text; default identity)");
    s->add_option("--w1", w1, "weight of the first point")->required();
    s->add_option("--f2", f2, "frame of the second point");
    s->add_option("--w2", w2, "weight of the second point")->required();
  }
  ValuationPoint first(const Context& c) const { return ValuationPoint(c.word(f1), c.weight(w1)); }
  ValuationPoint second(const Context& c) const { return ValuationPoint(c.word(f2), c.weight(w2)); }
};

using Action = std::function<void(const Context&)>;

// Owns option storage for one run, so repeated in-process runs start clean.
struct Registry {
  std::vector<std::pair<CLI::App*, Action>> actions;
  std::vector<std::shared_ptr<void>> storage;
  void on(CLI::App* s, Action a) { actions.emplace_back(s, std::move(a)); }
  template <class T>
  T& make(T init = T{}) {
    auto p = std::make_shared<T>(std::move(init));
    storage.push_back(p);
    return *p;
  }
};

void add_tame(CLI::App& app, Registry& reg) {
  auto* tame = app.add_subcommand("tame", "tame automorphism words")->require_subcommand(1);
  auto& w = reg.make<std::string>();
  auto& a = reg.make<std::string>();
  auto& b = reg.make<std::string>();

  auto* comp = tame->add_subcommand("components", "expand a word into its components");
  comp->add_option("-w,--word", w, "word file or inline text")->required();
  reg.on(comp, [&](const Context& c) {
    TameWord f = c.word(w);
    c.emit(Json{{"components", components_json(f)}, {"degree", f.degree()}, {"bijective", verify_bijection(f)}});
  });

  auto* inv = tame->add_subcommand("invert", "invert a word");
  inv->add_option("-w,--word", w)->required();
  reg.on(inv, [&](const Context& c) {
    TameWord f = invert(c.word(w));
    c.emit(Json{{"inverse", f.str()}, {"word", f.word_text()}});
  });

  auto* cmp = tame->add_subcommand("compose", "a o b");
  cmp->add_option("-a", a)->required();
  cmp->add_option("-b", b)->required();
  reg.on(cmp, [&](const Context& c) { c.emit(Json{{"result", compose(c.word(a), c.word(b)).str()}}); });

  auto* diff = tame->add_subcommand("diff", "linear part at the origin");
  diff->add_option("-w,--word", w)->required();
  reg.on(diff, [&](const Context& c) { c.emit(Json{{"diff", matrix_json(diff_at_origin(c.word(w)))}}); });

  auto* br = tame->add_subcommand("bruhat", "Bruhat permutation of the differential after removing the translation");
  br->add_option("-w,--word", w)->required();
  reg.on(br, [&](const Context& c) {
    auto [f0, t] = split_translation(c.word(w));
    c.emit(Json{{"result", perm_str(bruhat_permutation(diff_at_origin(f0)))}});
  });
}

void add_val(CLI::App& app, Registry& reg) {
  auto* val = app.add_subcommand("val", "valuation points")->require_subcommand(1);
  auto& f = reg.make<std::string>();
  auto& g = reg.make<std::string>();
  auto& w = reg.make<std::string>();
  auto& poly = reg.make<std::string>();
  auto& pts = reg.make<PointArgs>();
  auto& count = reg.make<std::size_t>(10000);

  auto* ev = val->add_subcommand("eval", "nu_{f,a}(P)");
  ev->add_option("-f,--frame", f);
  ev->add_option("-w,--weight", w)->required();
  ev->add_option("-P,--poly", poly)->required();
  reg.on(ev, [&](const Context& c) {
    c.emit(Json{{"result", val_str(point_eval(c.word(f), c.weight(w), parse_polynomial(poly, c.cfg.n, c.cfg.field)))}});
  });

  auto* act_cmd = val->add_subcommand("act", "g . nu_{f,a}");
  act_cmd->add_option("-g", g)->required();
  act_cmd->add_option("-f,--frame", f);
  act_cmd->add_option("-w,--weight", w)->required();
  reg.on(act_cmd, [&](const Context& c) {
    c.emit(point_json(act(c.word(g), ValuationPoint(c.word(f), c.weight(w)))));
  });

  auto* fix = val->add_subcommand("fix", "fixed region of a map in the standard apartment");
  fix->add_option("-f,--frame", f)->required();
  fix->add_option("-w,--weight", w, "also test this weight");
  reg.on(fix, [&](const Context& c) {
    TameWord m = c.word(f);
    FixedRegion r = fixed_inequalities(m);
    Json ineqs = Json::array();
    for (const auto& q : r.inequalities) ineqs.push_back(q.str());
    Json out{{"region", r.str()}, {"inequalities", ineqs}};
    if (!w.empty()) out["fixes"] = fixes(m, c.weight(w));
    c.emit(out);
  });

  auto* eq = val->add_subcommand("equal", "decide nu_{f1,[w1]} = nu_{f2,[w2]}");
  pts.add(eq);
  reg.on(eq, [&](const Context& c) { c.emit(Json{{"result", points_equal(pts.first(c), pts.second(c))}}); });

  auto* rh = val->add_subcommand("rho", "retractions onto the sorted chamber and the standard apartment");
  rh->add_option("-f,--frame", f);
  rh->add_option("-w,--weight", w)->required();
  reg.on(rh, [&](const Context& c) {
    ValuationPoint v(c.word(f), c.weight(w));
    c.emit(Json{{"rho", rho(v).str()}, {"rho_plus", rho_plus(v).str()}});
  });

  auto* wit = val->add_subcommand("witness", "a point moved by a non-identity map");
  wit->add_option("-f,--frame", f)->required();
  reg.on(wit, [&](const Context& c) { c.emit(witness_json(c.word(f))); });

  auto* ax = val->add_subcommand("axioms", "randomized valuation axiom check (uses --seed)");
  ax->add_option("--count", count);
  reg.on(ax, [&](const Context& c) {
    AxiomReport r = check_valuation_axioms(c.cfg.n, c.cfg.field, count, c.cfg.seed);
    c.emit(Json{{"trials", r.trials},
                {"multiplicativity_failures", r.multiplicativity_failures},
                {"ultrametric_failures", r.ultrametric_failures},
                {"ok", r.multiplicativity_failures == 0 && r.ultrametric_failures == 0}});
  });
}

void add_adm(CLI::App& app, Registry& reg) {
  auto* adm = app.add_subcommand("adm", "admissible hyperplanes")->require_subcommand(1);
  auto& w = reg.make<std::string>();
  auto& qa = reg.make<std::string>();
  auto& qb = reg.make<std::string>();
  auto& ineq = reg.make<std::string>();
  auto& r = reg.make<double>(0.1);

  auto hyperplanes = [](const std::vector<AdmissibleInequality>& qs) {
    Json a = Json::array();
    for (const auto& q : qs) a.push_back(q.str(true));
    return a;
  };

  auto* th = adm->add_subcommand("through", "admissible equations satisfied by a weight");
  th->add_option("-w,--weight", w)->required();
  reg.on(th, [&, hyperplanes](const Context& c) { c.emit(Json{{"hyperplanes", hyperplanes(hyperplanes_through(c.weight(w)))}}); });

  auto* mult = adm->add_subcommand("mult", "number of admissible equations through a weight");
  mult->add_option("-w,--weight", w)->required();
  reg.on(mult, [&](const Context& c) { c.emit(Json{{"result", multiplicity(c.weight(w))}}); });

  auto* ball = adm->add_subcommand("ball", "hyperplanes meeting a log-metric ball");
  ball->add_option("-w,--weight", w)->required();
  ball->add_option("-r,--radius", r)->check(CLI::PositiveNumber);
  reg.on(ball, [&, hyperplanes](const Context& c) {
    c.emit(Json{{"radius", r}, {"hyperplanes", hyperplanes(hyperplanes_meeting_ball(c.weight(w), r))}});
  });

  auto* rad = adm->add_subcommand("radius", "largest ball meeting only hyperplanes through the center");
  rad->add_option("-w,--weight", w)->required();
  reg.on(rad, [&](const Context& c) { c.emit(Json{{"result", local_radius(c.weight(w))}}); });

  auto* proj = adm->add_subcommand("project", "simplicial projection");
  proj->add_option("-w,--weight", w)->required();
  reg.on(proj, [&](const Context& c) {
    SimplicialProjection s = simplicial_projection(c.weight(w));
    Json idx = Json::array(), types = Json::array();
    for (auto i : s.vertex_indices) idx.push_back(i);
    for (auto t : s.vertex_types) types.push_back(t);
    c.emit(Json{{"alpha_prime", weight_json(s.alpha_prime)}, {"vertex_indices", idx}, {"vertex_types", types}});
  });

  auto* mid = adm->add_subcommand("midpoint", "log-midpoint of two hyperplane points against the half-space");
  mid->add_option("--ineq", ineq, "I:m1,...,mn")->required();
  mid->add_option("-a", qa)->required();
  mid->add_option("-b", qb)->required();
  reg.on(mid, [&](const Context& c) {
    auto q = parse_inequality(ineq, c.cfg.n);
    Weight a = c.weight(qa), b = c.weight(qb);
    c.emit(Json{{"slack", halfspace_midpoint_slack(q, a, b)}, {"inside", halfspace_midpoint_check(q, a, b, 1e-12)}});
  });
}

void add_stab(CLI::App& app, Registry& reg) {
  auto* stab = app.add_subcommand("stab", "point stabilizers")->require_subcommand(1);
  auto& f = reg.make<std::string>();
  auto& g = reg.make<std::string>();
  auto& w = reg.make<std::string>();
  auto& group = reg.make<std::string>("M");

  auto* dec = stab->add_subcommand("decompose", "f = m o l with m in M and l in L");
  dec->add_option("-f,--frame", f)->required();
  dec->add_option("-w,--weight", w)->required();
  reg.on(dec, [&](const Context& c) {
    StabDecomposition d = decompose_stabilizer(c.word(f), c.weight(w));
    c.emit(Json{{"m", d.m.str()}, {"l", matrix_json(d.l)}});
  });

  auto* mem = stab->add_subcommand("member", "membership in M, L or N");
  mem->add_option("-f,--frame", f)->required();
  mem->add_option("-w,--weight", w)->required();
  mem->add_option("--group", group)->check(CLI::IsMember({"M", "L", "N"}));
  reg.on(mem, [&](const Context& c) {
    TameWord m = c.word(f);
    Weight a = c.weight(w);
    bool in = group == "M" ? in_M_alpha(m, a) : group == "L" ? in_L_alpha(m, a) : in_N_alpha(m, a);
    c.emit(Json{{"result", in}});
  });

  auto* eqv = stab->add_subcommand("equiv", "agreement of two stabilizer elements near the point");
  eqv->add_option("-f", f)->required();
  eqv->add_option("-g", g)->required();
  eqv->add_option("-w,--weight", w)->required();
  reg.on(eqv, [&](const Context& c) { c.emit(Json{{"result", locally_equivalent(c.word(f), c.word(g), c.weight(w))}}); });

  auto* sec = stab->add_subcommand("sector", "common fixed sector of two stabilizer elements");
  sec->add_option("-f", f)->required();
  sec->add_option("-g", g)->required();
  sec->add_option("-w,--weight", w)->required();
  reg.on(sec, [&](const Context& c) {
    SectorDescriptor s = sector(c.word(f), c.word(g), c.weight(w));
    c.emit(Json{{"sector", s.str()}, {"normal_form", s.normal_form.str()}, {"region", s.region.str()}});
  });

  auto* gens = stab->add_subcommand("gens", "generators of the stabilizer of nu_{id,a}");
  gens->add_option("-w,--weight", w)->required();
  reg.on(gens, [&](const Context& c) {
    Json a = Json::array();
    for (const auto& t : stabilizer_generators(c.weight(w), c.cfg.field, c.cfg.degree_cap)) a.push_back(t.str());
    c.emit(Json{{"generators", a}});
  });
}

void add_dist(CLI::App& app, Registry& reg) {
  auto* dist = app.add_subcommand("dist", "distance bounds")->require_subcommand(1);
  auto& pts = reg.make<PointArgs>();
  auto& pts_up = reg.make<PointArgs>();
  auto& catalog = reg.make<std::string>();
  auto& edge = reg.make<unsigned>(1);

  auto* lo = dist->add_subcommand("lower", "lower bound from the retraction");
  pts.add(lo);
  reg.on(lo, [&](const Context& c) { c.emit(Json{{"result", distance_lower(pts.first(c), pts.second(c))}}); });

  auto* up = dist->add_subcommand("upper", "chain upper bound with a witness");
  pts_up.add(up);
  up->add_option("--catalog", catalog, "extra frame words separated by --- lines");
  reg.on(up, [&](const Context& c) {
    std::vector<TameWord> cat;
    if (!catalog.empty()) cat = read_words(catalog, c.cfg);
    ChainOptions opts;
    opts.depth = c.cfg.depth;
    opts.mesh = c.cfg.mesh;
    ChainResult r = chain_distance_upper(pts_up.first(c), pts_up.second(c), cat, opts);
    Json hops = Json::array();
    for (const auto& h : r.witness)
      hops.push_back(Json{{"frame", h.frame}, {"weight", "[" + weight_str(h.weight) + "]"}, {"certificate", h.certificate}});
    Json out{{"lower", r.lower},
             {"upper", r.connected ? Json(r.upper) : Json("inf")},
             {"connected", r.connected},
             {"frames", r.frames},
             {"nodes", r.nodes},
             {"witness", hops}};
    if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
    c.emit(out);
  });

  auto* tr = dist->add_subcommand("tree", "edge length of the dimension-2 tree");
  tr->add_option("-i,--edge", edge)->check(CLI::PositiveNumber);
  reg.on(tr, [&](const Context& c) {
    c.emit(Json{{"edge", edge},
                {"closed_form", "(log(" + std::to_string(edge + 1) + ") - log(" + std::to_string(edge) + "))/sqrt(2)"},
                {"length", x2_edge_length(edge)}});
  });
}

void add_angle(CLI::App& app, Registry& reg) {
  auto* ang = app.add_subcommand("angle", "angle between two directions at a weight");
  auto& w = reg.make<std::string>();
  auto& d1 = reg.make<std::string>();
  auto& d2 = reg.make<std::string>();
  auto& metric = reg.make<std::string>("log");
  ang->add_option("-w,--weight", w)->required();
  ang->add_option("--d1", d1, "[g1,g2,g3] or h:I:m1,m2,m3:+|-")->required();
  ang->add_option("--d2", d2)->required();
  ang->add_option("--metric", metric)->check(CLI::IsMember({"log", "simplex"}));
  reg.on(ang, [&](const Context& c) {
    Weight a = c.weight(w);
    double t = angle(a, parse_direction(d1, a), parse_direction(d2, a), metric == "log" ? AngleMetric::Log : AngleMetric::Simplex);
    c.emit(Json{{"angle", t}, {"over_pi", t / std::numbers::pi}});
  });
}

void add_link(CLI::App& app, Registry& reg) {
  auto* link = app.add_subcommand("link", "links of points")->require_subcommand(1);
  auto& f = reg.make<std::string>();
  auto& w = reg.make<std::string>();
  auto& gens = reg.make<std::string>();
  auto& dot = reg.make<bool>(false);
  auto& p = reg.make<unsigned>(1);
  auto& q = reg.make<unsigned>(3);

  auto* rays = link->add_subcommand("rays", "local rays and sectors at a weight");
  rays->add_option("-w,--weight", w)->required();
  reg.on(rays, [&](const Context& c) {
    LocalGeometry g = local_geometry(c.weight(w));
    Json rs = Json::array(), ss = Json::array();
    for (const auto& r : g.rays)
      rs.push_back(Json{{"toward", "[" + weight_str(r.ideal) + "]"},
                        {"kind", r.kind == RayKind::Hyperplane ? r.hyperplane->str(true) : "auxiliary"},
                        {"wall", r.wall},
                        {"tag", r.tag.empty() ? "-" : r.tag}});
    for (const auto& s : g.sectors) ss.push_back(Json{{"rays", Json::array({s.left, s.right})}, {"width", s.width}});
    c.emit(Json{{"alpha", "[" + weight_str(g.alpha) + "]"}, {"radius", g.radius}, {"cyclic", g.cyclic}, {"rays", rs}, {"sectors", ss}});
  });

  auto build = [&](const Context& c) {
    Weight a = c.weight(w);
    std::vector<TameWord> g = gens.empty() ? stabilizer_generators(alpha_plus(a), c.cfg.field, c.cfg.degree_cap) : read_words(gens, c.cfg);
    LinkOptions opts;
    opts.radius = c.cfg.radius;
    return build_link(ValuationPoint(c.word(f), a), g, opts);
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("-f,--frame", f);
    s->add_option("-w,--weight", w)->required();
    s->add_option("--gens", gens, "stabilizer generators at the sorted weight; default: the standard generating set");
    s->add_flag("--dot", dot, "print the graph in DOT format");
  };

  auto* bld = link->add_subcommand("build", "glue the link from stabilizer translates");
  add_common(bld);
  reg.on(bld, [&, build](const Context& c) {
    LinkGraph g = build(c);
    if (dot) {
      c.out << link_dot(g);
      return;
    }
    Json vs = Json::array(), es = Json::array();
    for (const auto& v : g.vertices) vs.push_back(Json{{"frame", v.frame}, {"ray", v.ray}, {"tag", v.tag.empty() ? "-" : v.tag}});
    for (const auto& e : g.edges) es.push_back(Json{{"u", e.u}, {"v", e.v}, {"length", e.length}});
    Json r = link_summary(g);
    r["vertex_list"] = vs;
    r["edge_list"] = es;
    c.emit(r);
  });

  auto* gir = link->add_subcommand("girth", "metric and combinatorial girth");
  add_common(gir);
  reg.on(gir, [&, build](const Context& c) {
    LinkGraph g = build(c);
    Json r = link_summary(g);
    r["combinatorial_girth"] = count_or_none(combinatorial_girth(g));
    double mg = metric_girth(g);
    r["metric_girth"] = std::isinf(mg) ? Json("inf") : Json(mg);
    r["diameter"] = count_or_none(link_diameter(g));
    r["shortest_cycle"] = cycle_json(shortest_cycle(g, true));
    c.emit(r);
  });

  auto* cat1 = link->add_subcommand("cat1", "girth >= 2 pi check");
  add_common(cat1);
  reg.on(cat1, [&, build](const Context& c) {
    LinkGraph g = build(c);
    Cat1Report rep = check_cat1(g, c.cfg.tol);
    if (dot) {
      c.out << link_dot(g);
      return;
    }
    Json r = link_summary(g);
    r["metric_girth"] = std::isinf(rep.metric_girth) ? Json("inf") : Json(rep.metric_girth);
    r["combinatorial_girth"] = count_or_none(rep.combinatorial_girth);
    r["threshold"] = rep.threshold;
    r["cat1"] = rep.cat1;
    r["scoped"] = rep.scoped;
    r["shortest_cycle"] = cycle_json(rep.shortest);
    c.emit(r);
  });

  auto* fano = link->add_subcommand("fano", "link of nu_{id,[1,1,1]} over F_2");
  fano->add_flag("--dot", dot);
  reg.on(fano, [&](const Context& c) {
    LinkGraph g = fano_link();
    if (dot) {
      c.out << link_dot(g);
      return;
    }
    Json r = link_summary(g);
    r["combinatorial_girth"] = count_or_none(combinatorial_girth(g));
    r["metric_girth"] = metric_girth(g);
    r["diameter"] = count_or_none(link_diameter(g));
    c.emit(r);
  });

  auto* oct = link->add_subcommand("octangle", "the eight-edge cycle at (pq, p, 1)");
  oct->add_option("-p", p)->check(CLI::PositiveNumber);
  oct->add_option("-q", q)->check(CLI::PositiveNumber);
  reg.on(oct, [&](const Context& c) {
    AnglesCycle a = example_angles_cycle(p, q);
    Json aps = Json::array(), ll = Json::array(), sl = Json::array();
    for (const auto& s : a.apartments) aps.push_back(s);
    for (double v : a.log_lengths) ll.push_back(v);
    for (double v : a.simplex_lengths) sl.push_back(v);
    c.emit(Json{{"p", p},
                {"q", q},
                {"apartments", aps},
                {"log_lengths", ll},
                {"simplex_lengths", sl},
                {"log_total", a.log_total},
                {"log_total_over_pi", a.log_total / std::numbers::pi},
                {"simplex_total", a.simplex_total},
                {"simplex_total_over_pi", a.simplex_total / std::numbers::pi},
                {"simplex_below_2pi", a.simplex_total < 2 * std::numbers::pi},
                {"commute", a.commute},
                {"glued", a.glued}});
  });
}

void add_tree(CLI::App& app, Registry& reg) {
  auto* tree = app.add_subcommand("tree", "chamber ball of the dimension-2 tree over a prime field");
  auto& depth = reg.make<unsigned>(3);
  auto& cap = reg.make<unsigned>(3);
  auto& dot = reg.make<bool>(false);
  tree->add_option("--depth", depth);
  tree->add_option("--cap", cap, "degree cap for stabilizer elements")->check(CLI::PositiveNumber);
  tree->add_flag("--dot", dot);
  reg.on(tree, [&](const Context& c) {
    if (c.cfg.n != 2) throw PreconditionError("tree needs -n 2");
    TreeFragment t = x2_tree_ball(ValuationPoint(TameWord::identity(2, c.cfg.field, c.cfg.degree_cap), {2, 1}), depth, cap);
    if (dot) {
      c.out << "graph tree {\n";
      for (std::size_t v = 0; v < t.vertices; ++v) c.out << "  v" << v << " [label=\"s" << t.vertex_level[v] << "\"];\n";
      for (const auto& [u, v] : t.edge_list) {
        unsigned i = std::min(t.vertex_level[u], t.vertex_level[v]);
        c.out << "  v" << u << " -- v" << v << " [label=\"" << fmt_double(x2_edge_length(i)) << "\"];\n";
      }
      c.out << "}\n";
      return;
    }
    c.emit(Json{{"chambers", t.chambers},
                {"vertices", t.vertices},
                {"edges", t.edges},
                {"components", t.components},
                {"acyclic", x2_acyclicity_check(t)},
                {"top_vertex", t.top_vertex}});
  });
}

void add_linearize(CLI::App& app, Registry& reg) {
  auto* lin = app.add_subcommand("linearize", "conjugate a finite group with a common fixed point into the linear group");
  auto& group = reg.make<std::string>();
  auto& conj = reg.make<std::string>();
  auto& w = reg.make<std::string>();
  auto& generators = reg.make<bool>(false);
  auto& max_size = reg.make<std::size_t>(10000);
  lin->add_option("--group", group, "group elements (or generators) separated by --- lines")->required();
  lin->add_flag("--generators", generators, "close the listed words under composition");
  lin->add_option("--max-size", max_size, "closure budget with --generators");
  lin->add_option("--conjugate-by", conj, "word c with c G c^-1 fixing a point of the sorted chamber");
  lin->add_option("-w,--weight", w, "use this fixed weight instead of searching");
  reg.on(lin, [&](const Context& c) {
    auto words = read_words(group, c.cfg);
    FiniteGroup g = generators ? group_from_generators(words, max_size) : group_from_elements(words);
    CommonRegion region;
    if (w.empty() && conj.empty()) region = common_fixed_region(g);
    Linearization l = !w.empty() ? linearize_at(g, c.weight(w)) : !conj.empty() ? linearize_conjugated(g, c.word(conj)) : linearize(g);
    Json mats = Json::array(), conjs = Json::array();
    bool linear = true;
    for (std::size_t k = 0; k < g.elements.size(); ++k) {
      mats.push_back(matrix_json(l.linear_parts[k]));
      conjs.push_back(l.conjugates[k].str());
      linear = linear && verify_linear(l.conjugates[k]);
    }
    Json r{{"order", g.elements.size()}, {"alpha", "[" + weight_str(l.alpha) + "]"}};
    if (w.empty() && conj.empty()) r["region"] = region.region.str();
    r["h"] = l.h.str();
    std::string hw = l.h.word_text();
    while (!hw.empty() && hw.back() == '\n') hw.pop_back();
    r["h_word"] = hw;
    r["conjugates"] = conjs;
    r["linear_parts"] = mats;
    r["all_linear"] = linear;
    c.emit(r);
  });
}

void add_witness(CLI::App& app, Registry& reg) {
  auto* wit = app.add_subcommand("witness", "certified point moved by a non-identity map");
  auto& f = reg.make<std::string>();
  wit->add_option("-f,--frame", f, "the map")->required();
  reg.on(wit, [&](const Context& c) { c.emit(witness_json(c.word(f))); });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the tame valuation complex"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  std::string field, config = default_config_path(), mesh;
  std::size_t n = 0;
  unsigned cap = 0, depth = 0;
  double tol = 0;
  int radius = 0;
  std::uint64_t seed = 0;
  bool json = false;
  auto* o_field = app.add_option("--field", field, "Q or a prime");
  auto* o_n = app.add_option("-n,--dim", n, "number of variables");
  auto* o_cap = app.add_option("--degree-cap", cap);
  auto* o_tol = app.add_option("--tol", tol);
  auto* o_mesh = app.add_option("--mesh", mesh, "grid step for chain searches");
  auto* o_depth = app.add_option("--depth", depth, "catalog product length for chain searches");
  auto* o_radius = app.add_option("--radius", radius, "group ball radius for links; negative runs to closure");
  auto* o_seed = app.add_option("--seed", seed);
  app.add_option("--config", config, std::string("JSON config; default from $") + kConfigEnv);
  app.add_flag("--json", json, "JSON reports");

  Registry reg;
  add_tame(app, reg);
  add_val(app, reg);
  add_adm(app, reg);
  add_stab(app, reg);
  add_dist(app, reg);
  add_angle(app, reg);
  add_link(app, reg);
  add_tree(app, reg);
  add_linearize(app, reg);
  add_witness(app, reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    SessionConfig cfg;
    if (!config.empty()) cfg = load_config(config, cfg);
    if (o_field->count()) cfg.field = Field::parse(field);
    if (o_n->count()) cfg.n = n;
    if (o_cap->count()) cfg.degree_cap = cap;
    if (o_tol->count()) cfg.tol = tol;
    if (o_mesh->count()) cfg.mesh = parse_rational(mesh);
    if (o_depth->count()) cfg.depth = depth;
    if (o_radius->count()) cfg.radius = radius;
    if (o_seed->count()) cfg.seed = seed;
    cfg.json = json;
    cfg.validate();
    Context ctx{cfg, out};
    for (auto& [sub, action] : reg.actions)
      if (sub->parsed()) action(ctx);
    return 0;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tamex::cli
