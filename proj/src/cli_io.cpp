#include "polyface/cli_io.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "polyface/poset_gen.hpp"

namespace polyface {

json set_to_json(ElementSet s) { return s.to_vector(); }

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return {{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object()) throw InputError("poset must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("poset needs an integer \"n\"");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 0 || n > kMaxInputSize) {
    throw InputError("poset size " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxInputSize) + "]");
  }
  std::vector<Cover> rel;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw InputError("\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
        throw InputError("each cover must be a pair of integers, got " + c.dump());
      }
      rel.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  try {
    return Poset::from_relations(static_cast<int>(n), rel);
  } catch (const PosetError& e) {
    throw InputError(e.what());
  }
}

Poset parse_poset(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return poset_from_json(j);
}

namespace {

json labels_to_json(const std::vector<ElementSet>& sets) {
  json out = json::array();
  for (ElementSet s : sets) out.push_back(set_to_json(s));
  return out;
}

json report_header(const Poset& p, Polytope kind, const FVector2& f) {
  return {{"poset", poset_to_json(p)}, {"polytope", to_string(kind)}, {"f0", f.f0},
          {"f1", f.f1},           {"f2_tri", f.f2_tri},          {"f2_sq", f.f2_sq}};
}

}  // namespace

json census_report(const Poset& p, Polytope kind) {
  json r = report_header(p, kind, f_vector2(p, kind));
  json squares = json::array();
  json triangles = json::array();
  if (p.size() > 2) {
    if (kind == Polytope::Order) {
      for (const auto& s : o_squares(p)) {
        squares.push_back({{"f1", set_to_json(s.f1)}, {"f2", set_to_json(s.f2)},
                           {"vertices", labels_to_json(s.vertices())}});
      }
    } else {
      for (const auto& s : c_squares(p)) {
        squares.push_back({{"q", set_to_json(s.q)}, {"r", set_to_json(s.r)}, {"s", set_to_json(s.s)},
                           {"vertices", labels_to_json(s.vertices())}});
      }
    }
    for (const auto& t : kind == Polytope::Order ? o_triangles(p) : c_triangles(p)) {
      triangles.push_back(labels_to_json({t.a, t.b, t.c}));
    }
  }
  r["squares"] = std::move(squares);
  r["triangles"] = std::move(triangles);
  return r;
}

json oracle_report(const Poset& p, Polytope kind) {
  const auto vertices = oracle::vertex_points(p, kind);
  const auto result = oracle::run_oracle(p, kind);
  json r = report_header(p, kind, result.f);
  json squares = json::array();
  json triangles = json::array();
  for (const auto& face : result.two_faces) {
    std::vector<ElementSet> labels;
    for (int v : face.vertex_ids) labels.push_back(vertices[v].support());
    std::sort(labels.begin(), labels.end());
    if (face.is_square()) squares.push_back({{"vertices", labels_to_json(labels)}});
    if (face.is_triangle()) triangles.push_back(labels_to_json(labels));
  }
  r["squares"] = std::move(squares);
  r["triangles"] = std::move(triangles);
  r["source"] = "oracle";
  return r;
}

json bijection_report(const Poset& p, const BijectionReport& r) {
  json pairs = json::array();
  for (const auto& m : r.pairs) {
    pairs.push_back({{"o_square", {{"f1", set_to_json(m.o_square.f1)}, {"f2", set_to_json(m.o_square.f2)}}},
                     {"c_square",
                      {{"q", set_to_json(m.c_square.q)},
                       {"r", set_to_json(m.c_square.r)},
                       {"s", set_to_json(m.c_square.s)}}}});
  }
  return {{"poset", poset_to_json(p)},
          {"count_o", r.count_o},
          {"count_c", r.count_c},
          {"roundtrip_failures", r.roundtrip_failures},
          {"pairs", std::move(pairs)}};
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x) out << "  " << x << ";\n";
  for (auto [lo, hi] : p.covers()) out << "  " << lo << " -> " << hi << ";\n";
  out << "}\n";
  return out.str();
}

// ---- verification sweep ----------------------------------------------------

const std::vector<std::string>& verified_properties() {
  static const std::vector<std::string> names{
      "f0_f1_equal",      "squares_equal",    "triangles_le_xfree", "bijection",
      "recursion_alpha",  "recursion_phi",    "supermodularity",    "oracle_agreement",
      "oracle_diagonals", "facet_count"};
  return names;
}

namespace {

struct Instance {
  ElementSet x, y;
  int e;
};

std::vector<Instance> recursion_instances(const Poset& q) {
  std::vector<Instance> out;
  if (q.size() < 3 || !is_connected(q, q.ground())) return out;
  const ElementSet mx = max_of(q, q.ground());
  const ElementSet mn = min_of(q, q.ground());
  for (int e : q.ground() - mx - mn) {
    for (ElementSet::Mask xm = mx.bits();; xm = (xm - 1) & mx.bits()) {
      for (ElementSet::Mask ym = mn.bits();; ym = (ym - 1) & mn.bits()) {
        if (!recursion_setup_error(q, ElementSet(xm), ElementSet(ym), e)) {
          out.push_back({ElementSet(xm), ElementSet(ym), e});
        }
        if (ym == 0) break;
      }
      if (xm == 0) break;
    }
  }
  return out;
}

std::string fv(const FVector2& f) {
  return "(" + std::to_string(f.f0) + "," + std::to_string(f.f1) + "," + std::to_string(f.f2_tri) + "," +
         std::to_string(f.f2_sq) + ")";
}

std::string instance_text(const Instance& in) {
  return "e=" + std::to_string(in.e) + " X=" + in.x.to_string() + " Y=" + in.y.to_string();
}

int facet_count(const Poset& p, Polytope kind) {
  return static_cast<int>(
      oracle::irredundant_facets(oracle::facet_system(p, kind), oracle::vertex_points(p, kind)).size());
}

}  // namespace

void verify_poset(const Poset& p, const VerifyOptions& opt, std::vector<PropertyTally>& tallies,
                  std::vector<Counterexample>& out) {
  const auto& names = verified_properties();
  if (tallies.size() != names.size()) {
    tallies.clear();
    for (const auto& n : names) tallies.push_back({n, 0, 0});
  }
  auto record = [&](std::size_t prop, bool ok, const std::string& details) {
    if (ok) {
      ++tallies[prop].passed;
    } else {
      ++tallies[prop].failed;
      out.push_back({p, names[prop], details});
    }
  };
  std::function<FVector2(const Poset&, Polytope)> census = opt.census;
  if (!census) census = [](const Poset& q, Polytope k) { return f_vector2(q, k); };
  const FVector2 fo = census(p, Polytope::Order);
  const FVector2 fc = census(p, Polytope::Chain);
  const std::string both = "O=" + fv(fo) + " C=" + fv(fc);

  record(0, fo.f0 == fc.f0 && fo.f1 == fc.f1, both);
  record(1, fo.f2_sq == fc.f2_sq, both);
  const bool x_free = is_x_free(p);
  record(2, fo.f2_tri <= fc.f2_tri && (fo.f2_tri == fc.f2_tri) == x_free,
         both + (x_free ? " X-free" : " contains X"));

  const BijectionReport b = verify_bijection(p);
  record(3, b.clean() && b.count_o == fo.f2_sq,
         "count_o=" + std::to_string(b.count_o) + " count_c=" + std::to_string(b.count_c) +
             " failures=" + std::to_string(b.roundtrip_failures));

  auto instances = recursion_instances(p);
  if (p.size() > opt.recursion_exhaustive_n && static_cast<int>(instances.size()) > opt.recursion_samples) {
    std::mt19937_64 rng(opt.seed ^ relation_code(p));
    std::shuffle(instances.begin(), instances.end(), rng);
    instances.resize(opt.recursion_samples);
  }
  if (!instances.empty()) {
    std::string bad_alpha, bad_phi, bad_super;
    for (const auto& in : instances) {
      const auto a = alpha(p, in.x, in.y), ar = alpha_via_recursion(p, in.x, in.y, in.e);
      const auto f = phi(p, in.x, in.y), fr = phi_via_recursion(p, in.x, in.y, in.e);
      const auto s = check_supermodularity(p, in.x, in.y, in.e);
      if (a != ar && bad_alpha.empty()) {
        bad_alpha = instance_text(in) + " alpha=" + std::to_string(a) + " recursion=" + std::to_string(ar);
      }
      if (f != fr && bad_phi.empty()) {
        bad_phi = instance_text(in) + " phi=" + std::to_string(f) + " recursion=" + std::to_string(fr);
      }
      if (!s.holds() && bad_super.empty()) {
        bad_super = instance_text(in) + " lhs=" + std::to_string(s.lhs) + " rhs=" + std::to_string(s.rhs) +
                    (s.strictness_forced ? " (strict required)" : "");
      }
    }
    record(4, bad_alpha.empty(), bad_alpha);
    record(5, bad_phi.empty(), bad_phi);
    record(6, bad_super.empty(), bad_super);
  }

  if (p.size() <= opt.oracle_max_n) {
    for (Polytope kind : {Polytope::Order, Polytope::Chain}) {
      const auto sys = oracle::facet_system(p, kind);
      const auto vertices = oracle::vertex_points(p, kind);
      try {
        const FVector2 g = oracle::f_vector_low(sys, vertices);
        const FVector2 c = kind == Polytope::Order ? fo : fc;
        record(7, g == c, to_string(kind) + " census=" + fv(c) + " oracle=" + fv(g));
        bool diagonals = true;
        if (p.size() > 2) {
          for (const auto& face : oracle::enumerate_2faces(sys, vertices)) {
            if (face.is_square() && !oracle::check_square_diagonals(sys, vertices, face)) diagonals = false;
          }
        }
        record(8, diagonals, to_string(kind) + " square violates the diagonal rules");
      } catch (const oracle::OracleError& e) {
        record(7, false, to_string(kind) + " " + e.what());
      }
    }
  }

  if (p.size() <= opt.facet_max_n) {
    const int o = facet_count(p, Polytope::Order);
    const int c = facet_count(p, Polytope::Chain);
    record(9, o <= c && (o == c) == x_free,
           "O facets=" + std::to_string(o) + " C facets=" + std::to_string(c) +
               (x_free ? " X-free" : " contains X"));
  }
}

VerificationReport run_verification(const VerifyOptions& opt) {
  VerificationReport report;
  report.min_n = opt.min_n;
  report.max_n = opt.max_n;
  std::vector<Poset> posets;
  for (int n = opt.min_n; n <= opt.max_n; ++n) {
    auto level = all_posets(n);
    report.posets_per_n.push_back(static_cast<std::int64_t>(level.size()));
    posets.insert(posets.end(), level.begin(), level.end());
  }
  report.posets_checked = static_cast<std::int64_t>(posets.size());

  struct Slot {
    std::vector<PropertyTally> tallies;
    std::vector<Counterexample> failures;
  };
  std::vector<Slot> slots(posets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < posets.size(); i = next++) {
      verify_poset(posets[i], opt, slots[i].tallies, slots[i].failures);
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& n : verified_properties()) report.tallies.push_back({n, 0, 0});
  for (auto& slot : slots) {
    for (std::size_t k = 0; k < slot.tallies.size(); ++k) {
      report.tallies[k].passed += slot.tallies[k].passed;
      report.tallies[k].failed += slot.tallies[k].failed;
    }
    for (auto& c : slot.failures) report.counterexamples.push_back(std::move(c));
  }
  return report;
}

json verification_to_json(const VerificationReport& r) {
  json per_n = json::object();
  for (std::size_t i = 0; i < r.posets_per_n.size(); ++i) {
    per_n[std::to_string(r.min_n + static_cast<int>(i))] = r.posets_per_n[i];
  }
  json tallies = json::object();
  for (const auto& t : r.tallies) tallies[t.property] = {{"passed", t.passed}, {"failed", t.failed}};
  json ces = json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"poset", poset_to_json(c.poset)}, {"property", c.property}, {"details", c.details}});
  }
  return {{"n_range", {r.min_n, r.max_n}},
          {"posets_checked", r.posets_checked},
          {"posets_per_n", per_n},
          {"tallies", tallies},
          {"counterexamples", ces},
          {"clean", r.clean()}};
}

}  // namespace polyface
