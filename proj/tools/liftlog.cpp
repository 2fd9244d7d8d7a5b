// liftlog: exact computations around monomial ideals, their closures, and
// the derivations liftable through blow-ups and monomial charts.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liftlog/parse.hpp"
#include "liftlog/report.hpp"

namespace ll = liftlog;
using ll::ojson;

namespace {

struct global_opts {
  std::string format = "text";
  bool verify = false;
  unsigned long long seed = 1;
  int box_margin = 1;
  int n_max = 20;
  int window = 2;
};

ojson ring_names(const ll::ring_context& ctx) {
  ojson j = ojson::array();
  for (const auto& v : ctx.vars) j.push_back(v);
  return j;
}

// ---- verification oracles (run under --verify) ----

void verify_rr(const ll::monomial_ideal& I, const ll::rr_report& r, ll::report& rep) {
  rep.verify_ran = true;
  if (!ll::contains(r.closure, I))
    rep.verify_failures.push_back("closure does not contain the ideal");
  if (I.is_proper()) {
    if (!ll::contains(ll::integral_closure(I), r.closure))
      rep.verify_failures.push_back("closure not inside the integral closure");
  }
  if (r.power_check_passed) {
    ll::rr_report again = ll::rr_closure(r.closure);
    if (!(again.closure == r.closure))
      rep.verify_failures.push_back("closure is not idempotent");
  }
}

void verify_integral(const ll::monomial_ideal& I, const ll::monomial_ideal& Ibar,
                     ll::report& rep) {
  rep.verify_ran = true;
  if (!ll::contains(Ibar, I))
    rep.verify_failures.push_back("integral closure does not contain the ideal");
  ll::expvec box = I.gen_box();
  long long cells = 1;
  for (int b : box) cells *= b + 1;
  int kmax = ll::integral_oracle_kmax(I);
  ll::integral_oracle oracle(I, kmax);
  if (cells <= 4096) {
    ll::expvec cur(box.size(), 0);
    std::function<void(size_t)> scan = [&](size_t i) {
      if (i == box.size()) {
        bool lhs = ll::member(Ibar, cur);
        bool rhs = oracle.member_integral(cur);
        if (lhs != rhs) {
          rep.verify_failures.push_back("oracle disagrees at a lattice point");
        }
        return;
      }
      for (int v = 0; v <= box[i] && rep.verify_failures.empty(); ++v) {
        cur[i] = v;
        scan(i + 1);
      }
    };
    scan(0);
  } else {
    for (const auto& g : Ibar.min_gens())
      if (!oracle.member_integral(g))
        rep.verify_failures.push_back("oracle rejects a closure generator");
  }
}

void verify_tangent(const ll::monomial_ideal& I, const ll::derivation_module& M,
                    ll::report& rep) {
  rep.verify_ran = true;
  for (const auto& g : M.gens)
    if (!ll::preserves(g, I))
      rep.verify_failures.push_back("generator does not preserve the ideal");
  for (size_t i = 0; i < M.gens.size(); ++i)
    for (size_t j = i + 1; j < M.gens.size(); ++j) {
      auto br = ll::lie_bracket(M.gens[i], M.gens[j]);
      if (br && !ll::preserves(*br, I))
        rep.verify_failures.push_back("bracket of generators leaves the module");
    }
  if (I.ctx().n() == 2 && ll::is_m_primary(I)) {
    ll::staircase_data st = ll::staircase_T_2var(I);
    if (!ll::module_equal(M, st.module))
      rep.verify_failures.push_back("staircase closed form disagrees");
  }
}

// two-variable chart with first column w, unit determinant, used to certify
// log modules by the direct-lift oracle
std::optional<ll::monomial_map> gcd_chart(const ll::weight_valuation& v) {
  if (v.ctx.n() != 2 || v.w[0] <= 0 || v.w[1] <= 0) return std::nullopt;
  for (long long u = 0; u <= v.w[0]; ++u) {
    if ((1 + v.w[1] * u) % v.w[0] != 0) continue;
    long long t = (1 + v.w[1] * u) / v.w[0];
    ll::ring_context tgt({"c1", "c2"});
    return ll::monomial_map(v.ctx, tgt,
                            {{(int)v.w[0], (int)u}, {(int)v.w[1], (int)t}});
  }
  return std::nullopt;
}

void verify_log(const ll::weight_valuation& v, const ll::monomial_ideal& I,
                const ll::derivation_module& M, ll::report& rep) {
  rep.verify_ran = true;
  for (const auto& g : M.gens) {
    long long wb = ll::dotll(v.w, g.degree);
    if (wb >= 0) continue;
    for (const auto& a : I.min_gens())
      if (ll::apply(g, a))
        rep.verify_failures.push_back("generator lowers the value of a generator");
  }
  auto chart = gcd_chart(v);
  if (chart) {
    for (const auto& g : M.gens)
      if (!ll::lifts_regularly(*chart, g, {0}))
        rep.verify_failures.push_back("direct-lift oracle rejects a generator");
  }
}

void verify_blowup(const ll::monomial_ideal& I, const ll::lift_report& r,
                   ll::report& rep) {
  rep.verify_ran = true;
  if (!r.chain_ok) rep.verify_failures.push_back("inclusion chain broken");
  if (!ll::module_contains(r.T_rad, r.L))
    rep.verify_failures.push_back("liftable module not tangent to the radical");
  for (const auto& [v, d] : r.rees) {
    (void)d;
    ll::derivation_module a = ll::log_module(v, I);
    if (!ll::module_equal(a, ll::log_module(v, ll::power(I, 2))) ||
        !ll::module_equal(a, ll::log_module(v, ll::radical(I))))
      rep.verify_failures.push_back("log module depends on the defining ideal");
  }
}

void verify_chart(const ll::monomial_map& map, const std::vector<int>& critical,
                  const ll::derivation_module& M, ll::report& rep) {
  rep.verify_ran = true;
  for (const auto& g : M.gens) {
    if (!ll::lifts_regularly(map, g, critical))
      rep.verify_failures.push_back("generator does not lift regularly");
    else if (!ll::tangency_check(map, g, critical))
      rep.verify_failures.push_back("lifted generator not tangent to the divisor");
  }
}

void verify_sgr_tangent(const ll::numerical_semigroup& S,
                        const std::vector<long long>& egens, const ll::order_set& K,
                        ll::report& rep) {
  rep.verify_ran = true;
  ll::semigroup_ideal E(S, egens);
  for (long long k : K.min_orders) {
    for (long long s : S.min_gens())
      if (!S.contains(s + k - 1))
        rep.verify_failures.push_back("order fails the ring condition");
    for (long long e : E.gens())
      if (e > 0 && !E.contains(e + k - 1))
        rep.verify_failures.push_back("order fails the ideal condition");
  }
}

// ---- command runners ----

ll::report cmd_ideal(const std::string& op, const std::string& itext,
                     const std::string& jtext, int k, const std::string& point) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::report rep;
  rep.command = "ideal " + op;
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  if (op == "minimalize") {
    rep.outputs["ideal"] = ll::ideal_json(I);
  } else if (op == "member") {
    std::vector<long long> a = ll::parse_integer_list(point);
    ll::expvec e(a.begin(), a.end());
    rep.inputs["exponent"] = e;
    rep.outputs["member"] = ll::member(I, e);
  } else if (op == "radical") {
    rep.outputs["ideal"] = ll::ideal_json(ll::radical(I));
  } else if (op == "m-primary") {
    rep.outputs["m_primary"] = ll::is_m_primary(I);
  } else if (op == "power") {
    rep.inputs["k"] = k;
    rep.outputs["ideal"] = ll::ideal_json(ll::power(I, k));
  } else {
    ll::monomial_ideal J = ll::parse_ideal(ctx, jtext);
    rep.inputs["J"] = J.str();
    if (op == "sum") rep.outputs["ideal"] = ll::ideal_json(ll::sum(I, J));
    else if (op == "product") rep.outputs["ideal"] = ll::ideal_json(ll::product(I, J));
    else if (op == "quotient") rep.outputs["ideal"] = ll::ideal_json(ll::quotient(I, J));
    else if (op == "intersect") rep.outputs["ideal"] = ll::ideal_json(ll::intersect(I, J));
    else if (op == "equals") rep.outputs["equal"] = (I == J);
    else throw ll::error("unknown ideal operation '" + op + "'");
  }
  return rep;
}

ll::report cmd_closure_rr(const std::string& itext, const global_opts& g) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::rr_report r = ll::rr_closure(I, g.n_max, g.window);
  ll::report rep;
  rep.command = "closure rr";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.outputs = ll::rr_json(r);
  rep.citations = {"blow-up-thm"};
  if (g.verify) verify_rr(I, r, rep);
  return rep;
}

ll::report cmd_closure_integral(const std::string& itext, const global_opts& g) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::monomial_ideal Ibar = ll::integral_closure(I);
  ll::report rep;
  rep.command = "closure integral";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.outputs["integral_closure"] = ll::ideal_json(Ibar);
  rep.citations = {"int-clos-lemma"};
  if (g.verify) verify_integral(I, Ibar, rep);
  return rep;
}

ll::report cmd_newton(const std::string& itext, const global_opts& g) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::newton_polyhedron np = ll::newton_hull(I);
  ll::report rep;
  rep.command = "newton facets";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.outputs["facets"] = ll::facets_json(np);
  rep.citations = {"int-clos-lemma"};
  if (g.verify) {
    rep.verify_ran = true;
    for (const auto& gen : ll::integral_closure(I).min_gens())
      if (!np.contains(gen))
        rep.verify_failures.push_back("closure generator outside the polyhedron");
  }
  return rep;
}

ll::report cmd_der_module(const std::string& itext, const global_opts& g) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::derivation_module M = ll::tangent_module(I, g.box_margin);
  ll::report rep;
  rep.command = "der module";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.outputs["module"] = ll::module_json(M);
  rep.citations = {"blow-up-thm"};
  if (ctx.n() == 2 && ll::is_m_primary(I)) {
    ll::staircase_data st = ll::staircase_T_2var(I);
    rep.outputs["staircase"] = ojson{{"p", st.p}, {"q", st.q}};
    std::string note = ll::staircase_orientation_note(st);
    if (!note.empty()) rep.discrepancy_flags.push_back(note);
  }
  if (g.verify) verify_tangent(I, M, rep);
  return rep;
}

ll::report cmd_der_log(const std::string& wtext, const std::string& itext,
                       const global_opts& g) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::weight_valuation v(ctx, ll::parse_weights(wtext));
  ll::derivation_module M = ll::log_module(v, I, g.box_margin);
  ll::report rep;
  rep.command = "der log";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.inputs["w"] = v.w;
  rep.outputs["module"] = ll::module_json(M);
  rep.citations = {"log-der-lemma", "fund-thm-4"};
  for (auto& f : ll::documented_flags_log(v)) rep.discrepancy_flags.push_back(f);
  if (g.verify) verify_log(v, I, M, rep);
  return rep;
}

ll::report cmd_der_check(const std::string& itext, const std::string& dtext) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::graded_derivation d = ll::parse_derivation(ctx, dtext);
  ll::report rep;
  rep.command = "der check";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.inputs["derivation"] = ll::pretty_derivation(ctx, d);
  rep.outputs["preserves"] = ll::preserves(d, I);
  rep.outputs["in_tangent_module"] = ll::module_contains(ll::tangent_module(I), d);
  return rep;
}

ll::report cmd_lift_blowup(const std::string& itext, const global_opts& g) {
  auto [ctx, I] = ll::parse_ring_and_ideal(itext);
  ll::lift_report r = ll::sandwich_report(I);
  ll::report rep;
  rep.command = "lift blowup";
  rep.ring = ring_names(ctx);
  rep.inputs["I"] = I.str();
  rep.outputs = ll::lift_json(r);
  rep.citations = {"mainthm-L1", "mainthm-L2", "blow-up-thm", "blowup1"};
  if (g.verify) verify_blowup(I, r, rep);
  return rep;
}

ll::report cmd_lift_chart(const std::string& maptext, const std::string& critical,
                          const std::string& checktext, const global_opts& g) {
  ll::monomial_map map = ll::parse_monomial_map(maptext);
  std::vector<int> crit;
  {
    std::stringstream ss(critical);
    std::string name;
    while (std::getline(ss, name, ',')) {
      name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
      int idx = -1;
      for (int j = 0; j < map.target.n(); ++j)
        if (map.target.vars[j] == name) idx = j;
      if (idx < 0) throw ll::error("unknown critical coordinate '" + name + "'");
      crit.push_back(idx);
    }
  }
  if (crit.empty()) throw ll::error("lift chart: empty critical set");

  ll::derivation_module M = ll::chart_liftable(map, crit);
  ll::report rep;
  rep.command = "lift chart";
  rep.ring = ring_names(map.source);
  {
    ojson rows = ojson::array();
    for (const auto& r : map.rows) rows.push_back(r);
    rep.inputs["map"] = rows;
    rep.inputs["critical"] = crit;
  }
  rep.outputs["module"] = ll::module_json(M);
  {
    ojson ws = ojson::array();
    ojson warnings = ojson::array();
    for (int j : crit) {
      ll::weight_valuation v = ll::induced_weight(map, j);
      ws.push_back(v.w);
      if (ll::critical_weight_degenerate(map, j))
        warnings.push_back("induced weight at " + map.target.vars[j] +
                           " is a coordinate vector; the chart is unramified "
                           "there and the constraint is vacuous");
    }
    rep.outputs["induced_weights"] = ws;
    if (!warnings.empty()) rep.outputs["warnings"] = warnings;
  }
  rep.citations = {"fund-thm-4", "mainthm-L3"};
  if (!checktext.empty()) {
    ll::graded_derivation d = ll::parse_derivation(map.source, checktext);
    bool regular = ll::lifts_regularly(map, d, crit);
    ojson chk{{"derivation", ll::pretty_derivation(map.source, d)},
              {"in_module", ll::module_contains(M, d)},
              {"lifts_regularly", regular}};
    if (regular) chk["tangent_to_critical_locus"] = ll::tangency_check(map, d, crit);
    chk["lift"] = ll::laurent_json(ll::direct_lift(map, d));
    rep.outputs["check"] = chk;
  }
  if (g.verify) verify_chart(map, crit, M, rep);
  return rep;
}

ll::report cmd_sgr_rr(const std::string& gens, const std::string& ideal,
                      const global_opts& g) {
  ll::numerical_semigroup S(ll::parse_integer_list(gens));
  ll::semigroup_ideal E(S, ll::parse_integer_list(ideal));
  ll::sgr_rr_report r = ll::sgr_rr_closure(E, g.n_max, g.window);
  ll::report rep;
  rep.command = "sgr rr";
  rep.ring = S.min_gens();
  rep.inputs["ideal"] = E.gens();
  rep.outputs["closure"] = ll::sgr_ideal_json(r.closure);
  rep.outputs["stabilized_at"] = r.stabilized_at;
  rep.outputs["checked_window"] = r.checked_window;
  rep.outputs["power_check_passed"] = r.power_check_passed;
  rep.citations = {"rr-closure-ex"};
  if (g.verify) {
    rep.verify_ran = true;
    for (long long e : E.gens())
      if (!r.closure.contains(e))
        rep.verify_failures.push_back("closure does not contain the ideal");
  }
  return rep;
}

ll::report cmd_sgr_tangent(const std::string& gens, const std::string& ideal,
                           const global_opts& g) {
  ll::numerical_semigroup S(ll::parse_integer_list(gens));
  ll::report rep;
  rep.ring = S.min_gens();
  ll::order_set K;
  std::vector<long long> egens;
  if (ideal.empty()) {
    rep.command = "sgr tangent-ring";
    K = ll::sgr_tangent_ring(S);
    rep.citations = {"seidenberg", "1-dim"};
  } else {
    rep.command = "sgr tangent";
    egens = ll::parse_integer_list(ideal);
    ll::semigroup_ideal E(S, egens);
    rep.inputs["ideal"] = E.gens();
    K = ll::sgr_tangent(E);
    rep.citations = {"rr-closure-ex", "seidenberg"};
    for (auto& f : ll::documented_flags_sgr_tangent(S, E.gens()))
      rep.discrepancy_flags.push_back(f);
  }
  rep.outputs["orders"] = ll::order_set_json(K);
  rep.outputs["regular"] = ll::sgr_is_regular(S);
  if (g.verify && !ideal.empty()) verify_sgr_tangent(S, egens, K, rep);
  return rep;
}

ll::report cmd_sgr_regular(const std::string& gens) {
  ll::numerical_semigroup S(ll::parse_integer_list(gens));
  ll::report rep;
  rep.command = "sgr regular";
  rep.ring = S.min_gens();
  rep.outputs["regular"] = ll::sgr_is_regular(S);
  rep.outputs["frobenius"] = S.frobenius();
  rep.citations = {"1-dim"};
  return rep;
}

// ---- fixture corpus ----

ll::report run_fixture(const ojson& cmd, const global_opts& g) {
  std::string kind = cmd.at("kind").get<std::string>();
  if (kind == "closure-rr") return cmd_closure_rr(cmd.at("ideal"), g);
  if (kind == "closure-integral") return cmd_closure_integral(cmd.at("ideal"), g);
  if (kind == "newton-facets") return cmd_newton(cmd.at("ideal"), g);
  if (kind == "der-module") return cmd_der_module(cmd.at("ideal"), g);
  if (kind == "der-log") return cmd_der_log(cmd.at("w"), cmd.at("ideal"), g);
  if (kind == "lift-blowup") return cmd_lift_blowup(cmd.at("ideal"), g);
  if (kind == "lift-chart")
    return cmd_lift_chart(cmd.at("map"), cmd.at("critical"),
                          cmd.value("check", ""), g);
  if (kind == "sgr-rr") return cmd_sgr_rr(cmd.at("gens"), cmd.at("ideal"), g);
  if (kind == "sgr-tangent") return cmd_sgr_tangent(cmd.at("gens"), cmd.at("ideal"), g);
  if (kind == "sgr-tangent-ring") return cmd_sgr_tangent(cmd.at("gens"), "", g);
  throw ll::error("unknown fixture kind '" + kind + "'");
}

int cmd_verify_corpus(const std::string& dir, global_opts g, bool update) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no fixtures under " << dir << "\n";
    return 1;
  }
  int bad = 0;
  for (const auto& f : files) {
    std::ifstream in(f);
    ojson fixture = ojson::parse(in);
    std::string name = fixture.at("name").get<std::string>();
    g.verify = fixture.value("verify", true);
    ojson cmds = fixture.contains("commands")
                     ? fixture.at("commands")
                     : ojson::array({fixture.at("command")});
    ojson actual = ojson::array();
    int flags = 0;
    std::vector<std::string> failures;
    for (const auto& cmd : cmds) {
      ll::report rep = run_fixture(cmd, g);
      actual.push_back(rep.to_json());
      flags += (int)rep.discrepancy_flags.size();
      failures.insert(failures.end(), rep.verify_failures.begin(),
                      rep.verify_failures.end());
    }
    if (update) {
      fixture["expected"] = actual;
      std::ofstream out(f);
      out << fixture.dump(2) << "\n";
      std::cout << "fixture " << name << ": updated\n";
      continue;
    }
    bool match = fixture.at("expected").dump(2) == actual.dump(2);
    if (match && failures.empty()) {
      std::cout << "fixture " << name << ": ok";
      if (flags) std::cout << " (" << flags << " documented flag(s))";
      std::cout << "\n";
    } else {
      ++bad;
      std::cout << "fixture " << name << ": MISMATCH\n";
      if (!match) {
        std::cout << "--- expected\n"
                  << fixture.at("expected").dump(2) << "\n--- actual\n"
                  << actual.dump(2) << "\n";
      }
      for (const auto& v : failures) std::cout << "verify: " << v << "\n";
    }
  }
  return bad == 0 ? 0 : 2;
}

// ---- output ----

void print_text(const ll::report& rep, std::ostream& os) {
  os << "command: " << rep.command << "\n";
  os << "ring: " << rep.ring.dump() << "\n";
  for (const auto& [k, v] : rep.inputs.items())
    os << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& [k, v] : rep.outputs.items()) {
    if (v.is_object() && v.contains("pretty"))
      os << k << " = " << v["pretty"].get<std::string>() << "\n";
    else
      os << k << " = " << v.dump() << "\n";
  }
  if (!rep.citations.empty()) {
    os << "citations:";
    for (const auto& c : rep.citations) os << " " << c;
    os << "\n";
  }
  for (const auto& f : rep.discrepancy_flags) os << "flag: " << f << "\n";
  if (rep.verify_ran) {
    os << "verify: " << (rep.verify_failures.empty() ? "passed" : "FAILED") << "\n";
    for (const auto& f : rep.verify_failures) os << "  " << f << "\n";
  }
}

int emit(const ll::report& rep, const global_opts& g) {
  if (g.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    print_text(rep, std::cout);
  return (rep.verify_ran && !rep.verify_failures.empty()) ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monomial-ideal closures and liftable derivation modules"};
  app.require_subcommand(1);
  global_opts g;
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verify", g.verify, "run the cross-check oracles");
  app.add_option("--seed", g.seed, "seed for randomized verification");
  app.add_option("--box-margin", g.box_margin, "degree box margin");
  app.add_option("--n-max", g.n_max, "iteration bound for closures");
  app.add_option("--window", g.window, "stability window for closures");

  std::string op, itext, jtext, point, wtext, dtext, maptext, critical, checktext;
  std::string sgr_gens, sgr_ideal, corpus_dir = "corpus";
  int k = 0;
  bool corpus_update = false;

  auto* ideal = app.add_subcommand("ideal", "monomial ideal arithmetic");
  ideal->add_option("op", op)->required();
  ideal->add_option("-I", itext, "ring and generators")->required();
  ideal->add_option("-J", jtext, "second generator list");
  ideal->add_option("-k", k, "power exponent");
  ideal->add_option("-a", point, "exponent vector for member");

  auto* closure = app.add_subcommand("closure", "Ratliff-Rush and integral closure");
  closure->add_option("op", op)->required()->check(CLI::IsMember({"rr", "integral"}));
  closure->add_option("-I", itext)->required();

  auto* newton = app.add_subcommand("newton", "Newton polyhedron facets");
  newton->add_option("op", op)->check(CLI::IsMember({"facets"}));
  newton->add_option("-I", itext)->required();

  auto* der = app.add_subcommand("der", "derivation modules");
  der->add_option("op", op)->required()->check(CLI::IsMember({"module", "log", "check"}));
  der->add_option("-I", itext)->required();
  der->add_option("-w", wtext, "weight vector");
  der->add_option("-d", dtext, "derivation to check");

  auto* lift = app.add_subcommand("lift", "liftable derivations");
  lift->add_option("op", op)->required()->check(CLI::IsMember({"blowup", "chart"}));
  lift->add_option("-I", itext);
  lift->add_option("--map", maptext);
  lift->add_option("--critical", critical);
  lift->add_option("--check", checktext);

  auto* sgr = app.add_subcommand("sgr", "numerical semigroup computations");
  sgr->add_option("--gens", sgr_gens)->required();
  sgr->add_option("op", op)->required()
      ->check(CLI::IsMember({"rr", "tangent", "tangent-ring", "regular"}));
  sgr->add_option("--ideal", sgr_ideal);

  auto* corpus = app.add_subcommand("verify-corpus", "run the fixture corpus");
  corpus->add_option("--corpus", corpus_dir, "fixture directory");
  corpus->add_flag("--update", corpus_update, "rewrite expected outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1; // usage error
  }

  try {
    if (corpus->parsed()) return cmd_verify_corpus(corpus_dir, g, corpus_update);
    ll::report rep;
    if (ideal->parsed()) rep = cmd_ideal(op, itext, jtext, k, point);
    else if (closure->parsed())
      rep = op == "rr" ? cmd_closure_rr(itext, g) : cmd_closure_integral(itext, g);
    else if (newton->parsed()) rep = cmd_newton(itext, g);
    else if (der->parsed()) {
      if (op == "module") rep = cmd_der_module(itext, g);
      else if (op == "log") {
        if (wtext.empty()) throw ll::error("der log needs -w");
        rep = cmd_der_log(wtext, itext, g);
      } else {
        if (dtext.empty()) throw ll::error("der check needs -d");
        rep = cmd_der_check(itext, dtext);
      }
    } else if (lift->parsed()) {
      if (op == "blowup") {
        if (itext.empty()) throw ll::error("lift blowup needs -I");
        rep = cmd_lift_blowup(itext, g);
      } else {
        if (maptext.empty() || critical.empty())
          throw ll::error("lift chart needs --map and --critical");
        rep = cmd_lift_chart(maptext, critical, checktext, g);
      }
    } else if (sgr->parsed()) {
      if (op == "rr") {
        if (sgr_ideal.empty()) throw ll::error("sgr rr needs --ideal");
        rep = cmd_sgr_rr(sgr_gens, sgr_ideal, g);
      } else if (op == "tangent") {
        if (sgr_ideal.empty()) throw ll::error("sgr tangent needs --ideal");
        rep = cmd_sgr_tangent(sgr_gens, sgr_ideal, g);
      } else if (op == "tangent-ring") {
        rep = cmd_sgr_tangent(sgr_gens, "", g);
      } else {
        rep = cmd_sgr_regular(sgr_gens);
      }
    }
    return emit(rep, g);
  } catch (const ll::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
