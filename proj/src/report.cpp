#include "liftlog/report.hpp"

#include <algorithm>

namespace liftlog {

ojson ideal_json(const monomial_ideal& I) {
  ojson gens = ojson::array();
  for (const auto& g : I.min_gens()) gens.push_back(g);
  return ojson{{"generators", gens}, {"pretty", I.str()}};
}

ojson module_json(const derivation_module& M) {
  ojson gens = ojson::array();
  for (const auto& g : M.gens) {
    ojson coeffs = ojson::array();
    for (const auto& c : g.coeffs) coeffs.push_back(c.str());
    gens.push_back(ojson{{"degree", g.degree}, {"coeffs", coeffs}});
  }
  return ojson{{"generators", gens}, {"pretty", pretty_module(M)}};
}

ojson facets_json(const newton_polyhedron& np) {
  ojson out = ojson::array();
  for (const auto& f : np.facets) out.push_back(ojson{{"w", f.w}, {"d", f.d}});
  return out;
}

ojson rr_json(const rr_report& r) {
  return ojson{{"closure", ideal_json(r.closure)},
               {"stabilized_at", r.stabilized_at},
               {"checked_window", r.checked_window},
               {"power_check_passed", r.power_check_passed}};
}

ojson lift_json(const lift_report& r) {
  ojson rees = ojson::array();
  for (const auto& [v, d] : r.rees) rees.push_back(ojson{{"w", v.w}, {"d", d}});
  return ojson{{"T_I", module_json(r.T_I)},
               {"T_rr", module_json(r.T_rr)},
               {"L", module_json(r.L)},
               {"T_bar", module_json(r.T_bar)},
               {"T_rad", module_json(r.T_rad)},
               {"rees", rees},
               {"chain_ok", r.chain_ok},
               {"uniformly_ramified", r.uniformly_ramified},
               {"differentially_ramified", r.differentially_ramified}};
}

ojson order_set_json(const order_set& K) {
  return ojson{{"min_orders", K.min_orders},
               {"threshold", K.threshold},
               {"members_below_threshold", K.members_below_threshold}};
}

ojson sgr_ideal_json(const semigroup_ideal& E) {
  return ojson{{"semigroup", E.sgr().min_gens()}, {"generators", E.gens()}};
}

namespace {

std::string pretty_monomial(const ring_context& ctx, const expvec& e) {
  std::string s;
  for (int i = 0; i < ctx.n(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

} // namespace

std::string pretty_derivation(const ring_context& ctx, const graded_derivation& d) {
  std::string s;
  for (int i = 0; i < ctx.n(); ++i) {
    if (d.coeffs[i].is_zero()) continue;
    rat c = d.coeffs[i];
    if (!s.empty()) {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    } else if (c.sign() < 0) {
      s += "-";
      c = -c;
    }
    expvec mono = d.degree;
    mono[i] += 1;
    std::string m = pretty_monomial(ctx, mono);
    if (!(c == rat(1))) s += c.str() + "*";
    if (m != "1") s += m;
    s += "\u2202" + ctx.vars[i];
  }
  return s;
}

std::string pretty_module(const derivation_module& M) {
  const int n = M.ctx.n();
  bool slotwise = true;
  for (const auto& g : M.gens) {
    int nz = 0;
    bool unit = false;
    for (const auto& c : g.coeffs) {
      if (c.is_zero()) continue;
      ++nz;
      unit = c == rat(1);
    }
    if (nz != 1 || !unit) { slotwise = false; break; }
  }
  if (slotwise && !M.gens.empty()) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      std::vector<expvec> slot;
      for (const auto& g : M.gens) {
        if (g.coeffs[i].is_zero()) continue;
        expvec mono = g.degree;
        mono[i] += 1;
        slot.push_back(std::move(mono));
      }
      std::sort(slot.begin(), slot.end(), lex_greater);
      std::vector<std::string> monos;
      for (const auto& mono : slot) monos.push_back(pretty_monomial(M.ctx, mono));
      if (monos.empty()) continue;
      if (!s.empty()) s += " + ";
      s += "(";
      for (size_t k = 0; k < monos.size(); ++k) {
        if (k) s += ",";
        s += monos[k];
      }
      s += ")\u2202" + M.ctx.vars[i];
    }
    return s;
  }
  std::string s;
  for (const auto& g : M.gens) {
    if (!s.empty()) s += ", ";
    s += pretty_derivation(M.ctx, g);
  }
  return s;
}

std::string pretty_laurent(const ring_context& ctx, const laurent_poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& t : p) {
    rat c = t.c;
    if (!s.empty()) {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    } else if (c.sign() < 0) {
      s += "-";
      c = -c;
    }
    std::string m;
    for (int i = 0; i < ctx.n(); ++i) {
      if (t.e[i] == 0) continue;
      if (!m.empty()) m += "*";
      m += ctx.vars[i];
      if (t.e[i] != 1) m += "^" + std::to_string(t.e[i]);
    }
    if (m.empty()) {
      s += c.str();
    } else if (c == rat(1)) {
      s += m;
    } else {
      s += c.str() + "*" + m;
    }
  }
  return s;
}

ojson laurent_json(const laurent_derivation_image& d) {
  ojson imgs = ojson::object();
  for (int j = 0; j < d.ctx.n(); ++j) {
    ojson terms = ojson::array();
    for (const auto& t : d.images[j])
      terms.push_back(ojson{{"c", t.c.str()}, {"e", t.e}});
    imgs[d.ctx.vars[j]] =
        ojson{{"terms", terms}, {"pretty", pretty_laurent(d.ctx, d.images[j])}};
  }
  return imgs;
}

std::vector<std::string> documented_flags_log(const weight_valuation& v) {
  std::vector<std::string> flags;
  if (v.w == std::vector<long long>{4, 9} && v.ctx.n() == 2) {
    flags.push_back(
        "weighted-chart-printed-value: derived coefficient ideal for ∂" +
        v.ctx.vars[1] + " is (" + v.ctx.vars[0] + "^3," + v.ctx.vars[1] +
        "); the worked example prints (" + v.ctx.vars[0] + "^2," +
        v.ctx.vars[1] + ")");
  }
  return flags;
}

std::vector<std::string> documented_flags_sgr_tangent(
    const numerical_semigroup& S, const std::vector<long long>& ideal_gens) {
  std::vector<std::string> flags;
  if (S.min_gens() == std::vector<long long>{4, 5, 6, 7} &&
      ideal_gens == std::vector<long long>{4, 5, 6, 7}) {
    flags.push_back(
        "sgr-tangent-printed-value: derived order set has minimal orders "
        "{1,2,3,4}; the worked example prints the two generators t∂t, "
        "t^2∂t");
  }
  return flags;
}

std::string staircase_orientation_note(const staircase_data& st) {
  if (st.p == st.q) return "";
  return "staircase-orientation: y-power p=" + std::to_string(st.p) +
         " and x-power q=" + std::to_string(st.q) +
         " follow the worked values; the displayed closed form assigns the two "
         "gap maxima transposed";
}

ojson report::to_json() const {
  ojson j{{"command", command},
          {"ring", ring},
          {"inputs", inputs},
          {"outputs", outputs},
          {"citations", citations},
          {"discrepancy_flags", discrepancy_flags}};
  if (verify_ran) {
    j["verify"] = ojson{{"ran", true},
                        {"passed", verify_failures.empty()},
                        {"failures", verify_failures}};
  }
  return j;
}

} // namespace liftlog
