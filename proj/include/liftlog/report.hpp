#ifndef LIFTLOG_REPORT_HPP
#define LIFTLOG_REPORT_HPP

#include <string>

#include <json.hpp>

#include "liftlog/chart.hpp"
#include "liftlog/closures.hpp"
#include "liftlog/semigroup.hpp"
#include "liftlog/valuation.hpp"

namespace liftlog {

using ojson = nlohmann::ordered_json;

ojson ideal_json(const monomial_ideal& I);
ojson module_json(const derivation_module& M);
ojson facets_json(const newton_polyhedron& np);
ojson rr_json(const rr_report& r);
ojson lift_json(const lift_report& r);
ojson order_set_json(const order_set& K);
ojson sgr_ideal_json(const semigroup_ideal& E);
ojson laurent_json(const laurent_derivation_image& d);

/// Known divergences between computed values and the printed worked values;
/// these annotate reports and never fail a run.
std::vector<std::string> documented_flags_log(const weight_valuation& v);
std::vector<std::string> documented_flags_sgr_tangent(
    const numerical_semigroup& S, const std::vector<long long>& ideal_gens);
std::string staircase_orientation_note(const staircase_data& st);

/// "(x,y^3)Dx + (x^7,y)Dy" when every generator sits in a single slot,
/// term-by-term rendering otherwise
std::string pretty_module(const derivation_module& M);
std::string pretty_derivation(const ring_context& ctx, const graded_derivation& d);
std::string pretty_laurent(const ring_context& ctx, const laurent_poly& p);

/// Machine-readable command report: stable key order, byte-stable output.
struct report {
  std::string command;
  ojson ring;
  ojson inputs = ojson::object();
  ojson outputs = ojson::object();
  std::vector<std::string> citations;
  std::vector<std::string> discrepancy_flags;
  std::vector<std::string> verify_failures;
  bool verify_ran = false;

  ojson to_json() const;
};

} // namespace liftlog

#endif
