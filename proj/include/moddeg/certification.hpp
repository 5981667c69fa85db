#pragma once

#include <string>
#include <vector>

namespace moddeg {

/// Slack a computed value must keep from a printed bound.
inline constexpr double kPrintedSlack = 1e-4;

enum class Relation { at_most, less_than, at_least, within };

/// One numeric step of a certified inequality chain.
struct Waypoint {
  std::string name;
  double computed = 0;
  Relation relation = Relation::at_most;
  double bound = 0;     // the printed bound (lower end for `within`)
  double bound_hi = 0;  // upper end for `within`
  double margin = 0;    // distance to the bound, positive when satisfied
  bool pass = false;

  /// computed <= bound with at least `slack` to spare. Pass a negative slack
  /// to accept a value that only meets the bound after rounding.
  static Waypoint at_most(std::string name, double computed, double bound, double slack = kPrintedSlack);
  static Waypoint less_than(std::string name, double computed, double bound, double slack = kPrintedSlack);
  static Waypoint at_least(std::string name, double computed, double bound, double slack = kPrintedSlack);
  static Waypoint within(std::string name, double computed, double lo, double hi);
  /// |computed| <= tol
  static Waypoint vanishes(std::string name, double computed, double tol);

  std::string relation_text() const;
};

struct CertReport {
  std::string case_tag;
  std::vector<Waypoint> waypoints;
  std::vector<std::string> notes;

  bool overall_pass() const;
  const Waypoint& at(const std::string& name) const;
};

}  // namespace moddeg
