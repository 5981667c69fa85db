#include "moddeg/certification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace moddeg {

Waypoint Waypoint::at_most(std::string name, double computed, double bound, double slack) {
  Waypoint w{std::move(name), computed, Relation::at_most, bound, bound};
  w.margin = bound - computed;
  w.pass = std::isfinite(computed) && w.margin >= slack;
  return w;
}

Waypoint Waypoint::less_than(std::string name, double computed, double bound, double slack) {
  Waypoint w{std::move(name), computed, Relation::less_than, bound, bound};
  w.margin = bound - computed;
  w.pass = std::isfinite(computed) && w.margin > 0 && w.margin >= slack;
  return w;
}

Waypoint Waypoint::at_least(std::string name, double computed, double bound, double slack) {
  Waypoint w{std::move(name), computed, Relation::at_least, bound, bound};
  w.margin = computed - bound;
  w.pass = std::isfinite(computed) && w.margin >= slack;
  return w;
}

Waypoint Waypoint::within(std::string name, double computed, double lo, double hi) {
  Waypoint w{std::move(name), computed, Relation::within, lo, hi};
  w.margin = std::min(computed - lo, hi - computed);
  w.pass = std::isfinite(computed) && w.margin >= 0;
  return w;
}

Waypoint Waypoint::vanishes(std::string name, double computed, double tol) {
  return within(std::move(name), computed, -tol, tol);
}

std::string Waypoint::relation_text() const {
  switch (relation) {
    case Relation::at_most: return "<=";
    case Relation::less_than: return "<";
    case Relation::at_least: return ">=";
    case Relation::within: return "in";
  }
  return "?";
}

bool CertReport::overall_pass() const {
  return !waypoints.empty() &&
         std::all_of(waypoints.begin(), waypoints.end(), [](const Waypoint& w) { return w.pass; });
}

const Waypoint& CertReport::at(const std::string& name) const {
  for (const auto& w : waypoints) {
    if (w.name == name) return w;
  }
  throw std::out_of_range("no waypoint named " + name);
}

}  // namespace moddeg
