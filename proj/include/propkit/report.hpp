#pragma once

#include "propkit/rational.hpp"
#include "propkit/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace propkit {

struct Residual {
  std::string check;  // which sub-identity; may be empty
  Exponents exponents;
  Rational value;
};

// Outcome of one identity check. Serialized as
// {identity, orders, status, residuals: [{exponents, value}]}.
struct Report {
  std::string identity;
  std::vector<std::string> vars;
  std::vector<int> orders;
  std::optional<int> total;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;

  bool pass() const { return residuals.empty(); }
  // Appends every nonzero coefficient of s, tagged with `check`.
  void add_residuals(const std::string& check, const TruncSeries& s);
  void sort_residuals();
};

Report make_report(std::string identity, const Truncation& t);

std::string report_to_json(const Report& r);

}  // namespace propkit
