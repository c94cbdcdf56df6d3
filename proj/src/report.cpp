#include "propkit/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <tuple>

namespace propkit {

void Report::add_residuals(const std::string& check, const TruncSeries& s) {
  for (const auto& [e, c] : s.terms()) residuals.push_back({check, e, c});
}

void Report::sort_residuals() {
  std::sort(residuals.begin(), residuals.end(), [](const Residual& a, const Residual& b) {
    return std::tie(a.check, a.exponents) < std::tie(b.check, b.exponents);
  });
}

Report make_report(std::string identity, const Truncation& t) {
  Report r;
  r.identity = std::move(identity);
  r.vars = t.vars;
  r.orders = t.orders;
  if (!t.weights.empty()) r.total = t.total;
  return r;
}

std::string report_to_json(const Report& r) {
  // ordered_json keeps the documented key order, so output is byte-stable
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json orders = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < r.vars.size(); ++i) orders[r.vars[i]] = r.orders[i];
  if (r.total) orders["total"] = *r.total;
  j["orders"] = orders;
  j["status"] = r.pass() ? "pass" : "fail";
  nlohmann::ordered_json res = nlohmann::ordered_json::array();
  Report sorted = r;
  sorted.sort_residuals();
  for (const auto& x : sorted.residuals) {
    nlohmann::ordered_json e;
    if (!x.check.empty()) e["check"] = x.check;
    nlohmann::ordered_json ex = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < x.exponents.size() && i < r.vars.size(); ++i)
      ex[r.vars[i]] = x.exponents[i];
    e["exponents"] = ex;
    e["value"] = to_string(x.value);
    res.push_back(e);
  }
  j["residuals"] = res;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

}  // namespace propkit
