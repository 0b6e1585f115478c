#include "grpd/report.hpp"

namespace grpd {

Json to_json(const VerifyFailure &f) {
  Json j;
  j["base"] = f.base;
  j["structure"] = f.structure;
  j["action"] = f.action;
  j["kind"] = f.kind == VerifyFailure::Kind::Missing ? "missing" : "non-unique";
  j["count"] = f.count;
  return j;
}

Json to_json(const VerifyReport &r) {
  Json j;
  j["kernel"] = r.kernel;
  j["candidate_order"] = r.candidate_order;
  j["cases_checked"] = r.cases_checked;
  j["pass"] = r.pass();
  j["failures"] = Json::array();
  for (const auto &f : r.failures)
    j["failures"].push_back(to_json(f));
  return j;
}

Json to_json(const LawWitness &w) {
  Json j;
  j["group"] = w.group;
  j["detail"] = w.detail;
  return j;
}

Json to_json(const LawReport &r) {
  Json j;
  j["law"] = r.law;
  j["cases_checked"] = r.cases_checked;
  j["vacuous"] = r.vacuous;
  j["pass"] = r.pass();
  j["failures"] = Json::array();
  for (const auto &w : r.failures)
    j["failures"].push_back(to_json(w));
  return j;
}

Json report_envelope(const std::string &command,
                     const std::vector<std::string> &inputs, Json result,
                     long cases_checked, Json failures, long wall_time_ms) {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = std::move(result);
  j["cases_checked"] = cases_checked;
  j["failures"] = std::move(failures);
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string report_to_string(const Json &report) {
  return report.dump(2) + "\n";
}

} // namespace grpd
