#ifndef GRPD_REPORT_HPP
#define GRPD_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "grpd/laws.hpp"
#include "grpd/splitext.hpp"

namespace grpd {

// Machine readable reports.  Key order is fixed (insertion order) and the
// dump format is stable, so identical runs emit identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const VerifyFailure &f);
Json to_json(const VerifyReport &r);
Json to_json(const LawWitness &w);
Json to_json(const LawReport &r);

// The common envelope every command emits:
// {command, inputs, result, cases_checked, failures, wall_time_ms}.
Json report_envelope(const std::string &command,
                     const std::vector<std::string> &inputs, Json result,
                     long cases_checked, Json failures, long wall_time_ms);

std::string report_to_string(const Json &report);

} // namespace grpd

#endif // GRPD_REPORT_HPP
