#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace wordpow::cli {

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      out << prefix << ":";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out << (i ? ", " : " ") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["caveats"] = caveats;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.caveats = j.at("caveats").get<std::vector<std::string>>();
  return r;
}

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.to_json().dump(2) + "\n";
  std::ostringstream out;
  flatten(report.to_json(), "", out);
  return out.str();
}

}  // namespace wordpow::cli
