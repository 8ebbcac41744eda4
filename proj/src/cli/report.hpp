// Structured output of one CLI invocation.

#ifndef WORDPOW_CLI_REPORT_HPP_
#define WORDPOW_CLI_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

namespace wordpow::cli {

using Json = nlohmann::ordered_json;

// Serialized with fields in this order: command, inputs, result, caveats.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> caveats;

  Json to_json() const;
  static Report from_json(const Json& j);
};

enum class Format { Json, Text };

std::string render(const Report& report, Format format);

}  // namespace wordpow::cli

#endif  // WORDPOW_CLI_REPORT_HPP_
