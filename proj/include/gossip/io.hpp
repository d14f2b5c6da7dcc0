#pragma once

// Schedule interchange format and DOT export.
//
//   {"n": <int>, "preliminary": [[a,b],...], "calls": [[a,b],...]}
//
// Ids are 0-based. "preliminary" is optional on input and always written on
// output. Keys are written in the order n, preliminary, calls.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gossip/core.hpp"

namespace gossip::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json calls_to_json(std::span<const Call> calls) {
  Json arr = Json::array();
  for (const Call& c : calls) arr.push_back(Json::array({c.a, c.b}));
  return arr;
}

inline std::vector<Call> calls_from_json(const Json& arr, std::string_view field) {
  if (!arr.is_array()) throw ValidationError(std::string(field) + " must be an array");
  std::vector<Call> out;
  out.reserve(arr.size());
  for (const Json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ValidationError(std::string(field) + " entries must be [a, b] integer pairs");
    }
    const auto a = pair[0].get<std::int64_t>();
    const auto b = pair[1].get<std::int64_t>();
    if (a < 0 || b < 0 || a > UINT32_MAX || b > UINT32_MAX) {
      throw ValidationError(std::string(field) + " contains a negative or oversized id");
    }
    out.emplace_back(static_cast<PersonId>(a), static_cast<PersonId>(b));
  }
  return out;
}

}  // namespace detail

inline Json to_json(const AugmentedSchedule& s) {
  Json j;
  j["n"] = s.persons();
  j["preliminary"] = detail::calls_to_json(s.preliminary);
  j["calls"] = detail::calls_to_json(s.base.calls());
  return j;
}

inline Json to_json(const Schedule& s) { return to_json(AugmentedSchedule({}, s)); }

inline AugmentedSchedule schedule_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("schedule must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ValidationError("missing integer field \"n\"");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1 || n > UINT32_MAX) throw ValidationError("\"n\" must be a positive person count");
  if (!j.contains("calls")) throw ValidationError("missing field \"calls\"");
  std::vector<Call> prelim;
  if (j.contains("preliminary")) prelim = detail::calls_from_json(j["preliminary"], "preliminary");
  auto calls = detail::calls_from_json(j["calls"], "calls");
  return AugmentedSchedule(std::move(prelim), Schedule(static_cast<std::size_t>(n), std::move(calls)));
}

inline AugmentedSchedule parse_schedule(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return schedule_from_json(j);
}

inline AugmentedSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_schedule(buf.str());
}

inline std::string dump(const AugmentedSchedule& s) { return to_json(s).dump(); }
inline std::string dump(const Schedule& s) { return to_json(s).dump(); }

/// Undirected DOT graph. Edge labels are 1-based chronological positions
/// (preliminary calls first); preliminary edges are dashed.
inline std::string to_dot(const AugmentedSchedule& s, std::string_view name = "schedule") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t p = 0; p < s.persons(); ++p) out << "  " << p << ";\n";
  std::size_t label = 1;
  for (const Call& c : s.preliminary) {
    out << "  " << c.a << " -- " << c.b << " [label=\"" << label++ << "\", style=dashed];\n";
  }
  for (const Call& c : s.base.calls()) {
    out << "  " << c.a << " -- " << c.b << " [label=\"" << label++ << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const Schedule& s, std::string_view name = "schedule") {
  return to_dot(AugmentedSchedule({}, s), name);
}

}  // namespace gossip::io
