#include <array>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

namespace {

using nlohmann::json;

// Generated from scenarios/*.json at configure time: an array of {name, document}.
struct PresetEntry {
  std::string_view name;
  std::string_view document;
};
#include "pursuit_presets.inc"

const json& member(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) throw ValidationError(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(path.empty() ? key : path + "." + key, "missing field");
  }
  return *it;
}

double number(const json& value, const std::string& path) {
  if (!value.is_number()) throw ValidationError(path, "expected a number");
  return value.get<double>();
}

Vec3 point(const json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 3) {
    throw ValidationError(path, "expected [x, y, z]");
  }
  return {number(value[0], path + "[0]"), number(value[1], path + "[1]"),
          number(value[2], path + "[2]")};
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

TaskParams load_scenario(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("malformed document: ") + e.what());
  }

  TaskParams task;
  const json& arena = member(doc, "arena", "");
  task.arena.radius = number(member(arena, "radius", "arena"), "arena.radius");
  task.arena.height = number(member(arena, "height", "arena"), "arena.height");

  const json& intrinsic = member(doc, "intrinsic", "");
  task.intrinsic.capture_radius =
      number(member(intrinsic, "capture_radius", "intrinsic"), "intrinsic.capture_radius");
  task.intrinsic.evader_speed =
      number(member(intrinsic, "evader_speed", "intrinsic"), "intrinsic.evader_speed");

  const json& drones = member(doc, "drones", "");
  if (!drones.is_array()) throw ValidationError("drones", "expected an array");
  for (std::size_t i = 0; i < drones.size(); ++i) {
    task.external.drone_spawns.push_back(point(drones[i], "drones[" + std::to_string(i) + "]"));
  }
  task.external.evader_spawn = point(member(doc, "evader", ""), "evader");

  if (doc.contains("obstacles")) {
    const json& obstacles = doc["obstacles"];
    if (!obstacles.is_array()) throw ValidationError("obstacles", "expected an array");
    for (std::size_t j = 0; j < obstacles.size(); ++j) {
      const std::string path = "obstacles[" + std::to_string(j) + "]";
      const json& o = obstacles[j];
      Obstacle obstacle;
      obstacle.center_xy.x = number(member(o, "x", path), path + ".x");
      obstacle.center_xy.y = number(member(o, "y", path), path + ".y");
      obstacle.radius = number(member(o, "radius", path), path + ".radius");
      obstacle.height = number(member(o, "height", path), path + ".height");
      task.external.obstacles.push_back(obstacle);
    }
  }

  validate(task);
  return task;
}

std::string save_scenario(const TaskParams& task) {
  json doc;
  doc["arena"] = {{"radius", task.arena.radius}, {"height", task.arena.height}};
  doc["intrinsic"] = {{"capture_radius", task.intrinsic.capture_radius},
                      {"evader_speed", task.intrinsic.evader_speed}};
  doc["drones"] = json::array();
  for (const Vec3& p : task.external.drone_spawns) doc["drones"].push_back(to_json(p));
  doc["evader"] = to_json(task.external.evader_spawn);
  doc["obstacles"] = json::array();
  for (const Obstacle& o : task.external.obstacles) {
    doc["obstacles"].push_back(
        {{"x", o.center_xy.x}, {"y", o.center_xy.y}, {"radius", o.radius}, {"height", o.height}});
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const PresetEntry& entry : kPresets) names.emplace_back(entry.name);
  return names;
}

std::optional<std::string_view> preset_document(std::string_view name) {
  for (const PresetEntry& entry : kPresets) {
    if (entry.name == name) return entry.document;
  }
  return std::nullopt;
}

TaskParams load_preset(std::string_view name) {
  const auto doc = preset_document(name);
  if (!doc) throw std::invalid_argument("unknown scenario preset '" + std::string(name) + "'");
  return load_scenario(*doc);
}

}  // namespace pursuit
