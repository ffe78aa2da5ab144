#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ivlr/common.hpp"
#include "ivlr/rng.hpp"

namespace ivlr::sim {

// World scale: 1.0 world unit == 0.5 m of table span, so 0.04 units == 2 cm.
inline constexpr double kWorldMetersPerUnit = 0.5;
inline constexpr int kFrameSize = 32;
inline constexpr int kFramePixels = kFrameSize * kFrameSize * 3;
inline constexpr double kObjectRadius = 0.04;
inline constexpr double kZoneHalfExtent = 0.08;
inline constexpr double kMaxStep = 0.05;
inline constexpr double kPickRadius = 0.03;
inline constexpr int kHorizonBudget = 120;
inline constexpr int kNumColors = 4;

enum class Color : int { red = 0, green = 1, blue = 2, yellow = 3 };

const char* color_name(Color c);
std::optional<Color> color_from_name(const std::string& name);

// 32x32 RGB, row-major (y, x, channel), values in [0, 1].
struct Frame {
  std::vector<float> data;

  Frame() : data(kFramePixels, 0.0f) {}
  float& at(int y, int x, int c) { return data[(y * kFrameSize + x) * 3 + c]; }
  float at(int y, int x, int c) const { return data[(y * kFrameSize + x) * 3 + c]; }
  bool operator==(const Frame& o) const { return data == o.data; }
};

struct Action {
  double dx = 0.0;
  double dy = 0.0;
  double g = -1.0;  // >= 0 close/hold, < 0 open
};

struct ObjectState {
  int id = 0;
  Color color = Color::red;
  Vec2 pos;
  double radius = kObjectRadius;
};

struct ZoneState {
  int id = 0;
  std::string name;  // one of the color names
  Vec2 center;
  double half_extent = kZoneHalfExtent;
};

struct Subgoal {
  int object_id = 0;
  int zone_id = 0;
};

struct TaskSpec {
  std::vector<Subgoal> subgoals;        // ordered, 1..5 entries
  std::vector<Color> object_colors;     // color of object id i
  std::vector<std::string> zone_names;  // name of zone id i (the 4 color names)
  std::string instruction_text;
  int horizon_budget = kHorizonBudget;
};

struct WorldState {
  Vec2 gripper_pos;
  int held_object = -1;  // -1 when open
  std::vector<ObjectState> objects;
  std::vector<ZoneState> zones;
  std::vector<Subgoal> subgoals;     // copied from the task at reset
  int step_count = 0;
  std::vector<int> completion_step;  // first step each subgoal was satisfied, -1 if never

  bool holding() const { return held_object >= 0; }
};

enum class EventKind { pick, place };

struct Event {
  int step = 0;
  EventKind kind = EventKind::pick;
  int object_id = 0;
  int zone_id = -1;  // place only; -1 when released outside every zone
};

struct Demonstration {
  std::vector<Frame> frames;
  std::vector<Action> actions;
  std::string instruction_text;
  std::vector<Event> events;
  std::vector<int> true_boundaries;  // frame indices, one per subgoal, last == final frame
};

struct StepResult {
  Frame frame;
  std::vector<Event> events;
};

// Instruction template grammar: "put the <color> block in the <zone> zone",
// subgoals joined with ", then ".
std::string render_instruction(const TaskSpec& task);
std::vector<std::pair<Color, std::string>> parse_instruction(const std::string& text);

// Deterministic task sampler. Colors are distinct for up to 4 subgoals; a
// 5-subgoal task repeats exactly one color and the repeated pair is resolved
// at reset time by x-order (earlier subgoal gets the leftmost object).
TaskSpec make_task(int num_subgoals, std::uint64_t seed);

struct ResetResult {
  WorldState state;
  Frame frame;
  std::string instruction_text;
};

ResetResult reset(const TaskSpec& task, std::uint64_t seed);
StepResult step(WorldState& state, const Action& a);
Frame render(const WorldState& state);

struct SuccessResult {
  bool success = false;
  std::vector<bool> per_subgoal;
};

SuccessResult check_success(const WorldState& state, const TaskSpec& task);

Demonstration script_demonstration(const TaskSpec& task, std::uint64_t seed);

void apply_perturbation(WorldState& state, double magnitude, Rng& rng);

}  // namespace ivlr::sim
