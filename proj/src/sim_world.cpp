#include "ivlr/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ivlr::sim {

namespace {

constexpr float kBackground[3] = {0.08f, 0.08f, 0.10f};

constexpr float kPalette[kNumColors][3] = {
    {0.90f, 0.15f, 0.15f},  // red
    {0.15f, 0.80f, 0.20f},  // green
    {0.20f, 0.40f, 0.95f},  // blue
    {0.95f, 0.85f, 0.20f},  // yellow
};

constexpr double kZoneAlphaEmpty = 0.22;
constexpr double kZoneAlphaOccupied = 0.50;

// Placement geometry. Zones keep clear of each other and of the border so a
// disc fits fully inside; objects start outside every zone.
constexpr double kZoneMargin = 0.16;
constexpr double kZoneSeparation = 0.24;   // L-inf between zone centers
constexpr double kObjectMargin = 0.08;
constexpr double kObjectSeparation = 0.10; // L2 between object centers
constexpr double kObjectZoneClearance = kZoneHalfExtent + kObjectRadius + 0.02;
constexpr int kMaxPlacementTries = 1000;

// Scripted controller.
constexpr double kDemoGain = 0.8;
constexpr double kDemoNoiseSigma = 0.003;
constexpr double kPickTrigger = 0.025;
constexpr double kPlaceTrigger = 0.015;

Action clamp_action(const Action& a) {
  Action c;
  c.dx = clampd(a.dx, -kMaxStep, kMaxStep);
  c.dy = clampd(a.dy, -kMaxStep, kMaxStep);
  c.g = clampd(a.g, -1.0, 1.0);
  return c;
}

bool zone_contains(const ZoneState& z, const Vec2& p) {
  return std::abs(p.x - z.center.x) <= z.half_extent && std::abs(p.y - z.center.y) <= z.half_extent;
}

bool zone_occupied(const WorldState& s, const ZoneState& z) {
  for (const auto& o : s.objects) {
    if (o.id != s.held_object && zone_contains(z, o.pos)) return true;
  }
  return false;
}

void blend(Frame& f, int y, int x, const float* color, double alpha) {
  if (alpha <= 0.0) return;
  double a = std::min(1.0, alpha);
  for (int c = 0; c < 3; ++c) {
    f.at(y, x, c) = static_cast<float>((1.0 - a) * f.at(y, x, c) + a * color[c]);
  }
}

// Axis-aligned box fill with analytic per-pixel coverage.
void draw_box(Frame& f, const Vec2& center, double half_extent, const float* color, double alpha) {
  double x0 = (center.x - half_extent) * kFrameSize;
  double x1 = (center.x + half_extent) * kFrameSize;
  double y0 = (center.y - half_extent) * kFrameSize;
  double y1 = (center.y + half_extent) * kFrameSize;
  int iy0 = std::max(0, static_cast<int>(std::floor(y0)));
  int iy1 = std::min(kFrameSize - 1, static_cast<int>(std::floor(y1)));
  int ix0 = std::max(0, static_cast<int>(std::floor(x0)));
  int ix1 = std::min(kFrameSize - 1, static_cast<int>(std::floor(x1)));
  for (int y = iy0; y <= iy1; ++y) {
    double cy = std::min(y1, y + 1.0) - std::max(y0, static_cast<double>(y));
    for (int x = ix0; x <= ix1; ++x) {
      double cx = std::min(x1, x + 1.0) - std::max(x0, static_cast<double>(x));
      blend(f, y, x, color, alpha * std::max(0.0, cx) * std::max(0.0, cy));
    }
  }
}

// Disc with smooth edge coverage (linear falloff over one pixel).
void draw_disc(Frame& f, const Vec2& center, double radius, const float* color) {
  double px = center.x * kFrameSize;
  double py = center.y * kFrameSize;
  double r = radius * kFrameSize;
  int iy0 = std::max(0, static_cast<int>(std::floor(py - r - 1.0)));
  int iy1 = std::min(kFrameSize - 1, static_cast<int>(std::ceil(py + r + 1.0)));
  int ix0 = std::max(0, static_cast<int>(std::floor(px - r - 1.0)));
  int ix1 = std::min(kFrameSize - 1, static_cast<int>(std::ceil(px + r + 1.0)));
  for (int y = iy0; y <= iy1; ++y) {
    for (int x = ix0; x <= ix1; ++x) {
      double d = std::sqrt((x + 0.5 - px) * (x + 0.5 - px) + (y + 0.5 - py) * (y + 0.5 - py));
      blend(f, y, x, color, clampd(r - d + 0.5, 0.0, 1.0));
    }
  }
}

void splat(Frame& f, double px, double py, const float* color, double weight) {
  int x0 = static_cast<int>(std::floor(px - 0.5));
  int y0 = static_cast<int>(std::floor(py - 0.5));
  double fx = px - 0.5 - x0;
  double fy = py - 0.5 - y0;
  const double w[2][2] = {{(1 - fx) * (1 - fy), fx * (1 - fy)}, {(1 - fx) * fy, fx * fy}};
  for (int dy = 0; dy < 2; ++dy) {
    for (int dx = 0; dx < 2; ++dx) {
      int x = x0 + dx, y = y0 + dy;
      if (x < 0 || x >= kFrameSize || y < 0 || y >= kFrameSize) continue;
      blend(f, y, x, color, weight * w[dy][dx]);
    }
  }
}

// 5-pixel cross (center plus the four axis neighbours) with subpixel placement.
void draw_cross(Frame& f, const Vec2& pos) {
  static constexpr float white[3] = {1.0f, 1.0f, 1.0f};
  double px = pos.x * kFrameSize;
  double py = pos.y * kFrameSize;
  splat(f, px, py, white, 1.0);
  splat(f, px - 1.0, py, white, 1.0);
  splat(f, px + 1.0, py, white, 1.0);
  splat(f, px, py - 1.0, white, 1.0);
  splat(f, px, py + 1.0, white, 1.0);
}

Vec2 clip_workspace(const Vec2& p) { return {clampd(p.x, 0.0, 1.0), clampd(p.y, 0.0, 1.0)}; }

}  // namespace

const char* color_name(Color c) {
  static const char* names[kNumColors] = {"red", "green", "blue", "yellow"};
  return names[static_cast<int>(c)];
}

std::optional<Color> color_from_name(const std::string& name) {
  for (int i = 0; i < kNumColors; ++i) {
    if (name == color_name(static_cast<Color>(i))) return static_cast<Color>(i);
  }
  return std::nullopt;
}

std::string render_instruction(const TaskSpec& task) {
  std::ostringstream out;
  for (std::size_t i = 0; i < task.subgoals.size(); ++i) {
    if (i > 0) out << ", then ";
    const auto& sg = task.subgoals[i];
    out << "put the " << color_name(task.object_colors[sg.object_id]) << " block in the "
        << task.zone_names[sg.zone_id] << " zone";
  }
  return out.str();
}

std::vector<std::pair<Color, std::string>> parse_instruction(const std::string& text) {
  std::vector<std::pair<Color, std::string>> out;
  std::string rest = text;
  const std::string sep = ", then ";
  while (!rest.empty()) {
    std::size_t cut = rest.find(sep);
    std::string clause = cut == std::string::npos ? rest : rest.substr(0, cut);
    rest = cut == std::string::npos ? "" : rest.substr(cut + sep.size());

    std::istringstream in(clause);
    std::string put, the1, color, block, in_w, the2, zone, zone_w;
    in >> put >> the1 >> color >> block >> in_w >> the2 >> zone >> zone_w;
    auto col = color_from_name(color);
    if (put != "put" || the1 != "the" || block != "block" || in_w != "in" || the2 != "the" ||
        zone_w != "zone" || !col) {
      throw Error("bad_instruction", "unparseable clause: " + clause);
    }
    out.emplace_back(*col, zone);
  }
  if (out.empty()) throw Error("bad_instruction", "empty instruction");
  return out;
}

TaskSpec make_task(int num_subgoals, std::uint64_t seed) {
  if (num_subgoals < 1 || num_subgoals > 5) throw Error("bad_task", "subgoal count out of range");
  Rng rng = Rng(seed).fork(0x7a51);

  TaskSpec task;
  task.zone_names.reserve(kNumColors);
  for (int i = 0; i < kNumColors; ++i) task.zone_names.push_back(color_name(static_cast<Color>(i)));

  // Distinct colors while they last; the fifth object repeats one color.
  std::vector<int> colors = {0, 1, 2, 3};
  for (int i = 3; i > 0; --i) std::swap(colors[i], colors[rng.uniform_int(i + 1)]);
  for (int i = 0; i < num_subgoals; ++i) {
    int c = i < kNumColors ? colors[i] : static_cast<int>(rng.uniform_int(kNumColors));
    task.object_colors.push_back(static_cast<Color>(c));
  }

  std::vector<int> zones = {0, 1, 2, 3};
  for (int i = 3; i > 0; --i) std::swap(zones[i], zones[rng.uniform_int(i + 1)]);
  for (int i = 0; i < num_subgoals; ++i) {
    int z = i < kNumColors ? zones[i] : static_cast<int>(rng.uniform_int(kNumColors));
    task.subgoals.push_back({i, z});
  }

  task.instruction_text = render_instruction(task);
  return task;
}

ResetResult reset(const TaskSpec& task, std::uint64_t seed) {
  if (task.subgoals.empty() || task.subgoals.size() > 5) throw Error("bad_task");
  Rng rng = Rng(seed).fork(0x9e55);

  WorldState s;
  s.subgoals = task.subgoals;
  s.completion_step.assign(task.subgoals.size(), -1);

  // All four zones exist in every episode.
  for (int z = 0; z < kNumColors; ++z) {
    ZoneState zone;
    zone.id = z;
    zone.name = task.zone_names[z];
    int tries = 0;
    for (;;) {
      if (++tries > kMaxPlacementTries) throw Error("placement_failed", "zones");
      zone.center = {rng.uniform(kZoneMargin, 1.0 - kZoneMargin),
                     rng.uniform(kZoneMargin, 1.0 - kZoneMargin)};
      bool ok = true;
      for (const auto& other : s.zones) {
        if (std::max(std::abs(zone.center.x - other.center.x),
                     std::abs(zone.center.y - other.center.y)) < kZoneSeparation) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    s.zones.push_back(zone);
  }

  for (std::size_t i = 0; i < task.object_colors.size(); ++i) {
    ObjectState obj;
    obj.id = static_cast<int>(i);
    obj.color = task.object_colors[i];
    int tries = 0;
    for (;;) {
      if (++tries > kMaxPlacementTries) throw Error("placement_failed", "objects");
      obj.pos = {rng.uniform(kObjectMargin, 1.0 - kObjectMargin),
                 rng.uniform(kObjectMargin, 1.0 - kObjectMargin)};
      bool ok = true;
      for (const auto& z : s.zones) {
        if (std::max(std::abs(obj.pos.x - z.center.x), std::abs(obj.pos.y - z.center.y)) <
            kObjectZoneClearance) {
          ok = false;
          break;
        }
      }
      for (const auto& other : s.objects) {
        if (ok && norm(obj.pos - other.pos) < kObjectSeparation) ok = false;
      }
      if (ok) break;
    }
    s.objects.push_back(obj);
  }

  // Repeated-color pair: the earlier subgoal's object must be the leftmost, so
  // the instruction stays resolvable from the initial frame.
  for (std::size_t i = 0; i < task.subgoals.size(); ++i) {
    for (std::size_t j = i + 1; j < task.subgoals.size(); ++j) {
      int oi = task.subgoals[i].object_id;
      int oj = task.subgoals[j].object_id;
      if (task.object_colors[oi] == task.object_colors[oj] &&
          s.objects[oi].pos.x > s.objects[oj].pos.x) {
        std::swap(s.objects[oi].pos, s.objects[oj].pos);
      }
    }
  }

  s.gripper_pos = {rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)};

  ResetResult out;
  out.frame = render(s);
  out.state = std::move(s);
  out.instruction_text = task.instruction_text;
  return out;
}

StepResult step(WorldState& state, const Action& a) {
  Action c = clamp_action(a);
  state.gripper_pos = clip_workspace(state.gripper_pos + Vec2{c.dx, c.dy});
  if (state.holding()) state.objects[state.held_object].pos = state.gripper_pos;

  StepResult out;
  if (c.g >= 0.0 && !state.holding()) {
    int best = -1;
    double best_d = kPickRadius;
    for (const auto& o : state.objects) {
      double d = norm(o.pos - state.gripper_pos);
      if (d <= best_d) {
        best_d = d;
        best = o.id;
      }
    }
    if (best >= 0) {
      state.held_object = best;
      state.objects[best].pos = state.gripper_pos;
      out.events.push_back({state.step_count, EventKind::pick, best, -1});
    }
  } else if (c.g < 0.0 && state.holding()) {
    int released = state.held_object;
    state.held_object = -1;
    const Vec2& p = state.objects[released].pos;
    int zone_id = -1;
    for (const auto& z : state.zones) {
      if (zone_contains(z, p)) zone_id = z.id;
    }
    out.events.push_back({state.step_count, EventKind::place, released, zone_id});
    for (std::size_t k = 0; k < state.subgoals.size(); ++k) {
      if (state.completion_step[k] < 0 && state.subgoals[k].object_id == released &&
          state.subgoals[k].zone_id == zone_id) {
        state.completion_step[k] = state.step_count;
      }
    }
  }

  state.step_count += 1;
  out.frame = render(state);
  return out;
}

Frame render(const WorldState& state) {
  Frame f;
  for (int y = 0; y < kFrameSize; ++y) {
    for (int x = 0; x < kFrameSize; ++x) {
      for (int c = 0; c < 3; ++c) f.at(y, x, c) = kBackground[c];
    }
  }
  for (const auto& z : state.zones) {
    auto col = color_from_name(z.name);
    const float* rgb = kPalette[static_cast<int>(col.value_or(Color::red))];
    double alpha = zone_occupied(state, z) ? kZoneAlphaOccupied : kZoneAlphaEmpty;
    draw_box(f, z.center, z.half_extent, rgb, alpha);
  }
  // Cross under the discs: a held (or hovered) object occludes the gripper.
  draw_cross(f, state.gripper_pos);
  for (const auto& o : state.objects) {
    draw_disc(f, o.pos, o.radius, kPalette[static_cast<int>(o.color)]);
  }
  return f;
}

SuccessResult check_success(const WorldState& state, const TaskSpec& task) {
  SuccessResult res;
  res.per_subgoal.resize(task.subgoals.size(), false);
  for (std::size_t k = 0; k < task.subgoals.size(); ++k) {
    const auto& sg = task.subgoals[k];
    const auto& obj = state.objects.at(sg.object_id);
    res.per_subgoal[k] =
        state.held_object != sg.object_id && zone_contains(state.zones.at(sg.zone_id), obj.pos);
  }
  bool all = std::all_of(res.per_subgoal.begin(), res.per_subgoal.end(), [](bool b) { return b; });
  bool ordered = true;
  for (std::size_t k = 0; k + 1 < task.subgoals.size(); ++k) {
    if (state.completion_step[k] < 0 || state.completion_step[k + 1] < 0 ||
        state.completion_step[k] > state.completion_step[k + 1]) {
      ordered = false;
    }
  }
  if (!task.subgoals.empty() && state.completion_step[0] < 0) ordered = false;
  res.success = all && ordered;
  return res;
}

Demonstration script_demonstration(const TaskSpec& task, std::uint64_t seed) {
  auto init = reset(task, seed);
  Rng noise = Rng(seed).fork(0xd390);

  Demonstration demo;
  demo.instruction_text = init.instruction_text;
  demo.frames.push_back(init.frame);
  WorldState state = std::move(init.state);

  auto act = [&](const Vec2& target, double grip) {
    Vec2 delta = target - state.gripper_pos;
    Action a;
    a.dx = kDemoGain * delta.x + noise.normal(0.0, kDemoNoiseSigma);
    a.dy = kDemoGain * delta.y + noise.normal(0.0, kDemoNoiseSigma);
    a.g = grip;
    auto res = step(state, a);
    demo.actions.push_back(a);
    demo.frames.push_back(res.frame);
    for (const auto& e : res.events) demo.events.push_back(e);
    if (static_cast<int>(demo.actions.size()) > task.horizon_budget) {
      throw Error("demo_failed", "horizon budget exceeded");
    }
  };

  for (const auto& sg : task.subgoals) {
    while (state.held_object != sg.object_id) {
      Vec2 target = state.objects[sg.object_id].pos;
      double d = norm(target - state.gripper_pos);
      act(target, d <= kPickTrigger ? 1.0 : -1.0);
    }
    while (state.holding()) {
      Vec2 target = state.zones[sg.zone_id].center;
      double d = norm(target - state.gripper_pos);
      act(target, d <= kPlaceTrigger ? -1.0 : 1.0);
    }
    demo.true_boundaries.push_back(static_cast<int>(demo.frames.size()) - 1);
  }

  if (!check_success(state, task).success) throw Error("demo_failed", "task not solved");
  return demo;
}

void apply_perturbation(WorldState& state, double magnitude, Rng& rng) {
  double theta = rng.uniform(0.0, 6.283185307179586477);
  Vec2 disp{std::cos(theta) * magnitude, std::sin(theta) * magnitude};
  state.gripper_pos = clip_workspace(state.gripper_pos + disp);
  if (state.holding()) state.objects[state.held_object].pos = state.gripper_pos;
}

}  // namespace ivlr::sim
