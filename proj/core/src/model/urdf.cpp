// Copyright 2026 The Jubileo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jubileo/model/urdf.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace jubileo::model {
namespace {

namespace pt = boost::property_tree;

constexpr std::string_view kActuatorTag = "jubileo:actuator";
constexpr std::string_view kExtensionNamespace = "https://github.com/jajaguto/jubileo";

[[noreturn]] void Semantic(const std::string& msg) {
  throw DescriptionError(DescriptionErrc::kSemantic, msg);
}

std::optional<std::string> Attr(const pt::ptree& node, const char* name) {
  if (auto a = node.get_child_optional(pt::ptree::path_type(std::string("<xmlattr>.") + name, '.'))) {
    return a->data();
  }
  return std::nullopt;
}

std::string RequireAttr(const pt::ptree& node, const char* name, const std::string& where) {
  auto v = Attr(node, name);
  if (!v) Semantic(where + ": missing attribute '" + name + "'");
  return *v;
}

double ParseDouble(std::string_view text, const std::string& where) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    Semantic(where + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

long ParseInt(std::string_view text, const std::string& where) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    Semantic(where + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

Vec3 ParseVec3(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  Vec3 v{};
  std::string token;
  for (double& c : v) {
    if (!(in >> token)) Semantic(where + ": expected three numbers");
    c = ParseDouble(token, where);
  }
  if (in >> token) Semantic(where + ": expected three numbers");
  return v;
}

JointGroup InferGroup(std::string_view name) {
  const auto has = [&](std::string_view s) { return name.find(s) != std::string_view::npos; };
  if (has("brow")) return JointGroup::kEyebrow;
  if (has("lid")) return JointGroup::kEyelid;
  if (has("eye")) return JointGroup::kEye;
  if (has("mouth") || has("jaw") || has("lip")) return JointGroup::kMouth;
  if (has("neck")) return JointGroup::kNeck;
  return JointGroup::kArm;
}

int AxisSign(const Vec3& axis, const std::string& where) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(axis[i]) > std::abs(axis[best])) best = i;
  }
  if (axis[best] == 0.0) Semantic(where + ": zero joint axis");
  return axis[best] > 0 ? 1 : -1;
}

std::string LinkOf(const pt::ptree& joint, const char* tag, const std::string& where) {
  auto node = joint.get_child_optional(tag);
  if (!node) Semantic(where + ": missing <" + tag + ">");
  return RequireAttr(*node, "link", where + " <" + tag + ">");
}

std::string Num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// The XML reader does not compare closing tags with their opening tags, so
// mismatches are caught here.
void CheckTagBalance(std::string_view text) {
  std::vector<std::pair<std::string, int>> open;
  int line = 1;
  const auto fail = [&](const std::string& what) {
    throw DescriptionError(DescriptionErrc::kParse, "line " + std::to_string(line) + ": " + what, line);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
    if (text[i] != '<') continue;
    const int tag_line = line;
    const auto skip_to = [&](std::string_view terminator) {
      const auto end = text.find(terminator, i);
      if (end == std::string_view::npos) fail("unterminated markup");
      line += static_cast<int>(std::count(text.begin() + i, text.begin() + end, '\n'));
      i = end + terminator.size() - 1;
    };
    if (text.substr(i, 4) == "<!--") {
      skip_to("-->");
      continue;
    }
    if (text.substr(i, 2) == "<?") {
      skip_to("?>");
      continue;
    }
    std::size_t j = i + 1;
    char quote = 0;
    for (; j < text.size(); ++j) {
      if (quote != 0) {
        if (text[j] == quote) quote = 0;
      } else if (text[j] == '"' || text[j] == '\'') {
        quote = text[j];
      } else if (text[j] == '>') {
        break;
      }
      if (text[j] == '\n') ++line;
    }
    if (j >= text.size()) fail("unterminated tag");
    const std::string_view body = text.substr(i + 1, j - i - 1);
    i = j;
    if (body.empty() || body.front() == '!') continue;
    const bool closing = body.front() == '/';
    const bool self_closing = body.back() == '/';
    const std::string_view rest = closing ? body.substr(1) : body;
    const std::string name(rest.substr(0, rest.find_first_of(" \t\r\n/")));
    if (closing) {
      if (open.empty()) fail("unexpected </" + name + ">");
      if (open.back().first != name) {
        fail("</" + name + "> closes <" + open.back().first + "> opened on line " +
             std::to_string(open.back().second));
      }
      open.pop_back();
    } else if (!self_closing) {
      open.emplace_back(name, tag_line);
    }
  }
  if (!open.empty()) {
    line = open.back().second;
    fail("<" + open.back().first + "> is never closed");
  }
}

std::string Vec(const Vec3& v) { return Num(v[0]) + " " + Num(v[1]) + " " + Num(v[2]); }

}  // namespace

RobotModel ParseRobotDescription(std::string_view text) {
  CheckTagBalance(text);
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_xml(in, tree, pt::xml_parser::no_comments | pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw DescriptionError(DescriptionErrc::kParse,
                           "line " + std::to_string(e.line()) + ": " + e.message(),
                           static_cast<int>(e.line()));
  }
  auto robot_node = tree.get_child_optional("robot");
  if (!robot_node) throw DescriptionError(DescriptionErrc::kParse, "no <robot> root element");

  RobotModel model;
  model.name = Attr(*robot_node, "name").value_or("");
  std::set<std::string> seen;
  for (const auto& [tag, node] : *robot_node) {
    if (tag == "link") {
      model.links.push_back(RequireAttr(node, "name", "<link>"));
      continue;
    }
    if (tag != "joint") continue;
    const std::string name = RequireAttr(node, "name", "<joint>");
    const std::string where = "joint '" + name + "'";
    if (!seen.insert(name).second) Semantic("duplicate joint name '" + name + "'");
    const std::string type = RequireAttr(node, "type", where);
    Vec3 origin{0.0, 0.0, 0.0};
    if (auto o = node.get_child_optional("origin")) {
      if (auto xyz = Attr(*o, "xyz")) origin = ParseVec3(*xyz, where + " <origin>");
    }
    if (type == "fixed") {
      model.fixed_joints.push_back(
          FixedJoint{name, LinkOf(node, "parent", where), LinkOf(node, "child", where), origin});
      continue;
    }
    if (type != "revolute") Semantic(where + ": unsupported joint type '" + type + "'");

    JointDescriptor j;
    j.name = name;
    j.parent_link = LinkOf(node, "parent", where);
    j.child_link = LinkOf(node, "child", where);
    j.origin = origin;
    if (auto a = node.get_child_optional("axis")) {
      j.axis = ParseVec3(RequireAttr(*a, "xyz", where + " <axis>"), where + " <axis>");
    }
    j.direction = AxisSign(j.axis, where);
    auto limit = node.get_child_optional("limit");
    if (!limit) Semantic(where + ": revolute joint without <limit>");
    j.min_angle = ParseDouble(RequireAttr(*limit, "lower", where + " <limit>"), where);
    j.max_angle = ParseDouble(RequireAttr(*limit, "upper", where + " <limit>"), where);
    if (auto v = Attr(*limit, "velocity")) j.velocity_limit = ParseDouble(*v, where);
    if (!(j.min_angle < j.max_angle)) Semantic(where + ": lower limit must be below upper limit");
    j.neutral_angle = 0.5 * (j.min_angle + j.max_angle);
    j.group = InferGroup(name);
    if (auto act = node.get_child_optional(pt::ptree::path_type(std::string(kActuatorTag), '.'))) {
      if (auto g = Attr(*act, "group")) {
        auto group = GroupFromName(*g);
        if (!group) Semantic(where + ": unknown group '" + *g + "'");
        j.group = *group;
      }
      if (auto c = Attr(*act, "channel")) {
        const long ch = ParseInt(*c, where);
        if (ch < 0 || ch > 255) Semantic(where + ": channel out of range");
        j.servo_channel = static_cast<std::uint8_t>(ch);
      }
      if (auto p = Attr(*act, "pulse_min")) {
        const long v = ParseInt(*p, where);
        if (v < 0 || v > 65535) Semantic(where + ": pulse_min out of range");
        j.pulse_min = static_cast<std::uint16_t>(v);
      }
      if (auto p = Attr(*act, "pulse_max")) {
        const long v = ParseInt(*p, where);
        if (v < 0 || v > 65535) Semantic(where + ": pulse_max out of range");
        j.pulse_max = static_cast<std::uint16_t>(v);
      }
      if (auto n = Attr(*act, "neutral")) j.neutral_angle = ParseDouble(*n, where);
    }
    model.joints.push_back(std::move(j));
  }
  model.Validate();
  return model;
}

RobotModel LoadRobotDescription(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DescriptionError(DescriptionErrc::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseRobotDescription(ss.str());
}

std::string WriteRobotDescription(const RobotModel& model) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\"?>\n";
  out << "<robot name=\"" << model.name << "\" xmlns:jubileo=\"" << kExtensionNamespace << "\">\n";
  for (const auto& link : model.links) out << "  <link name=\"" << link << "\"/>\n";
  for (const auto& j : model.joints) {
    out << "  <joint name=\"" << j.name << "\" type=\"revolute\">\n"
        << "    <parent link=\"" << j.parent_link << "\"/>\n"
        << "    <child link=\"" << j.child_link << "\"/>\n"
        << "    <origin xyz=\"" << Vec(j.origin) << "\"/>\n"
        << "    <axis xyz=\"" << Vec(j.axis) << "\"/>\n"
        << "    <limit lower=\"" << Num(j.min_angle) << "\" upper=\"" << Num(j.max_angle)
        << "\" velocity=\"" << Num(j.velocity_limit) << "\"/>\n"
        << "    <" << kActuatorTag << " group=\"" << GroupName(j.group) << "\"";
    if (j.servo_channel) out << " channel=\"" << int{*j.servo_channel} << "\"";
    out << " pulse_min=\"" << j.pulse_min << "\" pulse_max=\"" << j.pulse_max << "\" neutral=\""
        << Num(j.neutral_angle) << "\"/>\n"
        << "  </joint>\n";
  }
  for (const auto& f : model.fixed_joints) {
    out << "  <joint name=\"" << f.name << "\" type=\"fixed\">\n"
        << "    <parent link=\"" << f.parent_link << "\"/>\n"
        << "    <child link=\"" << f.child_link << "\"/>\n"
        << "    <origin xyz=\"" << Vec(f.origin) << "\"/>\n"
        << "  </joint>\n";
  }
  out << "</robot>\n";
  return out.str();
}

}  // namespace jubileo::model
