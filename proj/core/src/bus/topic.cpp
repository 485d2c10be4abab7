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

#include "jubileo/bus/topic.hpp"

namespace jubileo::bus {
namespace {

bool IsSegmentChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

TopicName::TopicName(std::string path) : path_(std::move(path)) {
  if (!IsValid(path_)) {
    throw TopicError("invalid topic '" + path_ + "'");
  }
}

bool TopicName::IsValid(std::string_view path) {
  if (path.empty() || path.size() > kMaxTopicLength || path.front() != '/') {
    return false;
  }
  std::size_t segment_length = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const char c = path[i];
    if (c == '/') {
      if (segment_length == 0) return false;
      segment_length = 0;
    } else if (IsSegmentChar(c)) {
      ++segment_length;
    } else {
      return false;
    }
  }
  return segment_length > 0;
}

}  // namespace jubileo::bus
