// Copyright 2026 The Trellis Authors. All Rights Reserved.
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

#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

namespace trellis {

struct OrientedEdge {
  std::size_t edge = 0;
  bool reversed = false;

  OrientedEdge inverse() const { return {edge, !reversed}; }

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend bool operator<(const OrientedEdge& a, const OrientedEdge& b) {
    return std::tie(a.edge, a.reversed) < std::tie(b.edge, b.reversed);
  }
};

// An edge-path; empty means the trivial path at a vertex.
using EdgePath = std::vector<OrientedEdge>;

inline EdgePath inverse(const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// Index of the first step that is immediately undone by the next, or -1.
inline long first_fold(const EdgePath& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i + 1] == p[i].inverse()) return static_cast<long>(i);
  return -1;
}

inline bool is_reduced(const EdgePath& p) { return first_fold(p) < 0; }

// Free reduction: cancels every adjacent e ē pair until none remain.
inline EdgePath reduce(const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (const auto& step : p) {
    if (!out.empty() && out.back() == step.inverse())
      out.pop_back();
    else
      out.push_back(step);
  }
  return out;
}

inline EdgePath concat(EdgePath a, const EdgePath& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace trellis
