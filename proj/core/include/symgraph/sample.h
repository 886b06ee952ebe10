// Copyright 2026 The SymGraph Authors
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

// One labeled dataset sample per call: picks sizes, builds the graph, assigns
// coordinates for the requested class and applies the class's rotation.

#ifndef SYMGRAPH_SAMPLE_H_
#define SYMGRAPH_SAMPLE_H_

#include <cstdint>
#include <string>

#include "symgraph/layout.h"

namespace symgraph {

struct Sample {
  // Rotated and normalized; this is what gets rasterized.
  Layout layout;
  // The construction frame before rotation and normalization. Symmetric
  // classes are exact here: mirror about the y-axis, rotation about the
  // origin, or translation by (-delta, 0).
  Layout canonical;
  // Construction route, e.g. "parallel-lines", "symgg", "decoy-crossings".
  std::string variant;
  // Edges joining the copies (parallel-lines, translational, rotational);
  // -1 when the construction has no such edges.
  int connecting_edges = -1;
  // Number of rotational copies for RotationalLarge, else 0.
  int rotation_order = 0;
};

// `variant_index` is the sample's index within its class. It selects the
// construction route round-robin so routes are represented in exact
// proportions:
//   SmallSym           parallel-lines / SymGG
//   SmallNonSym        random / parallel-lines decoy / crossings decoy
//   ReflectionalLarge  0 deg (vertical axis) / 90 deg / random angle
// Everything else is drawn from an engine seeded with `seed`.
Sample GenerateSample(LayoutClass label, std::uint64_t seed,
                      std::int64_t variant_index);

}  // namespace symgraph

#endif  // SYMGRAPH_SAMPLE_H_
