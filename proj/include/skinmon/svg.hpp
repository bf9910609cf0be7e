// Snapshot rendering: active wound in red, healed extent in black, tree
// edges and member nodes in green (parents larger), roots in blue, sleeping
// nodes omitted. Output is byte-stable for a given snapshot.
#pragma once

#include <string>

#include "skinmon/engine.hpp"

namespace skinmon {

std::string render_snapshot_svg(const Snapshot& snap);
void render_snapshot(const Snapshot& snap, const std::string& path);

}  // namespace skinmon
