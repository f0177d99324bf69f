#pragma once

#include <string>
#include <vector>

#include "gapsmith/pointset.hpp"

namespace gapsmith {

struct Stage {
    std::string label;
    PointSet set;
};

/// SVG with one horizontal track per stage on a shared axis. Bad gaps are
/// drawn in a warning colour and every gap is labelled with kind and length.
std::string render_svg(const std::vector<Stage>& stages);

}  // namespace gapsmith
