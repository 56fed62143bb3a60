#ifndef ALCOVE_SVG_HPP
#define ALCOVE_SVG_HPP

#include "alcove/folded.hpp"
#include "alcove/geometry.hpp"

#include <string>

namespace alcove {

/// One walk drawn as centroid-to-centroid arrows; folds (entries of `folds`
/// set to 1) draw as loop arrows returning to the same centroid, pink for
/// positive folds and orange for negative ones.
struct WalkLayer {
  WeylElement base;
  Word word;
  std::vector<int> folds;  // empty means no folds
  Orientation orientation = Orientation::kBase;
  std::string color = "green";
};

struct AlcoveLabel {
  WeylElement w;
  std::string text;
};

/// A rank-2 picture: every hyperplane H_{mu + k delta} with |k| <= window
/// labeled by its positive affine root, plus walks and per-alcove labels.
struct Scene {
  const CartanDatum* datum = nullptr;
  int window = 2;
  std::vector<WalkLayer> walks;
  std::vector<AlcoveLabel> labels;
};

/// Deterministic SVG text: pure function of the scene, stable element
/// order, fixed 6-decimal coordinates.  Throws Error for non-rank-2 data.
std::string render_svg(const Scene& scene);

}  // namespace alcove

#endif
