#pragma once

#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "cogrowth/engine.hpp"
#include "cogrowth/numeric.hpp"

namespace cogrowth {

/// Breadth-first closure of the right Cayley graph out to a radius, rooted
/// at the identity of S^1. Elements are listed by layer, within a layer by
/// first-discovery order, which the expansion makes lexicographic in the
/// first-discovery word. Edges are total on every element of layer < radius.
class CayleyBall {
public:
  std::size_t radius() const { return radius_; }
  std::size_t num_generators() const { return k_; }
  std::size_t size() const { return elements_.size(); }

  /// Elements with layer < radius, i.e. those whose edges are present.
  std::size_t interior() const { return layer_offsets_[radius_]; }

  ElementId element(std::size_t ball_index) const { return elements_[ball_index]; }
  std::size_t layer_of(std::size_t ball_index) const;

  /// Half-open index range [first, second) of a layer.
  std::pair<std::size_t, std::size_t> layer_range(std::size_t r) const {
    return {layer_offsets_[r], layer_offsets_[r + 1]};
  }

  /// Ball index of s.x_g; valid for ball_index < interior().
  std::size_t step(std::size_t ball_index, GenIndex g) const {
    return edges_[ball_index * k_ + g];
  }

  /// Ball index of an interned element, or npos when outside the ball.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(ElementId s) const;

private:
  friend CayleyBall ball(SemigroupEngine&, const GeneratorChoice&, std::size_t);

  std::size_t radius_ = 0;
  std::size_t k_ = 0;
  std::vector<ElementId> elements_;
  std::vector<std::size_t> layer_offsets_;  // size radius + 2
  std::vector<std::uint32_t> edges_;        // interior() * k_
  std::unordered_map<ElementId, std::size_t> index_;
};

/// Expands the ball; raises ResourceError annotated with the layer reached
/// when the engine cap is hit.
CayleyBall ball(SemigroupEngine& E, const GeneratorChoice& X, std::size_t radius);

/// Per-generator maximum right indegree over the ball: for generator x, the
/// largest number of interior elements mapping onto one element under x.
/// A truncation diagnostic, not a global decision. Radius must be >= 1.
std::vector<std::size_t> right_indegree_stats(const CayleyBall& b);

/// max over s in H of |Fs \ F| / |F| (right version; `right = false` uses
/// sF). F must be nonempty; products are interned on demand.
Rat folner_defect(SemigroupEngine& E, const std::vector<ElementId>& F,
                  const std::vector<ElementId>& H, bool right = true);

/// Two CSV blocks: element rows `element_id,layer,canonical_form`, a blank
/// line, then edge rows `src_id,gen_index,dst_id`.
void export_ball_csv(const CayleyBall& b, const SemigroupEngine& E, std::ostream& out);

}  // namespace cogrowth
