#include "cogrowth/cayley.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "cogrowth/errors.hpp"

namespace cogrowth {

std::size_t CayleyBall::layer_of(std::size_t ball_index) const {
  // Layers are contiguous; binary search the offsets.
  const auto it = std::upper_bound(layer_offsets_.begin(), layer_offsets_.end(),
                                   ball_index);
  return static_cast<std::size_t>(it - layer_offsets_.begin()) - 1;
}

std::size_t CayleyBall::index_of(ElementId s) const {
  auto it = index_.find(s);
  return it == index_.end() ? npos : it->second;
}

CayleyBall ball(SemigroupEngine& E, const GeneratorChoice& X, std::size_t radius) {
  if (X.size() == 0) throw UsageError("ball: empty generator choice");
  CayleyBall b;
  b.radius_ = radius;
  b.k_ = X.size();
  b.elements_.push_back(kIdentityId);
  b.index_.emplace(kIdentityId, 0);
  b.layer_offsets_.push_back(0);
  b.layer_offsets_.push_back(1);

  // Frontier expansion: processing elements in ball order and generators in
  // choice order makes discovery order, and hence ids and indices,
  // deterministic and lexicographic in the first-discovery word.
  for (std::size_t r = 0; r < radius; ++r) {
    const auto [lo, hi] = b.layer_range(r);
    for (std::size_t i = lo; i < hi; ++i) {
      const ElementId s = b.elements_[i];
      for (GenIndex g = 0; g < b.k_; ++g) {
        ElementId t;
        try {
          t = E.mul(s, X.targets[g]);
        } catch (ResourceError& e) {
          e.layer_reached = r + 1;
          throw;
        }
        auto [it, inserted] = b.index_.try_emplace(t, b.elements_.size());
        if (inserted) b.elements_.push_back(t);
        b.edges_.push_back(static_cast<std::uint32_t>(it->second));
      }
    }
    b.layer_offsets_.push_back(b.elements_.size());
  }
  return b;
}

std::vector<std::size_t> right_indegree_stats(const CayleyBall& b) {
  if (b.radius() < 1) throw UsageError("right_indegree_stats: radius must be >= 1");
  std::vector<std::size_t> maxima(b.num_generators(), 0);
  std::vector<std::size_t> indegree(b.size());
  for (GenIndex g = 0; g < b.num_generators(); ++g) {
    std::fill(indegree.begin(), indegree.end(), 0);
    for (std::size_t i = 0; i < b.interior(); ++i) {
      const std::size_t count = ++indegree[b.step(i, g)];
      maxima[g] = std::max(maxima[g], count);
    }
  }
  return maxima;
}

Rat folner_defect(SemigroupEngine& E, const std::vector<ElementId>& F,
                  const std::vector<ElementId>& H, bool right) {
  if (F.empty()) throw UsageError("folner_defect: F must be nonempty");
  std::unordered_set<ElementId> in_F(F.begin(), F.end());
  std::size_t worst = 0;
  for (ElementId s : H) {
    std::unordered_set<ElementId> escaped;
    for (ElementId f : F) {
      const ElementId p = right ? E.mul(f, s) : E.mul(s, f);
      if (!in_F.count(p)) escaped.insert(p);
    }
    worst = std::max(worst, escaped.size());
  }
  Rat defect(static_cast<unsigned long>(worst),
             static_cast<unsigned long>(in_F.size()));
  defect.canonicalize();  // mpq equality assumes canonical form
  return defect;
}

namespace {

// Canonical forms of lattice points contain commas; quote per RFC 4180.
std::string quoted_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

void export_ball_csv(const CayleyBall& b, const SemigroupEngine& E, std::ostream& out) {
  out << "element_id,layer,canonical_form\n";
  for (std::size_t i = 0; i < b.size(); ++i)
    out << b.element(i) << "," << b.layer_of(i) << ","
        << quoted_cell(E.canonical(b.element(i))) << "\n";
  out << "\n";
  out << "src_id,gen_index,dst_id\n";
  for (std::size_t i = 0; i < b.interior(); ++i)
    for (GenIndex g = 0; g < b.num_generators(); ++g)
      out << b.element(i) << "," << g << "," << b.element(b.step(i, g)) << "\n";
}

}  // namespace cogrowth
