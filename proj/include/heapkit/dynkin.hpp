#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace heapkit {

/// Colors are dense indices into a diagram; labels exist for I/O only.
using Color = int;

using Rational = boost::rational<long long>;

enum class AdjacencyKind { Equal, Distant, Adjacent };

/// For Adjacent pairs: `k_ab = -theta(a,b)` and `k_ba = -theta(b,a)`.
struct Adjacency {
  AdjacencyKind kind = AdjacencyKind::Distant;
  int k_ab = 0;
  int k_ba = 0;

  friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

/// A Dynkin diagram stored as its generalized Cartan matrix.
///
/// Immutable after construction; copies share one validated payload.
class DynkinDiagram {
 public:
  /// Validates the three GCM requirements and label uniqueness.
  DynkinDiagram(std::vector<std::string> labels, const std::vector<std::vector<int>>& theta);

  int size() const noexcept { return static_cast<int>(impl_->labels.size()); }
  const std::vector<std::string>& labels() const noexcept { return impl_->labels; }
  const std::string& label(Color a) const;

  std::optional<Color> find(std::string_view label) const;
  /// Throws UnknownColor when absent.
  Color color(std::string_view label) const;

  int theta(Color a, Color b) const noexcept { return impl_->theta[static_cast<std::size_t>(a * size() + b)]; }
  bool adjacent(Color a, Color b) const noexcept { return a != b && theta(a, b) < 0; }
  const std::vector<Color>& neighbors(Color a) const noexcept { return impl_->neighbors[static_cast<std::size_t>(a)]; }

  std::vector<std::vector<int>> matrix() const;

  /// Sub-diagram on `colors`, in the given order.
  DynkinDiagram induced(std::span<const Color> colors) const;

  bool contains(Color a) const noexcept { return a >= 0 && a < size(); }

  friend bool operator==(const DynkinDiagram& x, const DynkinDiagram& y) {
    return x.impl_ == y.impl_ || (x.impl_->labels == y.impl_->labels && x.impl_->theta == y.impl_->theta);
  }

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::vector<int> theta;  // row-major
    std::vector<std::vector<Color>> neighbors;
  };
  std::shared_ptr<const Impl> impl_;
};

inline DynkinDiagram new_diagram(std::vector<std::string> labels, const std::vector<std::vector<int>>& theta) {
  return DynkinDiagram(std::move(labels), theta);
}

Adjacency adjacency(const DynkinDiagram& d, Color a, Color b);

bool is_acyclic(const DynkinDiagram& d);
bool is_connected(const DynkinDiagram& d);

struct DiagramComponent {
  DynkinDiagram diagram;
  /// `colors[i]` is the original index of the component's color i.
  std::vector<Color> colors;
};

/// Connected components ordered by least original color index.
std::vector<DiagramComponent> components(const DynkinDiagram& d);

/// Positive rationals d_a with d_a*theta(a,b) == d_b*theta(b,a), or nothing
/// when the matrix is not symmetrizable. The least color of every component
/// gets value 1.
std::optional<std::vector<Rational>> symmetrizer(const DynkinDiagram& d);

}  // namespace heapkit
