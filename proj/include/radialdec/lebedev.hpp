#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "radialdec/types.hpp"

namespace radialdec::geometry {
class ManifoldGeometry;
}

namespace radialdec::lebedev {

struct Node {
  Vec3 unit;
  double theta = 0.0;  // chart-A azimuth
  double phi = 0.0;    // chart-A polar angle
};

// Lebedev quadrature on the unit sphere. Weights sum to 4 pi, so the rule
// integrates with respect to solid angle.
class LebedevGrid {
 public:
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  int precision() const noexcept { return precision_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

 private:
  friend LebedevGrid grid(int node_count);
  int precision_ = 0;
  std::vector<Node> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const LebedevGrid>;

// Supported node counts, ascending: 6, 14, ..., 1202 (precision 3 .. 59).
std::span<const int> supported_node_counts();
int precision_for(int node_count);

// Expands the octahedral orbits of the requested rule. Throws
// UnsupportedGridError listing the supported counts.
LebedevGrid grid(int node_count);
GridPtr make_grid(int node_count);

// Band limit paired with a grid: floor(p / 2).
int max_degree(const LebedevGrid& g);

// sum_l w_l u_l v_l
double inner_product_q(std::span<const double> u, std::span<const double> v, const LebedevGrid& g);

// Integral over the manifold surface: sum_l w_l f_l J_l with J = dA / dOmega
// taken from the node frames.
double surface_integral(std::span<const double> f, const LebedevGrid& g,
                        const geometry::ManifoldGeometry& geometry);

// CSV with header x,y,z,theta,phi,weight at 15 significant digits.
void write_csv(std::ostream& os, const LebedevGrid& g);

}  // namespace radialdec::lebedev
