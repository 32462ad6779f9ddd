#pragma once

// Uniform box lattices over [-extent, extent]^dim (dim = 1, 2, 3) with
// 2m+1 nodes per axis.  Node classification against the inscribed ball is
// done on integer indices (i^2 + j^2 + k^2 versus m^2), so it is exact:
//   Inside   strictly inside the ball,
//   Ring     not inside but adjacent (one step along an axis) to an inside
//            node -- these carry Dirichlet data,
//   Outside  everything else.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "malab/errors.hpp"

namespace malab {

enum class NodeKind { Inside, Ring, Outside };

struct GridSpec {
  int dim = 2;
  double extent = 1.0;
  int m = 16;

  double h() const { return extent / m; }
  int per_axis() const { return 2 * m + 1; }
  std::size_t node_count() const;

  std::size_t flatten(const std::array<int, 3>& idx) const;  // idx in [-m, m]
  std::array<int, 3> unflatten(std::size_t flat) const;      // trailing 0
  std::array<double, 3> coords(std::size_t flat) const;
  NodeKind kind(std::size_t flat) const;
  // Flat index of the axis-neighbor, or npos when it leaves the box.
  std::size_t neighbor(std::size_t flat, int axis, int step) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

class ScalarGrid {
 public:
  explicit ScalarGrid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  double operator[](std::size_t flat) const { return v_[flat]; }
  double& operator[](std::size_t flat) { return v_[flat]; }
  std::size_t size() const { return v_.size(); }

 private:
  GridSpec spec_;
  std::vector<double> v_;
};

using NodeFn = std::function<double(const std::array<double, 3>&)>;

// Sample fn at inside nodes only / at inside and ring nodes (other nodes
// stay zero; singular data outside the ball is then never evaluated).
ScalarGrid sampled_inside(const GridSpec& spec, const NodeFn& fn);
ScalarGrid sampled_through_ring(const GridSpec& spec, const NodeFn& fn);

// 2 dim + 1 point Laplacian; every Inside node has all its box neighbors.
double laplacian_at(const ScalarGrid& g, std::size_t flat);
// Central difference along an axis.
double central_at(const ScalarGrid& g, std::size_t flat, int axis);

double max_inside_abs(const ScalarGrid& g);
double max_inside_diff(const ScalarGrid& a, const ScalarGrid& b);
double max_inside_diff(const ScalarGrid& a, const NodeFn& fn);

}  // namespace malab
