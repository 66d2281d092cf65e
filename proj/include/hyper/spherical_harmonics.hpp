#pragma once

#include <Eigen/Dense>

namespace hyper {

// Real spherical harmonics, fully normalized (integral of Y^2 over the
// sphere is 1), Condon-Shortley phase omitted.  Ordering: l = 0..L, within
// each l the index m runs -l..l (sin terms first).  Input points are
// projected radially onto the unit sphere before evaluation.
// Returns an N x (L+1)^2 matrix.
Eigen::MatrixXd real_spherical_harmonics(const Eigen::MatrixXd& points, int L);

}  // namespace hyper
