#pragma once

#include "fracdim/sets.hpp"

namespace fracdim {

/// inf over y in set of |x - y|. Throws Error(EmptySet).
Scalar distance_to_set(const Scalar& x, const IntervalSet& set);

/// sup over a in A of inf over b in B of |a - b|, exactly. The supremum is
/// attained at an endpoint of A or at a gap midpoint of B that lies in A.
Scalar hausdorff_semidistance(const IntervalSet& a, const IntervalSet& b);
Scalar hausdorff_semidistance(const PointSet& a, const PointSet& b);
Scalar hausdorff_semidistance(const IntervalSet& a, const PointSet& b);
Scalar hausdorff_semidistance(const PointSet& a, const IntervalSet& b);

Scalar hausdorff_distance(const IntervalSet& a, const IntervalSet& b);
Scalar hausdorff_distance(const PointSet& a, const PointSet& b);
Scalar hausdorff_distance(const IntervalSet& a, const PointSet& b);
Scalar hausdorff_distance(const PointSet& a, const IntervalSet& b);

}  // namespace fracdim
