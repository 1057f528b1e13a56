#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "sl2/algebra.hpp"
#include "sl2/factorization.hpp"
#include "sl2/solver.hpp"

namespace sl2 {

/// Trajectory point g(t) and the index of the factor that is active at t.
/// Switch instants belong to the factor that ends there.
struct TrajectorySample {
    double time = 0.0;
    GroupElement g;
    int factor = -1;
};

/// Samples t -> g(t) along the factors at spacing <= step, always including
/// every switch instant. The last sample equals evaluate(f).
std::vector<TrajectorySample> sample_trajectory(const Factorization& f, double step);

/// Car pose in the unit disc.
struct DiscPose {
    std::complex<double> z;
    /// Heading in (-pi, pi].
    double theta = 0.0;
    /// The direction of motion reverses at this pose.
    bool cusp = false;
};

/// Pose of g acting on the base frame. The base point i of the upper
/// half-plane goes to 0 via w = i (z - i)/(z + i), so that T/2 drives along
/// the positive real axis at unit speed. exp(aU) turns the heading by 2a;
/// P and Q are forward left and right turns.
DiscPose disc_pose(const GroupElement& g);

/// Hyperbolic distance between two points of the disc.
double disc_distance(std::complex<double> z1, std::complex<double> z2);

/// +1 for forward controls (positive T component), -1 for backward ones.
int drive_direction(const Factor& f);

struct PathPoint {
    double time = 0.0;
    DiscPose pose;
};

struct RscpPlan {
    DistanceResult distance;
    std::vector<PathPoint> path;
};

/// Shortest hyperbolic Reeds-Shepp path to g: the PSL(2) optimum rendered in
/// the disc, with cusp flags at the switches where the drive direction flips.
RscpPlan plan_rscp(const GroupElement& target, double step);

/// Poses along a factorization, cusp flags included.
std::vector<PathPoint> disc_path(const Factorization& f, double step);

/// True if two non-adjacent segments of the polyline cross or come within tol.
bool has_self_intersection(const std::vector<PathPoint>& path, double tol = 1e-9);

/// CSV rows "t,re,im,theta,cusp" with a header line.
void write_path_csv(std::ostream& out, const std::vector<PathPoint>& path);

}  // namespace sl2
