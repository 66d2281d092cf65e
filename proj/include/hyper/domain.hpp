#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hyper {

enum class DomainKind { Interval, Disk, Sphere, Cube, UnionOfDisks };

struct DiskSpec {
    Eigen::Vector2d center;
    double radius;
};

// One of the five supported compact domains.  UnionOfDisks requires pairwise
// disjoint disk interiors; overlapping configurations are rejected.
class Domain {
  public:
    static Domain interval();
    static Domain disk();
    static Domain sphere();
    static Domain cube();
    static Domain union_of_disks(std::vector<DiskSpec> disks);

    DomainKind kind() const { return kind_; }
    int ambient_dim() const { return ambient_dim_; }
    const std::vector<DiskSpec>& disks() const { return disks_; }

    // Total measure: interval 2, disk pi, sphere 4*pi, cube (Chebyshev
    // weight) 1, union of disjoint disks sum pi*r^2.
    double volume() const;

    bool contains(const Eigen::VectorXd& point, double tol = 1e-12) const;

    const char* name() const;

  private:
    Domain(DomainKind kind, int dim) : kind_(kind), ambient_dim_(dim) {}

    DomainKind kind_;
    int ambient_dim_;
    std::vector<DiskSpec> disks_;
};

}  // namespace hyper
