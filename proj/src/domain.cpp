#include "hyper/domain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hyper/errors.hpp"

namespace hyper {

namespace {
constexpr double kPi = std::numbers::pi;
}

Domain Domain::interval() { return Domain(DomainKind::Interval, 1); }
Domain Domain::disk() { return Domain(DomainKind::Disk, 2); }
Domain Domain::sphere() { return Domain(DomainKind::Sphere, 3); }
Domain Domain::cube() { return Domain(DomainKind::Cube, 3); }

Domain Domain::union_of_disks(std::vector<DiskSpec> disks) {
    if (disks.empty()) throw config_error("union_of_disks: no disks given");
    for (const auto& d : disks) {
        if (!(d.radius > 0.0)) throw config_error("union_of_disks: radius must be positive");
    }
    for (size_t i = 0; i < disks.size(); ++i) {
        for (size_t j = i + 1; j < disks.size(); ++j) {
            const double dist = (disks[i].center - disks[j].center).norm();
            if (dist < disks[i].radius + disks[j].radius - 1e-12) {
                std::ostringstream msg;
                msg << "union_of_disks: disks " << i << " and " << j
                    << " overlap (unsupported configuration)";
                throw config_error(msg.str());
            }
        }
    }
    Domain dom(DomainKind::UnionOfDisks, 2);
    dom.disks_ = std::move(disks);
    return dom;
}

double Domain::volume() const {
    switch (kind_) {
        case DomainKind::Interval: return 2.0;
        case DomainKind::Disk: return kPi;
        case DomainKind::Sphere: return 4.0 * kPi;
        case DomainKind::Cube: return 1.0;
        case DomainKind::UnionOfDisks: {
            double v = 0.0;
            for (const auto& d : disks_) v += kPi * d.radius * d.radius;
            return v;
        }
    }
    return 0.0;
}

bool Domain::contains(const Eigen::VectorXd& point, double tol) const {
    if (point.size() != ambient_dim_) return false;
    switch (kind_) {
        case DomainKind::Interval:
            return std::abs(point[0]) <= 1.0 + tol;
        case DomainKind::Disk:
            return point.norm() <= 1.0 + tol;
        case DomainKind::Sphere:
            return std::abs(point.norm() - 1.0) <= tol;
        case DomainKind::Cube:
            return point.lpNorm<Eigen::Infinity>() <= 1.0 + tol;
        case DomainKind::UnionOfDisks:
            for (const auto& d : disks_) {
                if ((point.head<2>() - d.center).norm() <= d.radius + tol) return true;
            }
            return false;
    }
    return false;
}

const char* Domain::name() const {
    switch (kind_) {
        case DomainKind::Interval: return "interval";
        case DomainKind::Disk: return "disk";
        case DomainKind::Sphere: return "sphere";
        case DomainKind::Cube: return "cube";
        case DomainKind::UnionOfDisks: return "union_disks";
    }
    return "?";
}

}  // namespace hyper
