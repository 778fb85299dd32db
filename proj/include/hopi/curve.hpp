#pragma once

// The Hermitian curve y^q + y = x^(q+1) over GF(q^2). Only affine points
// are materialized; the point at infinity enters solely through the pole
// order bound of the code.

#include <cstdint>
#include <vector>

#include "hopi/gf.hpp"

namespace hopi {

struct CurvePoint {
    Element x;
    Element y;

    friend constexpr auto operator<=>(const CurvePoint&, const CurvePoint&) noexcept = default;
};

constexpr long long genus(long long q) noexcept { return q * (q - 1) / 2; }

inline bool is_on_curve(const Field& f, const CurvePoint& pt) {
    const Element lhs = f.add(f.frobenius_q(pt.y), pt.y);
    const Element rhs = f.pow(pt.x, static_cast<std::uint64_t>(f.q()) + 1);
    return lhs == rhs;
}

/// All affine rational points, ordered by x index then y index.
inline std::vector<CurvePoint> rational_points(const Field& f) {
    std::vector<CurvePoint> pts;
    pts.reserve(static_cast<std::size_t>(f.q()) * f.q() * f.q());
    for (auto x : f.elements()) {
        for (auto y : f.elements()) {
            if (is_on_curve(f, {x, y})) pts.push_back({x, y});
        }
    }
    return pts;
}

class HermitianCurve {
public:
    explicit HermitianCurve(int q) : field_(Field::make(q)), points_(rational_points(*field_)) {}

    int q() const noexcept { return field_->q(); }
    long long genus() const noexcept { return hopi::genus(field_->q()); }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const std::vector<CurvePoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    FieldPtr field_;
    std::vector<CurvePoint> points_;
};

}  // namespace hopi
