#pragma once

#include <cstddef>
#include <vector>

namespace magstego {

// Regular 2-D sample grid in the lab xy plane (micrometers).
// Sample i,j sits at (x0 + i*step, y0 + j*step), i in [0,nx), j in [0,ny).
struct GridSpec {
    double x0 = 0.0;
    double y0 = 0.0;
    double step = 0.5;
    int nx = 0;
    int ny = 0;

    double x(int i) const { return x0 + i * step; }
    double y(int j) const { return y0 + j * step; }
    std::size_t count() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    bool operator==(const GridSpec& o) const {
        return x0 == o.x0 && y0 == o.y0 && step == o.step && nx == o.nx && ny == o.ny;
    }

    // Grid covering [xmin,xmax] x [ymin,ymax] with the given step, first
    // sample at the window corner.
    static GridSpec cover(double xmin, double ymin, double xmax, double ymax, double step) {
        GridSpec g;
        g.x0 = xmin;
        g.y0 = ymin;
        g.step = step;
        g.nx = static_cast<int>((xmax - xmin) / step + 1.5);
        g.ny = static_cast<int>((ymax - ymin) / step + 1.5);
        return g;
    }
};

}  // namespace magstego
