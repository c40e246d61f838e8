#include "contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lejalab/parallel.hpp"

namespace lejalab::detail {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Grid {
  std::size_t cells;
  Box box;
  double hx, hy;

  std::size_t vertices_per_side() const { return cells + 1; }
  Complex vertex(std::size_t i, std::size_t j) const {
    return {box.xmin + hx * static_cast<double>(i), box.ymin + hy * static_cast<double>(j)};
  }
  // Horizontal edge (i,j)-(i+1,j) and vertical edge (i,j)-(i,j+1).
  std::size_t h_edge(std::size_t i, std::size_t j) const { return 2 * (j * vertices_per_side() + i); }
  std::size_t v_edge(std::size_t i, std::size_t j) const {
    return 2 * (j * vertices_per_side() + i) + 1;
  }
};

Complex polish_root(const std::function<double(Complex)>& f, Complex a, Complex b, double fa,
                    double fb, double level) {
  // Illinois variant of regula falsi on the segment [a, b].
  double ta = 0.0, tb = 1.0;
  double ga = fa - level, gb = fb - level;
  double t = ga / (ga - gb);
  int side = 0;
  for (int it = 0; it < 40; ++it) {
    t = (ta * gb - tb * ga) / (gb - ga);
    const double gt = f(a + t * (b - a)) - level;
    if (gt == 0.0 || std::abs(tb - ta) < 1e-15) break;
    if ((gt < 0) == (ga < 0)) {
      ta = t;
      ga = gt;
      if (side == -1) gb /= 2;
      side = -1;
    } else {
      tb = t;
      gb = gt;
      if (side == 1) ga /= 2;
      side = 1;
    }
    if (std::abs(gt) < 1e-14) break;
  }
  return a + t * (b - a);
}

}  // namespace

double signed_area(const std::vector<Complex>& loop) {
  double area = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Complex& p = loop[i];
    const Complex& q = loop[(i + 1) % loop.size()];
    area += p.real() * q.imag() - q.real() * p.imag();
  }
  return area / 2.0;
}

std::vector<Complex> extract_level_loop(const std::function<double(Complex)>& f, const Box& box,
                                        std::size_t cells, double level) {
  if (cells < 2) throw InvalidInput("contour grid needs at least 2 cells per side");
  Grid grid{cells, box, box.width() / static_cast<double>(cells),
            box.height() / static_cast<double>(cells)};
  const std::size_t nv = grid.vertices_per_side();

  std::vector<double> values(nv * nv);
  parallel_blocks(
      nv,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
          for (std::size_t i = 0; i < nv; ++i) values[j * nv + i] = f(grid.vertex(i, j));
        }
      },
      8);
  auto value = [&](std::size_t i, std::size_t j) { return values[j * nv + i]; };
  auto above = [&](std::size_t i, std::size_t j) { return value(i, j) >= level; };

  const std::size_t edge_count = 2 * nv * nv;
  std::vector<Complex> crossing(edge_count);
  std::vector<char> has_crossing(edge_count, 0);
  std::vector<std::array<std::size_t, 2>> links(edge_count, {kNone, kNone});

  auto crossing_on = [&](std::size_t id, std::size_t i0, std::size_t j0, std::size_t i1,
                         std::size_t j1) {
    if (has_crossing[id]) return;
    has_crossing[id] = 1;
    crossing[id] = polish_root(f, grid.vertex(i0, j0), grid.vertex(i1, j1), value(i0, j0),
                               value(i1, j1), level);
  };
  auto link = [&](std::size_t a, std::size_t b) {
    auto add = [&](std::size_t from, std::size_t to) {
      auto& slot = links[from];
      if (slot[0] == kNone) {
        slot[0] = to;
      } else {
        slot[1] = to;
      }
    };
    add(a, b);
    add(b, a);
  };

  for (std::size_t j = 0; j < cells; ++j) {
    for (std::size_t i = 0; i < cells; ++i) {
      const bool c0 = above(i, j), c1 = above(i + 1, j), c2 = above(i + 1, j + 1),
                 c3 = above(i, j + 1);
      const std::size_t e0 = grid.h_edge(i, j), e1 = grid.v_edge(i + 1, j),
                        e2 = grid.h_edge(i, j + 1), e3 = grid.v_edge(i, j);
      std::array<std::size_t, 4> hit{};
      std::size_t count = 0;
      if (c0 != c1) { crossing_on(e0, i, j, i + 1, j); hit[count++] = e0; }
      if (c1 != c2) { crossing_on(e1, i + 1, j, i + 1, j + 1); hit[count++] = e1; }
      if (c3 != c2) { crossing_on(e2, i, j + 1, i + 1, j + 1); hit[count++] = e2; }
      if (c0 != c3) { crossing_on(e3, i, j, i, j + 1); hit[count++] = e3; }
      if (count == 2) {
        link(hit[0], hit[1]);
      } else if (count == 4) {
        const double center =
            (value(i, j) + value(i + 1, j) + value(i + 1, j + 1) + value(i, j + 1)) / 4.0;
        if ((center >= level) == c0) {
          link(e0, e1);
          link(e2, e3);
        } else {
          link(e0, e3);
          link(e1, e2);
        }
      }
    }
  }

  std::vector<char> visited(edge_count, 0);
  std::vector<Complex> best;
  double best_area = -1.0;
  for (std::size_t start = 0; start < edge_count; ++start) {
    if (!has_crossing[start] || visited[start]) continue;
    if (links[start][1] == kNone) {
      throw NumericalFailure("level curve reaches the sampling box boundary; a box larger than " +
                             std::to_string(box.width()) + " x " + std::to_string(box.height()) +
                             " is required");
    }
    std::vector<Complex> loop;
    std::size_t prev = kNone, cur = start;
    while (true) {
      visited[cur] = 1;
      loop.push_back(crossing[cur]);
      const auto& l = links[cur];
      std::size_t next = l[0] != prev ? l[0] : l[1];
      if (l[0] == l[1]) next = l[0];
      if (next == kNone) {
        throw NumericalFailure("level curve reaches the sampling box boundary; a box larger than " +
                               std::to_string(box.width()) + " x " +
                               std::to_string(box.height()) + " is required");
      }
      if (next == start) break;
      if (visited[next]) break;
      prev = cur;
      cur = next;
    }
    const double area = std::abs(signed_area(loop));
    if (loop.size() >= 3 && area > best_area) {
      best_area = area;
      best = std::move(loop);
    }
  }
  if (best.empty()) throw NumericalFailure("no closed level curve found on the sampling grid");
  if (signed_area(best) < 0) std::reverse(best.begin() + 1, best.end());
  return best;
}

}  // namespace lejalab::detail
