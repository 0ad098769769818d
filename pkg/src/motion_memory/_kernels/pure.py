"""Pure-numpy signed-distance kernels.

Reference implementation of the hot kernels; the Cython module in
``_speedups.pyx`` mirrors these semantics. Both are selected through
``motion_memory._kernels``.

Conventions shared by both backends:

* ``Q`` is an (M, D) float64 array of configurations.
* ``kind`` is 0 for a planar disc base (x, y, theta; theta ignored for
  collision) and 1 for a planar serial arm rooted at the origin.
* ``circles`` is (nc, 3): cx, cy, radius. ``rects`` is (nr, 4):
  xmin, ymin, xmax, ymax.
* Returned distances are clearance-adjusted: raw separation minus
  ``clearance`` (and minus ``body_radius`` for the disc base). Negative
  means the clearance margin is violated or the body penetrates.
* With no obstacles every entry is ``NO_OBSTACLE_DISTANCE``.
"""

import numpy as np

BACKEND_NAME = "pure"

NO_OBSTACLE_DISTANCE = 1e9


def _point_rect_signed(px, py, rect):
    """Signed distance from points to an axis-aligned rectangle boundary.

    Negative inside. Vectorized over the point arrays.
    """
    xmin, ymin, xmax, ymax = rect
    cx, cy = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)
    hx, hy = 0.5 * (xmax - xmin), 0.5 * (ymax - ymin)
    dx = np.abs(px - cx) - hx
    dy = np.abs(py - cy) - hy
    outside = np.hypot(np.maximum(dx, 0.0), np.maximum(dy, 0.0))
    inside = np.minimum(np.maximum(dx, dy), 0.0)
    return outside + inside


def _point_seg_dist(px, py, ax, ay, bx, by):
    """Distance from points (px, py) to segment (a, b). Broadcasts."""
    abx, aby = bx - ax, by - ay
    denom = abx * abx + aby * aby
    t = np.where(denom > 0.0, ((px - ax) * abx + (py - ay) * aby) / np.where(denom > 0.0, denom, 1.0), 0.0)
    t = np.clip(t, 0.0, 1.0)
    return np.hypot(px - (ax + t * abx), py - (ay + t * aby))


def _seg_rect_signed(p0, p1, rect):
    """Min over a segment of the point-to-rect signed distance.

    p0, p1: (M, 2) segment endpoints. Exact: separation distance when
    disjoint, deepest penetration (negative) when the segment enters the
    rectangle.
    """
    xmin, ymin, xmax, ymax = rect
    d = p1 - p0

    # Slab interval of the segment inside the rectangle (Liang-Barsky).
    lo_c = np.array([xmin, ymin])
    hi_c = np.array([xmax, ymax])
    with np.errstate(divide="ignore", invalid="ignore"):
        t1 = (lo_c - p0) / d
        t2 = (hi_c - p0) / d
    slab_lo = np.minimum(t1, t2)
    slab_hi = np.maximum(t1, t2)
    zero = d == 0.0
    inside_slab = (p0 >= lo_c) & (p0 <= hi_c)
    slab_lo = np.where(zero, np.where(inside_slab, -np.inf, np.inf), slab_lo)
    slab_hi = np.where(zero, np.where(inside_slab, np.inf, -np.inf), slab_hi)
    t_enter = np.maximum(np.max(slab_lo, axis=1), 0.0)
    t_exit = np.minimum(np.min(slab_hi, axis=1), 1.0)
    hits = t_enter <= t_exit

    # Penetration branch: depth(t) = max of four linear functions, all
    # non-positive strictly inside; its min over [t_enter, t_exit] is at
    # an interval end or a pairwise crossing of the linear pieces.
    a = np.stack(
        [xmin - p0[:, 0], p0[:, 0] - xmax, ymin - p0[:, 1], p0[:, 1] - ymax],
        axis=1,
    )
    b = np.stack([-d[:, 0], d[:, 0], -d[:, 1], d[:, 1]], axis=1)
    cand = [t_enter, t_exit]
    for i in range(4):
        for j in range(i + 1, 4):
            db = b[:, i] - b[:, j]
            with np.errstate(divide="ignore", invalid="ignore"):
                tc = (a[:, j] - a[:, i]) / db
            tc = np.where(np.isfinite(tc), tc, t_enter)
            cand.append(np.clip(tc, t_enter, t_exit))
    ts = np.stack(cand, axis=1)  # (M, 8)
    depth = np.max(a[:, None, :] + b[:, None, :] * ts[:, :, None], axis=2)
    pen = np.min(depth, axis=1)

    # Separation branch: the segment is disjoint from the (closed) rect,
    # so the min distance to the boundary is attained at an endpoint of
    # the segment or of one of the four edges.
    corners = np.array([[xmin, ymin], [xmax, ymin], [xmax, ymax], [xmin, ymax]])
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    sep = np.full(p0.shape[0], np.inf)
    for ia, ib in edges:
        ax, ay = corners[ia]
        bx, by = corners[ib]
        sep = np.minimum(sep, _point_seg_dist(p0[:, 0], p0[:, 1], ax, ay, bx, by))
        sep = np.minimum(sep, _point_seg_dist(p1[:, 0], p1[:, 1], ax, ay, bx, by))
        for corner in (corners[ia], corners[ib]):
            sep = np.minimum(
                sep,
                _point_seg_dist(corner[0], corner[1], p0[:, 0], p0[:, 1], p1[:, 0], p1[:, 1]),
            )
    return np.where(hits, pen, sep)


def _arm_points(Q, link_lengths):
    """Joint positions of a planar serial chain rooted at the origin.

    Returns (M, L + 1, 2); row 0 is the base, the last row the tip.
    """
    angles = np.cumsum(Q, axis=1)
    steps = np.stack([np.cos(angles), np.sin(angles)], axis=2) * link_lengths[None, :, None]
    pts = np.zeros((Q.shape[0], link_lengths.shape[0] + 1, 2))
    pts[:, 1:] = np.cumsum(steps, axis=1)
    return pts


def sd_batch(Q, kind, circles, rects, link_lengths, body_radius, clearance):
    """Clearance-adjusted signed distance for every configuration in Q."""
    Q = np.asarray(Q, dtype=np.float64)
    m = Q.shape[0]
    if circles.shape[0] == 0 and rects.shape[0] == 0:
        return np.full(m, NO_OBSTACLE_DISTANCE)

    best = np.full(m, np.inf)
    if kind == 0:
        px, py = Q[:, 0], Q[:, 1]
        for cx, cy, r in circles:
            best = np.minimum(best, np.hypot(px - cx, py - cy) - r - body_radius)
        for rect in rects:
            best = np.minimum(best, _point_rect_signed(px, py, rect) - body_radius)
    else:
        pts = _arm_points(Q, link_lengths)
        for link in range(link_lengths.shape[0]):
            p0, p1 = pts[:, link], pts[:, link + 1]
            for cx, cy, r in circles:
                best = np.minimum(
                    best,
                    _point_seg_dist(cx, cy, p0[:, 0], p0[:, 1], p1[:, 0], p1[:, 1]) - r,
                )
            for rect in rects:
                best = np.minimum(best, _seg_rect_signed(p0, p1, rect))
    return best - clearance


def sd_grad_fd(Q, active, kind, circles, rects, link_lengths, body_radius, clearance, step):
    """Central-difference gradient of sd_batch for the rows where
    ``active`` is true; inactive rows are zero. Returns (M, D)."""
    Q = np.asarray(Q, dtype=np.float64)
    m, d = Q.shape
    grad = np.zeros((m, d))
    idx = np.nonzero(active)[0]
    if idx.size == 0:
        return grad
    base = np.repeat(Q[idx], d, axis=0)
    offsets = np.tile(step * np.eye(d), (idx.size, 1))
    sd_plus = sd_batch(base + offsets, kind, circles, rects, link_lengths, body_radius, clearance)
    sd_minus = sd_batch(base - offsets, kind, circles, rects, link_lengths, body_radius, clearance)
    grad[idx] = ((sd_plus - sd_minus) / (2.0 * step)).reshape(idx.size, d)
    return grad
