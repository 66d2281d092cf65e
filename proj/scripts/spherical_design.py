#!/usr/bin/env python3
"""Compute an equal-weight spherical t-design by minimizing Weyl sums.

A point set X = {x_1..x_N} on S^2 is a t-design iff the equal-weight rule
integrates every spherical harmonic of degree 1..t to zero.  We minimize

    A(X) = sum_{l=1..t} sum_m ( sum_j Y_lm(x_j) )^2

over unconstrained R^{N x 3} coordinates (normalized to the sphere inside
the objective).  A(X) = 0 exactly at a design.  A cheaper pair-sum form
based on the addition theorem is used for the first optimization phase.

Output: plain text, one "x y z" row per point, suitable for the
`hyper designs` loader.
"""

import argparse
import sys

import numpy as np
import scipy.optimize

import jax

jax.config.update("jax_enable_x64", True)
import jax.numpy as jnp


def fibonacci_sphere(n, seed=0):
    rng = np.random.default_rng(seed)
    i = np.arange(n, dtype=np.float64)
    golden = (1 + 5**0.5) / 2
    z = 1 - (2 * i + 1) / n
    phi = 2 * np.pi * i / golden + rng.uniform(0, 2 * np.pi)
    r = np.sqrt(np.maximum(0.0, 1 - z * z))
    pts = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
    pts += 1e-4 * rng.standard_normal(pts.shape)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def make_pair_objective(t, n):
    # A1 = sum_l (2l+1)/(4pi N^2) * sum_{jk} P_l(x_j . x_k)  (each term >= 0)
    def f(y):
        x = y.reshape(n, 3)
        x = x / jnp.linalg.norm(x, axis=1, keepdims=True)
        g = jnp.clip(x @ x.T, -1.0, 1.0)
        pm2 = jnp.ones_like(g)
        pm1 = g
        total = 3.0 * jnp.sum(pm1)
        for l in range(2, t + 1):
            p = ((2 * l - 1) * g * pm1 - (l - 1) * pm2) / l
            total = total + (2 * l + 1) * jnp.sum(p)
            pm2, pm1 = pm1, p
        return total / (4 * jnp.pi * n * n)

    return jax.jit(jax.value_and_grad(f))


def weyl_residuals(y, t, n):
    """All Weyl sums r_lm = sum_j Ybar_lm(x_j), l = 1..t, fully normalized
    real harmonics (no Condon-Shortley)."""
    x = y.reshape(n, 3)
    x = x / jnp.linalg.norm(x, axis=1, keepdims=True)
    ct = x[:, 2]
    st = jnp.sqrt(jnp.maximum(x[:, 0] ** 2 + x[:, 1] ** 2, 1e-60))
    cp = x[:, 0] / st
    sp = x[:, 1] / st

    res = []
    # p[m] holds Pbar_{l,m} for the current l; build by upward recurrence.
    pmm = jnp.full(n, np.sqrt(1.0 / (4 * np.pi)))  # Pbar_00
    cos_m = jnp.ones(n)
    sin_m = jnp.zeros(n)
    for m in range(0, t + 1):
        if m > 0:
            pmm = pmm * st * np.sqrt((2 * m + 1.0) / (2 * m))
            cos_m, sin_m = cos_m * cp - sin_m * sp, sin_m * cp + cos_m * sp
        plm2 = pmm
        if m > 0:
            res.append(jnp.sum(np.sqrt(2.0) * plm2 * cos_m))
            res.append(jnp.sum(np.sqrt(2.0) * plm2 * sin_m))
        plm1 = ct * pmm * np.sqrt(2 * m + 3.0)
        if m + 1 <= t:
            if m == 0:
                res.append(jnp.sum(plm1))
            else:
                res.append(jnp.sum(np.sqrt(2.0) * plm1 * cos_m))
                res.append(jnp.sum(np.sqrt(2.0) * plm1 * sin_m))
        for l in range(m + 2, t + 1):
            a = np.sqrt((4.0 * l * l - 1) / (l * l - m * m))
            b = np.sqrt(
                (2.0 * l + 1) * ((l - 1.0) ** 2 - m * m) / ((2.0 * l - 3) * (l * l - m * m))
            )
            p = a * ct * plm1 - b * plm2
            if m == 0:
                res.append(jnp.sum(p))
            else:
                res.append(jnp.sum(np.sqrt(2.0) * p * cos_m))
                res.append(jnp.sum(np.sqrt(2.0) * p * sin_m))
            plm2, plm1 = plm1, p
        if m == 0:
            pmm = jnp.full(n, np.sqrt(1.0 / (4 * np.pi)))
    return jnp.stack(res)


def certify(pts, t):
    n = pts.shape[0]
    r = np.asarray(weyl_residuals(jnp.asarray(pts.ravel()), t, n))
    worst = float(np.max(np.abs(r)))
    # discrete mean of Ybar_lm relative to the measure, weights 4pi/N
    return worst, worst / n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--t", type=int, required=True)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", required=True)
    ap.add_argument("--maxiter", type=int, default=60000)
    args = ap.parse_args()

    n, t = args.n, args.t
    pts = fibonacci_sphere(n, args.seed)
    y0 = pts.ravel()

    pair = make_pair_objective(t, n)

    def pair_np(y):
        v, g = pair(jnp.asarray(y))
        return float(v), np.asarray(g)

    r1 = scipy.optimize.minimize(
        pair_np, y0, jac=True, method="L-BFGS-B",
        options={"maxiter": args.maxiter, "maxfun": 2 * args.maxiter,
                 "ftol": 0, "gtol": 1e-18, "maxcor": 25},
    )
    print(f"phase1: A1={r1.fun:.3e} nit={r1.nit} {r1.message}", flush=True)

    weyl_obj = jax.jit(
        jax.value_and_grad(lambda y: jnp.sum(weyl_residuals(y, t, n) ** 2))
    )

    def weyl_np(y):
        v, g = weyl_obj(jnp.asarray(y))
        return float(v), np.asarray(g)

    y = r1.x
    for attempt in range(3):
        r2 = scipy.optimize.minimize(
            weyl_np, y, jac=True, method="L-BFGS-B",
            options={"maxiter": args.maxiter, "maxfun": 2 * args.maxiter,
                     "ftol": 0, "gtol": 1e-18, "maxcor": 25},
        )
        y = r2.x
        print(f"phase2.{attempt}: sum r^2 = {r2.fun:.3e} nit={r2.nit} {r2.message}",
              flush=True)
        if r2.fun < 1e-16:
            break

    pts = y.reshape(n, 3)
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    worst, mean = certify(pts, t)
    print(f"certify: max|weyl sum|={worst:.3e}  max discrete mean={mean:.3e}",
          flush=True)
    if worst > 1e-6:
        print("FAILED to reach design tolerance", flush=True)
        sys.exit(1)

    with open(args.out, "w") as f:
        f.write(f"# spherical design, degree {t}, {n} points, equal weights 4*pi/N\n")
        for p in pts:
            f.write(f"{p[0]:.17g} {p[1]:.17g} {p[2]:.17g}\n")
    print(f"wrote {args.out}", flush=True)


if __name__ == "__main__":
    main()
