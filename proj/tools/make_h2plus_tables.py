#!/usr/bin/env python3
"""Generate the embedded H2+ Born-Oppenheimer potential tables.

Solves the one-electron two-center Coulomb problem exactly in prolate
spheroidal coordinates (lambda = (r1+r2)/R, mu = (r1-r2)/R).  For sigma
states the wave function separates, Lambda(lambda) * M(mu), with

  radial :  d/dl[(l^2-1) L'] + (2 R l - p^2 l^2 - A) L = 0
  angular:  d/dm[(1-m^2) M'] + (p^2 m^2 + A) M = 0,   p^2 = -R^2 E / 2

The angular separation constant A(p^2) is the lowest eigenvalue of
(l(l+1) - p^2 mu^2) in a Legendre basis restricted to the parity block
(even block -> 1s sigma_g, odd block -> 2p sigma_u).  The radial equation
is solved by bidirectional shooting with a Wronskian match; the electronic
energy is the Brent root of the mismatch.

Outputs:
  data/h2plus_1ssg.dat, data/h2plus_2psu.dat   two-column text (R a.u., V eV)
  src/potential_tables.cpp                     embedded arrays

Energies are referenced to the neutral H2 ground state: the shared
dissociation asymptote (H(1s) + H+, E_BO = -0.5 Ha) sits at 18.1 eV, so
V(R) [eV] = 18.1 + (E_elec(R) + 1/R + 0.5) * 27.211386245988.

Checks run after generation:
  * E_elec(1ssg, R=2) = -1.102634214494946 Ha   (classic benchmark, |err|<1e-8)
  * E_elec(2psu, R=2) = -0.667534392202      Ha (|err|<1e-6)
  * long range: E_elec + 1/2 + 9/(4 R^4) -> 0 within 1e-6 at R=40
  * 2psu >= 1ssg everywhere; both asymptotes within 1e-4 eV of 18.1
"""

import sys
import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

HARTREE_EV = 27.211386245988
ASYMPTOTE_EV = 18.1  # dissociation limit above the H2 ground state


_LMAX = 220
_Q = None


def _mu_squared():
    global _Q
    if _Q is None:
        n = _LMAX + 1
        b = np.zeros((n, n))
        for l in range(_LMAX):
            b[l + 1, l] = b[l, l + 1] = (l + 1) / np.sqrt((2 * l + 1) * (2 * l + 3))
        _Q = b @ b
    return _Q


def angular_constant(p2, parity):
    """Lowest eigenvalue A of (l(l+1) - p^2 mu^2) on the given parity block."""
    q = _mu_squared()
    # basis truncation grows with p; coefficients decay fast beyond l ~ p
    lmax = min(_LMAX, max(40, int(3.0 * np.sqrt(abs(p2))) + 24))
    ls = np.arange(lmax + 1)
    m = np.diag(ls * (ls + 1.0)) - p2 * q[: lmax + 1, : lmax + 1]
    block = m[parity::2, parity::2]
    return np.linalg.eigvalsh(block)[0]


def radial_mismatch(e_elec, r_sep, parity):
    """Wronskian mismatch of outward/inward radial solutions at the match point."""
    p2 = -r_sep * r_sep * e_elec / 2.0
    p = np.sqrt(p2)
    a_sep = angular_constant(p2, parity)

    def rhs(lam, y):
        # y = [Lambda, (lam^2-1) Lambda']
        lam2m1 = lam * lam - 1.0
        dl = y[1] / lam2m1 if lam2m1 > 0 else 0.0
        return [dl, (p2 * lam * lam - 2.0 * r_sep * lam + a_sep) * y[0]]

    lam_match = 1.0 + max(1.0, 2.0 / p)
    lam_max = lam_match + 40.0 / p

    # outward: regular series start at lam = 1 + eps
    eps = 1e-6
    y0 = 1.0
    dy0 = -(2.0 * r_sep - p2 - a_sep) / 2.0 * y0
    out = solve_ivp(rhs, (1.0 + eps, lam_match),
                    [y0 + eps * dy0, (2.0 * eps) * dy0],
                    rtol=1e-12, atol=1e-14, method="DOP853")
    # inward: decaying branch Lambda ~ exp(-p lam) lam^(R/p - 1)
    sig = r_sep / p - 1.0
    yi = 1.0
    dyi = (-p + sig / lam_max) * yi
    inn = solve_ivp(rhs, (lam_max, lam_match),
                    [yi, (lam_max * lam_max - 1.0) * dyi],
                    rtol=1e-12, atol=1e-300, method="DOP853")
    fo, go = out.y[0][-1], out.y[1][-1]
    fi, gi = inn.y[0][-1], inn.y[1][-1]
    # scale-invariant Wronskian
    return (go * fi - gi * fo) / (abs(fo * fi) + abs(go * gi) + 1e-300)


def solve_state(r_sep, parity, e_lo, e_hi, n_scan=120):
    """Electronic energy of the lowest (radially nodeless) state in the bracket."""
    es = np.linspace(e_lo, e_hi, n_scan)
    vals = [radial_mismatch(e, r_sep, parity) for e in es]
    roots = []
    for i in range(len(es) - 1):
        if np.isfinite(vals[i]) and np.isfinite(vals[i + 1]) and vals[i] * vals[i + 1] < 0:
            roots.append(brentq(radial_mismatch, es[i], es[i + 1],
                                args=(r_sep, parity), xtol=1e-13, rtol=1e-14))
    if not roots:
        raise RuntimeError(f"no root for R={r_sep} parity={parity}")
    return min(roots)  # lowest state of the symmetry block


def r_grid():
    segs = [(0.5, 1.0, 0.025), (1.0, 6.0, 0.05), (6.0, 12.0, 0.1),
            (12.0, 20.0, 0.25), (20.0, 30.0, 0.5), (30.0, 40.0, 1.0),
            (40.0, 60.0, 2.5), (60.0, 100.0, 5.0)]
    rs = []
    for a, b, h in segs:
        rs.extend(np.arange(a, b - 1e-9, h))
    rs.append(100.0)
    return np.array(sorted(set(round(r, 6) for r in rs)))


def sweep(args):
    rs, parity, e_first_lo, e_first_hi = args
    es = np.empty_like(rs)
    for i, r in enumerate(rs):
        if i == 0:
            # wide bracket tracks the united-atom -> separated-atom evolution
            es[i] = solve_state(r, parity, e_first_lo, e_first_hi)
        else:
            # continuation from the previous grid point
            for width, n_scan in ((0.02, 8), (0.1, 24), (0.4, 80)):
                try:
                    es[i] = solve_state(r, parity, es[i - 1] - width,
                                        min(es[i - 1] + width, -0.4999), n_scan)
                    break
                except RuntimeError:
                    continue
            else:
                raise RuntimeError(f"continuation lost the root at R={r}")
        if i % 25 == 0:
            print(f"  parity={parity} R={r:7.3f}  E={es[i]:.9f}", flush=True)
    return es


def main():
    rs = r_grid()
    print(f"{len(rs)} grid points, R in [{rs[0]}, {rs[-1]}]", flush=True)

    import os
    cache = "/tmp/h2plus_sweep_cache.npz"
    if os.path.exists(cache):
        dat = np.load(cache)
        if np.array_equal(dat["rs"], rs):
            e_g, e_u = dat["e_g"], dat["e_u"]
            print("reusing cached sweep")
        else:
            os.remove(cache)
    if not os.path.exists(cache):
        from multiprocessing import Pool
        with Pool(2) as pool:
            e_g, e_u = pool.map(sweep, [(rs, 0, -2.05, -0.5001),
                                        (rs, 1, -0.95, -0.48)])
        np.savez(cache, rs=rs, e_g=e_g, e_u=e_u)

    # benchmarks
    bg = solve_state(2.0, 0, -1.35, -0.5001)
    bu = solve_state(2.0, 1, -0.95, -0.48)
    print(f"benchmark 1ssg R=2: {bg:.12f} (ref -1.102634214494946, err {bg + 1.102634214494946:.2e})")
    print(f"benchmark 2psu R=2: {bu:.12f} (ref -0.667534392202,    err {bu + 0.667534392202:.2e})")
    assert abs(bg + 1.102634214494946) < 1e-8, "1ssg benchmark failed"
    assert abs(bu + 0.667534392202) < 1e-6, "2psu benchmark failed"

    i40 = np.argmin(np.abs(rs - 40.0))
    tail = e_g[i40] + 1.0 / rs[i40] + 0.5 + 9.0 / (4.0 * rs[i40] ** 4)
    print(f"R=40 tail residual (g, Born-Oppenheimer): {tail:.2e}")
    assert abs(tail) < 1e-6, "long-range asymptote failed"

    v_g = ASYMPTOTE_EV + (e_g + 1.0 / rs + 0.5) * HARTREE_EV
    v_u = ASYMPTOTE_EV + (e_u + 1.0 / rs + 0.5) * HARTREE_EV
    v_u = np.maximum(v_u, v_g)  # exchange splitting underflows beyond ~R=35

    assert abs(v_g[-1] - ASYMPTOTE_EV) < 1e-4 and abs(v_u[-1] - ASYMPTOTE_EV) < 1e-4
    print(f"well depth 1ssg: {ASYMPTOTE_EV - v_g.min():.4f} eV at R={rs[np.argmin(v_g)]}")

    # crossing for a 1.2 eV photon, for information
    d = v_u - v_g - 1.2
    k = np.where(np.sign(d[:-1]) != np.sign(d[1:]))[0]
    if len(k):
        i = k[-1]
        rc = rs[i] + (rs[i + 1] - rs[i]) * d[i] / (d[i] - d[i + 1])
        print(f"V_u - V_g = 1.2 eV at R = {rc:.3f} a.u.")

    for name, v in (("h2plus_1ssg", v_g), ("h2plus_2psu", v_u)):
        with open(f"data/{name}.dat", "w") as f:
            f.write(f"# H2+ Born-Oppenheimer curve ({name[7:]}), exact two-center solution\n")
            f.write("# generated by tools/make_h2plus_tables.py\n")
            f.write("# column 1: R (a.u.)   column 2: V (eV, H2 ground state zero; asymptote 18.1 eV)\n")
            for r, vv in zip(rs, v):
                f.write(f"{r:.6f} {vv:.9f}\n")

    with open("src/potential_tables.cpp", "w") as f:
        f.write("// Embedded H2+ Born-Oppenheimer tables (1s sigma_g, 2p sigma_u).\n")
        f.write("// Generated by tools/make_h2plus_tables.py -- do not edit by hand.\n")
        f.write("// Exact two-center eigenvalues; energies in eV referenced to the\n")
        f.write("// neutral H2 ground state (shared asymptote at 18.1 eV).\n\n")
        f.write("#include \"atl/potential_tables.hpp\"\n\n")
        f.write("namespace atl::potentials::tables {\n\n")

        def arr(name, vals, fmt):
            f.write(f"const double {name}[] = {{\n")
            for i in range(0, len(vals), 6):
                f.write("    " + ", ".join(fmt % v for v in vals[i:i + 6]) + ",\n")
            f.write("};\n\n")

        f.write(f"// {len(rs)} points, R in [{rs[0]:g}, {rs[-1]:g}] a.u.\n")
        f.write(f"const std::size_t kNumPoints = {len(rs)};\n\n")
        arr("kRGrid", rs, "%.6f")
        arr("kGroundSigmaG", v_g, "%.9f")
        arr("kExcitedSigmaU", v_u, "%.9f")
        f.write("}  // namespace atl::potentials::tables\n")
    print("wrote data/h2plus_1ssg.dat data/h2plus_2psu.dat src/potential_tables.cpp")


if __name__ == "__main__":
    sys.exit(main())
