"""Double-slit screen densities, optionally plotted (needs matplotlib)."""
import argparse

from conceptq import slit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigma", type=float, default=5e-4)
    ap.add_argument("--half-width", type=float, default=None, help="screen half width in m")
    ap.add_argument("--points", type=int, default=2001)
    ap.add_argument("--csv", default=None)
    ap.add_argument("--plot", default=None, help="write a PNG here")
    args = ap.parse_args()

    hw = args.half_width
    cfg = slit.SlitConfig(sigma=args.sigma, points=args.points,
                          x_min=None if hw is None else -hw, x_max=hw)
    p = slit.screen_profile(cfg)
    spacing = slit.measured_fringe_spacing(p)
    print(f"grid [{p.x[0]:.4g}, {p.x[-1]:.4g}] m, {p.x.size} points")
    print(f"lambda L / s = {cfg.fringe_spacing * 1e3:.3f} mm, measured "
          + ("n/a (single maximum)" if spacing is None else f"{spacing * 1e3:.3f} mm"))
    print("integrals:", {k: round(v, 6) for k, v in p.integrals().items()})
    if args.csv:
        p.to_csv(args.csv)
    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(7, 4))
        ax.plot(p.x * 1e3, p.rho_quantum, label="quantum")
        ax.plot(p.x * 1e3, p.rho_classical, "--", label="classical")
        ax.plot(p.x * 1e3, p.interference, ":", label="interference")
        ax.set_xlabel("x (mm)")
        ax.set_ylabel("density (1/m)")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)


if __name__ == "__main__":
    main()
