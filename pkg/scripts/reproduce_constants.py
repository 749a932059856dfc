"""Recompute every threshold constant and compare with the published values."""
import math

from hypmut import dehn, hypcore, pretzel


def main():
    r2 = hypcore.TUBE_RADIUS_CHI2
    rows = [
        ("tube radius h(2) = 2 ln(1+sqrt 2)", r2, None),
        ("collar cutoff (ratio = 17)", hypcore.max_length_for_chi(2), 0.015),
        ("collar radius at length 0.015", hypcore.collar_radius(0.015), None),
        ("I(tanh h(2))", dehn.published_I_check()[0], dehn.PUBLISHED_I_BOUND),
        ("radius constant sqrt(I)", dehn.min_L_for_radius(r2), dehn.PUBLISHED_RADIUS_CONSTANT),
        ("length constant (total length 0.015)", dehn.min_L_for_total_length(0.015),
         dehn.PUBLISHED_LENGTH_CONSTANT),
        ("Q(2)", pretzel.q_threshold(2), None),
        ("Q(2) with computed length constant", pretzel.q_threshold_derived(2), None),
    ]
    print(f"{'quantity':42s} {'computed':>16s} {'published':>10s}")
    for name, val, pub in rows:
        print(f"{name:42s} {val:16.10f} {'' if pub is None else f'{pub:10.4f}'}")
    for chi in (1, 2, 3, 4, 6):
        h = hypcore.h_threshold(chi)
        try:
            rad = f"{dehn.min_L_for_radius(h):.6f}"
        except Exception as exc:  # below the validity gate
            rad = type(exc).__name__
        print(f"chi = {chi}: h = {h:.6f}, g = {hypcore.g_threshold(chi):.0f}, "
              f"max length = {hypcore.max_length_for_chi(chi):.8f}, radius constant = {rad}")


if __name__ == "__main__":
    main()
