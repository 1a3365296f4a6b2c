"""Follow one subexcedent function through every map of the chain.

    python3 demos/golden_chain.py
"""

from permstat.bijections import big_psi, phi1, phi2, psi, psi_fv_inv
from permstat.core import (
    STANDARD,
    TYPE0,
    perm_gc,
    perm_gc0,
    perm_recoil_composition,
    perm_tot,
    sf_alpha,
    sf_dc,
    sf_lc,
    wdp_dc,
    wdp_gc,
    wdp_tw,
)
from permstat.encoding import parse_sf


def show(label, obj):
    if isinstance(obj, tuple):
        obj = "  ".join(map(str, obj))
    print(f"{label:<28}{obj}")


u = parse_sf("3 1 5 5 0 3 2 0 0")
show("subexcedent function u", u)
show("  (alpha, DC, LC)", (sf_alpha(u), sf_dc(u), sf_lc(u)))

d = phi1(u)
show("phi1(u)", d)

x0 = phi2(d)
show("phi2(phi1(u))", x0)
show("  (tw, GC0, DC0)", (wdp_tw(x0), wdp_gc(x0, TYPE0), wdp_dc(x0, TYPE0)))

x = psi(x0)
show("psi(...)", x)
show("  (tw, GC, DC)", (wdp_tw(x), wdp_gc(x, STANDARD), wdp_dc(x, STANDARD)))

sigma = psi_fv_inv(x)
show("Phi(u) = sigma", sigma)
show("  (tot, GC, Rec)", (perm_tot(sigma), perm_gc(sigma), perm_recoil_composition(sigma)))

tau = big_psi(sigma)
show("Psi(sigma)", tau)
show("  (tot, GC0, Rec)", (perm_tot(tau), perm_gc0(tau), perm_recoil_composition(tau)))
