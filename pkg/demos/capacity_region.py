"""Which link capacities sustain a target rate when both relays are interfered.

For Case C the feasible (c1, c2) set is an intersection of three
half-planes.  Its two corner points matter: at P1 relay 1 carries
(almost) the whole message and relay 2 only the interferer description;
P2 mirrors the roles; time sharing fills the segment between them.

Equivalent CLI:  tworelay region --rate 10 --px 1048576 --pj 1048576
                 tworelay region --rate 10 ... --format svg --out region.svg
"""

from tworelay import ScenarioCase, best_achievable, make_preset, required_region_case_c

P_X = 2.0**20          # 60 dB transmitter
P_J = P_X              # equally strong interferer
TARGET = 10.0          # bits per channel use, = 0.5*log2(p_x)

region = required_region_case_c(TARGET, P_X, P_J)
print(f"target rate {TARGET} bits at p_x = p_j = 2^20")
print("\nhalf-plane constraints (coef1*c1 + coef2*c2 >= rhs):")
for label, coef1, coef2, rhs in region.constraints:
    print(f"  {label:12s} {coef1:+.0f}*c1 {coef2:+.0f}*c2 >= {rhs:.4f}")
print("\ncorner points:")
print(f"  P1 = (c1, c2) = ({region.p1[0]:.4f}, {region.p1[1]:.4f})")
print(f"  P2 = (c1, c2) = ({region.p2[0]:.4f}, {region.p2[1]:.4f})")

# The corners are not just outer-bound artifacts: running the actual
# scheme with the corner capacities achieves (close to) the target.
for name, (c1, c2) in (("P1", region.p1), ("P2", region.p2)):
    cfg = make_preset(ScenarioCase.CASE_C, P_X, P_J, c1=c1, c2=c2)
    rep = best_achievable(cfg)
    print(f"  scheme at {name}: {rep.rate:.4f} bits via {rep.scheme.value}")

# Feasibility is closed under time sharing and under adding capacity.
mid = ((region.p1[0] + region.p2[0]) / 2, (region.p1[1] + region.p2[1]) / 2)
print(f"\nmidpoint of P1,P2 feasible: {region.contains(*mid)}")
print(f"corner plus one spare bit feasible: {region.contains(region.p1[0] + 1, region.p1[1])}")
print(f"below the sum constraint feasible: "
      f"{region.contains(region.p1[0] - 1, region.p1[1])}")
