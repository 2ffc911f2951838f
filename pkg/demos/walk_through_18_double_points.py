"""Eighteen double points: certify alpha and tau from one specialization.

Put 17 of the 18 points on a quartic (d=4, r=17), peel the quartic off
repeatedly, and read the vanishing criteria off each step.
"""

from fatpoints import (
    MultiplicitySequence,
    SpecializationConfig,
    alpha_lower_bound,
    certify_alpha,
    conjectural_resolution,
    expected_hilbert,
    format_trace,
    tau_upper_bound,
)

mseq = MultiplicitySequence.uniform(18, 2)
cfg = SpecializationConfig(n=18, d=4, r=17)

print("expected dimensions:", {t: expected_hilbert(18, 2, t) for t in range(8, 12)})

# t = 8 goes through; t = 9 gets stuck on L - E_1 - E_2, which has sections.
for t in (8, 9):
    cert = certify_alpha(t, mseq, cfg)
    print(f"\nt={t}: {'certified' if cert else 'not certified'}")
    print(format_trace(cert.trace))

alpha = alpha_lower_bound(mseq, cfg)
tau = tau_upper_bound(mseq, cfg)
print(f"\n{alpha}  {tau}")
print("so the Hilbert function is the expected one and the resolution should be")
print(" ", conjectural_resolution(18, 2))
