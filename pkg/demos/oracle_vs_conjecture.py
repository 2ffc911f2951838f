"""Compare random-point ranks over F_p with the conjectural alpha and tau.

For m <= 3 the conjecture is known, so every row should agree; the five
double points row shows a special system (the doubled conic) where it does not.
"""

from fatpoints import OracleConfig, alpha_c, oracle_alpha, oracle_hilbert, oracle_tau, tau_c

cfg = OracleConfig(seed=1)
print(" n  m  alpha  alpha_c  tau  tau_c")
for n in range(10, 15):
    for m in range(1, 4):
        print(f"{n:2d} {m:2d} {oracle_alpha(n, m, cfg):6d} {alpha_c(n, m):8d} {oracle_tau(n, m, cfg):4d} {tau_c(n, m):6d}")

# 5 double points impose only 14 conditions on the 15 quartics
print("\nh(4) for 2^5:", oracle_hilbert(5, [2] * 5, 4, cfg), "(expected 0)")
