"""Which (d, r) gives the best bounds for 29^33?

The closed forms only apply under their hypotheses; running the algorithm
over the whole grid finds configurations they miss.
"""

from fatpoints import alpha_c, best_bounds, tau_c

n, m = 33, 29
print(f"conjectural values: alpha_c={alpha_c(n, m)} tau_c={tau_c(n, m)}")

for methods in (["thm-a"], ["thm-b"], ["thm-c"], ["algorithm"]):
    best = best_bounds(n, m, methods=methods)
    a, t = best.alpha, best.tau
    tau_text = "none" if t is None else f"{t.value} at d={t.d}, r={t.r}"
    print(f"{methods[0]:>9}: alpha >= {a.value} at d={a.d}, r={a.r};  tau <= {tau_text}")

# alpha >= 168 = alpha_c pins alpha down, but tau is only squeezed to [168, 169].
