"""Independent derivation of frozen values used by the C++ tests.

Cochains here are single-component: a canonical tuple plus a sympy expression
in x1..xq. Evaluation on a permuted tuple, tau and tau2 are implemented
directly from their definitions, with no shared code with the C++ library.
"""
import sympy as sp

X = sp.symbols("x1:13")
t = sp.Symbol("t")
ORDER = {"L": 0, "Y": 1, "M": 2}


def evaluate(tuple_, value, args, slots):
    """value is stored on canonical `tuple_`; evaluate on `args` with `slots`."""
    idx = sorted(range(len(args)), key=lambda i: (ORDER[args[i]], i))
    if [args[i] for i in idx] != list(tuple_):
        return sp.Integer(0)
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    sub = {X[k]: slots[idx[k]] for k in range(len(idx))}
    return (-1) ** inv * value.xreplace(sub)


def contract(tuple_, value, differentiate):
    q = len(tuple_)
    rest = list(tuple_)
    rest.remove("L")
    v = evaluate(tuple_, value, rest + ["L"], list(X[: q - 1]) + [t])
    v = sp.diff(v, t) if differentiate else v
    return tuple(rest), sp.expand((-1) ** (q - 1) * v.subs(t, 0))


def partial(tuple_, value, a=0):
    return tuple_, sp.expand((a + sum(X[: len(tuple_)])) * value)


def vdm(*vs):
    out = sp.Integer(1)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            out *= vs[i] - vs[j]
    return out


x1, x2, x3, x4, x5, x6 = X[:6]
basic = {
    "Phi": (("L", "L", "L"), vdm(x1, x2, x3)),
    "Lambda": (("L", "L", "Y", "Y", "M"), (x1 - x2) * (x3 - x4) * x5),
    "Psi": (("L", "Y", "Y", "M", "M"), (x2 - x3) * (x4 - x5)),
    "Omega": (("L", "L", "L", "Y", "Y", "M"), vdm(x1, x2, x3) * (x4 - x5)),
    "Theta": (("L", "L", "Y", "Y", "M", "M"), (x1 - x2) * (x3 - x4) * (x5 - x6)),
}
printed_bar = {
    "Phi": -x1**3 + x2**3,
    "Lambda": (x2 + x3 + x4) * (x2 - x3) * x4,
    "Psi": (x1 - x2) * (x3 - x4),
    "Omega": (x1 - x2) * (x3 - x4) * (x1 * x2 - (x1 + x2) * (x1 + x2 + x3 + x4 + x5)),
    "Theta": (x2 - x3) * (x4 - x5) * (x2 + x3 + x4 + x5),
}

if __name__ == "__main__":
    for name, (tup, val) in basic.items():
        bar_tuple, bar = contract(*partial(tup, val), differentiate=True)
        same = sp.expand(bar - printed_bar[name]) == 0
        print(f"tau(partial {name}) on {bar_tuple}: {bar}   matches printed: {same}")
    print("tau(Phi):", contract(*basic["Phi"], differentiate=True))
    print("tau2(Phi):", contract(*basic["Phi"], differentiate=False))
    print("diff_at_zero example:", sp.expand(sp.diff((x1 + x2 + t) * (x1 - x2) * (x1 - t) * (x2 - t), t).subs(t, 0)))
