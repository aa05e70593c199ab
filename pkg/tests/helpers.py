"""Shared test utilities: fixture paths, a seeded random formula generator,
random frameworks for solver fuzzing, and a one-call pipeline runner."""

from pathlib import Path
from types import SimpleNamespace

from normargue import (ArgumentationFramework, Atom, Box, Defeat, DefeatKind,
                       Diamond, Implies, Know, Not, Oblig, Or, Perm, Power,
                       Right, RuleAtom, Stit, And, compute_defeats,
                       construct_arguments, instantiate_schemes, load_theory,
                       stable_extensions)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
DOCTOR = FIXTURES / "doctor.naf"
ABORTION = FIXTURES / "abortion.naf"
KNIFE = FIXTURES / "knife.naf"

ATOMS = ("p", "q", "r", "s")
AGENTS = ("a", "b")

_NODE_KINDS = ("atom", "not", "and", "or", "implies", "box", "diamond",
               "know", "oblig", "perm", "stit", "right", "power")


def random_formula(rng, depth=3):
    if depth <= 0:
        roll = rng.random()
        if roll < 0.8:
            return Atom(rng.choice(ATOMS))
        if roll < 0.9:
            return Atom("f", (rng.choice(ATOMS), rng.choice(ATOMS)))
        return RuleAtom(rng.choice(("r1", "fcp#1")))
    kind = rng.choice(_NODE_KINDS)
    a = rng.choice(AGENTS)
    b = "b" if a == "a" else "a"
    sub = lambda: random_formula(rng, depth - 1)
    if kind == "atom":
        return random_formula(rng, 0)
    if kind == "not":
        return Not(sub())
    if kind == "and":
        return And(sub(), sub())
    if kind == "or":
        return Or(sub(), sub())
    if kind == "implies":
        return Implies(sub(), sub())
    if kind == "box":
        return Box(sub())
    if kind == "diamond":
        return Diamond(sub())
    if kind == "know":
        return Know(a, sub())
    if kind == "oblig":
        roll = rng.random()
        if roll < 1 / 3:
            return Oblig(None, None, sub())
        if roll < 2 / 3:
            return Oblig(a, None, sub())
        return Oblig(a, b, sub())
    if kind == "perm":
        return Perm(a if rng.random() < 0.5 else None, sub())
    if kind == "stit":
        return Stit(a, sub())
    if kind == "right":
        return Right(a, sub())
    return Power(a, b, sub())


def random_af(rng, max_n=12):
    n = rng.randint(0, max_n)
    density = rng.uniform(0.05, 0.35)
    defeats = set()
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                defeats.add(Defeat(i, j, DefeatKind.REBUT, j))
    return ArgumentationFramework(n, frozenset(defeats))


def run_pipeline(path, *, weak_mode=False, max_depth=3, config=None):
    theory = instantiate_schemes(
        load_theory(path, weak_mode=weak_mode, max_depth=max_depth))
    args, truncated = construct_arguments(theory)
    defeats = compute_defeats(args, theory, config)
    af = ArgumentationFramework(len(args), frozenset(defeats))
    return SimpleNamespace(theory=theory, args=args, defeats=defeats, af=af,
                           extensions=stable_extensions(af),
                           truncated=truncated)


def ids_concluding(args, text):
    return {a.id for a in args if str(a.conclusion) == text}
