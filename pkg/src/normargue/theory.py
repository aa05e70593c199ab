"""Knowledge base and theory-file DSL.

A theory holds premises (axiom or ordinary), named strict/defeasible rules,
declared contrary pairs, and scheme toggles. The loader validates the file,
normalizes every formula, and translates declared normative positions into
premises. instantiate_schemes grounds the deontic rule schemes against the
subformulas already in play.

DSL, one directive per line, `#` (at start of line or after whitespace)
starts a comment:

    AGENTS: doc, par
    PREMISE axiom a1: R_par([doc](K_par(ill)))
    PREMISE prem b1: ~sue
    RULE strict rb2: ill |- O_doctor(treat)
    RULE defeasible rc2: right_to_life(foetus) |~ ~P_par([par](abortion))
    CONTRARY: ~right_to_life(foetus) ~ @rc2
    SCHEME fcp on
    POSITION claim_right(patient, doctor): [doctor](K_patient(result)) [prem]

Rule separators `|-` (strict) and `|~` (defeasible) must be surrounded by
whitespace so they cannot collide with `|` and `~` inside formulas.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

from .formula import (And, Box, Formula, Implies, Know, Not, Oblig, Perm,
                      Power, Right, Stit, agents_in, normalize, parse,
                      rule_atoms_in, subformulas)
from .hohfeld import NormativePosition, PositionKind, position_warnings, to_formula


class ValidationError(Exception):
    """Base of the theory validation errors."""


class UnknownAgent(ValidationError):
    pass


class DuplicateId(ValidationError):
    pass


class DanglingRuleAtom(ValidationError):
    pass


class Strength(Enum):
    AXIOM = "axiom"
    ORDINARY = "ordinary"


class RuleKind(Enum):
    STRICT = "strict"
    DEFEASIBLE = "defeasible"


@dataclass(frozen=True)
class Premise:
    id: str
    formula: Formula
    strength: Strength


@dataclass(frozen=True)
class Rule:
    id: str
    antecedents: tuple[Formula, ...]
    consequent: Formula
    kind: RuleKind


@dataclass(frozen=True)
class Schemes:
    fcp: bool = True
    owp: bool = True
    weak_closure: bool = False
    k_truth: bool = False


@dataclass(frozen=True)
class Theory:
    agents: tuple[str, ...]
    premises: tuple[Premise, ...]
    rules: tuple[Rule, ...]
    contraries: tuple[tuple[Formula, Formula], ...]
    schemes: Schemes = Schemes()
    weak_mode: bool = False
    max_depth: int = 3
    warnings: tuple[str, ...] = ()
    # @scheme#k references seen at load time, resolved after instantiation
    pending_rule_refs: tuple[tuple[str, int], ...] = ()


_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_PREMISE_RE = re.compile(r"PREMISE\s+(axiom|prem)\s+([A-Za-z_]\w*)\s*:\s*(.+)$")
_RULE_RE = re.compile(r"RULE\s+(strict|defeasible)\s+([A-Za-z_]\w*)\s*:\s*(.+)$")
_SCHEME_RE = re.compile(r"SCHEME\s+(\w+)\s+(on|off)\s*$")
_POSITION_RE = re.compile(
    r"POSITION\s+(\w+)\s*\(\s*([A-Za-z_]\w*)\s*,\s*([A-Za-z_]\w*)\s*\)\s*:\s*(.+)$")
_COMMENT_RE = re.compile(r"(?:^|(?<=\s))#")


def _strip_comment(line: str) -> str:
    m = _COMMENT_RE.search(line)
    return line[:m.start()] if m else line


def _parse_at(text: str, lineno: int) -> Formula:
    try:
        return parse(text)
    except SyntaxError as e:
        raise SyntaxError("line %d: %s" % (lineno, e)) from None


def load_theory(source, *, weak_mode: bool = False, max_depth: int = 3) -> Theory:
    """Load and validate a theory from a file path or DSL text. Strings
    containing a newline are taken as text, everything else as a path."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif "\n" not in source and os.path.exists(source):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source

    agents: list[str] = []
    premises: list[Premise] = []
    rules: list[Rule] = []
    contraries: list[tuple[Formula, Formula]] = []
    toggles = {"fcp": True, "owp": True, "weak_closure": False, "k_truth": False}
    warnings: list[str] = []
    id_lines: dict[str, int] = {}
    formula_lines: list[tuple[Formula, int]] = []
    n_positions = 0

    def declare_id(ident: str, lineno: int):
        if ident in id_lines:
            raise DuplicateId("line %d: id %r already declared on line %d"
                              % (lineno, ident, id_lines[ident]))
        id_lines[ident] = lineno

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head = line.split(None, 1)[0].rstrip(":")

        if head == "AGENTS":
            rest = line.split(":", 1)
            if len(rest) != 2:
                raise SyntaxError("line %d: AGENTS needs a colon" % lineno)
            for name in rest[1].split(","):
                name = name.strip()
                if not _IDENT_RE.match(name):
                    raise SyntaxError("line %d: bad agent name %r"
                                      % (lineno, name))
                if name in agents:
                    raise DuplicateId("line %d: duplicate agent %r"
                                      % (lineno, name))
                agents.append(name)

        elif head == "PREMISE":
            m = _PREMISE_RE.match(line)
            if not m:
                raise SyntaxError(
                    "line %d: expected PREMISE axiom|prem <id>: <formula>"
                    % lineno)
            strength = Strength.AXIOM if m.group(1) == "axiom" else Strength.ORDINARY
            declare_id(m.group(2), lineno)
            f = _parse_at(m.group(3), lineno)
            formula_lines.append((f, lineno))
            premises.append(Premise(m.group(2), f, strength))

        elif head == "RULE":
            m = _RULE_RE.match(line)
            if not m:
                raise SyntaxError(
                    "line %d: expected RULE strict|defeasible <id>: "
                    "<f>; ... |- <g>" % lineno)
            kind = RuleKind.STRICT if m.group(1) == "strict" else RuleKind.DEFEASIBLE
            declare_id(m.group(2), lineno)
            sep = "|-" if kind is RuleKind.STRICT else "|~"
            parts = re.split(r"\s" + re.escape(sep) + r"\s", m.group(3))
            if len(parts) != 2:
                raise SyntaxError(
                    "line %d: %s rule needs exactly one ' %s ' separator"
                    % (lineno, m.group(1), sep))
            ants = [a for a in parts[0].split(";")]
            if not ants or not any(a.strip() for a in ants):
                raise SyntaxError("line %d: rule needs at least one antecedent"
                                  % lineno)
            antecedents = tuple(_parse_at(a, lineno) for a in ants)
            consequent = _parse_at(parts[1], lineno)
            for f in antecedents + (consequent,):
                formula_lines.append((f, lineno))
            rules.append(Rule(m.group(2), antecedents, consequent, kind))

        elif head == "CONTRARY":
            rest = line.split(":", 1)
            if len(rest) != 2:
                raise SyntaxError("line %d: CONTRARY needs a colon" % lineno)
            body = rest[1]
            pair = None
            for i, ch in enumerate(body):
                if ch != "~":
                    continue
                left, right = body[:i], body[i + 1:]
                if not left.strip() or not right.strip():
                    continue
                try:
                    pair = (parse(left), parse(right))
                    break
                except SyntaxError:
                    continue
            if pair is None:
                raise SyntaxError(
                    "line %d: CONTRARY needs two formulas separated by ~"
                    % lineno)
            for f in pair:
                formula_lines.append((f, lineno))
            contraries.append(pair)

        elif head == "SCHEME":
            m = _SCHEME_RE.match(line)
            if not m or m.group(1) not in toggles:
                raise SyntaxError(
                    "line %d: expected SCHEME fcp|owp|weak_closure|k_truth "
                    "on|off" % lineno)
            toggles[m.group(1)] = m.group(2) == "on"

        elif head == "POSITION":
            m = _POSITION_RE.match(line)
            if not m:
                raise SyntaxError(
                    "line %d: expected POSITION <kind>(<holder>, "
                    "<counterparty>): <formula> [axiom|prem]" % lineno)
            try:
                kind = PositionKind(m.group(1))
            except ValueError:
                raise SyntaxError("line %d: unknown position kind %r"
                                  % (lineno, m.group(1))) from None
            body = m.group(4).rstrip()
            strength = Strength.AXIOM
            for tag, s in (("[axiom]", Strength.AXIOM),
                           ("[prem]", Strength.ORDINARY)):
                if body.endswith(tag):
                    body = body[:-len(tag)].rstrip()
                    strength = s
            content = _parse_at(body, lineno)
            pos = NormativePosition(kind, m.group(2), m.group(3), content)
            warnings.extend("line %d: %s" % (lineno, w)
                            for w in position_warnings(pos))
            n_positions += 1
            pid = "pos#%d" % n_positions
            declare_id(pid, lineno)
            f = to_formula(pos)
            formula_lines.append((f, lineno))
            premises.append(Premise(pid, f, strength))

        else:
            raise SyntaxError("line %d: unknown directive %r" % (lineno, head))

    declared = set(agents)
    for f, lineno in formula_lines:
        undeclared = agents_in(f) - declared
        if undeclared:
            raise UnknownAgent("line %d: undeclared agent %r"
                               % (lineno, sorted(undeclared)[0]))

    defeasible_ids = {r.id for r in rules if r.kind is RuleKind.DEFEASIBLE}
    pending: list[tuple[str, int]] = []
    for f, lineno in formula_lines:
        for name in sorted(rule_atoms_in(f)):
            if "#" in name:
                pending.append((name, lineno))
            elif name not in defeasible_ids:
                raise DanglingRuleAtom(
                    "line %d: @%s does not name a defeasible rule"
                    % (lineno, name))

    norm = lambda f: normalize(f, weak_mode)
    return Theory(
        agents=tuple(agents),
        premises=tuple(Premise(p.id, norm(p.formula), p.strength)
                       for p in premises),
        rules=tuple(Rule(r.id, tuple(norm(a) for a in r.antecedents),
                         norm(r.consequent), r.kind) for r in rules),
        contraries=tuple((norm(a), norm(b)) for a, b in contraries),
        schemes=Schemes(**toggles),
        weak_mode=weak_mode,
        max_depth=max_depth,
        warnings=tuple(warnings),
        pending_rule_refs=tuple(pending),
    )


# ------------------------------------------------------- scheme grounding

def _conjuncts(f: Formula) -> list[Formula]:
    if isinstance(f, And):
        return _conjuncts(f.left) + _conjuncts(f.right)
    return [f]


def _ordered_subformulas(theory: Theory, rules) -> list[Formula]:
    """Every subformula of the premises and rules, first appearance first."""
    seen: set[Formula] = set()
    out: list[Formula] = []
    tops = [p.formula for p in theory.premises]
    for r in rules:
        tops.extend(r.antecedents)
        tops.append(r.consequent)
    for top in tops:
        for sub in subformulas(top):
            if sub not in seen:
                seen.add(sub)
                out.append(sub)
    return out


def _modal_ands(pool: list[Formula]) -> list[Formula]:
    """And nodes occurring below a modal operator, in pool order."""
    seen: set[Formula] = set()
    out: list[Formula] = []
    for f in pool:
        if isinstance(f, (Box, Know, Oblig, Perm, Stit, Right, Power)):
            for sub in subformulas(f):
                if sub is f:
                    continue
                if isinstance(sub, And) and sub not in seen:
                    seen.add(sub)
                    out.append(sub)
    return out


def instantiate_schemes(theory: Theory) -> Theory:
    """Ground the enabled schemes against the subformulas in play, rounds
    capped at max_depth, rule ids `<scheme>#<k>` in generation order.
    Adding nothing returns the theory unchanged."""
    rules = list(theory.rules)
    existing = {(r.kind, r.antecedents, r.consequent) for r in rules}
    counters = {"fcp": 0, "owp": 0, "weak_closure": 0, "k_truth": 0}
    s = theory.schemes

    def one_round() -> list[Rule]:
        new: list[Rule] = []

        def add(scheme: str, kind: RuleKind, antecedents, consequent):
            key = (kind, tuple(antecedents), consequent)
            if key in existing:
                return
            existing.add(key)
            counters[scheme] += 1
            new.append(Rule("%s#%d" % (scheme, counters[scheme]),
                            tuple(antecedents), consequent, kind))

        pool = _ordered_subformulas(theory, rules)
        perms = [f for f in pool if isinstance(f, Perm)]
        boxes = [f for f in pool if isinstance(f, Box)]
        obligs = [f for f in pool if isinstance(f, Oblig) and f.toward is None]
        if s.fcp:
            for p in perms:
                for b in boxes:
                    if isinstance(b.f, Implies) and b.f.right == p.f:
                        add("fcp", RuleKind.DEFEASIBLE, [p, b],
                            Perm(p.agent, b.f.left))
            # free choice over covered alternatives: a conjunction seen
            # under some modality that contains the permitted formula
            for p in perms:
                for n in _modal_ands(pool):
                    if n != p.f and p.f in _conjuncts(n):
                        add("fcp", RuleKind.DEFEASIBLE, [p], Perm(p.agent, n))
        if s.owp:
            for p in perms:
                for o in obligs:
                    if o.agent == p.agent and isinstance(o.f, Not):
                        add("owp", RuleKind.DEFEASIBLE, [p, o],
                            Box(Implies(p.f, o.f)))
            # prohibition form: a prohibited conjunct poisons the whole
            # possible conjunction, yielding the denial of its permission
            diamonds = [f for f in pool
                        if isinstance(f, Not) and isinstance(f.f, Box)
                        and isinstance(f.f.f, Not)]
            for o in obligs:
                if not isinstance(o.f, Not):
                    continue
                psi = o.f.f
                for d in diamonds:
                    n = d.f.f.f
                    if isinstance(n, And) and psi in _conjuncts(n):
                        add("owp", RuleKind.STRICT, [o, d],
                            Not(Perm(o.agent, n)))
        if s.weak_closure:
            for p in perms:
                for b in boxes:
                    if isinstance(b.f, Implies) and b.f.left == p.f:
                        add("weak_closure", RuleKind.DEFEASIBLE, [p, b],
                            Perm(p.agent, b.f.right))
        if s.k_truth:
            for k in pool:
                if isinstance(k, Know):
                    add("k_truth", RuleKind.STRICT, [k], k.f)
        return new

    reached_fixpoint = False
    for _ in range(theory.max_depth):
        new = one_round()
        if not new:
            reached_fixpoint = True
            break
        rules.extend(new)
    if not reached_fixpoint:
        probe = one_round()
        assert not probe, "scheme instantiation exceeded max_depth rounds"

    defeasible_ids = {r.id for r in rules if r.kind is RuleKind.DEFEASIBLE}
    for name, lineno in theory.pending_rule_refs:
        if name not in defeasible_ids:
            raise DanglingRuleAtom(
                "line %d: @%s does not name a defeasible rule"
                % (lineno, name))

    if len(rules) == len(theory.rules) and not theory.pending_rule_refs:
        return theory
    return replace(theory, rules=tuple(rules), pending_rule_refs=())
