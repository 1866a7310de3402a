# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Line-oriented instance, solution and dual segment files.

Instance files::

    hitset 1
    problem l2
    points 2
    0.5 0.25 3
    2.0 0.1 1
    disks 1
    1.0 1.5

Separable instances add ``radius <r>`` after the problem line and list disks
as ``<cx> <cy>``; half-plane instances carry ``halfplanes <m>`` followed by
``<a> <b> <lower|upper>`` lines. ``#`` starts a comment. Ids are the
zero-based order of appearance.
"""

import math

from . import exceptions
from .model import PROBLEMS, HalfPlaneInstance, Instance, SeparableInstance
from .solution import HitSolution, Status

FORMAT_VERSION = "1"


def format_weight(w):
    """Integral weights as integers, anything else via ``repr``."""
    if math.isfinite(w) and w == int(w):
        return "%d" % w
    return repr(float(w))


def _num(v):
    return repr(float(v))


def format_instance(instance):
    lines = ["hitset %s" % FORMAT_VERSION, "problem %s" % instance.problem]
    if isinstance(instance, SeparableInstance):
        lines.append("radius %s" % _num(instance.radius))
    points = sorted(instance.points, key=lambda p: p.id)
    lines.append("points %d" % len(points))
    lines += ["%s %s %s" % (_num(p.x), _num(p.y), format_weight(p.w)) for p in points]
    constraints = sorted(instance.constraints, key=lambda s: s.id)
    if isinstance(instance, HalfPlaneInstance):
        lines.append("halfplanes %d" % len(constraints))
        lines += [
            "%s %s %s" % (_num(h.a), _num(h.b), h.side.value) for h in constraints
        ]
    elif isinstance(instance, SeparableInstance):
        lines.append("disks %d" % len(constraints))
        lines += ["%s %s" % (_num(s.center_x), _num(s.center_y)) for s in constraints]
    else:
        lines.append("disks %d" % len(constraints))
        lines += ["%s %s" % (_num(s.center_x), _num(s.radius)) for s in constraints]
    return "\n".join(lines) + "\n"


class _Lines:
    """Non-blank, comment-stripped lines with their 1-based line numbers."""

    def __init__(self, text):
        self._lines = []
        for lineno, line in enumerate(text.splitlines(), 1):
            tokens = line.split("#", 1)[0].split()
            if tokens:
                self._lines.append((lineno, tokens))
        self._i = 0
        self.lineno = 0

    def next(self, what):
        if self._i >= len(self._lines):
            raise exceptions.HitsetFormatError(
                "line %d: unexpected end of file, expected %s" % (self.lineno + 1, what)
            )
        self.lineno, tokens = self._lines[self._i]
        self._i += 1
        return tokens

    def error(self, message):
        return exceptions.HitsetFormatError("line %d: %s" % (self.lineno, message))

    def keyword(self, name, arity=1):
        tokens = self.next("'%s'" % name)
        if tokens[0] != name or len(tokens) != arity + 1:
            raise self.error("expected '%s' with %d value(s)" % (name, arity))
        return tokens[1:]

    def count(self, name):
        (value,) = self.keyword(name)
        try:
            k = int(value)
        except ValueError:
            raise self.error("bad %s count %r" % (name, value)) from None
        if k < 0:
            raise self.error("negative %s count" % name)
        return k

    def rows(self, k, parse, what):
        out = []
        for _ in range(k):
            tokens = self.next(what)
            try:
                out.append(parse(tokens))
            except (ValueError, TypeError):
                raise self.error("malformed %s %r" % (what, " ".join(tokens))) from None
        return out

    def finish(self):
        if self._i < len(self._lines):
            self.lineno = self._lines[self._i][0]
            raise self.error("trailing content")


def _floats(k):
    def parse(tokens):
        if len(tokens) != k:
            raise ValueError
        return tuple(float(t) for t in tokens)

    return parse


def _halfplane_row(tokens):
    a, b, side = tokens
    if side not in ("lower", "upper"):
        raise ValueError
    return float(a), float(b), side


def parse_instance(text):
    lines = _Lines(text)
    (version,) = lines.keyword("hitset")
    if version != FORMAT_VERSION:
        raise lines.error("unsupported format version %r" % version)
    (problem,) = lines.keyword("problem")
    if problem not in PROBLEMS:
        raise lines.error("unknown problem %r" % problem)
    radius = None
    if problem == "separable-unit":
        (value,) = lines.keyword("radius")
        try:
            radius = float(value)
        except ValueError:
            raise lines.error("bad radius %r" % value) from None
    points = lines.rows(lines.count("points"), _floats(3), "point")
    if problem == "halfplane":
        halfplanes = lines.rows(lines.count("halfplanes"), _halfplane_row, "half-plane")
        lines.finish()
        return HalfPlaneInstance.from_tuples(points, halfplanes)
    disks = lines.rows(lines.count("disks"), _floats(2), "disk")
    lines.finish()
    if radius is not None:
        return SeparableInstance.from_tuples(radius, points, disks)
    return Instance.from_tuples(problem, points, disks)


def format_solution(solution):
    if not solution.ok:
        return "status %s\n" % Status.INFEASIBLE.value
    ids = " ".join("%d" % i for i in solution.sorted_ids)
    return "status %s\nweight %s\npoints %d\n%s\n" % (
        Status.OPTIMAL.value,
        format_weight(solution.total_weight),
        len(solution.chosen_points),
        ids,
    )


def parse_solution(text):
    lines = _Lines(text)
    (status,) = lines.keyword("status")
    if status == Status.INFEASIBLE.value:
        lines.finish()
        return HitSolution.infeasible()
    if status != Status.OPTIMAL.value:
        raise lines.error("unknown status %r" % status)
    (value,) = lines.keyword("weight")
    try:
        weight = float(value)
    except ValueError:
        raise lines.error("bad weight %r" % value) from None
    k = lines.count("points")
    ids = []
    if k:
        tokens = lines.next("point ids")
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise lines.error("bad point ids") from None
        if len(ids) != k or len(set(ids)) != k:
            raise lines.error("expected %d distinct point ids" % k)
    lines.finish()
    return HitSolution.optimal(ids, weight)


def _read(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def read_instance(path):
    return parse_instance(_read(path))


def write_instance(instance, path):
    _write(path, format_instance(instance))


def read_solution(path):
    return parse_solution(_read(path))


def write_solution(solution, path):
    _write(path, format_solution(solution))


def write_duals(duals, path):
    """Dual segments as ``lo hi weight origin`` lines after a count line."""
    lines = ["# lo hi weight origin", "duals %d" % len(duals.dual_segments)]
    _write(path, "\n".join([*lines, *duals.lines()]) + "\n")
