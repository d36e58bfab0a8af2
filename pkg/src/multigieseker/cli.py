"""Command-line front end.

    multigieseker <command> PROBLEM.json [flags] [--output PATH]

Commands: check, census, walls, chambers, flips, compare, hilbert.  Reports
are JSON with sorted keys; rationals are written as ``"p/q"`` strings.  Exit
status is 0 on success, 1 for invalid input, 2 for unsupported
configurations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .census import Census, census, flip_report
from .curve import DualGraph, RankOneSheaf, SheafClass
from .errors import InvalidInput, UnsupportedDimension
from .polarization import Polarization, StabilityParameter, validate_polarization
from .quiver import theta_of_subsheaf
from .rational import format_fraction, parse_int_vector, parse_vector
from .stability import check_rank_one, multi_hilbert, slope
from .walls import Wall, enumerate_chambers, enumerate_walls, is_proper_decomposition

WALL_NOTE = (
    "walls are enumerated from every (multirank, chi) pair whose wall meets the simplex; "
    "this may be a superset of the walls of actual saturated subsheaves, which only refines chambers"
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class Problem:
    def __init__(self, graph: DualGraph, P: Polarization, rank: int, degree: int):
        self.graph, self.P, self.rank, self.degree = graph, P, rank, degree

    @classmethod
    def load(cls, path: str) -> "Problem":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise InvalidInput(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or "curve" not in data:
            raise InvalidInput("problem file needs a 'curve' entry")
        graph = DualGraph.from_json(data["curve"])
        pol = data.get("polarizations")
        if isinstance(pol, dict):
            pol = pol.get("polarizations")
        if not isinstance(pol, list):
            raise InvalidInput("problem file needs a 'polarizations' list")
        P = Polarization.from_json(pol)
        validate_polarization(graph, P)
        rank, degree = data.get("rank", 1), data.get("degree")
        if not isinstance(rank, int) or rank < 1:
            raise InvalidInput("'rank' must be a positive integer")
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise InvalidInput("'degree' must be an integer")
        return cls(graph, P, rank, degree)

    @property
    def sorted_ids(self) -> list[str]:
        return sorted(self.graph.component_ids)

    def reorder(self, values: Sequence[int]) -> list[int]:
        """Graph-order tuple -> list keyed by sorted component ids."""
        by_id = dict(zip(self.graph.component_ids, values))
        return [by_id[c] for c in self.sorted_ids]

    def from_sorted(self, values: Sequence[int]) -> tuple[int, ...]:
        if len(values) != len(self.sorted_ids):
            raise InvalidInput(
                f"expected {len(self.sorted_ids)} entries (components {self.sorted_ids})"
            )
        by_id = dict(zip(self.sorted_ids, values))
        return tuple(by_id[c] for c in self.graph.component_ids)

    def require_rank_one(self, command: str):
        if self.rank != 1:
            raise InvalidInput(f"'{command}' needs rank 1, problem has rank {self.rank}")


def _q(x) -> str:
    return format_fraction(Fraction(x))


def _sigma(text: str) -> StabilityParameter:
    return StabilityParameter(parse_vector(text))


def _node_indices(text: str | None, n_nodes: int) -> tuple[int, ...]:
    if not text:
        return ()
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        label = part[1:] if part.lower().startswith("n") else part
        try:
            idx = int(label) - 1
        except ValueError:
            raise InvalidInput(f"bad node label {part!r}; use n1, n2, ...") from None
        if not 0 <= idx < n_nodes:
            raise InvalidInput(f"node {part!r} does not exist")
        out.append(idx)
    return tuple(sorted(set(out)))


def _census_json(prob: Problem, c: Census) -> dict[str, Any]:
    def member(m):
        if c.include_non_locally_free:
            md, S = m
            return {"multidegree": prob.reorder(md), "not_locally_free": [f"n{i + 1}" for i in S]}
        return prob.reorder(m)

    def listing(members):
        return sorted((member(m) for m in members), key=lambda x: json.dumps(x, sort_keys=True))

    return {
        "sigma": [_q(s) for s in c.sigma.sigma],
        "semistable": listing(c.semistable),
        "stable": listing(c.stable),
        "strictly_semistable": listing(c.strictly_semistable),
    }


def _wall_json(prob: Problem, w: Wall) -> dict[str, Any]:
    return {
        "coefficients": list(w.coefficients),
        "classification": w.classification,
        "boundary_only": w.boundary_only,
        "provenance": [{"multirank": prob.reorder(m), "chi": chi} for m, chi in w.provenance],
    }


def _assumptions(prob: Problem, **extra) -> dict[str, Any]:
    out = {"wall_family": WALL_NOTE, "components_order": prob.sorted_ids}
    out.update(extra)
    return out


def cmd_check(prob: Problem, args) -> dict[str, Any]:
    prob.require_rank_one("check")
    md = prob.from_sorted(parse_int_vector(args.multidegree))
    S = _node_indices(args.not_locally_free, len(prob.graph.nodes))
    F = RankOneSheaf.from_sequence(prob.graph, md, S)
    verdict = check_rank_one(prob.graph, prob.P, _sigma(args.sigma), F)
    return {
        "status": verdict.status.value,
        "witnesses": [
            {"subcurve": sorted(D.component_ids), "margin": _q(m)} for D, m in verdict.witnesses
        ],
        "assumptions": _assumptions(prob, not_locally_free=[f"n{i + 1}" for i in S]),
    }


def cmd_census(prob: Problem, args) -> dict[str, Any]:
    prob.require_rank_one("census")
    c = census(prob.graph, prob.P, _sigma(args.sigma), prob.degree, args.include_non_locally_free)
    out = _census_json(prob, c)
    out["assumptions"] = _assumptions(
        prob,
        census_box=[list(b) for b in (dict(zip(prob.graph.component_ids, c.box))[k] for k in prob.sorted_ids)],
        include_non_locally_free=c.include_non_locally_free,
    )
    return out


def _walls(prob: Problem) -> list[Wall]:
    return enumerate_walls(prob.graph, prob.P, prob.rank, prob.degree)


def cmd_walls(prob: Problem, args) -> dict[str, Any]:
    walls = _walls(prob)
    return {
        "walls": [_wall_json(prob, w) for w in walls],
        "decomposition_proper": is_proper_decomposition(walls),
        "assumptions": _assumptions(prob),
    }


def cmd_chambers(prob: Problem, args) -> dict[str, Any]:
    walls = _walls(prob)
    chambers = enumerate_chambers(walls, prob.P.k, sampling=args.sampling)
    return {
        "walls": [_wall_json(prob, w) for w in walls],
        "chambers": [
            {
                "sign_vector": ["+" if s > 0 else "-" for s in ch.sign_vector],
                "representative": [_q(x) for x in ch.representative],
            }
            for ch in chambers
        ],
        "decomposition_proper": is_proper_decomposition(walls),
        "assumptions": _assumptions(prob, chambers_exhaustive=prob.P.k <= 3),
    }


def cmd_flips(prob: Problem, args) -> dict[str, Any]:
    prob.require_rank_one("flips")
    rep = flip_report(
        prob.graph, prob.P, prob.degree, _sigma(args.start), _sigma(args.end),
        args.include_non_locally_free,
    )
    return {
        "sigma_start": [_q(x) for x in rep.sigma_start],
        "sigma_end": [_q(x) for x in rep.sigma_end],
        "walls": [_wall_json(prob, w) for w in rep.walls],
        "events": [
            {
                "t": _q(e.t),
                "walls": list(e.wall_indices),
                "sigma": [_q(x) for x in e.sigma],
                "census_before": _census_json(prob, e.census_before),
                "census_on_wall": _census_json(prob, e.census_on_wall),
                "census_after": _census_json(prob, e.census_after),
                "inclusions_hold": e.inclusions_hold,
            }
            for e in rep.events
        ],
        "chamber_censuses": [_census_json(prob, c) for c in rep.chamber_censuses],
        "containing_walls": list(rep.containing_walls),
        "endpoint_walls": list(rep.endpoint_walls),
        "whole_simplex_walls": list(rep.whole_simplex_walls),
        "assumptions": _assumptions(prob, include_non_locally_free=args.include_non_locally_free),
    }


def _class(prob: Problem, chi, multirank_text) -> SheafClass:
    if chi is None and multirank_text is None:
        return SheafClass.uniform(prob.graph, prob.rank, prob.degree)
    if chi is None or multirank_text is None:
        raise InvalidInput("give both the Euler characteristic and the multirank, or neither")
    return SheafClass.from_sequence(
        prob.graph, prob.rank, chi, prob.from_sorted(parse_int_vector(multirank_text))
    )


def cmd_compare(prob: Problem, args) -> dict[str, Any]:
    sigma = _sigma(args.sigma)
    E = _class(prob, args.chi_e, args.multirank_e)
    F = _class(prob, args.chi_f, args.multirank_f)
    theta = theta_of_subsheaf(prob.graph, prob.P, sigma, E, F, args.m1, args.m2)
    mu_e = slope(prob.graph, prob.P, sigma, E)
    mu_f = slope(prob.graph, prob.P, sigma, F)
    sign = lambda x: (x > 0) - (x < 0)  # noqa: E731
    return {
        "theta": _q(theta),
        "mu_e": _q(mu_e),
        "mu_f": _q(mu_f),
        "signs_agree": sign(theta) == sign(mu_f - mu_e),
        "assumptions": _assumptions(prob, m1=args.m1, m2=args.m2),
    }


def cmd_hilbert(prob: Problem, args) -> dict[str, Any]:
    sigma = _sigma(args.sigma)
    cls_ = _class(prob, args.chi, args.multirank)
    poly = multi_hilbert(prob.graph, prob.P, sigma, cls_)
    out = {"constant": _q(poly.constant), "slope_coefficient": _q(poly.slope_coefficient)}
    if not cls_.is_zero():
        out["slope"] = _q(slope(prob.graph, prob.P, sigma, cls_))
    out["assumptions"] = _assumptions(prob)
    return out


COMMANDS = {
    "check": cmd_check,
    "census": cmd_census,
    "walls": cmd_walls,
    "chambers": cmd_chambers,
    "flips": cmd_flips,
    "compare": cmd_compare,
    "hilbert": cmd_hilbert,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multigieseker", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("problem", help="problem JSON file")
        p.add_argument("--output", help="write the report here instead of stdout")
        return p

    p = add("check", "stability verdict for one rank-one sheaf")
    p.add_argument("--sigma", required=True)
    p.add_argument("--multidegree", required=True, help="comma-separated, sorted component order")
    p.add_argument("--not-locally-free", default=None, help="node labels, e.g. n1,n2")

    p = add("census", "all semistable multidegrees at sigma")
    p.add_argument("--sigma", required=True)
    p.add_argument("--include-non-locally-free", action="store_true")

    add("walls", "walls meeting the simplex")

    p = add("chambers", "chambers of the wall arrangement")
    p.add_argument("--sampling", action="store_true", help="allow non-exhaustive search for k > 3")

    p = add("flips", "wall crossings along a segment")
    p.add_argument("--start", required=True)
    p.add_argument("--end", required=True)
    p.add_argument("--include-non-locally-free", action="store_true")

    p = add("compare", "theta value of a subsheaf against the slope comparison")
    p.add_argument("--sigma", required=True)
    p.add_argument("--chi-e", type=int)
    p.add_argument("--multirank-e")
    p.add_argument("--chi-f", type=int, required=True)
    p.add_argument("--multirank-f", required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)

    p = add("hilbert", "multi-Hilbert polynomial of a class")
    p.add_argument("--sigma", required=True)
    p.add_argument("--chi", type=int)
    p.add_argument("--multirank")
    return parser


def render(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        prob = Problem.load(args.problem)
        text = render(COMMANDS[args.command](prob, args))
    except UnsupportedDimension as exc:
        print(f"error: UnsupportedDimension: {exc}", file=sys.stderr)
        return 2
    except InvalidInput as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
