"""Search for semisimple groups with a faithful irrep V whose V (x) V^dual has a
summand of prescribed dimension.

A candidate is an exterior product V_1 x ... x V_n of nontrivial irreps on
distinct simple factors with prod dim V_i = dim V. Since W restricted to the
cover is W_1 x ... x W_n with each W_i a summand of V_i (x) V_i^dual, a
candidate survives iff some choice of summands has dimensions multiplying to
dim W.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from lierep.enumeration import irreps_of_dim
from lierep.reps import Irrep, dual
from lierep.rootsys import build, format_weight
from lierep.tensor import TensorDecomposition, decompose


def ordered_factorizations(d: int, min_factor: int = 2) -> list[tuple[int, ...]]:
    """Multisets of integers >= min_factor with product d, as sorted tuples.

    Ordered by number of factors, then lexicographically.
    """
    if d < 2 or min_factor < 2:
        raise ValueError(f"need d >= 2 and min_factor >= 2, got d={d}, min_factor={min_factor}")

    def rec(rest, lo):
        if rest == 1:
            yield ()
            return
        f = lo
        while f * f <= rest:
            if rest % f == 0:
                for tail in rec(rest // f, f):
                    yield (f,) + tail
            f += 1
        if rest >= lo:
            yield (rest,)

    return sorted(rec(d, min_factor), key=lambda t: (len(t), t))


@dataclass(frozen=True)
class SemisimpleCandidate:
    factors: tuple[Irrep, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a candidate needs at least one simple factor")
        for f in self.factors:
            if f.dimension <= 1:
                raise ValueError(f"factor {f.label()} acts trivially")

    @property
    def dimension(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.dimension
        return out

    @property
    def factorization(self) -> tuple[int, ...]:
        return tuple(f.dimension for f in self.factors)

    def label(self) -> str:
        return " x ".join(f.label() for f in self.factors)


def center_descriptor(irrep: Irrep) -> str:
    """``"E6/Z"`` when the highest weight lies in the root lattice, so the
    center acts trivially; otherwise the plain type name."""
    t = irrep.simple_type
    return f"{t}/Z" if irrep.rs.in_root_lattice(irrep.highest_weight) else str(t)


@dataclass(frozen=True)
class SearchResult:
    candidate: SemisimpleCandidate
    witnesses: tuple[tuple[Irrep, ...], ...]
    decompositions: tuple[TensorDecomposition, ...] = field(compare=False, default=())

    def image_descriptors(self) -> list[str]:
        return [" x ".join(center_descriptor(w) for w in wit) for wit in self.witnesses]

    def to_dict(self) -> dict:
        return {
            "factorization": list(self.candidate.factorization),
            "factors": [_irrep_json(f) for f in self.candidate.factors],
            "witnesses": [[_irrep_json(w) for w in wit] for wit in self.witnesses],
            "images": self.image_descriptors(),
        }


@dataclass(frozen=True)
class CandidateTrace:
    candidate: SemisimpleCandidate
    decompositions: tuple[TensorDecomposition, ...]
    witnesses: tuple[tuple[Irrep, ...], ...]

    @property
    def accepted(self) -> bool:
        return bool(self.witnesses)


@dataclass(frozen=True)
class SearchTrace:
    dim_v: int
    dim_w: int
    factorizations: tuple[tuple[int, ...], ...]
    candidates: tuple[CandidateTrace, ...]

    @property
    def results(self) -> list[SearchResult]:
        return [
            SearchResult(c.candidate, c.witnesses, c.decompositions)
            for c in self.candidates
            if c.accepted
        ]

    @property
    def eliminated(self) -> int:
        return sum(1 for c in self.candidates if not c.accepted)

    def to_dict(self) -> dict:
        return {
            "dimv": self.dim_v,
            "dimw": self.dim_w,
            "factorizations": [list(f) for f in self.factorizations],
            "candidates_examined": len(self.candidates),
            "eliminated": self.eliminated,
            "results": [r.to_dict() for r in self.results],
        }


def _irrep_json(irrep: Irrep) -> dict:
    return {
        "type": str(irrep.simple_type),
        "weight": format_weight(irrep.highest_weight),
        "dim": irrep.dimension,
    }


def _witnesses(decomps, target) -> list[tuple[Irrep, ...]]:
    options = [[irrep for irrep, _ in d.summands] for d in decomps]
    out = []

    def rec(i, rest, chosen):
        if i == len(options):
            if rest == 1:
                out.append(tuple(chosen))
            return
        for irrep in options[i]:
            if rest % irrep.dimension == 0:
                rec(i + 1, rest // irrep.dimension, chosen + [irrep])

    rec(0, target, [])
    return out


def candidates_for(factorization) -> list[SemisimpleCandidate]:
    """All candidates for one factorization, up to duality and reordering."""
    groups = {}
    for d in factorization:
        groups[d] = groups.get(d, 0) + 1
    choices = []
    for d, count in sorted(groups.items()):
        irreps = [Irrep(build(e.simple_type), e.weight) for e in irreps_of_dim(d)]
        choices.append(list(combinations_with_replacement(irreps, count)))
    return [
        SemisimpleCandidate(tuple(f for block in pick for f in block))
        for pick in product(*choices)
    ]


def run_search(dim_v: int, dim_w: int, budget: int | None = None) -> SearchTrace:
    if dim_v < 2:
        raise ValueError(f"dim V must be >= 2, got {dim_v}")
    if dim_w < 1:
        raise ValueError(f"dim W must be >= 1, got {dim_w}")
    facts = ordered_factorizations(dim_v)
    cache: dict = {}
    traces = []
    for fact in facts:
        for cand in candidates_for(fact):
            decomps = []
            for f in cand.factors:
                key = (f.simple_type, f.highest_weight)
                if key not in cache:
                    cache[key] = decompose(f, dual(f), budget)
                decomps.append(cache[key])
            wits = _witnesses(decomps, dim_w)
            traces.append(CandidateTrace(cand, tuple(decomps), tuple(wits)))
    return SearchTrace(dim_v, dim_w, tuple(facts), tuple(traces))


def search(dim_v: int, dim_w: int, budget: int | None = None) -> list[SearchResult]:
    return run_search(dim_v, dim_w, budget).results


def _decomp_line(d: TensorDecomposition) -> str:
    return f"{d.render('⊗')}  (total {d.total_dimension()})"


def report(obj, verbose: bool = False) -> str:
    """Readable trace for a :class:`SearchResult` or a whole :class:`SearchTrace`."""
    if isinstance(obj, SearchResult):
        lines = [
            f"factorization: {' * '.join(map(str, obj.candidate.factorization))}",
            f"candidate: {obj.candidate.label()}",
        ]
        for f, d in zip(obj.candidate.factors, obj.decompositions):
            lines.append(f"  {f.label()}: {_decomp_line(d)}")
        for wit, image in zip(obj.witnesses, obj.image_descriptors()):
            dims = " * ".join(str(w.dimension) for w in wit)
            labels = " x ".join(w.label() for w in wit)
            lines.append(f"  witness: {labels} (dim {dims}), image {image}")
        return "\n".join(lines)

    trace: SearchTrace = obj
    lines = [
        f"search dim V = {trace.dim_v}, summand dim W = {trace.dim_w}",
        "factorizations: " + ", ".join("(" + ",".join(map(str, f)) + ")" for f in trace.factorizations),
        f"candidates examined: {len(trace.candidates)}, eliminated: {trace.eliminated}, "
        f"accepted: {len(trace.candidates) - trace.eliminated}",
    ]
    if verbose:
        for c in trace.candidates:
            status = "accepted" if c.accepted else "eliminated"
            lines.append(f"- {c.candidate.label()}: {status}")
            for f, d in zip(c.candidate.factors, c.decompositions):
                lines.append(f"    {f.label()}: {_decomp_line(d)}")
    results = trace.results
    if not results:
        lines.append("no candidates")
    for r in results:
        lines.append("")
        lines.append(report(r))
    return "\n".join(lines)
