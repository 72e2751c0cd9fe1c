from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from ..common.exceptions import MatcherStageError, ValidationError
from ..common.logging import get_logger
from ..words.core import SubsequenceWitness, Word
from .annotation import AnnotatedWord, annotate_word, require_balanced_binary
from .assembly import assemble_witness, zeros_witness
from .intervals import BlockSummary, IntervalFamilies, choose_rich_intervals, partition_blocks
from .matching import noncrossing_matching
from .params import MatcherParams, MatcherThresholds, asymptotic_regime
from .selection import select_pair_and_type
from .shift import ClosePairGraph, best_shift
from .shortcut import bad_pair_shortcut, best_split_witness

logger = get_logger(__name__)


@dataclass(frozen=True)
class MatcherReport:
    n: int
    params: MatcherParams
    thresholds: MatcherThresholds
    pair: tuple[int, int]
    witness: SubsequenceWitness
    guarantee_value: float
    asymptotic_flag: bool
    stage: str
    shortcut_used: bool = False
    shortcut_side: str | None = None
    t: int | None = None
    t_size: int = 0
    s_size: int = 0
    e_size: int = 0
    matching_size: int = 0
    q: int | None = None
    max_degree: int = 0
    degree_ok: bool = True
    assembled_length: int | None = None
    average_edges: float | None = None
    expected_edge_floor: float | None = None
    asymptotic_edge_floor: float | None = None
    blocks: tuple[BlockSummary, ...] = ()
    fallback_reason: str | None = None
    formula_forms: dict[str, float] = field(default_factory=dict)
    # Set only when the assembly stage ran.
    intervals: IntervalFamilies | None = None
    graph: ClosePairGraph | None = None

    @property
    def length(self) -> int:
        return len(self.witness)

    def to_document(self) -> dict[str, Any]:
        return {
            "pair": list(self.pair),
            "shortcut_used": self.shortcut_used,
            "t": self.t,
            "sizes": {
                "T": self.t_size,
                "S": self.s_size,
                "E": self.e_size,
                "lambda": self.matching_size,
            },
            "Q": self.q,
            "witness": {
                "length": self.length,
                "indices_a": list(self.witness.idx_a),
                "indices_b": list(self.witness.idx_b),
            },
            "guarantee": {
                "value": float(self.guarantee_value),
                "asymptotic_flag": self.asymptotic_flag,
            },
            "params": self.params.model_dump(),
        }

    def _threshold_values(self) -> dict[str, int | None]:
        values: dict[str, int | None] = {
            "deviation": self.thresholds.deviation,
            "block_ones": self.thresholds.block_ones,
            "rich_length": None,
            "close_radius": None,
        }
        if self.t is not None:
            values["rich_length"] = self.thresholds.rich_length(self.t)
            values["close_radius"] = self.thresholds.close_radius(self.t)
        return values

    def diagnostics(self) -> dict[str, Any]:
        return {
            "stage": self.stage,
            "fallback_reason": self.fallback_reason,
            "shortcut_side": self.shortcut_side,
            "assembled_length": self.assembled_length,
            "max_degree": self.max_degree,
            "degree_cap": self.thresholds.degree_cap(),
            "degree_ok": self.degree_ok,
            "average_edges": self.average_edges,
            "expected_edge_floor": self.expected_edge_floor,
            "asymptotic_edge_floor": self.asymptotic_edge_floor,
            "thresholds": self._threshold_values(),
            "blocks": [asdict(summary) for summary in self.blocks],
            "formula_forms": dict(self.formula_forms),
        }


def _validate_family(words: Sequence[Word], r: int) -> int:
    if len(words) != r + 2:
        raise ValidationError(f"expected r + 2 = {r + 2} words, got {len(words)}")
    lengths = {len(w) for w in words}
    if len(lengths) != 1:
        raise ValidationError(f"words must share one length, got {sorted(lengths)}")
    for w in words:
        require_balanced_binary(w)
    return lengths.pop()


def _formula_forms(
    n: int, params: MatcherParams, thresholds: MatcherThresholds
) -> dict[str, float]:
    r, scale = thresholds.r, thresholds.scale
    return {
        "half": n / 2,
        "alpha_form": n / 2 + params.alpha_eff * scale,
        "closing_form": n / 2 - params.beta_eff * scale + scale / (20000 * r**6),
    }


def run_matcher(words: Sequence[Word], params: MatcherParams) -> MatcherReport:
    """Common subsequence of two words of an (r+2)-family of balanced binary words.

    Never returns less than the n/2 zeros every pair shares.
    """
    r = params.r
    n = _validate_family(words, r)
    thresholds = MatcherThresholds.from_params(n, params)
    forms = _formula_forms(n, params, thresholds)
    asymptotic = params.uses_asymptotic_constants and asymptotic_regime(n, r)

    def fallback(
        pair: tuple[int, int], stage: str, reason: str | None, **extra: Any
    ) -> MatcherReport:
        if reason is not None:
            logger.info("Matcher fallback at %s: %s", stage, reason)
        return MatcherReport(
            n=n,
            params=params,
            thresholds=thresholds,
            pair=pair,
            witness=zeros_witness(words[pair[0]], words[pair[1]]),
            guarantee_value=n / 2,
            asymptotic_flag=False,
            stage=stage,
            fallback_reason=reason,
            formula_forms=forms,
            **extra,
        )

    if r == 0:
        return fallback((0, 1), "baseline", None)

    annotated: list[AnnotatedWord] = [annotate_word(w, thresholds) for w in words]
    if r == 1:
        split = best_split_witness(annotated)
        baseline = zeros_witness(words[0], words[1])
        if len(split.witness) <= len(baseline):
            return fallback((0, 1), "baseline", None)
        return MatcherReport(
            n=n,
            params=params,
            thresholds=thresholds,
            pair=split.pair,
            witness=split.witness,
            guarantee_value=n / 2 + 1,
            asymptotic_flag=False,
            stage="split",
            shortcut_used=True,
            shortcut_side=split.side,
            formula_forms=forms,
        )

    shortcut = bad_pair_shortcut(annotated)
    if shortcut is not None:
        logger.info(
            "Shortcut on words %s at zero %s (%s): length %s",
            shortcut.pair,
            shortcut.ordinal,
            shortcut.side,
            len(shortcut.witness),
        )
        return MatcherReport(
            n=n,
            params=params,
            thresholds=thresholds,
            pair=shortcut.pair,
            witness=shortcut.witness,
            guarantee_value=n / 2 + thresholds.deviation,
            asymptotic_flag=asymptotic,
            stage="shortcut",
            shortcut_used=True,
            shortcut_side=shortcut.side,
            formula_forms=forms,
        )
    try:
        selection = select_pair_and_type(annotated, r)
    except MatcherStageError as exc:
        return fallback((0, 1), "selection", str(exc))
    pair = (selection.i1, selection.i2)
    first, second = annotated[selection.i1], annotated[selection.i2]
    logger.info(
        "Selected words %s with type %s on %s zeros", pair, selection.t, len(selection.ordinals)
    )

    families: IntervalFamilies | None = None
    try:
        families = choose_rich_intervals(
            first,
            second,
            selection,
            partition_blocks(first.word, thresholds.block_ones),
            partition_blocks(second.word, thresholds.block_ones),
            thresholds,
        )
        shift = best_shift(
            families,
            thresholds,
            strategy=params.shift_strategy,
            sample_count=params.sample_count,
            seed=params.seed,
            beta_eff=params.beta_eff,
        )
    except MatcherStageError as exc:
        return fallback(
            pair,
            "intervals",
            str(exc),
            t=selection.t,
            t_size=len(selection.ordinals),
            s_size=len(families.consistent_ordinals) if families is not None else 0,
            blocks=families.blocks if families is not None else (),
        )

    graph = shift.graph
    matching = noncrossing_matching(graph)
    assembly = assemble_witness(matching, graph, first.word, second.word)
    assembly.witness.validate_against(first.word, second.word)
    length = thresholds.rich_length(selection.t)
    degree_ok = matching.max_degree <= thresholds.degree_cap() + 1
    logger.info(
        "Matched %s interval pairs (edges=%s, max degree=%s); witness length %s",
        matching.size,
        matching.edge_count,
        matching.max_degree,
        len(assembly.witness),
    )
    return MatcherReport(
        n=n,
        params=params,
        thresholds=thresholds,
        pair=pair,
        witness=assembly.witness,
        guarantee_value=n / 2 - abs(graph.q) + matching.size * length / 2,
        asymptotic_flag=asymptotic and degree_ok,
        stage="assembly",
        t=selection.t,
        t_size=len(selection.ordinals),
        s_size=len(families.consistent_ordinals),
        e_size=graph.edge_count,
        matching_size=matching.size,
        q=graph.q,
        max_degree=matching.max_degree,
        degree_ok=degree_ok,
        assembled_length=assembly.assembled_length,
        average_edges=shift.average_edges,
        expected_edge_floor=shift.expected_edge_floor,
        asymptotic_edge_floor=shift.asymptotic_edge_floor,
        blocks=families.blocks,
        formula_forms=forms,
        intervals=families,
        graph=graph,
    )
