"""Stream generated graphs through a theorem checker and log JSON lines."""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from .checks import run_check, structural_lemmas_hold
from .generate import GenSpec, generate_one
from .mel import emit_mel

log = logging.getLogger(__name__)


def _slot(args) -> Optional[dict]:
    spec, theorem, m, k, index, timings = args
    G = generate_one(spec, index)
    if G is None:
        return None
    rec = run_check(theorem, G, m, k, graph_id=index, seed=spec.seed)
    out = rec.as_dict(timings)
    out["graph"] = emit_mel(G)
    return out


def hunt(spec: GenSpec, theorem: str, out: Optional[str | Path] = None, m: int = 0, k: int = 0,
         jobs: int = 1, timings: bool = False) -> dict:
    """Check ``spec.count`` generated graphs; returns the summary counts.

    Records are written in ``graph_id`` order by this process alone, so the
    report is identical for any ``jobs``.
    """
    tasks = [(spec, theorem, m, k, i, timings) for i in range(spec.count)]
    if jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_slot, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        results = [_slot(t) for t in tasks]

    summary = {"generated": 0, "gave_up": 0, "hypothesis_hits": 0, "nonvacuous_hits": 0,
               "conclusion_holds": 0, "counterexamples": 0}
    if theorem == "main1":
        summary["lemma_violations"] = 0
    handle = open(out, "w") if out is not None else None
    try:
        for res in results:
            if res is None:
                summary["gave_up"] += 1
                continue
            summary["generated"] += 1
            if res["hypotheses_hold"]:
                summary["hypothesis_hits"] += 1
                if all(v is not None for v in res["profile"].values()):
                    summary["nonvacuous_hits"] += 1
                if res["conclusion"]:
                    summary["conclusion_holds"] += 1
                if theorem == "main1" and not structural_lemmas_hold(res["lemmas"]):
                    summary["lemma_violations"] += 1
            if res["counterexample"]:
                summary["counterexamples"] += 1
                log.warning("counterexample at graph_id=%s", res["graph_id"])
            if handle is not None:
                handle.write(json.dumps(res, sort_keys=True) + "\n")
    finally:
        if handle is not None:
            handle.close()
    return summary
