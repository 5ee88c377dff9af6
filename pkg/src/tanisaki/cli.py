"""Command-line surface: presentations, verification sweeps, reports.

Commands: presentation, verify, sweep, gamma, rank-lemma.  Exit codes:
0 all checks passed, 1 verification failure, 2 usage or configuration error.
All output is deterministic for a fixed configuration; wall-clock timings
(sweep only) are the single exception.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import groebner, ideals, lambda_ring, linalg
from .groebner import MonomialOrder, InfiniteQuotient
from .ideals import k_tanisaki_generators, tanisaki_generators, to_v_convention
from .partitions import (
    Partition,
    PartitionError,
    enumerate_partitions,
    enumerate_subsets,
    parse_partition,
)

SCHEMA_VERSION = 1
SWEEP_MAX_N = 7
SWEEP_GROEBNER_MAX_N = 6
VERIFY_MAX_N = 5
HEAVY_SUITES = ("gamma", "lambda", "truncation", "filtration", "freeness", "stability")
ALL_SUITES = ("rank-lemma",) + HEAVY_SUITES


@dataclass
class RunConfig:
    partitions: list[Partition]
    flavor: str = "both"
    convention: str = "v"
    order: MonomialOrder = field(default_factory=lambda: MonomialOrder("degrevlex"))
    fmt: str = "json"
    cache_dir: str | None = None
    jobs: int = 1
    escalation_depth: int = 2
    degree_cap: int | None = None
    suites: tuple[str, ...] = ALL_SUITES

    def to_dict(self):
        return {
            "partitions": [list(p.parts) for p in self.partitions],
            "flavor": self.flavor,
            "convention": self.convention,
            "order": self.order.to_dict(),
            "format": self.fmt,
            "jobs": self.jobs,
            "escalation_depth": self.escalation_depth,
            "degree_cap": self.degree_cap,
            "suites": list(self.suites),
        }


def _partition_block(p: Partition) -> dict:
    dual = p.dual()
    return {
        "partition": list(p.parts),
        "n": p.n,
        "dual": list(dual.parts),
        "p_dual": [dual.p_function(s) for s in range(1, p.n + 1)],
        "rank": p.multinomial_rank(),
        "dimension": p.springer_dimension(),
    }


def _kbasis(p: Partition, cfg: RunConfig):
    pres = k_tanisaki_generators(p, cfg.convention)
    return pres, groebner.cached_buchberger(pres, cfg.order, cfg.cache_dir)


# -- presentation --------------------------------------------------------


def _presentation_block(p: Partition, flavor: str, cfg: RunConfig) -> dict:
    if flavor == ideals.COHOMOLOGY:
        pres = tanisaki_generators(p)
    else:
        pres = k_tanisaki_generators(p, cfg.convention)
    gb = groebner.cached_buchberger(pres, cfg.order, cfg.cache_dir)
    monos = groebner.standard_monomials(gb, cfg.degree_cap)
    prefix = pres.convention
    block = {
        "flavor": flavor,
        "convention": prefix,
        "generators": ideals.presentation_to_dict(pres)["generators"],
        "groebner_basis": [q.render(prefix) for q in gb.polys],
        "standard_monomials": [_render_monomial(m, prefix) for m in monos],
        "quotient_rank": len(monos),
    }
    if flavor == ideals.COHOMOLOGY:
        block["hilbert_series"] = list(groebner.hilbert_series(pres, cfg.order))
    return block


def _render_monomial(m, prefix):
    if not any(m):
        return "1"
    return "*".join(
        f"{prefix}{j + 1}" if e == 1 else f"{prefix}{j + 1}^{e}"
        for j, e in enumerate(m)
        if e
    )


def cmd_presentation(cfg: RunConfig) -> dict:
    p = cfg.partitions[0]
    flavors = [cfg.flavor] if cfg.flavor != "both" else [ideals.COHOMOLOGY, ideals.KTHEORY]
    result = _partition_block(p)
    result["presentations"] = [_presentation_block(p, f, cfg) for f in flavors]
    ok = all(
        blk["quotient_rank"] == result["rank"] for blk in result["presentations"]
    )
    result["ok"] = ok
    return {"results": [result], "ok": ok}


# -- verify ---------------------------------------------------------------


def _suite_rank_lemma(p: Partition, cfg: RunConfig) -> dict:
    rep = linalg.verify_rank_lemma(p)
    return rep.to_dict()


def _suite_gamma(p: Partition, cfg: RunConfig) -> dict:
    _, gb = _kbasis(p, cfg)
    return lambda_ring.verify_gamma_relations(p, gb).to_dict()


def _suite_lambda(p: Partition, cfg: RunConfig) -> dict:
    _, gb = _kbasis(p, cfg)
    gamma = lambda_ring.verify_gamma_relations(p, gb)
    lam = lambda_ring.equivalent_lambda_relations(p, gb)
    doc = lam.to_dict()
    doc["agrees_with_gamma"] = gamma.ok == lam.ok
    doc["ok"] = doc["ok"] and doc["agrees_with_gamma"]
    return doc


def _suite_truncation(p: Partition, cfg: RunConfig) -> dict:
    _, gb = _kbasis(p, cfg)
    failures = []
    checks = 0
    for s in range(1, p.n + 1):
        for subset in enumerate_subsets(p.n, s):
            for cert in ideals.truncation_certificate(p, subset):
                poly = cert["h"]
                if cfg.convention == "v":
                    poly = to_v_convention(poly)
                checks += 1
                if not groebner.normal_form(poly, gb).is_zero():
                    failures.append({"subset": list(subset), "m": cert["m"]})
    return {"partition": list(p.parts), "checks": checks, "failures": failures, "ok": not failures}


def _suite_filtration(p: Partition, cfg: RunConfig) -> dict:
    return linalg.filtration_check(p, cfg.escalation_depth).to_dict()


def _suite_freeness(p: Partition, cfg: RunConfig) -> dict:
    return linalg.integral_freeness_check(p).to_dict()


def _suite_stability(p: Partition, cfg: RunConfig) -> dict:
    """Adjacent transpositions permute each generating set into itself and
    land in the ideal (checked by normal form on the K side)."""
    n = p.n
    failures = []
    checks = 0
    transpositions = []
    for i in range(1, n):
        sigma = list(range(1, n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        transpositions.append(tuple(sigma))
    for flavor in (ideals.COHOMOLOGY, ideals.KTHEORY):
        if flavor == ideals.COHOMOLOGY:
            pres = tanisaki_generators(p)
        else:
            pres = k_tanisaki_generators(p, cfg.convention)
        pool = {g.poly for g in pres.generators}
        for g in pres.generators:
            for sigma in transpositions:
                checks += 1
                if ideals.apply_permutation(g.poly, sigma) not in pool:
                    failures.append(
                        {"flavor": flavor, "subset": list(g.subset), "d": g.d, "sigma": list(sigma)}
                    )
    _, gb = _kbasis(p, cfg)
    kpres = k_tanisaki_generators(p, cfg.convention)
    for g in kpres.generators:
        for sigma in transpositions:
            checks += 1
            if not groebner.normal_form(ideals.apply_permutation(g.poly, sigma), gb).is_zero():
                failures.append(
                    {"flavor": "ktheory-nf", "subset": list(g.subset), "d": g.d, "sigma": list(sigma)}
                )
    return {"partition": list(p.parts), "checks": checks, "failures": failures, "ok": not failures}


_SUITE_FN = {
    "rank-lemma": _suite_rank_lemma,
    "gamma": _suite_gamma,
    "lambda": _suite_lambda,
    "truncation": _suite_truncation,
    "filtration": _suite_filtration,
    "freeness": _suite_freeness,
    "stability": _suite_stability,
}


def _verify_one(payload) -> dict:
    parts, cfg_doc = payload
    cfg = _config_from_doc(cfg_doc)
    p = Partition(tuple(parts))
    suites = {}
    ok = True
    for name in cfg.suites:
        doc = _SUITE_FN[name](p, cfg)
        suites[name] = doc
        ok = ok and bool(doc["ok"])
    return {**_partition_block(p), "suites": suites, "ok": ok}


def _config_from_doc(doc) -> RunConfig:
    return RunConfig(
        partitions=[],
        flavor=doc["flavor"],
        convention=doc["convention"],
        order=MonomialOrder.from_dict(doc["order"]),
        fmt=doc["format"],
        cache_dir=doc.get("cache_dir"),
        jobs=1,
        escalation_depth=doc["escalation_depth"],
        degree_cap=doc.get("degree_cap"),
        suites=tuple(doc["suites"]),
    )


def cmd_verify(cfg: RunConfig) -> dict:
    heavy = [s for s in cfg.suites if s in HEAVY_SUITES]
    for p in cfg.partitions:
        if heavy and p.n > VERIFY_MAX_N:
            raise PartitionError(
                f"partition {p} has n={p.n} > {VERIFY_MAX_N}: restrict --suite "
                f"to rank-lemma or choose a smaller partition"
            )
    cfg_doc = {**cfg.to_dict(), "cache_dir": cfg.cache_dir}
    payloads = [(list(p.parts), cfg_doc) for p in cfg.partitions]
    if cfg.jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_verify_one, payloads))
    else:
        results = [_verify_one(pl) for pl in payloads]
    return {"results": results, "ok": all(r["ok"] for r in results)}


# -- sweep ----------------------------------------------------------------


def cmd_sweep(cfg: RunConfig) -> dict:
    results = []
    for p in cfg.partitions:
        t0 = time.perf_counter()
        row = _partition_block(p)
        if p.n <= SWEEP_GROEBNER_MAX_N:
            coh = tanisaki_generators(p)
            kth = k_tanisaki_generators(p, cfg.convention)
            gb_c = groebner.cached_buchberger(coh, cfg.order, cfg.cache_dir)
            gb_k = groebner.cached_buchberger(kth, cfg.order, cfg.cache_dir)
            row["gb_size_cohomology"] = len(gb_c)
            row["gb_size_ktheory"] = len(gb_k)
            row["generator_count"] = len(kth.generators)
        else:
            kth = k_tanisaki_generators(p, cfg.convention)
            row["gb_size_cohomology"] = None
            row["gb_size_ktheory"] = None
            row["generator_count"] = len(kth.generators)
        row["time_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        results.append(row)
    return {"results": results, "ok": True}


# -- gamma ----------------------------------------------------------------


def cmd_gamma(cfg: RunConfig, subset, d: int) -> dict:
    p = cfg.partitions[0]
    _, gb = _kbasis(p, cfg)
    poly, nf, vanished = lambda_ring.gamma_membership(p, gb, subset, d)
    s = len(subset)
    q = p.dual().p_function(s)
    claimed = d >= max(1, s + 1 - q)
    ok = vanished or not claimed
    result = {
        **_partition_block(p),
        "subset": list(subset),
        "d": d,
        "gamma_polynomial": poly.render("u"),
        "normal_form": nf.render(gb.source.convention if gb.source else "u"),
        "in_ideal": vanished,
        "claimed": claimed,
        "ok": ok,
    }
    return {"results": [result], "ok": ok}


def cmd_rank_lemma(cfg: RunConfig) -> dict:
    results = []
    for p in cfg.partitions:
        rep = linalg.verify_rank_lemma(p)
        results.append({**_partition_block(p), **rep.to_dict()})
    return {"results": results, "ok": all(r["ok"] for r in results)}


# -- output ----------------------------------------------------------------


def render_report(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(doc)
    return _render_text(doc)


_CSV_COLUMNS = {
    "sweep": [
        "partition", "n", "rank", "dimension",
        "generator_count", "gb_size_cohomology", "gb_size_ktheory", "time_ms",
    ],
    "verify": ["partition", "suite", "status", "detail"],
    "rank-lemma": ["partition", "s", "p_dual", "jordan_rank", "status"],
    "gamma": ["partition", "subset", "d", "gamma_polynomial", "normal_form", "status"],
    "presentation": ["partition", "flavor", "convention", "subset", "d", "q", "poly"],
}


def _render_csv(doc: dict) -> str:
    command = doc["command"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS[command])
    for r in doc["results"]:
        part = ",".join(str(x) for x in r["partition"])
        if command == "sweep":
            writer.writerow([
                part, r["n"], r["rank"], r["dimension"], r["generator_count"],
                r["gb_size_cohomology"], r["gb_size_ktheory"], r["time_ms"],
            ])
        elif command == "verify":
            for suite, sdoc in sorted(r["suites"].items()):
                detail = json.dumps(sdoc.get("failures", sdoc.get("findings", [])), sort_keys=True)
                writer.writerow([part, suite, "pass" if sdoc["ok"] else "fail", detail])
        elif command == "rank-lemma":
            for row in r["rows"]:
                writer.writerow([
                    part, row["s"], row["p_dual"], row["jordan_rank"],
                    "pass" if row["p_dual"] == row["jordan_rank"] else "fail",
                ])
        elif command == "gamma":
            writer.writerow([
                part, ",".join(str(i) for i in r["subset"]), r["d"],
                r["gamma_polynomial"], r["normal_form"], "pass" if r["ok"] else "fail",
            ])
        elif command == "presentation":
            for blk in r["presentations"]:
                for g in blk["generators"]:
                    writer.writerow([
                        part, blk["flavor"], blk["convention"],
                        ",".join(str(i) for i in g["subset"]), g["d"], g["q"], g["poly"],
                    ])
    return buf.getvalue()


def _render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}   overall: {'pass' if doc['ok'] else 'FAIL'}"]
    for r in doc["results"]:
        part = ",".join(str(x) for x in r["partition"])
        dual = ",".join(str(x) for x in r.get("dual", []))
        lines.append(
            f"partition ({part})  dual ({dual})  rank {r.get('rank')}  dim {r.get('dimension')}"
        )
        if "suites" in r:
            for suite, sdoc in sorted(r["suites"].items()):
                status = "pass" if sdoc["ok"] else "FAIL"
                lines.append(f"  {suite:<12} {status}")
                for f in (sdoc.get("failures") or [])[:5]:
                    lines.append(f"    counterexample: {json.dumps(f, sort_keys=True)}")
        if "presentations" in r:
            for blk in r["presentations"]:
                lines.append(
                    f"  {blk['flavor']:<12} generators {len(blk['generators'])}  "
                    f"gb {len(blk['groebner_basis'])}  rank {blk['quotient_rank']}"
                )
                if "hilbert_series" in blk:
                    lines.append(f"    hilbert series {blk['hilbert_series']}")
        if "gamma_polynomial" in r:
            lines.append(f"  gamma^{r['d']} = {r['gamma_polynomial']}")
            lines.append(f"  normal form = {r['normal_form']}  ({'pass' if r['ok'] else 'FAIL'})")
        if "gb_size_ktheory" in r:
            lines.append(
                f"  generators {r['generator_count']}  gb(coh) {r['gb_size_cohomology']}  "
                f"gb(K) {r['gb_size_ktheory']}  time {r['time_ms']}ms"
            )
        if "rows" in r and "suites" not in r:
            bad = [row for row in r["rows"] if row["p_dual"] != row["jordan_rank"]]
            lines.append(f"  rank lemma rows {len(r['rows'])}  mismatches {len(bad)}")
    return "\n".join(lines) + "\n"


# -- argument plumbing ------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--partition", action="append", default=[],
                     help="comma-separated parts, e.g. 5,4,4,2,2,2,1 (repeatable)")
    sub.add_argument("--n", type=int, default=None,
                     help="run over every partition of n")
    sub.add_argument("--flavor", choices=["cohomology", "ktheory", "both"], default="both")
    sub.add_argument("--convention", choices=["u", "v"], default="v",
                     help="variable convention for K-theory computations")
    sub.add_argument("--order", choices=["degrevlex", "deglex", "lex"], default="degrevlex")
    sub.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sub.add_argument("--cache-dir", default=None, help="Groebner basis cache directory")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--escalation-depth", type=int, default=2)
    sub.add_argument("--degree-cap", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanisaki",
        description="Presentations of Springer-variety cohomology and K-rings: "
                    "Tanisaki ideals, Groebner bases, and exact verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name in ("presentation", "verify", "sweep", "gamma", "rank-lemma"):
        sub = subs.add_parser(name)
        _add_common(sub)
        if name == "verify":
            sub.add_argument("--suite", action="append", choices=list(ALL_SUITES),
                             default=[], help="suites to run (default: all)")
        if name == "gamma":
            sub.add_argument("--subset", required=True,
                             help="comma-separated line indices, e.g. 1,2")
            sub.add_argument("--d", required=True, type=int)
    return parser


def _resolve_partitions(args) -> list[Partition]:
    parts = [parse_partition(t) for t in args.partition]
    if args.n is not None:
        if args.n < 1:
            raise PartitionError(f"--n must be >= 1, got {args.n}")
        parts.extend(enumerate_partitions(args.n))
    if not parts:
        raise PartitionError("no partitions given: use --partition or --n")
    return parts


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        partitions = _resolve_partitions(args)
        cfg = RunConfig(
            partitions=partitions,
            flavor=args.flavor,
            convention=args.convention,
            order=MonomialOrder(args.order),
            fmt=args.format,
            cache_dir=args.cache_dir,
            jobs=args.jobs,
            escalation_depth=args.escalation_depth,
            degree_cap=args.degree_cap,
            suites=tuple(args.suite) if getattr(args, "suite", None) else ALL_SUITES,
        )
        if args.command == "presentation":
            if len(partitions) != 1:
                raise PartitionError("presentation takes exactly one partition")
            doc = cmd_presentation(cfg)
        elif args.command == "verify":
            doc = cmd_verify(cfg)
        elif args.command == "sweep":
            if any(p.n > SWEEP_MAX_N for p in partitions):
                raise PartitionError(f"sweep is capped at n={SWEEP_MAX_N}")
            doc = cmd_sweep(cfg)
        elif args.command == "gamma":
            if len(partitions) != 1:
                raise PartitionError("gamma takes exactly one partition")
            try:
                subset = tuple(int(t) for t in args.subset.split(","))
            except ValueError:
                raise PartitionError(f"bad --subset {args.subset!r}") from None
            if args.d < 0:
                raise PartitionError("--d must be >= 0")
            doc = cmd_gamma(cfg, subset, args.d)
        else:
            doc = cmd_rank_lemma(cfg)
    except PartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfiniteQuotient as exc:
        print(f"error: infinite quotient detected: {exc}", file=sys.stderr)
        return 1

    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool": "tanisaki",
        "command": args.command,
        "config": cfg.to_dict(),
        **doc,
    }
    sys.stdout.write(render_report(doc, cfg.fmt))
    return 0 if doc["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
