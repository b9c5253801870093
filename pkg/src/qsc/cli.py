"""Command-line driver: ``qsc verify SUITE [options]``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import congruence, padic, wz
from .errors import QscError
from .qkit import is_prime

SCHEMA = "qsc/1"
SUITES = ("wz", "identities", "lemmas", "theorem1", "theorem2", "theorem3",
          "corollary-q", "corollary-padic", "all")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'3..25' or '3,5,9' (mixtures allowed: '3..9,15')."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, _, hi = part.partition("..")
            try:
                lo_i, hi_i = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {part!r}") from None
            if hi_i < lo_i:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        else:
            try:
                out.append(int(part))
            except ValueError:
                raise UsageError(f"bad integer {part!r}") from None
    return out


def odd_only(values: list[int], low: int = 3) -> list[int]:
    dropped = [v for v in values if v % 2 == 0 or v < low]
    if dropped:
        warn(f"ignoring values that are even or below {low}: {', '.join(map(str, dropped))}")
    return [v for v in values if v % 2 and v >= low]


def parse_grid(text: str) -> tuple[int, int]:
    try:
        n, k = text.lower().split("x")
        return int(n), int(k)
    except ValueError:
        raise UsageError(f"grid must look like 12x12, got {text!r}") from None


def warn(msg: str):
    print(f"warning: {msg}", file=sys.stderr)


@dataclass
class Campaign:
    suite: str
    n_values: list | None = None
    big_n_values: list | None = None
    p_values: list | None = None
    r_values: list | None = None
    variants: tuple = ("half", "full")
    grid: tuple = (12, 12)
    symbolic: bool = True
    pointwise: bool = True
    jobs: int = 1
    json_path: str | None = None
    timings: bool = True
    tasks: list = field(default_factory=list)

    def plan(self) -> list[tuple[str, dict]]:
        suites = SUITES[:-1] if self.suite == "all" else (self.suite,)
        tasks = []
        for s in suites:
            tasks.extend(getattr(self, "_plan_" + s.replace("-", "_"))())
        return tasks

    def _ns(self, default_hi: int) -> list[int]:
        vals = self.n_values if self.n_values is not None else list(range(3, default_hi + 1))
        return odd_only(vals)

    def _plan_wz(self):
        n_max, k_max = self.grid
        out = [("classical", {"n_max": n_max, "k_max": k_max})]
        if self.pointwise:
            out.append(("qwz_grid", {"n_max": n_max, "k_max": k_max}))
        if self.symbolic:
            out.append(("symbolic", {}))
        return out

    def _plan_identities(self):
        out = []
        for m in self._ns(15):
            out += [("closed_half", {"m": m}), ("closed_full", {"m": m}), ("boundary", {"m": m})]
        big = self.big_n_values if self.big_n_values is not None else list(range(0, 9))
        for N in big:
            if N < 0:
                raise UsageError("N must be nonnegative")
            out += [("closed_param", {"N": N}), ("closed_aneg1", {"N": N})]
        return out

    def _plan_lemmas(self):
        return [("lemmas", {"m": m}) for m in self._ns(25)]

    def _plan_theorem(self, which: str, hi: int):
        return [(which, {"n": n, "variant": v}) for n in self._ns(hi) for v in self.variants]

    def _plan_theorem1(self):
        return self._plan_theorem("theorem1", 25)

    def _plan_theorem2(self):
        return self._plan_theorem("theorem2", 15)

    def _plan_theorem3(self):
        return self._plan_theorem("theorem3", 25)

    def _pairs(self, default_p, default_r, extra=()):
        ps = self.p_values or default_p
        rs = self.r_values or default_r
        for p in ps:
            if not is_prime(p) or p == 2:
                raise UsageError(f"{p} is not an odd prime")
        for r in rs:
            if r < 1:
                raise UsageError("r must be positive")
        pairs = [(p, r) for p in ps for r in rs]
        if self.p_values is None and self.r_values is None:
            pairs += [pr for pr in extra if pr not in pairs]
        return pairs

    def _plan_corollary_q(self):
        return [("corollary_q", {"p": p, "r": r, "family": f, "variant": v})
                for p, r in self._pairs([3, 5, 7], [1], extra=[(3, 2)])
                for f in ("cor41", "cor43") for v in self.variants]

    def _plan_corollary_padic(self):
        return [("padic", {"p": p, "r": r, "family": f, "variant": v})
                for p, r in self._pairs([3, 5, 7, 11, 13], [1, 2])
                for f in ("cor42", "cor44") for v in self.variants]


SUITE_OF = {"classical": "wz", "qwz_grid": "wz", "symbolic": "wz",
            "closed_half": "identities", "closed_full": "identities", "boundary": "identities",
            "closed_param": "identities", "closed_aneg1": "identities", "lemmas": "lemmas",
            "theorem1": "theorem1", "theorem2": "theorem2", "theorem3": "theorem3",
            "corollary_q": "corollary-q", "padic": "corollary-padic"}


def _record(kind: str, params: dict, claim: str, verdict: str, witness: dict) -> dict:
    return {"suite": SUITE_OF[kind], "claim": claim, "params": params, "verdict": verdict,
            "witness_summary": witness}


def _verdict(ok) -> str:
    return "pass" if ok else "fail"


def run_task(task: tuple[str, dict]) -> list[dict]:
    kind, params = task
    t0 = time.perf_counter()
    try:
        records = _dispatch(kind, params)
    except QscError as exc:
        records = [_record(kind, params, kind, "error", {"detail": f"{type(exc).__name__}: {exc}"})]
    elapsed = round((time.perf_counter() - t0) * 1000, 3)
    for r in records:
        r["elapsed_ms"] = elapsed if len(records) == 1 else r.get("elapsed_ms", elapsed)
    return records


def _dispatch(kind: str, params: dict) -> list[dict]:
    if kind == "classical":
        rep = wz.check_classical_relation(params["n_max"], params["k_max"])
        return [_record(kind, params, rep.claim, rep.verdict, rep.witness_summary())]
    if kind == "qwz_grid":
        rep = wz.check_qwz_grid(params["n_max"], params["k_max"])
        return [_record(kind, params, rep.claim, rep.verdict, rep.witness_summary())]
    if kind == "symbolic":
        chk = wz.symbolic_check()
        return [_record(kind, params, "symbolic ratio identity (q, u=q^2k, v=q^2n)", _verdict(chk),
                        dict(vars(chk)))]
    if kind in ("closed_half", "closed_full", "closed_param", "closed_aneg1"):
        fn = {"closed_half": wz.check_closed_form_half, "closed_full": wz.check_closed_form_full,
              "closed_param": wz.check_closed_form_param, "closed_aneg1": wz.check_closed_form_aneg1}[kind]
        chk = fn(params.get("m", params.get("N")))
        return [_record(kind, params, f"{chk.name} at {chk.index}", _verdict(chk), dict(chk.results))]
    if kind == "boundary":
        m = params["m"]
        g1, g2 = wz.boundary_G_half(m)
        top = (m + 3) // 2
        res = {"G(top,1)": g1 == wz.q_G(top, 1), "G(top,2)": g2 == wz.q_G(top, 2)}
        return [_record(kind, params, f"boundary values of G at m={m}", _verdict(all(res.values())), res)]
    if kind == "lemmas":
        m = params["m"]
        reps = congruence.verify_lemma_congruences(m) + congruence.verify_divisibility_facts(m)
        return [dict(_record(kind, params, r.claim, r.verdict, r.witness_summary()), elapsed_ms=r.elapsed_ms)
                for r in reps]
    if kind in ("theorem1", "theorem2", "theorem3"):
        fn = getattr(congruence, "verify_" + kind)
        rep = fn(params["n"], params["variant"])
        return [_record(kind, params, rep.claim, rep.verdict, rep.witness_summary())]
    if kind == "corollary_q":
        rep = congruence.verify_corollary_q(**params)
        ws = rep.witness_summary()
        ws["precheck"] = rep.params.get("precheck")
        return [_record(kind, params, rep.claim, rep.verdict, ws)]
    if kind == "padic":
        rep = padic.verify_padic(padic.PadicClaim(**params))
        js = rep.to_json()
        ws = {"valuation_found": js["valuation_found"], "valuation_required": js["valuation_required"]}
        if rep.notes:
            ws["notes"] = rep.notes
        claim = f"{params['family']} {params['variant']} p={params['p']} r={params['r']}"
        return [_record(kind, params, claim, rep.verdict, ws)]
    raise ValueError(f"unknown task {kind!r}")


def execute(campaign: Campaign, progress=None, tasks=None) -> list[dict]:
    tasks = campaign.plan() if tasks is None else tasks
    results: list[dict] = []
    if campaign.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=campaign.jobs) as pool:
            for i, recs in enumerate(pool.map(run_task, tasks, chunksize=1)):
                results.extend(recs)
                if progress:
                    progress(i + 1, len(tasks), tasks[i], recs)
    else:
        for i, task in enumerate(tasks):
            recs = run_task(task)
            results.extend(recs)
            if progress:
                progress(i + 1, len(tasks), task, recs)
    if not campaign.timings:
        for r in results:
            r["elapsed_ms"] = None
    return results


def summary_table(records: list[dict]) -> str:
    rows = [("suite", "claim", "verdict", "ms")]
    for r in records:
        ms = "" if r["elapsed_ms"] is None else f"{r['elapsed_ms']:.1f}"
        rows.append((r["suite"], r["claim"], r["verdict"].upper(), ms))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    counts = {v: sum(r["verdict"] == v for r in records) for v in ("pass", "fail", "error")}
    lines.append(f"{len(records)} reports: {counts['pass']} pass, {counts['fail']} fail, {counts['error']} error")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsc", description="Exact verification of q-supercongruences.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", dest="n", help="odd n (or m) values, e.g. 3..25 or 3,5,9")
    v.add_argument("--N", dest="big_n", help="N values for the parametric identities, e.g. 0..8")
    v.add_argument("--p", help="comma separated odd primes")
    v.add_argument("--r", help="comma separated prime-power exponents")
    v.add_argument("--variant", choices=("half", "full", "both"), default="both")
    v.add_argument("--grid", default="12x12", help="WZ grid bounds n_max x k_max")
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true", help="wz: symbolic tier only")
    mode.add_argument("--pointwise", action="store_true", help="wz: pointwise tier only")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", dest="json_path", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--no-timing", action="store_true", help="null out elapsed_ms for reproducible output")
    v.add_argument("--quiet", action="store_true", help="suppress progress lines")
    return parser


def campaign_from_args(args) -> Campaign:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return Campaign(
        suite=args.suite,
        n_values=parse_range(args.n) if args.n else None,
        big_n_values=parse_range(args.big_n) if args.big_n else None,
        p_values=parse_range(args.p) if args.p else None,
        r_values=parse_range(args.r) if args.r else None,
        variants=("half", "full") if args.variant == "both" else (args.variant,),
        grid=parse_grid(args.grid),
        symbolic=not args.pointwise,
        pointwise=not args.symbolic,
        jobs=args.jobs,
        json_path=args.json_path,
        timings=not args.no_timing,
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        campaign = campaign_from_args(args)
        tasks = campaign.plan()
    except (UsageError, QscError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    def progress(i, total, task, recs):
        if not args.quiet:
            verdicts = ",".join(r["verdict"] for r in recs)
            print(f"[{i}/{total}] {task[0]} {task[1]} -> {verdicts}", file=sys.stderr)

    try:
        records = execute(campaign, progress, tasks)
    except Exception as exc:  # internal failure, not a verdict
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    payload = json.dumps({"schema": SCHEMA, "reports": records}, indent=2, sort_keys=True) + "\n"
    table = summary_table(records)
    if campaign.json_path == "-":
        sys.stdout.write(payload)
        print(table, file=sys.stderr)
    else:
        if campaign.json_path:
            with open(campaign.json_path, "w") as fh:
                fh.write(payload)
        print(table)
    return 0 if all(r["verdict"] == "pass" for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
