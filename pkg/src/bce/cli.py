"""``bce <command> --config <path>``: run the checks and emit a JSON report.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on input errors (bad config, missing form or splitting, refused construction).
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .braid import BraidOperator, OperatorBank, check_braid_equation, check_word_independence, verify_decompositions
from .clifford import CliffordAlgebra, ScalarProduct, check_ffun
from .config import ConfigError, ProblemConfig, load_config
from .exterior import (
    ExteriorAlgebra,
    check_braiding_multiplicativity,
    check_leibniz,
    check_pairing_descent,
    check_transpose,
    check_wedge_associativity,
)
from .report import dumps
from .spinor import (
    Splitting,
    build_spinor,
    cartan_map,
    left_ideal_basis,
    regular_representation,
    universal_embedding,
    validate_splitting,
    verify_spinor_theorem,
    volume_elements,
)
from .exactlin import rref_rows
from .tensor import CapExceededError
from .verdict import Verdict

__all__ = ["main", "run", "InputError", "COMMANDS"]

COMMANDS = ("validate", "exterior", "clifford", "spinor", "all")


class InputError(Exception):
    pass


@dataclass
class Run:
    config: ProblemConfig
    timing: bool = False
    verdicts: List[Dict[str, Any]] = field(default_factory=list)
    sections: Dict[str, Any] = field(default_factory=dict)
    times: Dict[str, float] = field(default_factory=dict)
    _braid: Optional[BraidOperator] = None
    _cl: Optional[CliffordAlgebra] = None
    _ext: Optional[ExteriorAlgebra] = None

    def record(self, section: str, v: Verdict) -> Verdict:
        self.verdicts.append({"section": section, **v.to_dict()})
        return v

    def timed(self, key: str, fn: Callable[[], Any]) -> Any:
        t = time.perf_counter()
        out = fn()
        self.times[key] = round(time.perf_counter() - t, 3)
        return out

    @property
    def failed(self) -> bool:
        return any(not v["passed"] for v in self.verdicts)

    def braid(self) -> Optional[BraidOperator]:
        if self._braid is None:
            cfg = self.config
            v = self.record("validate", check_braid_equation(cfg.braid, cfg.dimension))
            if not v.passed:
                return None
            self._braid = BraidOperator(cfg.braid, cfg.dimension, check=False)
        return self._braid

    def exterior(self) -> Optional[ExteriorAlgebra]:
        if self._ext is None:
            b = self.braid()
            if b is None:
                return None
            self._ext = ExteriorAlgebra(OperatorBank(b, self.config.max_degree))
        return self._ext

    def form(self) -> ScalarProduct:
        if self.config.form is None:
            raise InputError("form required for this command")
        return ScalarProduct(self.config.form)

    def clifford(self) -> Optional[CliffordAlgebra]:
        if self._cl is None:
            ext = self.exterior()
            if ext is None:
                return None
            form = self.form()
            ffun = check_ffun(ext.bank.braiding, form)
            self.record("clifford", ffun)
            if not ffun.passed:
                return None
            self._cl = CliffordAlgebra(ext, form)
        return self._cl


def _cap_info(ext: ExteriorAlgebra) -> Dict[str, Any]:
    return {"max_degree": ext.cap, "exhausted": ext.exhausted, "top_degree": ext.top, "dims": ext.dims}


def do_validate(r: Run) -> None:
    b = r.braid()
    if b is None:
        return
    bank = OperatorBank(b, r.config.max_degree)
    r.record("validate", r.timed("word_independence", lambda: check_word_independence(b, min(4, max(2, r.config.max_degree)))))
    r.record("validate", r.timed("decompositions", lambda: verify_decompositions(bank)))
    if r.config.form is not None:
        r.record("validate", check_ffun(b, ScalarProduct(r.config.form)))


def do_exterior(r: Run) -> None:
    ext = r.exterior()
    if ext is None:
        return
    dual = ExteriorAlgebra(ext.bank.dual, dual=True)
    table = {}
    for n in range(ext.cap + 1):
        for m in range(ext.cap + 1 - n):
            for i in range(ext.dims[n]):
                for j in range(ext.dims[m]):
                    t = ext.wedge_tensors(ext.degree(n).basis[i], n, ext.degree(m).basis[j], m)
                    table[f"{ext.global_index(n, i)},{ext.global_index(m, j)}"] = {
                        ext.global_index(n + m, k): c for k, c in ext.project(n + m, t).items()
                    }
    r.sections["exterior"] = {
        **_cap_info(ext),
        "basis": {n: ext.degree(n).basis for n in range(ext.cap + 1)},
        "wedge_table": table,
    }
    for name, fn in (
        ("leibniz", lambda: check_leibniz(ext, dual)),
        ("transpose", lambda: check_transpose(ext, dual)),
        ("pairing_descent", lambda: check_pairing_descent(ext, dual)),
        ("wedge_associativity", lambda: check_wedge_associativity(ext)),
        ("braiding_multiplicativity", lambda: check_braiding_multiplicativity(ext)),
    ):
        r.record("exterior", r.timed(name, fn))


def do_clifford(r: Run) -> None:
    cl = r.clifford()
    if cl is None:
        return
    ext = cl.exterior
    checks = [
        ("lambda", cl.check_lambda),
        ("unit", cl.check_unit),
        ("associativity", cl.check_associativity),
        ("deformation", cl.check_deformation),
        ("generator_formula", cl.check_generator_formula),
        ("iota_leibniz", cl.check_iota_leibniz),
        ("iota_multiplicative", cl.check_iota_multiplicative),
        ("correlation_multiplicative", cl.check_correlation_multiplicative),
        ("quotient_homomorphism", cl.check_quotient_homomorphism),
        ("ideal_correspondence", cl.check_ideal_correspondence),
        ("ker_A_ideal", cl.check_right_ideal),
    ]
    for name, fn in checks:
        r.record("clifford", r.timed(name, fn))
    quads, verdict = r.timed("quadratic_generators", cl.quadratic_generators)
    r.record("clifford", verdict)
    r.sections["clifford"] = {
        **_cap_info(ext),
        "total_dim": ext.total_dim if ext.exhausted else "truncated",
        "circ_table": {f"{a},{b}": v for (a, b), v in cl.circ_table().items()},
        "correlation_wedge": {n: cl.correlation_wedge(n) for n in range(ext.cap + 1)},
        "quadratic_generators": [q.components for q in quads],
    }


def do_spinor(r: Run) -> None:
    cfg = r.config
    if cfg.splitting is None:
        raise InputError("splitting required")
    cl = r.clifford()
    if cl is None:
        return
    s = Splitting(tuple(cfg.splitting[0]), tuple(cfg.splitting[1]))
    verdict, data = validate_splitting(cl, s)
    r.record("spinor", verdict)
    if data is None:
        return
    if not cl.exterior.exhausted:
        raise InputError(
            f"spinor construction refused: the Clifford algebra is not exhausted within max_degree {cl.cap}"
        )
    try:
        mu, mu_verdict = r.timed("cartan_map", lambda: cartan_map(cl, s))
        sm = r.timed("build_spinor", lambda: build_spinor(cl, s))
    except CapExceededError as exc:
        raise InputError(f"spinor construction refused: {exc}") from None
    r.record("spinor", mu_verdict)
    r.record("spinor", r.timed("spinor_theorem", lambda: verify_spinor_theorem(sm)))
    identity = universal_embedding(sm, sm.representation, sm.unit())
    r.record("spinor", Verdict("universal_identity", identity.verdict.passed and identity.matrix == type(mu).identity(sm.dim)))
    vols = volume_elements(cl, s)
    r.record("spinor", Verdict("volume_elements", bool(vols), details={"count": len(vols)}))
    ideal_reports = []
    if vols:
        reg = regular_representation(cl)
        for omega in vols:
            emb = universal_embedding(sm, reg, omega.to_global())
            ideal = left_ideal_basis(cl, omega)
            image = [emb.matrix.column(j) for j in range(sm.dim)]
            same = rref_rows(image) == rref_rows(ideal)
            ok = emb.verdict.passed and same and len(ideal) == sm.dim
            r.record("spinor", Verdict("volume_ideal_isomorphic", ok, details={"ideal_dim": len(ideal), "image_is_ideal": same}))
            ideal_reports.append({"omega": omega, "ideal_dim": len(ideal)})
    r.sections["spinor"] = {
        "dim": sm.dim,
        "degrees": sm.degrees,
        "duality": data.duality,
        "basis": [b for b in sm.basis],
        "action": {a: m for a, m in sorted(sm.action.items())},
        "cartan_map": mu,
        "volume_elements": ideal_reports,
    }


HANDLERS = {"validate": do_validate, "exterior": do_exterior, "clifford": do_clifford, "spinor": do_spinor}


def run(command: str, config: ProblemConfig, timing: bool = False) -> Dict[str, Any]:
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}")
    r = Run(config, timing)
    steps = ["validate", "exterior", "clifford", "spinor"] if command == "all" else [command]
    skipped = []
    for step in steps:
        if command == "all" and step == "clifford" and config.form is None:
            skipped.append({"step": step, "reason": "no form given"})
            continue
        if command == "all" and step == "spinor" and config.splitting is None:
            skipped.append({"step": step, "reason": "no splitting given"})
            continue
        r.timed(f"step:{step}", lambda: HANDLERS[step](r))
    doc: Dict[str, Any] = {"command": command, "input": config.echo, "passed": not r.failed, "verdicts": r.verdicts}
    if skipped:
        doc["skipped"] = skipped
    doc.update(r.sections)
    if timing:
        doc["timing"] = {k: f"{v:.3f}" for k, v in r.times.items()}
    return doc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bce", description="Exact braided exterior, Clifford and spinor checks.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="JSON problem configuration")
    p.add_argument("--max-degree", type=int, help="override the degree cap")
    p.add_argument("--report", help="write the report here instead of standard output")
    p.add_argument("--fixture", help="preset braiding, e.g. flip:dim=2 or hecke-q:dim=2,q=2")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (breaks byte-identical reports)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        cfg = load_config(args.config, args.fixture)
        if args.max_degree is not None:
            if args.max_degree < 0:
                raise ConfigError("--max-degree", "expected a nonnegative integer")
            cfg.max_degree = args.max_degree
            cfg.echo["max_degree"] = args.max_degree
        doc = run(args.command, cfg, timing=args.timing)
    except (ConfigError, InputError) as exc:
        print(f"bce: input error: {exc}", file=sys.stderr)
        return 2
    text = dumps(doc)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for v in doc["verdicts"]:
        if not v["passed"]:
            print(f"bce: check failed: {v['section']}/{v['name']}", file=sys.stderr)
    return 0 if doc["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
