"""JSON and CSV encodings for measures, problems, solutions, and reports.

JSON objects are dumped with sorted keys and two-space indentation so that
identical inputs produce byte-identical files.  Parsers raise SchemaError on
malformed content.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Union

import numpy as np

from .angles import Angle, GeneratorBasis
from .decomposition import DecompositionResult, VerificationCheck, VerificationReport
from .errors import SchemaError
from .kronecker import KroneckerProblem, KroneckerSolution
from .measures import (DiscreteMeasure, MeasureLike, MixedMeasure, TrigPolyDensity,
                       as_mixed)
from .spectrum import FeketeReport, SpectrumSample


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path, obj: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def read_json(path) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc


def basis_to_json(basis: GeneratorBasis) -> list:
    return [{"name": n, "value": float(v)} for n, v in basis.pairs()]


def basis_from_json(obj: Any) -> GeneratorBasis:
    try:
        pairs = [(str(e["name"]), float(e["value"])) for e in obj]
        return GeneratorBasis.from_pairs(pairs)
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError(f"invalid basis: {exc}") from exc


def angle_to_json(angle: Angle, basis: GeneratorBasis) -> dict:
    coeffs = {name: int(c) for name, c in zip(basis.names, angle.coeffs) if c}
    return {"turns": str(angle.turns), "coeffs": coeffs}


def angle_from_json(obj: Any, basis: GeneratorBasis) -> Angle:
    try:
        turns = Fraction(str(obj.get("turns", "0")))
        coeffs = {str(k): int(v) for k, v in obj.get("coeffs", {}).items()}
        return basis.angle(turns, coeffs)
    except Exception as exc:
        raise SchemaError(f"invalid angle: {exc}") from exc


def measure_to_json(mu: MeasureLike) -> dict:
    m = as_mixed(mu)
    kind = "discrete" if isinstance(mu, DiscreteMeasure) else "mixed"
    atoms = [{"angle": angle_to_json(a, m.basis), "re": w.real, "im": w.imag}
             for a, w in m.disc.atoms.items()]
    ac = [{"k": int(k), "re": c.real, "im": c.imag}
          for k, c in m.ac.coeffs.items()]
    return {"kind": kind, "basis": basis_to_json(m.basis), "atoms": atoms, "ac": ac}


def measure_from_json(obj: Any) -> MeasureLike:
    try:
        basis = basis_from_json(obj["basis"])
        pairs = []
        for entry in obj.get("atoms", []):
            angle = angle_from_json(entry["angle"], basis)
            pairs.append((angle, complex(float(entry.get("re", 0.0)),
                                         float(entry.get("im", 0.0)))))
        disc = DiscreteMeasure.from_atoms(basis, pairs)
        coeffs = {int(e["k"]): complex(float(e.get("re", 0.0)), float(e.get("im", 0.0)))
                  for e in obj.get("ac", [])}
        kind = obj.get("kind", "mixed" if coeffs else "discrete")
        if kind == "discrete":
            if coeffs:
                raise SchemaError("kind 'discrete' cannot carry density coefficients")
            return disc
        if kind != "mixed":
            raise SchemaError(f"unknown measure kind {kind!r}")
        return MixedMeasure(disc, TrigPolyDensity(coeffs))
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError(f"invalid measure: {exc}") from exc


def kronecker_problem_to_json(p: KroneckerProblem) -> dict:
    return {"alpha": p.alpha, "beta": p.beta, "target_x": p.target_x,
            "target_y": p.target_y, "epsilon": p.epsilon, "n_max": p.n_max,
            "method": p.method, "min_abs_n": p.min_abs_n, "parity": p.parity}


def kronecker_problem_from_json(obj: Any) -> KroneckerProblem:
    try:
        return KroneckerProblem(
            alpha=float(obj["alpha"]), beta=float(obj["beta"]),
            target_x=float(obj["target_x"]), target_y=float(obj["target_y"]),
            epsilon=float(obj["epsilon"]), n_max=int(obj.get("n_max", 1_000_000)),
            method=str(obj.get("method", "scan")),
            min_abs_n=int(obj.get("min_abs_n", 0)),
            parity=str(obj.get("parity", "any")))
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError(f"invalid simultaneous-approximation problem: {exc}") from exc


def kronecker_solution_to_json(s: KroneckerSolution) -> dict:
    return {"n": s.n, "err_alpha": s.err_alpha, "err_beta": s.err_beta,
            "evaluations": s.evaluations}


def fekete_report_to_json(r: FeketeReport) -> dict:
    return {"entries": [[int(k), float(v)] for k, v in r.entries],
            "final_bound": float(r.final_bound), "budget_hit": bool(r.budget_hit)}


def _check_to_json(c: VerificationCheck) -> dict:
    out = {"name": c.name, "passed": c.passed, "residual": c.residual,
           "threshold": c.threshold}
    if c.details is not None:
        out["details"] = {k: (float(v) if isinstance(v, (int, float, np.floating))
                              else v) for k, v in c.details.items()}
    return out


def verification_report_to_json(r: VerificationReport) -> dict:
    return {"passed": r.passed, "checks": [_check_to_json(c) for c in r.checks]}


def decomposition_report_to_json(result: DecompositionResult) -> dict:
    out = {
        "R0": result.R0,
        "R1": result.R1,
        "alpha": angle_to_json(result.alpha, result.basis),
        "beta": angle_to_json(result.beta, result.basis),
        "basis": basis_to_json(result.basis),
    }
    if result.radius_brackets is not None:
        out["radius_brackets"] = [[float(lo), float(hi)]
                                  for lo, hi in result.radius_brackets]
    if result.fekete_reports is not None:
        out["fekete"] = [fekete_report_to_json(r) for r in result.fekete_reports]
    if result.report is not None:
        out["verification"] = verification_report_to_json(result.report)
        out["passed"] = result.report.passed
    return out


PointsLike = Union[SpectrumSample, np.ndarray]


def sample_to_csv(sample: PointsLike) -> str:
    pts = sample.points if isinstance(sample, SpectrumSample) else np.asarray(sample)
    pts = np.asarray(pts, dtype=np.complex128).ravel()
    lines = ["re,im"]
    lines.extend(f"{float(z.real)!r},{float(z.imag)!r}" for z in pts)
    return "\n".join(lines) + "\n"


def points_from_csv(text: str) -> np.ndarray:
    rows = [ln for ln in text.strip().splitlines()
            if ln and not ln.startswith("#")]
    if not rows or rows[0].strip().lower() != "re,im":
        raise SchemaError("point CSV must start with an 're,im' header")
    out = []
    for ln in rows[1:]:
        try:
            a, b = ln.split(",")
            out.append(complex(float(a), float(b)))
        except Exception as exc:
            raise SchemaError(f"invalid CSV row {ln!r}: {exc}") from exc
    return np.asarray(out, dtype=np.complex128)
