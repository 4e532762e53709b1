"""Command-line surface.

Exit codes: 0 ok, 1 validation error, 2 computation error (conflict,
singularity, failed postselection), 3 I/O error.  All randomness flows
through explicit ``--seed`` flags; identical inputs, seeds and shot
counts produce byte-identical result documents.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import click
import numpy as np

from . import dst, quantum
from .documents import (
    dump_bba_document,
    dumps_result,
    inputs_digest,
    load_bba_document,
    result_document,
)
from .errors import ComputationError, QBeliefError, ValidationError
from .qasm import circuit_to_json, circuit_to_qasm
from .quantum import MEoBConfig
from .quantum.prepare import build_preparation_tree, synthesize_preparation_circuit

BACKENDS = ("classical", "quantum-oracle", "quantum-circuit")


def _meob_config(backend: str, t: int = 8) -> MEoBConfig:
    return MEoBConfig(backend="circuit" if backend == "quantum-circuit" else "oracle", t=t)


def _emit(doc: dict, out: str | None) -> None:
    text = dumps_result(doc)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _maybe_time(started: float, timing: bool) -> float | None:
    return (time.perf_counter() - started) if timing else None


@click.group()
def cli() -> None:
    """Belief-function computation on simulated quantum circuits."""


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
def validate(path: str) -> None:
    """Check a mass-function document and report its shape."""
    m = load_bba_document(path)
    flags = [
        name
        for name, active in [
            ("subnormal", m.subnormal),
            ("bayesian", m.bayesian),
            ("vacuous", m.vacuous),
            ("consonant", m.consonant),
        ]
        if active
    ]
    shape = ", ".join(flags) if flags else "normal"
    click.echo(
        f"valid, {len(m.focal_sets)} focal sets, {shape} "
        f"(mass sum {m.masses.sum():.12g}, n={m.frame.n})"
    )


@cli.command()
@click.option("--kind", type=click.Choice(["bel", "pl", "q", "fbba", "betm"]), required=True)
@click.option("--backend", type=click.Choice(BACKENDS), default="classical", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timing", is_flag=True, help="Attach wall time (breaks byte-identity).")
@click.argument("path", type=click.Path(dir_okay=False))
def transform(kind: str, backend: str, out: str | None, timing: bool, path: str) -> None:
    """Belief-function transform of one mass function.

    Classical backends print the full vector; quantum backends print the
    normalized state amplitudes, which carry the vector only up to scale.
    """
    started = time.perf_counter()
    m = load_bba_document(path)
    digest = inputs_digest("transform", kind, backend, dump_bba_document(m))
    labels = [m.frame.format_subset(i) for i in range(m.frame.size)]

    if backend == "classical":
        if kind == "fbba":
            values = dst.fbba(m).masses
        elif kind == "betm":
            values = dst.bet_m(m).values
        else:
            values = {
                "bel": dst.bel_from_mass,
                "pl": dst.pl_from_mass,
                "q": dst.q_from_mass,
            }[kind](m).values
        payload = {"subsets": labels, "values": values}
    else:
        cfg = _meob_config(backend)
        if kind in ("bel", "pl", "q"):
            state = quantum.belief_functions_qc(m, kind, cfg)
        else:
            matrix = dst.transform_matrix("fractal" if kind == "fbba" else "bet", m.frame.n)
            state, _ = quantum.evolve_mass(m, matrix, cfg)
        payload = {
            "subsets": labels,
            "values": np.abs(state.amps),
            "normalized_only": True,
            "note": "amplitudes carry the vector up to scale; totals are not observable",
        }
    _emit(
        result_document("transform." + kind, digest, backend, payload,
                        wall_time_s=_maybe_time(started, timing)),
        out,
    )


@cli.command()
@click.option("--rule", type=click.Choice(["ccr", "dcr", "dempster"]), required=True)
@click.option("--backend", type=click.Choice(BACKENDS), default="classical", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timing", is_flag=True)
@click.argument("path1", type=click.Path(dir_okay=False))
@click.argument("path2", type=click.Path(dir_okay=False))
def combine(rule: str, backend: str, out: str | None, timing: bool, path1: str, path2: str) -> None:
    """Combine two mass functions; quantum Dempster is quantum conjunctive
    combination plus the classical renormalization step."""
    started = time.perf_counter()
    m1 = load_bba_document(path1)
    m2 = load_bba_document(path2)
    digest = inputs_digest("combine", rule, backend, dump_bba_document(m1), dump_bba_document(m2))
    if backend == "classical":
        combined = {
            "ccr": dst.combine_conjunctive,
            "dcr": dst.combine_disjunctive,
            "dempster": dst.combine_dempster,
        }[rule](m1, m2)
    else:
        cfg = _meob_config(backend)
        combined = {
            "ccr": quantum.ccr_qc,
            "dcr": quantum.dcr_qc,
            "dempster": quantum.dempster_qc,
        }[rule](m1, m2, cfg)
    payload = {
        "subsets": [m1.frame.format_subset(i) for i in range(m1.frame.size)],
        "masses": combined.masses,
    }
    _emit(
        result_document("combine." + rule, digest, backend, payload,
                        wall_time_s=_maybe_time(started, timing)),
        out,
    )


@cli.command()
@click.option(
    "--measure",
    type=click.Choice(["jousselme", "fb-inner", "fidelity", "euclidean", "inner-bba"]),
    required=True,
)
@click.option("--backend", type=click.Choice(BACKENDS), default="classical", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timing", is_flag=True)
@click.argument("path1", type=click.Path(dir_okay=False))
@click.argument("path2", type=click.Path(dir_okay=False))
def similarity(measure: str, backend: str, out: str | None, timing: bool, path1: str, path2: str) -> None:
    """Similarity or distance between two mass functions.

    Quantum backends exist for the swap-test measures (fb-inner,
    fidelity); quadratic-form measures subtract mass vectors and have no
    circuit formulation.
    """
    started = time.perf_counter()
    m1 = load_bba_document(path1)
    m2 = load_bba_document(path2)
    digest = inputs_digest("similarity", measure, backend, dump_bba_document(m1), dump_bba_document(m2))
    if backend == "classical":
        value = {
            "jousselme": dst.jousselme_distance,
            "fb-inner": dst.fb_inner_product,
            "fidelity": dst.classical_fidelity,
            "euclidean": dst.euclidean_distance,
            "inner-bba": dst.inner_bba,
        }[measure](m1, m2)
    elif measure == "fb-inner":
        value = quantum.fb_inner_product_qc(m1, m2, _meob_config(backend))
    elif measure == "fidelity":
        est = quantum.swap_test(quantum.prepare_bba_state(m1), quantum.prepare_bba_state(m2))
        value = float(np.sqrt(max(est, 0.0)))
    else:
        raise ValidationError(f"measure {measure!r} has no quantum backend")
    _emit(
        result_document("similarity." + measure, digest, backend, {"value": value},
                        wall_time_s=_maybe_time(started, timing)),
        out,
    )


@cli.command()
@click.option("--kind", type=click.Choice(["js", "fb"]), required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timing", is_flag=True)
@click.argument("path", type=click.Path(dir_okay=False))
def entropy(kind: str, out: str | None, timing: bool, path: str) -> None:
    """Total-uncertainty measure of a mass function, in bits."""
    started = time.perf_counter()
    m = load_bba_document(path)
    digest = inputs_digest("entropy", kind, dump_bba_document(m))
    value = dst.js_entropy(m) if kind == "js" else dst.fb_entropy(m)
    _emit(
        result_document("entropy." + kind, digest, None, {"bits": value},
                        wall_time_s=_maybe_time(started, timing)),
        out,
    )


@cli.command()
@click.option("--method", type=click.Choice(["ppt", "ptm"]), required=True)
@click.option("--backend", type=click.Choice(BACKENDS), default="classical", show_default=True)
@click.option("--shots", type=int, default=None, help="Sample PTM extraction circuits.")
@click.option("--seed", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timing", is_flag=True)
@click.argument("path", type=click.Path(dir_okay=False))
def prob(method: str, backend: str, shots, seed, out: str | None, timing: bool, path: str) -> None:
    """Probability transform of a mass function over the frame elements."""
    started = time.perf_counter()
    m = load_bba_document(path)
    digest = inputs_digest("prob", method, backend, dump_bba_document(m), shots, seed)
    if backend == "classical":
        values = dst.betp(m) if method == "ppt" else dst.pl_p(m)
    elif method == "ppt":
        values = quantum.ppt_qc(m, _meob_config(backend))
    else:
        if shots is not None:
            if seed is None:
                raise ValidationError("--shots needs --seed for reproducibility")
            values = quantum.ptm_qc(m, mode="shots", shots=shots, seed=seed)
        else:
            values = quantum.ptm_qc(m, mode="statevector")
    payload = {"elements": list(m.frame.elements), "probabilities": values}
    _emit(
        result_document("prob." + method, digest, backend, payload, shots=shots, seed=seed,
                        wall_time_s=_maybe_time(started, timing)),
        out,
    )


@cli.command()
@click.option("--emit", "emit_kind", type=click.Choice(["qasm", "circuit-json"]), default=None)
@click.option("--shots", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timing", is_flag=True)
@click.argument("path", type=click.Path(dir_okay=False))
def prepare(emit_kind, shots, seed, out, timing: bool, path: str) -> None:
    """Synthesize the state-preparation circuit for a mass function.

    ``--emit`` writes the circuit (QASM decomposes to the x/ry/rz/h/cx
    library first); ``--shots`` with ``--seed`` samples the prepared state.
    """
    started = time.perf_counter()
    m = load_bba_document(path)
    circuit = synthesize_preparation_circuit(build_preparation_tree(m))
    if emit_kind is not None:
        if shots is not None and out is None:
            raise ValidationError("--emit plus --shots needs --out for the circuit file")
        text = circuit_to_qasm(circuit) if emit_kind == "qasm" else circuit_to_json(circuit)
        if out:
            Path(out).write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)
        if shots is None:
            return
        out = None  # the measurement record goes to stdout
    if shots is None:
        raise ValidationError("nothing to do: pass --emit and/or --shots")
    if seed is None:
        raise ValidationError("--shots needs --seed for reproducibility")
    state = quantum.prepare_bba_state(m)
    record = state.sample(shots, seed)
    digest = inputs_digest("prepare", dump_bba_document(m), shots, seed)
    payload = {
        "counts": {m.frame.format_subset(i): c for i, c in sorted(record.counts.items())},
        "frequencies": {
            m.frame.format_subset(i): c / shots for i, c in sorted(record.counts.items())
        },
    }
    _emit(
        result_document("prepare.sample", digest, "quantum-circuit", payload,
                        shots=shots, seed=seed, wall_time_s=_maybe_time(started, timing)),
        out,
    )


@cli.command()
@click.option("--shots", type=int, default=1024, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
def demo(shots: int, seed: int) -> None:
    """Three-element walkthrough: prepare, extract, sample, compare.

    Uses the built-in showcase assignment over {A, B, C} whose
    plausibility of C is 2/3 and commonality of {B, C} is 4/9.
    """
    m = demo_mass_function()
    state = quantum.prepare_bba_state(m)
    click.echo("prepared amplitudes (statevector mode):")
    click.echo(f"  {'subset':<8} {'amplitude':>12} {'amp^2':>12} {'mass':>12} {'delta':>10}")
    for i in range(m.frame.size):
        amp = state.amps[i].real
        click.echo(
            f"  {m.frame.format_subset(i):<8} {amp:>12.9f} {amp * amp:>12.9f}"
            f" {m.masses[i]:>12.9f} {abs(amp * amp - m.masses[i]):>10.2e}"
        )

    pl_c = quantum.estimate_belief(m, quantum.BeliefQuery("pl", 0b100))
    q_bc = quantum.estimate_belief(m, quantum.BeliefQuery("q", 0b110))
    click.echo(f"\nextraction (statevector): Pl(C) = {pl_c:.6f}, q(BC) = {q_bc:.6f}")
    click.echo(f"exact targets:            Pl(C) = {2 / 3:.6f}, q(BC) = {4 / 9:.6f}")

    pl_s = quantum.estimate_belief(m, quantum.BeliefQuery("pl", 0b100), "shots", shots, seed)
    q_s = quantum.estimate_belief(m, quantum.BeliefQuery("q", 0b110), "shots", shots, seed + 1)
    sigma_pl = 3 * np.sqrt((2 / 3) * (1 / 3) / shots)
    sigma_q = 3 * np.sqrt((4 / 9) * (5 / 9) / shots)
    click.echo(f"\nsampled with shots={shots}, seed={seed}:")
    click.echo(
        f"  Pl(C) = {pl_s:.6f}  delta {abs(pl_s - 2 / 3):.2e}  (3-sigma bound {sigma_pl:.2e})"
    )
    click.echo(
        f"  q(BC) = {q_s:.6f}  delta {abs(q_s - 4 / 9):.2e}  (3-sigma bound {sigma_q:.2e})"
    )

    record = state.sample(shots, seed)
    click.echo(f"\npreparation sampling, shots={shots}, seed={seed}:")
    for i in range(m.frame.size):
        freq = record.frequency(i)
        click.echo(
            f"  {m.frame.format_subset(i):<8} count {record.counts.get(i, 0):>6}"
            f"  freq {freq:.4f}  mass {m.masses[i]:.4f}"
        )


@cli.command(name="trend-fb")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def trend_fb(out: str | None) -> None:
    """Similarity trend over a growing focal set, as CSV.

    Ten rows: the variable focal set walks {t1}, {t1,t2}, ..., up to the
    whole ten-element frame; distances appear as 1 - distance so every
    column reads as a similarity.
    """
    rows = trend_rows()
    header = "focal_set,one_minus_jousselme,fb_inner,fidelity,one_minus_euclidean,inner_bba"
    lines = [header]
    for label, values in rows:
        lines.append(label + "," + ",".join(f"{v:.12g}" for v in values))
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


# --- fixtures shared with the test suite -------------------------------------


def demo_mass_function() -> dst.MassFunction:
    """The three-element showcase assignment used by the demo command."""
    frame = dst.Frame(["A", "B", "C"])
    ninth = Fraction(1, 9)
    masses = {
        ("A",): Fraction(1, 18),
        ("B",): Fraction(1, 6),
        ("C",): Fraction(1, 6),
        ("A", "B"): ninth,
        ("A", "C"): Fraction(1, 18),
        ("B", "C"): 2 * ninth,
        ("A", "B", "C"): 2 * ninth,
    }
    return dst.validate_bba(frame, {k: float(v) for k, v in masses.items()})


def trend_mass_functions() -> tuple[dst.Frame, list[tuple[str, dst.MassFunction]], dst.MassFunction]:
    """Ten-element trend fixtures: nested variable focal set vs a fixed
    certainty on the first five elements."""
    labels = [f"t{i}" for i in range(1, 11)]
    frame = dst.Frame(labels)
    fixed = dst.validate_bba(frame, {tuple(labels[:5]): 1.0})
    variants = []
    for k in range(1, 11):
        # masses accumulate when the moving set reaches the whole frame
        focal_masses: dict[int, float] = {}
        for focal, mass in [
            (tuple(labels[:k]), 0.8),
            (("t7",), 0.05),
            (("t2", "t3", "t4"), 0.05),
            (tuple(labels), 0.1),
        ]:
            idx = frame.index_of(focal)
            focal_masses[idx] = focal_masses.get(idx, 0.0) + mass
        moving = dst.validate_bba(frame, focal_masses)
        variants.append(("+".join(labels[:k]), moving))
    return frame, variants, fixed


def trend_rows() -> list[tuple[str, tuple[float, float, float, float, float]]]:
    _, variants, fixed = trend_mass_functions()
    rows = []
    for label, moving in variants:
        rows.append(
            (
                label,
                (
                    1.0 - dst.jousselme_distance(moving, fixed),
                    dst.fb_inner_product(moving, fixed),
                    dst.classical_fidelity(moving, fixed),
                    1.0 - dst.euclidean_distance(moving, fixed),
                    dst.inner_bba(moving, fixed),
                ),
            )
        )
    return rows


def main(argv: list[str] | None = None) -> None:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    except ValidationError as exc:
        _diagnostic(exc)
        sys.exit(1)
    except ComputationError as exc:
        _diagnostic(exc)
        sys.exit(2)
    except QBeliefError as exc:
        _diagnostic(exc)
        sys.exit(1)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(json.dumps({"error": type(exc).__name__, "message": str(exc)}), err=True)
        sys.exit(3)


def _diagnostic(exc: Exception) -> None:
    click.echo(json.dumps({"error": type(exc).__name__, "message": str(exc)}), err=True)


if __name__ == "__main__":
    main()
