"""Command-line interface.

Usage:
    shiftdtw dist --measure shiftdtw -r 4 a.csv b.csv
    shiftdtw cluster --k 2 --measure shiftdtw -r 4 --seed 7 --labels BeetleFly_TRAIN.tsv
    shiftdtw bench --lengths 64,128,256,512 --radii 2,4,8 --plot bench.png

The result document goes to stdout (or ``--out``); diagnostics go to stderr.
Exit codes: 0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .bench import METHODS, run_benchmark
from .clustering import MEASURES, KMeansConfig, MeasureSpec, kmeans
from .core import TimeSeries, znormalize
from .distances import dtw, euclidean, shift_dtw
from .evaluation import clustering_accuracy
from .exceptions import ShiftDTWError
from .io import ResultDocument, load_dataset, render_result

__all__ = ["cli", "main"]

_RADIUS_KINDS = {"dtw_banded", "shiftdtw"}


def _measure_options(default):
    def decorate(fn):
        fn = click.option("-r", "--radius", type=int, default=None,
                          help="Sakoe-Chiba band radius (dtw_banded, shiftdtw).")(fn)
        fn = click.option("--measure", type=click.Choice(MEASURES), default=default,
                          show_default=True)(fn)
        return fn
    return decorate


def _input_options(fn):
    fn = click.option("--znorm", is_flag=True, help="z-normalise every series after loading.")(fn)
    fn = click.option("--header", is_flag=True, help="CSV inputs start with a header row.")(fn)
    return fn


def _output_options(default_format):
    def decorate(fn):
        fn = click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
                          default=None, help="Write the result here instead of stdout.")(fn)
        fn = click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
                          default=default_format, show_default=True)(fn)
        return fn
    return decorate


def _measure_spec(measure: str, radius: int | None) -> MeasureSpec:
    if measure in _RADIUS_KINDS and radius is None:
        raise click.UsageError(f"--measure {measure} requires -r/--radius")
    if measure not in _RADIUS_KINDS and radius is not None:
        raise click.UsageError(f"-r/--radius is not used by --measure {measure}")
    if radius is not None and radius < 0:
        raise click.BadParameter("must be non-negative", param_hint="-r/--radius")
    return MeasureSpec(measure, radius)


def _check_radius(spec: MeasureSpec, length: int):
    if spec.radius is not None and spec.radius >= length:
        raise click.BadParameter(
            f"{spec.radius} is not smaller than the series length {length}",
            param_hint="-r/--radius",
        )


def _emit(doc: ResultDocument, fmt: str, out: Path | None):
    text = render_result(doc, fmt)
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise click.ClickException(f"cannot write {out}: {exc.strerror or exc}")
    click.echo(f"wrote {out}", err=True)


def _read_series(source: str, header: bool, znorm: bool) -> TimeSeries:
    path = Path(source)
    if path.exists():
        data = load_dataset(path, header=header)
        if len(data) > 1:
            click.echo(f"{source}: {len(data)} series found, using the first", err=True)
        series = data[0]
    else:
        try:
            values = [float(v) for v in source.split(",")]
        except ValueError:
            raise click.BadParameter(
                f"{source!r} is neither a file nor a comma-separated list of numbers",
                param_hint="SERIES",
            )
        series = TimeSeries(values, id=source)
    return znormalize(series) if znorm else series


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact", prog_name="shiftdtw")
def cli():
    """Cyclic time-series distances and shift-aware K-Means."""


@cli.command("dist")
@click.argument("series_a")
@click.argument("series_b")
@_measure_options("shiftdtw")
@click.option("--per-offset", is_flag=True, help="Report the distance at every tested offset.")
@_input_options
@_output_options("json")
@click.option("--threads", type=click.IntRange(min=1), default=1,
              help="Accepted for symmetry with other commands; a single pair runs serially.")
@click.option("--plot", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Also draw the doubled cost matrix and tested bands (shiftdtw only).")
def cmd_dist(series_a, series_b, measure, radius, per_offset, header, znorm, fmt, out,
             threads, plot):
    """Distance between two series, each a file (first row used) or an inline CSV list."""
    spec = _measure_spec(measure, radius)
    if plot is not None and spec.kind != "shiftdtw":
        raise click.UsageError("--plot is only available with --measure shiftdtw")
    try:
        a = _read_series(series_a, header, znorm)
        b = _read_series(series_b, header, znorm)
        _check_radius(spec, len(a))
        payload = {"series_a": series_a, "series_b": series_b}
        if spec.kind == "shiftdtw":
            res = shift_dtw(a, b, spec.radius, per_offset=per_offset)
            payload.update(distance=res.distance, shift=res.shift,
                           visited_cells=res.visited_cells)
            if per_offset:
                payload["per_offset"] = [[o, d] for o, d in res.per_offset_distances]
        elif spec.kind == "euclidean":
            payload.update(distance=euclidean(a, b), shift=0, visited_cells=len(a))
        else:
            res = dtw(a, b, spec.radius)
            payload.update(distance=res.distance, shift=0, visited_cells=res.visited_cells)
        doc = ResultDocument("dist", spec.to_dict(), payload)
        if fmt == "csv":
            doc.payload = {k: payload[k] for k in ("distance", "shift", "visited_cells")}
        _emit(doc, fmt, out)
        if plot is not None:
            from .plotting import plot_shift_windows

            click.echo(f"wrote {plot_shift_windows(a, b, spec.radius, plot)}", err=True)
    except ShiftDTWError as exc:
        raise click.ClickException(str(exc))


@cli.command("cluster")
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--k", type=int, required=True, help="Number of clusters.")
@_measure_options("shiftdtw")
@click.option("--n-init", type=int, default=10, show_default=True)
@click.option("--max-iter", type=int, default=50, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--labels", is_flag=True,
              help="Series carry class labels (UCR .tsv always, CSV first column); report accuracy.")
@click.option("--id-column", is_flag=True, help="CSV rows start with a series id.")
@_input_options
@_output_options("json")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
              help="Run restarts in parallel; output does not depend on it.")
@click.option("--plot", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Also draw the shifted members and barycenter of every cluster.")
def cmd_cluster(dataset, k, measure, radius, n_init, max_iter, seed, labels, id_column,
                header, znorm, fmt, out, threads, plot):
    """K-Means with K-Means++ seeding, best of --n-init restarts by inertia."""
    spec = _measure_spec(measure, radius)
    if k < 1:
        raise click.BadParameter("must be >= 1", param_hint="--k")
    if n_init < 1:
        raise click.BadParameter("must be >= 1", param_hint="--n-init")
    if max_iter < 1:
        raise click.BadParameter("must be >= 1", param_hint="--max-iter")
    try:
        data = load_dataset(dataset, header=header, id_column=id_column,
                            labels=labels, znorm=znorm)
        _check_radius(spec, data.length)
        if k > len(data):
            raise click.BadParameter(f"{k} exceeds the {len(data)} series in {dataset}",
                                     param_hint="--k")
        config = KMeansConfig(k, spec, n_init=n_init, max_iter=max_iter, seed=seed)
        result = kmeans(data, config, threads=threads)
        payload = {
            "dataset": str(dataset),
            "config": config.to_dict(),
            "inertia": result.inertia,
            "iterations_run": result.iterations_run,
        }
        if labels:
            if data.labels is None:
                raise click.ClickException(f"{dataset} has no labels")
            payload["accuracy"] = clustering_accuracy(result.assignments, data.labels, k)
        payload["barycenters"] = [b.values.tolist() for b in result.barycenters]
        records = []
        for s, cluster, shift in zip(data, result.assignments, result.shifts):
            rec = {"id": s.id, "cluster": cluster, "shift": shift}
            if labels:
                rec["label"] = s.label
            records.append(rec)
        doc = ResultDocument("cluster", spec.to_dict(), payload, records)
        _emit(doc, fmt, out)
        click.echo(f"inertia={result.inertia:.6g} iterations={result.iterations_run} "
                   f"best_restart={result.best_restart}", err=True)
        if plot is not None:
            from .plotting import plot_clusters

            click.echo(f"wrote {plot_clusters(data, result, plot)}", err=True)
    except ShiftDTWError as exc:
        raise click.ClickException(str(exc))


def _int_list(ctx, param, value):
    try:
        items = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if not items:
        raise click.BadParameter("needs at least one value")
    return items


@cli.command("bench")
@click.option("--lengths", default="64,128,256,512", show_default=True, callback=_int_list)
@click.option("--radii", default="2,4,8", show_default=True, callback=_int_list)
@click.option("--methods", default=",".join(METHODS), show_default=True)
@click.option("--repeats", type=click.IntRange(min=1), default=3, show_default=True,
              help="Timing repetitions; the minimum is reported.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--timing/--no-timing", default=False, show_default=True,
              help="Measure wall time. Off by default so the output is reproducible.")
@_output_options("csv")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
              help="Evaluate grid points in parallel (ignored with --timing).")
@click.option("--plot", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Also draw visited cells (and wall time) against series length.")
def cmd_bench(lengths, radii, methods, repeats, seed, timing, fmt, out, threads, plot):
    """Visited cells and wall time of each method over a grid of lengths and radii."""
    chosen = [m.strip() for m in methods.split(",") if m.strip()]
    unknown = sorted(set(chosen) - set(METHODS))
    if unknown or not chosen:
        raise click.BadParameter(f"unknown methods {unknown}; choose from {', '.join(METHODS)}",
                                 param_hint="--methods")
    if any(m < 1 for m in lengths):
        raise click.BadParameter("lengths must be >= 1", param_hint="--lengths")
    if any(r < 0 for r in radii):
        raise click.BadParameter("radii must be >= 0", param_hint="--radii")
    try:
        rows = run_benchmark(lengths, radii, seed=seed, repeats=repeats, methods=chosen,
                             timing=timing, threads=threads)
        payload = {"lengths": lengths, "radii": radii, "seed": seed, "timing": timing}
        _emit(ResultDocument("bench", None, payload, rows), fmt, out)
        if plot is not None:
            from .plotting import plot_benchmark

            click.echo(f"wrote {plot_benchmark(rows, plot)}", err=True)
    except ShiftDTWError as exc:
        raise click.ClickException(str(exc))


def main(argv=None):
    return cli.main(args=argv, prog_name="shiftdtw")


if __name__ == "__main__":
    sys.exit(main())
