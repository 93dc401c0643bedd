"""
Flask command line application running the random Vandermonde experiments.

Every command writes a result table (CSV or JSON) with a `<out>.meta` sidecar holding the
configuration echo. Defaults of each experiment come from config/experiments/defaults.json;
flags override them. The worker count is read from VANDERSPEC_WORKERS.

Exit codes: 0 on success, 2 on a configuration error, 3 when a computation exceeds its budget.
"""
import logging
import os
import tempfile

import click
from flask import Flask

from vanderspec.errors import BudgetError
from vanderspec.experiments import load_experiment_config, parse_ns, parse_p_range, run_experiment
from vanderspec.exporter import export_result_table

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

app = Flask(__name__)

_OPTIONS = [
    click.option("--n", "ns", type=str, help="N or comma separated list of N (e.g. 16,32,64)"),
    click.option("--l", "l", type=int, help="number of columns L (overrides --beta)"),
    click.option("--beta", type=float, help="aspect ratio, L = round(beta * N**d)"),
    click.option("--d", "d", type=int, help="phase dimension (1, 2 or 3)"),
    click.option("--trials", type=int, help="number of independent trials"),
    click.option("--seed", type=int, help="base seed"),
    click.option("--eps", type=float, help="epsilon knob of the experiment"),
    click.option("--out", type=str, help="output file path (default: a file in the temp directory)"),
    click.option("--format", "fmt", type=click.Choice(["csv", "json"]), help="output format"),
    click.option("--k-seq", "k_seq", type=str, help="exponent sequence(s): linear, pow2, square (comma separated)"),
    click.option("--grid", type=int, help="bridge grid size M (power of two)"),
    click.option("--depth", type=int, help="dyadic phase depth R"),
    click.option("--p-range", "p_range", type=str, help="threshold exponents start:stop[:step], G at 10**-p"),
    click.option("--bins", type=int, help="histogram bin count (default: Freedman-Diaconis)"),
]


def experiment_options(func):
    for option in reversed(_OPTIONS):
        func = option(func)
    return func


def _overrides(options: dict) -> dict:
    overrides = dict(options)
    overrides.pop("out", None)
    if options.get("ns") is not None:
        overrides["ns"] = parse_ns(options["ns"])
    if options.get("p_range") is not None:
        overrides["p_range"] = parse_p_range(options["p_range"])
    return overrides


def run_command(name: str, options: dict) -> str:
    """Run one experiment from CLI options and export its table; returns the output path."""
    try:
        config = load_experiment_config(name, _overrides(options))
        table = run_experiment(config)
    except BudgetError as e:
        click.echo(f"Error: {e}", err=True)
        raise click.exceptions.Exit(3)
    except ValueError as e:
        raise click.UsageError(str(e))

    out = options.get("out")
    if not out:
        out = os.path.join(tempfile.gettempdir(), f"vanderspec_{name}_{config.seed}.{config.fmt}")
    written = export_result_table(table, out, config.fmt)
    click.echo(f"{name}: {len(table)} rows saved to: {out} ({len(written)} files)")
    return out


@app.cli.command("atom-probe",
                 help="""\
 Average fraction G_N(10^-p) of eigenvalues of V*V at most 10^-p, for every p of --p-range.

 Example:
     flask --app cli.py atom-probe --n 200 --trials 50 --p-range 1:16 --out tmp/atom.csv
     flask --app cli.py atom-probe --n 64 --beta 2 --out tmp/atom-rectangular.csv
 """)
@experiment_options
def atom_probe(**options):
    run_command("atom-probe", options)


@app.cli.command("polymax-bound",
                 help="""\
 Mean of 2 log max|P| over random unit-circle polynomials and the exceedance frequency of
 both eps thresholds, for every N of --n.

 Example:
     flask --app cli.py polymax-bound --n 100,200,400 --trials 1000 --eps 0.5
 """)
@experiment_options
def polymax_bound(**options):
    run_command("polymax-bound", options)


@app.cli.command("mp-hist",
                 help="""\
 Eigenvalue histogram of VV* for a generalized Vandermonde matrix (--k-seq), with the
 Marchenko-Pastur overlay for pow2 and the empirical moments r = 1..4 in the metadata.

 Example:
     flask --app cli.py mp-hist --n 100 --trials 1000 --k-seq pow2 --bins 40
 """)
@experiment_options
def mp_hist(**options):
    run_command("mp-hist", options)


@app.cli.command("crossing-count",
                 help="""\
 Exact |S_rho,N| / N^3 of the crossing partition {{1,3},{2,4}} for every sequence of --k-seq.

 Example:
     flask --app cli.py crossing-count --n 10,20,50,100 --k-seq square,pow2
 """)
@experiment_options
def crossing_count(**options):
    run_command("crossing-count", options)


@app.cli.command("maxeig-scan",
                 help="""\
 Largest eigenvalue of V*V with L = round(beta N^d) over an N scan, with its log N^d ratios,
 the row-sum bound and the occupancy lower bound.

 Example:
     flask --app cli.py maxeig-scan --n 32,64,128,256 --d 1 --beta 1 --trials 200
 """)
@experiment_options
def maxeig_scan(**options):
    run_command("maxeig-scan", options)


@app.cli.command("mineig-scan",
                 help="""\
 Smallest eigenvalue of square V*V (Jacobi, N <= 64) against its polynomial sandwich bounds,
 and the frequency of the 2 log max|P| threshold event at --eps.

 Example:
     flask --app cli.py mineig-scan --n 8,16,32 --trials 20
 """)
@experiment_options
def mineig_scan(**options):
    run_command("mineig-scan", options)


@app.cli.command("bridge-sim",
                 help="""\
 Brownian bridge paths on a grid of --grid points: I_phi over the dyadic phases to --depth,
 their maximum I*, its empirical CDF and a single-path trace.

 Example:
     flask --app cli.py bridge-sim --trials 2000 --grid 1048576 --depth 6 --eps 0.001
 """)
@experiment_options
def bridge_sim(**options):
    run_command("bridge-sim", options)
