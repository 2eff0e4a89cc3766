import sys
from functools import wraps
from pathlib import Path

import click

from ..logging import set_verbosity
from ..types import CapacityError, PyteachError, UnreachableError, ValidationError
from ..utils import dumps

EXIT_VALIDATION = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3


class PyteachGroup(click.Group):
    """
    Command group mapping pyteach errors to exit codes.
    """

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.ClickException as ex:
            ex.show()
            sys.exit(EXIT_VALIDATION)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_VALIDATION)
        except CapacityError as ex:
            click.echo(f"capacity error: {ex}", err=True)
            sys.exit(EXIT_CAPACITY)
        except (ValidationError, UnreachableError) as ex:
            click.echo(f"error: {ex}", err=True)
            sys.exit(EXIT_VALIDATION)
        except PyteachError as ex:
            click.echo(f"error: {ex}", err=True)
            sys.exit(EXIT_VALIDATION)


def emit(obj, json_path=None):
    """
    Write report as JSON to stdout and, optionally, to a file.
    """
    text = dumps(obj)
    click.echo(text)
    if json_path:
        Path(json_path).write_text(text + "\n")


def report_command(fn):
    """
    Decorate a command that returns a JSON-serializable report.
    """

    @click.option("--json", "json_path", help="Also save report to the given path")
    @click.option("--verbose", "-v", is_flag=True, help="Show debug messages on stderr")
    @wraps(fn)
    def command(json_path=None, verbose=False, **kwargs):
        if verbose:
            set_verbosity(2)
        emit(fn(**kwargs), json_path)

    return command


def class_option(required=True):
    return click.option(
        "--class",
        "class_ref",
        required=required,
        help="Bundled class name (warmuth, appendix, powerset-<k>) or a .csv/.json file",
    )


sigma_option = click.option(
    "--sigma",
    "sigma_ref",
    required=True,
    help="Bundled preference name, a builder (const, hamming, rtd-order) or a .json file",
)
h0_option = click.option("--h0", default=None, help="Initial hypothesis. Defaults to the first one")
cap_option = click.option("--cap", type=int, default=None, help="Override the capacity cap")


def resolve(class_ref=None, sigma_ref=None):
    """
    Return (class, sigma) from command line references.
    """
    from ..corpus import get_class, get_sigma

    cls = None if class_ref is None else get_class(class_ref)
    if sigma_ref is None:
        return cls, None
    if cls is None and sigma_ref.endswith(".json"):
        raise ValidationError("--class is required with a preference file")
    sigma = get_sigma(sigma_ref, cls)
    return sigma.cls, sigma


def parse_steps(cls, text):
    """
    Parse "x1:1,x2:0" into a list of labeled examples.
    """
    steps = []
    for item in filter(None, (s.strip() for s in (text or "").split(","))):
        x, sep, y = item.partition(":")
        if not sep or y not in ("0", "1"):
            raise ValidationError(f"invalid example {item!r}. Expected <instance>:<0|1>")
        steps.append(cls.example(x, int(y)))
    return steps


def parse_instances(cls, text):
    if text is None:
        return None
    return [cls.instance(x.strip()) for x in text.split(",") if x.strip()]


def _h0(cls, h0):
    return cls.hypothesis(0 if h0 is None else h0)


#
# Commands
#
@click.group(cls=PyteachGroup)
def cli():
    """
    Exact machine teaching complexity tools.
    """


@cli.command()
@class_option()
@cap_option
@click.option("--csv", "csv_path", help="Save per-hypothesis witnesses as CSV")
@report_command
def dims(class_ref, cap, csv_path):
    """
    VC, teaching, recursive teaching and non-clashing teaching dimensions.
    """
    from ..dims import dimension_report

    cls, _ = resolve(class_ref)
    report = dimension_report(cls.full, cap)
    if csv_path:
        report.to_frame().to_csv(csv_path)
    return report


@cli.command()
@class_option(required=False)
@sigma_option
@h0_option
@click.option("--jobs", "-j", type=int, default=None, help="Number of parallel workers")
@report_command
def tdsigma(class_ref, sigma_ref, h0, jobs):
    """
    Teaching complexity of a preference function.
    """
    from ..teach import target_costs

    cls, sigma = resolve(class_ref, sigma_ref)
    h0 = _h0(cls, h0)
    costs = target_costs(sigma, h0, n_jobs=jobs)
    names = cls.hypothesis_names
    return {
        "h0": names[h0],
        "td_sigma": max(costs.values()),
        "costs": {names[h]: c for h, c in costs.items()},
    }


@cli.command()
@class_option(required=False)
@sigma_option
@h0_option
@click.option("--target", required=True, help="Target hypothesis")
@report_command
def dsigma(class_ref, sigma_ref, h0, target):
    """
    Teaching cost of a single target, with an optimal plan.
    """
    from ..teach import UNREACHABLE, CostTable, extract_plan

    cls, sigma = resolve(class_ref, sigma_ref)
    h0, target = _h0(cls, h0), cls.hypothesis(target)
    table = CostTable(sigma, target)
    cost = table.cost(cls.full_mask, h0)
    plan = None if cost == UNREACHABLE else extract_plan(sigma, h0, target, table)
    return {"d_sigma": cost, "plan": plan}


@cli.command()
@class_option(required=False)
@sigma_option
@h0_option
@click.option("--steps", default="", help="Examples as x1:1,x2:0")
@click.option("--tie", type=click.Choice(["lex", "adversarial"]), default="lex")
@click.option("--target", default=None, help="Target used by the adversarial tie mode")
@report_command
def simulate(class_ref, sigma_ref, h0, steps, tie, target):
    """
    Replay a sequence of examples against the learner.
    """
    from ..teach import simulate

    cls, sigma = resolve(class_ref, sigma_ref)
    trace = simulate(sigma, _h0(cls, h0), parse_steps(cls, steps), tie=tie, target=target)
    out = trace.to_json()
    out["final"] = cls.hypothesis_names[trace.final]
    return out


@cli.command("check-collusion")
@class_option(required=False)
@sigma_option
@cap_option
@click.option("--exhaustive", is_flag=True, help="Check every example set, not single steps")
@report_command
def check_collusion(class_ref, sigma_ref, cap, exhaustive):
    """
    Check whether a preference function is collusion-free.
    """
    from ..prefs import collusion_free_check, collusion_free_exhaustive

    _, sigma = resolve(class_ref, sigma_ref)
    check = collusion_free_exhaustive if exhaustive else collusion_free_check
    return check(sigma, cap)


@cli.command("build-lvs")
@class_option()
@h0_option
@click.option("--compact", default=None, help="Top-level compact set, as x1,x2,...")
@click.option("--trace", is_flag=True, help="Include the recursion trace")
@report_command
def build_lvs(class_ref, h0, compact, trace):
    """
    Build a local version-space preference bounded by the VC dimension.
    """
    from ..construct import build_sigma_lvs
    from ..dims import vcd
    from ..prefs import collusion_free_check
    from ..teach import td_sigma

    cls, _ = resolve(class_ref)
    h0 = _h0(cls, h0)
    construction = build_sigma_lvs(cls, h0, parse_instances(cls, compact))
    out = construction.to_json(trace=trace)
    out["td_sigma"] = td_sigma(construction.sigma, h0)
    out["vcd"] = vcd(cls.full)
    out["collusion_free"] = bool(collusion_free_check(construction.sigma))
    return out


@cli.command("build-local-powerset")
@click.option("--k", "k", type=int, required=True, help="Number of instances")
@h0_option
@click.option("--no-check", is_flag=True, help="Skip the teaching complexity computation")
@report_command
def build_local_powerset(k, h0, no_check):
    """
    Build a local preference for the powerset class from a teaching tree.
    """
    from ..construct import build_sigma_local_powerset
    from ..teach import td_sigma

    construction = build_sigma_local_powerset(k, 0 if h0 is None else h0)
    out = construction.to_json()
    if not no_check:
        root = construction.cls.hypothesis(0 if h0 is None else h0)
        out["td_sigma"] = td_sigma(construction.sigma, root)
    return out


@cli.command()
@class_option()
@h0_option
@click.option("--compact", default=None, help="Compact-distinguishable set, as x1,x2,...")
@report_command
def partition(class_ref, h0, compact):
    """
    Partition the class around a reference hypothesis.
    """
    from ..construct import partition_class
    from ..dims import compact_distinguishable_set

    cls, _ = resolve(class_ref)
    X = parse_instances(cls, compact)
    if X is None:
        X = compact_distinguishable_set(cls.full)
    return partition_class(cls.full, X, _h0(cls, h0))


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Number of instances")
@report_command
def bound(d):
    """
    Counting lower bound on the teaching complexity of the powerset class.
    """
    from ..dims import sigma_td_lower_bound

    return {"d": d, "k_min": sigma_td_lower_bound(d)}


@cli.group(cls=PyteachGroup)
def corpus():
    """
    Bundled classes, preferences and teacher maps.
    """


@corpus.command("list")
@click.option("--kind", type=click.Choice(["class", "sigma", "teacher-map"]), default=None)
@report_command
def corpus_list(kind):
    """
    List bundled artifacts.
    """
    from ..corpus import list_artifacts

    return [{"kind": a.kind, "name": a.name} for a in list_artifacts(kind)]


@corpus.command("dump")
@click.argument("name")
@click.option("--kind", type=click.Choice(["class", "sigma", "teacher-map"]), default="class")
@report_command
def corpus_dump(name, kind):
    """
    Dump a bundled artifact as JSON.
    """
    from ..corpus import get_artifact

    return get_artifact(kind, name)


@cli.command()
@click.option("--cache", is_flag=True, help="Reuse results cached on disk")
@click.option("--expected", default=None, help="Expected values manifest")
@click.option("--json", "json_path", help="Also save report to the given path")
@click.option("--verbose", "-v", is_flag=True, help="Show progress on stderr")
def repro(cache, expected, json_path, verbose):
    """
    Recompute reference values and compare with the expected manifest.
    """
    from .repro import expected_values, reproduce

    if verbose:
        set_verbosity(1)
    manifest = expected_values() if expected is None else expected_values(expected)
    values, mismatches = reproduce(manifest, cache=cache)
    emit({"values": values, "mismatches": mismatches}, json_path)
    if mismatches:
        for m in mismatches:
            click.echo(f"mismatch {m['group']}/{m['key']}: {m['expected']} != {m['got']}", err=True)
        sys.exit(EXIT_MISMATCH)
