# -*- coding: utf-8 -*-
"""
Command line access to the presentation, the group tables and the checks.

Results go to stdout, logs to stderr. Exit codes: 0 success, 1 failed
check, 2 invalid input, 3 resource limit.
"""
import functools
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
import logzero
from chaoslib.types import Configuration
from logzero import logger

from chaospu import __version__, get_setting
from chaospu import probes as checks
from chaospu.arithmetic import binomial, binomial_gcd_sequence, \
    check_binomial_gcd_factorization, cstar_multiplier, factorize, \
    kummer_check, split_identity
from chaospu.exceptions import InternalInconsistency, InvalidInput, \
    ResourceLimitExceeded, VerificationFailed
from chaospu.gysin import gysin_closed, gysin_image
from chaospu.koszul import probes as oracle
from chaospu.koszul.pages import check_oracle_bound
from chaospu.multiindex import MultiIndex, PSequence, prime_index_set
from chaospu.presentation import probes as claims
from chaospu.presentation.export import FORMATS, groups_to_json, render, \
    render_groups
from chaospu.presentation.groups import groups_by_degree, \
    primary_decomposition, primary_groups_by_degree, sanity_suite
from chaospu.presentation.relations import minimal_relations, present

__all__ = ["cli"]

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3


def _exit_codes(f: Callable) -> Callable:
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except InvalidInput as x:
            click.echo("error: {x}".format(x=str(x)), err=True)
            sys.exit(EXIT_INVALID)
        except ResourceLimitExceeded as x:
            click.echo("error: {x}".format(x=str(x)), err=True)
            sys.exit(EXIT_RESOURCE)
        except (VerificationFailed, InternalInconsistency) as x:
            click.echo("mismatch: {x}".format(x=str(x)), err=True)
            sys.exit(EXIT_MISMATCH)
    return wrapper


def _settings_options(f: Callable) -> Callable:
    options = [
        click.option("--format", "output_format", default=None,
                     type=click.Choice(FORMATS),
                     help="Output format, text by default."),
        click.option("--max-degree", type=int, default=None,
                     help="Highest degree to compute, n^2+1 by default."),
        click.option("--oracle-max-n", type=int, default=None,
                     help="Largest n the Koszul oracle accepts."),
        click.option("--jobs", type=int, default=None,
                     help="Worker processes for per-degree work."),
        click.option("--seed", type=int, default=None,
                     help="Seed for the random property checks."),
        click.option("--verbose", is_flag=True, default=None,
                     help="Log computation progress to stderr."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _configure(output_format: Optional[str], max_degree: Optional[int],
               oracle_max_n: Optional[int], jobs: Optional[int],
               seed: Optional[int], verbose: Optional[bool]) -> Configuration:
    """
    Flags override settings from the environment and the configuration file.
    """
    flags = {"format": output_format, "max_degree": max_degree,
             "oracle_max_n": oracle_max_n, "jobs": jobs, "seed": seed,
             "verbose": verbose}
    configuration = {k: v for k, v in flags.items() if v is not None}
    if configuration.get("jobs") is not None and configuration["jobs"] < 1:
        raise InvalidInput("jobs must be positive, got {j}".format(
            j=configuration["jobs"]))

    verbose = get_setting("verbose", configuration, False)
    if isinstance(verbose, str):
        verbose = verbose.lower() in ("1", "true", "yes")
    logzero.loglevel(logging.DEBUG if verbose else logging.WARNING)
    return configuration


def _format(configuration: Configuration) -> str:
    output_format = get_setting("format", configuration, "text")
    if output_format not in FORMATS:
        raise InvalidInput("format must be one of {f}, got '{g}'".format(
            f=", ".join(FORMATS), g=output_format))
    return output_format


def _int_setting(key: str, configuration: Configuration,
                 default: Any = None) -> Optional[int]:
    value = get_setting(key, configuration, default)
    if value is None:
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InvalidInput("{k} must be an integer, got '{v}'".format(
            k=key, v=value))


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_window(text: Optional[str]) -> Optional[Tuple[int, int]]:
    if not text:
        return None
    try:
        low, high = (int(v) for v in text.split(","))
    except ValueError:
        raise InvalidInput(
            "window must read LOW,HIGH, got '{t}'".format(t=text))
    if low < 0 or high < low:
        raise InvalidInput("window {t} is empty".format(t=text))
    return low, high


def _run_checks(named: List[Tuple[str, Callable[[], Any]]]) -> Dict[
        str, Dict[str, Any]]:
    """
    Run each check, turning a failure into a report row. Resource limits
    propagate.
    """
    results = {}
    for name, check in named:
        logger.info("Running {c}".format(c=name))
        try:
            check()
            results[name] = {"match": True, "message": None}
        except VerificationFailed as x:
            results[name] = {"match": False, "message": str(x)}
    return results


def _emit_checks(n: int, results: Dict[str, Dict[str, Any]],
                 output_format: str):
    if output_format == "json":
        click.echo(_dump({"n": n, "checks": results}), nl=False)
    else:
        for name, row in results.items():
            if row["match"]:
                click.echo("{c}: ok".format(c=name))
            else:
                click.echo("{c}: FAILED {m}".format(c=name, m=row["message"]))
    if not all(row["match"] for row in results.values()):
        sys.exit(EXIT_MISMATCH)


@click.group()
@click.version_option(version=__version__)
def cli():
    """
    Exact computations in the integral cohomology of PU(n).
    """


@cli.command("present")
@click.argument("n", type=click.IntRange(min=2))
@click.option("--full", is_flag=True,
              help="Keep relations implied by earlier ones.")
@_settings_options
@_exit_codes
def present_command(n: int, full: bool, **flags):
    """
    The ring presentation of H*(PU(n)); LaTeX renders the per-prime
    relation generators.
    """
    configuration = _configure(**flags)
    presentation = present(n)
    if not full:
        presentation = minimal_relations(presentation)
    click.echo(render(presentation, _format(configuration)), nl=False)


def _closed_form(n: int, index: MultiIndex) -> Optional[Any]:
    if len(index) < 2:
        return None
    for p in factorize(n).primes:
        if all(i in prime_index_set(n, p) for i in index):
            return gysin_closed(n, PSequence.from_multiindex(index, p))
    return None


@cli.command("theta")
@click.argument("n", type=click.IntRange(min=2))
@click.argument("index")
@_settings_options
@_exit_codes
def theta_command(n: int, index: str, **flags):
    """
    The connecting map on xi_I, I given as e.g. 1,2,8; with the closed form
    when I lies in the powers of one prime.
    """
    configuration = _configure(**flags)
    multi = MultiIndex.parse(n, index)
    if not multi.elements:
        raise InvalidInput("the connecting map needs a non-empty index")
    value = gysin_image(n, multi)
    closed = _closed_form(n, multi)
    sign = None
    if closed is not None:
        sign = 1 if value == closed else -1 if value == -closed else 0

    if _format(configuration) == "json":
        click.echo(_dump({
            "n": n, "index": str(multi), "value": value.to_json(),
            "closed": closed.to_json() if closed is not None else None,
            "sign": sign}), nl=False)
        return
    if _format(configuration) == "latex":
        click.echo("${v}$".format(v=value.to_latex()))
    else:
        click.echo(value.to_text())
    if closed is not None:
        click.echo("closed: {c}".format(c=closed.to_text()))
        click.echo("agrees: {a}".format(
            a="true" if sign else "false"))


@cli.command("groups")
@click.argument("n", type=click.IntRange(min=2))
@_settings_options
@_exit_codes
def groups_command(n: int, **flags):
    """
    H^d(PU(n)) for d = 0..max-degree.
    """
    configuration = _configure(**flags)
    groups = groups_by_degree(
        n, _int_setting("max_degree", configuration),
        jobs=_int_setting("jobs", configuration, 1))
    click.echo(render_groups(groups, _format(configuration)), nl=False)


@cli.command("primary")
@click.argument("n", type=click.IntRange(min=2))
@click.option("--prime", type=int, default=None,
              help="Only this prime divisor of n.")
@_settings_options
@_exit_codes
def primary_command(n: int, prime: Optional[int], **flags):
    """
    The p-primary parts per degree from the per-prime relations, and the
    check of the expected decomposition.
    """
    configuration = _configure(**flags)
    d_max = _int_setting("max_degree", configuration)
    factors = factorize(n)
    primes = factors.primes
    if prime is not None:
        if prime not in primes:
            raise InvalidInput("{p} is not a prime divisor of {n}".format(
                p=prime, n=n))
        primes = (prime,)

    parts = [(p, primary_groups_by_degree(n, p, d_max)) for p in primes]
    report = primary_decomposition(n, d_max)
    summary = {"poincare_match": report["poincare_match"],
               "annihilated": {str(p): ok
                               for p, ok in report["annihilated"].items()},
               "match": report["match"]}

    output_format = _format(configuration)
    if output_format == "json":
        click.echo(_dump({
            "n": n,
            "primes": [{"p": p, "r": factors.exponent(p),
                        "groups": groups_to_json(groups)}
                       for p, groups in parts],
            "decomposition": summary}), nl=False)
    else:
        for p, groups in parts:
            click.echo("p={p} r={r}".format(p=p, r=factors.exponent(p)))
            click.echo(render_groups(groups, output_format), nl=False)
        click.echo("decomposition matches: {m}".format(
            m="true" if summary["match"] else "false"))
    if not summary["match"]:
        sys.exit(EXIT_MISMATCH)


@cli.command("verify")
@click.argument("n", type=click.IntRange(min=2))
@click.option("--window", default=None,
              help="Total degree window LOW,HIGH for the oracle.")
@_settings_options
@_exit_codes
def verify_command(n: int, window: Optional[str], **flags):
    """
    Compare everything with the Koszul oracle. A degree window only
    compares the groups in that window, and admits n up to 8.
    """
    configuration = _configure(**flags)
    span = _parse_window(window or get_setting("oracle_window",
                                               configuration))
    check_oracle_bound(n, span, configuration)
    jobs = _int_setting("jobs", configuration, 1)

    def c(f, *args, **kwargs):
        return lambda: f(*args, configuration=configuration, **kwargs)

    named = [("coinvariant_rank", c(oracle.coinvariant_rank_check, n))]
    if span is None:
        named.extend([
            ("differential_squares_pu",
             c(oracle.differential_squares_to_zero, n, False)),
            ("differential_squares_u",
             c(oracle.differential_squares_to_zero, n, True)),
            ("cocycles", c(oracle.cocycle_check, n)),
            ("restriction_coboundaries",
             c(oracle.restriction_coboundary_check, n)),
            ("omega_orders", c(oracle.omega_order_check, n)),
            ("top_class", c(oracle.top_class_check, n)),
            ("unitary_page", c(oracle.unitary_page_check, n)),
            ("connecting_map", c(oracle.gysin_oracle_check, n)),
        ])
    named.append(("groups", c(oracle.oracle_groups_agree, n, jobs=jobs,
                              window=span)))
    _emit_checks(n, _run_checks(named), _format(configuration))


@cli.command("sanity")
@click.argument("n", type=click.IntRange(min=2))
@_settings_options
@_exit_codes
def sanity_command(n: int, **flags):
    """
    Facts every H*(PU(n)) satisfies, checked on the computed groups.
    """
    configuration = _configure(**flags)
    groups = groups_by_degree(n, n * n + 1,
                              jobs=_int_setting("jobs", configuration, 1))
    report = sanity_suite(n, groups)
    results = {k: {"match": ok, "message": None if ok else "fails"}
               for k, ok in report.items()}
    _emit_checks(n, results, _format(configuration))


@cli.command("properties")
@click.argument("n", type=click.IntRange(min=2))
@click.option("--trials", type=click.IntRange(min=1), default=10,
              help="Random pairs for the product rule.")
@_settings_options
@_exit_codes
def properties_command(n: int, trials: int, **flags):
    """
    Algebraic properties of the connecting map and of the relations; the
    product rule runs on seeded random pairs when the oracle admits n.
    """
    configuration = _configure(**flags)
    seed = _int_setting("seed", configuration, 0)

    def c(f, *args, **kwargs):
        return lambda: f(*args, configuration=configuration, **kwargs)

    named = [
        ("integrality", c(checks.integrality_holds, n)),
        ("closed_form", c(checks.closed_form_agrees, n)),
        ("prime_splitting", c(checks.prime_splitting_check, n)),
        ("torsion_multiples", c(checks.torsion_multiple_check, n)),
        ("relation_generators", c(claims.relation_generators_match, n)),
        ("unitary_restriction", c(claims.unitary_restriction_check, n)),
        ("relation_forms", c(claims.primary_form_agrees, n)),
        ("torsion_predictions", c(claims.torsion_predictions_hold, n)),
        ("rank_counts", c(claims.euler_characteristic_consistent, n)),
        ("decomposition", c(claims.decomposition_shape_holds, n)),
    ]
    bound = _int_setting("oracle_max_n", configuration, 6)
    if n <= bound:
        named.append(("product_rule", c(oracle.product_rule_check, n,
                                        seed=seed, trials=trials)))
    _emit_checks(n, _run_checks(named), _format(configuration))


@cli.command("arith")
@click.argument("n", type=click.IntRange(min=2))
@_settings_options
@_exit_codes
def arith_command(n: int, **flags):
    """
    C(n,r), b_{n,r} and c_r for r = 1..n, with the arithmetic checks.
    """
    configuration = _configure(**flags)
    b = binomial_gcd_sequence(n)
    rows = []
    for r in range(1, n + 1):
        rows.append({"r": r, "binomial": str(binomial(n, r)),
                     "b": str(b[r - 1]),
                     "c": str(cstar_multiplier(n, r)) if r >= 2 else None})

    splits = []
    for p, e in factorize(n).pairs:
        for s in range(1, e + 1):
            identity = split_identity(n, p, s)
            splits.append({"p": p, "s": s,
                           "main_sum": str(identity.main_sum),
                           "sign": identity.tail_sign})
    results = {"factorization": check_binomial_gcd_factorization(n),
               "kummer": kummer_check(n)}

    if _format(configuration) == "json":
        click.echo(_dump({"n": n, "rows": rows, "splits": splits,
                          "checks": results}), nl=False)
    else:
        click.echo("r\tC(n,r)\tb\tc")
        for row in rows:
            click.echo("{r}\t{c}\t{b}\t{m}".format(
                r=row["r"], c=row["binomial"], b=row["b"],
                m=row["c"] or "-"))
        for name, ok in results.items():
            click.echo("{k}: {v}".format(k=name, v="ok" if ok else "FAILED"))
    if not all(results.values()):
        sys.exit(EXIT_MISMATCH)
