"""
Command line interface.

Exit codes: 0 on success or an affirmative verdict, 1 on a negative
verdict, 2 on a parse error, 3 on invalid twist parameters.
"""

import functools
import json
import sys
import typing

import click
from tabulate import tabulate

from twistlie.checks import default_check_params, run_all
from twistlie.diamond import enumerate_ambiguities, ambiguities_frame, \
    resolve
from twistlie.engine.exceptions import InvalidParams, NotLiePolynomial, \
    NotResolvable, ParseError
from twistlie.freealg import parse
from twistlie.lie import decompose, expand, lie_closure, witness
from twistlie.logger import set_verbosity
from twistlie.rewrite import ReductionSystem
from twistlie.scalars import TwistParams
from twistlie.version import __version__

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_PARAMS = 3

TEXT = 'text'
JSON = 'json'


def build_params(mode: str, m: typing.Optional[str],
                 b: typing.Optional[str]) -> TwistParams:
    """
    :return: Twist parameters from command line values.
    :raises InvalidParams: on inconsistent or invalid values.
    """
    if mode == TwistParams.SYMBOLIC and (m is not None or b is not None):
        raise InvalidParams("--m and --b require --mode concrete.")
    return TwistParams(mode, m, b)


def _emit(command: str, params: TwistParams, given: typing.Any,
          result: typing.Dict[str, typing.Any], text: str, output: str):
    if output == JSON:
        click.echo(json.dumps({
            'command': command,
            'params': params.describe(),
            'input': given,
            'result': result,
        }, indent=2, default=str))
    else:
        click.echo(text)


def twist_options(func):
    """Add `--mode`, `--m`, `--b` and `--output` to a command."""
    options = [
        click.option('--mode', type=click.Choice(TwistParams.MODES),
                     default=TwistParams.SYMBOLIC, show_default=True,
                     help='Keep m, b symbolic or fix rational values.'),
        click.option('--m', 'm', default=None,
                     help='Rational slope m, concrete mode only.'),
        click.option('--b', 'b', default=None,
                     help='Rational intercept b, concrete mode only.'),
        click.option('--output', type=click.Choice([TEXT, JSON]),
                     default=TEXT, show_default=True,
                     help='Output format.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def exit_codes(func):
    """Translate TwistLie errors into exit codes."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            code = func(*args, **kwargs)
        except ParseError as error:
            click.echo(f'Error: {error}', err=True)
            sys.exit(EXIT_PARSE)
        except InvalidParams as error:
            click.echo(f'Error: {error}', err=True)
            sys.exit(EXIT_PARAMS)
        except NotLiePolynomial as error:
            click.echo(f'Error: {error}', err=True)
            sys.exit(EXIT_NEGATIVE)
        sys.exit(code or EXIT_OK)
    return wrapper


@click.group()
@click.version_option(__version__, prog_name='twistlie')
def cli():
    """Exact computations in F<A,B>/(AB - m BA - b I)."""


@cli.command()
@twist_options
@click.argument('expr')
@exit_codes
def nf(mode, m, b, output, expr):
    """Print the normal form of EXPR."""
    params = build_params(mode, m, b)
    system = ReductionSystem(params)
    result = system.normal_form(parse(expr, params))
    _emit('nf', params, expr, {'normal_form': str(result)}, str(result),
          output)


def _decomposition(command, mode, m, b, output, expr):
    params = build_params(mode, m, b)
    system = ReductionSystem(params)
    parts = decompose(parse(expr, params), system)
    result = {
        'is_lie': parts.is_lie,
        'lie_part': str(parts.lie_part),
        'complement_part': str(parts.complement_part),
    }
    text = '\n'.join([
        'yes' if parts.is_lie else 'no',
        f'lie part: {parts.lie_part}',
        f'complement part: {parts.complement_part}',
    ])
    _emit(command, params, expr, result, text, output)
    return parts


@cli.command('is-lie')
@twist_options
@click.argument('expr')
@exit_codes
def is_lie(mode, m, b, output, expr):
    """Decide whether EXPR is a Lie polynomial in A and B."""
    parts = _decomposition('is-lie', mode, m, b, output, expr)
    return EXIT_OK if parts.is_lie else EXIT_NEGATIVE


@cli.command('decompose')
@twist_options
@click.argument('expr')
@exit_codes
def decompose_command(mode, m, b, output, expr):
    """Split the normal form of EXPR into Lie and complement parts."""
    _decomposition('decompose', mode, m, b, output, expr)


@cli.command('witness')
@twist_options
@click.argument('expr')
@exit_codes
def witness_command(mode, m, b, output, expr):
    """Write the Lie polynomial EXPR through brackets of A and B."""
    params = build_params(mode, m, b)
    system = ReductionSystem(params)
    poly = parse(expr, params)
    lie_part = decompose(poly, system).lie_part
    result = witness(poly, system)
    reparsed = system.normal_form(parse(str(result), params))
    if expand(result, system) != lie_part or reparsed != lie_part:
        raise click.ClickException(
            f'witness {result} does not expand to {lie_part}')
    _emit('witness', params, expr, {'witness': str(result)}, str(result),
          output)


@cli.command()
@twist_options
@click.option('--max-k', type=click.IntRange(min=1), default=20,
              show_default=True, help='Largest epsilon index.')
@exit_codes
def ambiguities(mode, m, b, output, max_k):
    """List the ambiguities of the reduction system and resolve them."""
    params = build_params(mode, m, b)
    system = ReductionSystem(params)
    found = enumerate_ambiguities(system, max_k)
    frame = ambiguities_frame(found)
    resolvable = []
    common = []
    for ambiguity in found:
        try:
            common.append(str(resolve(ambiguity, system).common))
            resolvable.append(True)
        except NotResolvable:
            common.append(None)
            resolvable.append(False)
    frame = frame.assign(resolvable=resolvable, common_nf=common)
    text = tabulate(frame, headers='keys', tablefmt='simple',
                    showindex=False)
    _emit('ambiguities', params, {'max_k': max_k},
          {'ambiguities': frame.to_dict(orient='records')}, text, output)
    return EXIT_OK if all(resolvable) else EXIT_NEGATIVE


@cli.command()
@twist_options
@click.option('--max-k', type=click.IntRange(min=1), default=None,
              help='Largest epsilon index of the ambiguity checks.')
@click.option('--max-deg', type=click.IntRange(1, 10), default=None,
              help='Filtration degree bound of the Lie checks.')
@click.option('--max-exp', type=click.IntRange(min=1), default=None,
              help='Exponent bound of the reordering checks.')
@click.option('--trials', type=click.IntRange(min=1), default=None,
              help='Random polynomials of the confluence check.')
@click.option('--seed', type=click.IntRange(min=0), default=None,
              help='Seed of the randomized checks.')
@click.option('--save', type=click.Path(file_okay=False), default=None,
              help='Directory to save the report to.')
@click.option('--verbose', count=True,
              help='Show progress bars and run logs, twice for per-check '
                   'records.')
@exit_codes
def check(mode, m, b, output, max_k, max_deg, max_exp, trials, seed, save,
          verbose):
    """Verify every identity family and report the outcome."""
    set_verbosity(verbose)
    params = build_params(mode, m, b)
    config = default_check_params()
    config.update({'max_k': max_k, 'max_deg': max_deg, 'max_exp': max_exp,
                   'trials': trials, 'seed': seed})
    report = run_all(config, ReductionSystem(params), verbose=verbose)
    if save:
        report.save(save)
    _emit('check', params, config.to_dict(),
          {'passed': report.passed, 'results': report.to_records()},
          str(report), output)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


@cli.command()
@twist_options
@click.option('--max-deg', type=click.IntRange(1, 10), default=6,
              show_default=True, help='Filtration degree bound.')
@click.option('--verbose', count=True,
              help='Show progress bars and run logs, twice for per-check '
                   'records.')
@exit_codes
def closure(mode, m, b, output, max_deg, verbose):
    """Close {A, B} under brackets and compare with the Lie basis."""
    set_verbosity(verbose)
    params = build_params(mode, m, b)
    report = lie_closure(ReductionSystem(params), max_deg, verbose=verbose)
    text = tabulate(report.to_frame(), headers='keys', tablefmt='simple',
                    showindex=False)
    text += f'\n\ndimension {report.dimension}, spans equal: ' \
        f'{"yes" if report.spans_equal else "no"}'
    _emit('closure', params, {'max_deg': max_deg}, report.to_record(), text,
          output)
    return EXIT_OK if report.spans_equal else EXIT_NEGATIVE


def main():
    """Entry point of the `twistlie` console script."""
    cli(prog_name='twistlie')


if __name__ == '__main__':
    main()
