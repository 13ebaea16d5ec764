from __future__ import annotations

import json
import logging
import sys
import time
from argparse import ArgumentParser, Namespace
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Sequence

from .augment import AugmentedDiagram, certify_hyperbolic, insert_half_twists
from .cage import CageGraph, CageOptions, as_cage, derived_augmented, validate_cage, volume_bounds
from .catalog import random_cage, random_tangle
from .certificate import RunReport
from .diagram import export_pd
from .embroidery import embroider_annulus, embroider_disk
from .exceptions import AltCertError
from .io import (
    dump_diagram, dump_map, dump_tangle, input_digest, load_augmentations, load_diagram, load_map, load_tangle
)
from .types import Verdict
from .utils import get_thread_count

__all__ = [
    'main', 'run'
]

logger = logging.getLogger('altcert')

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_colored = False


def _setup_logging(verbose: bool) -> None:
    global _colored

    logging.basicConfig(format='{asctime}: {levelname}: {message}', style='{')
    logging.Formatter.default_msec_format = '%s.%03d'

    if sys.stdout.isatty() and not _colored:
        for level, string in [
            (logging.DEBUG, "\033[0;32m%s\033[0m"), (logging.INFO, "\033[1;33m%s\033[0m"),
            (logging.WARNING, "\033[1;35m%s\033[1;0m"), (logging.ERROR, "\033[1;41m%s\033[1;0m")
        ]:
            logging.addLevelName(level, string % logging.getLevelName(level))

        _colored = True

    logger.setLevel(logging.DEBUG if verbose else logging.INFO)


def _certified(command: str, digest: str, augmented: AugmentedDiagram, **extra: Any) -> RunReport:
    certificate = certify_hyperbolic(augmented)

    return RunReport(
        command=command, input_digest=digest, verdict=certificate.verdict,
        checks=certificate.checks, notes=certificate.notes + list(augmented.flags), **extra
    )


def _write_diagram(path: str | None, augmented: AugmentedDiagram) -> dict[str, Any]:
    text = dump_diagram(augmented)

    # the written file must load back
    load_diagram(text)

    if path:
        Path(path).write_text(text)

    return {
        'crossings': augmented.base.n_crossings, 'augmentations': len(augmented.augs), 'file': path
    }


def _check(path: str, args: Namespace) -> RunReport:
    text = Path(path).read_text()
    inputs = [text]
    augmented = load_diagram(text)

    if args.augmentations:
        inputs.append(extra := Path(args.augmentations).read_text())
        augmented = augmented.with_augs(load_augmentations(extra))

    return _certified('check', input_digest(*inputs), augmented)


def _rubber(path: str, args: Namespace) -> RunReport:
    text = Path(path).read_text()
    digest = input_digest(text)
    smap = load_map(text)

    if not (cage_check := validate_cage(smap)).passed:
        return RunReport(command='rubber', input_digest=digest, verdict=Verdict.FAIL, checks=[cage_check])

    cage = CageGraph(smap)
    augmented = derived_augmented(cage, CageOptions(mirror=args.mirror))

    report = _certified(
        'rubber', digest, augmented,
        bounds=volume_bounds(cage) if args.bounds else None,
        outputs=_write_diagram(args.export, augmented)
    )
    report.checks.insert(0, cage_check)

    return report


def _embroider(path: str, args: Namespace) -> RunReport:
    text = Path(path).read_text()
    tangle = load_tangle(text)

    if args.annulus:
        augmented = embroider_annulus(tangle)
    else:
        augmented = AugmentedDiagram(embroider_disk(tangle))

    outputs = _write_diagram(args.output, augmented)
    outputs['new_crossings'] = augmented.base.n_crossings - len(tangle.over)

    return _certified('embroider', input_digest(text), augmented, outputs=outputs)


def _twist(path: str, args: Namespace) -> RunReport:
    text = Path(path).read_text()
    inputs = [text]
    augmented = load_diagram(text)

    if args.augmentations:
        inputs.append(extra := Path(args.augmentations).read_text())
        augmented = augmented.with_augs(load_augmentations(extra))

    result = insert_half_twists(augmented, args.aug_index, args.k)

    return _certified('twist', input_digest(*inputs), result, outputs=_write_diagram(args.output, result))


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _bounds(args: Namespace) -> int:
    bounds = volume_bounds(as_cage(load_map(Path(args.cage).read_text())))

    _emit(json.dumps(bounds.model_dump(mode='json'), indent=2) + '\n', None)

    logger.info(
        'bounds (%s): %s%.4f, %.4f]', bounds.case, '(' if bounds.lower_strict else '[', bounds.lower, bounds.upper
    )

    return EXIT_PASS


def _export_pd(args: Namespace) -> int:
    _emit(export_pd(load_diagram(Path(args.diagram).read_text()).base), args.output)

    return EXIT_PASS


def _corpus(args: Namespace) -> int:
    if args.kind == 'tangle':
        text = dump_tangle(random_tangle(args.seed, args.endpoints))
    else:
        text = dump_map(random_cage(args.seed))

    _emit(text, args.output)

    logger.info('wrote a random %s for seed %d', args.kind, args.seed)

    return EXIT_PASS


def _run_reports(command: Callable[[str, Namespace], RunReport], paths: Sequence[str], args: Namespace) -> int:
    start = time.perf_counter()

    with ThreadPoolExecutor(max_workers=min(get_thread_count(), len(paths))) as executor:
        reports = list(executor.map(lambda path: command(path, args), paths))

    elapsed = time.perf_counter() - start

    for path, report in zip(paths, reports):
        report.timing = elapsed / len(reports)

        failed = [check.name for check in report.checks if check.verdict is Verdict.FAIL]
        logger.info('%s %s: %s%s', report.command, path, report.verdict, f', failed {failed}' if failed else '')

        for note in report.notes:
            logger.info('  %s', note)

    payload = [report.payload() for report in reports]

    _emit(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + '\n', None)

    logger.debug('%d input(s) in %.3fs', len(paths), elapsed)

    return EXIT_FAIL if any(report.verdict is Verdict.FAIL for report in reports) else EXIT_PASS


def _parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog='altcert', description='Certify the hypotheses of hyperbolicity theorems for link diagrams on surfaces.'
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='Log every pipeline stage.')
    parser.add_argument('--seed', type=int, default=0, help='Seed of the random corpus generators.')

    commands = parser.add_subparsers(dest='command', required=True)

    check = commands.add_parser('check', help='Certify diagram files, with their augmentations.')
    check.add_argument('diagrams', nargs='+', help='Diagram files.')
    check.add_argument('--augmentations', help='File with the augmentations to use instead of the embedded ones.')

    rubber = commands.add_parser('rubber', help='Build and certify the augmented link of cage graphs.')
    rubber.add_argument('cages', nargs='+', help='Cage map files.')
    rubber.add_argument('--bounds', action='store_true', help='Add the volume bounds to the report.')
    rubber.add_argument('--export', help='Write the augmented diagram to this file (single cage only).')
    rubber.add_argument('--mirror', action='store_true', help='Use the mirror alternating assignment.')

    embroider = commands.add_parser('embroider', help='Close a tangle by embroidery.')
    embroider.add_argument('tangle', help='Tangle file.')
    embroider.add_argument('--annulus', action='store_true', help='Embroider both boundaries and augment the core.')
    embroider.add_argument('--output', help='Write the resulting diagram to this file.')

    twist = commands.add_parser('twist', help='Replace an augmentation by half twists.')
    twist.add_argument('diagram', help='Diagram file with augmentations.')
    twist.add_argument('aug_index', type=int, help='Index of the augmentation to twist.')
    twist.add_argument('k', type=int, help='Number of half twists, negative for left-handed ones.')
    twist.add_argument('--augmentations', help='File with the augmentations to use instead of the embedded ones.')
    twist.add_argument('--output', help='Write the resulting diagram to this file.')

    bounds = commands.add_parser('bounds', help='Print the volume bounds of a cage.')
    bounds.add_argument('cage', help='Cage map file.')

    export = commands.add_parser('export-pd', help='Print the planar diagram code of a diagram.')
    export.add_argument('diagram', help='Diagram file.')
    export.add_argument('--output', help='Write the code to this file.')

    corpus = commands.add_parser('corpus', help='Emit a seeded random tangle or cage.')
    corpus.add_argument('kind', choices=['tangle', 'cage'])
    corpus.add_argument('--endpoints', type=int, help='Exact endpoint count of the tangle.')
    corpus.add_argument('--output', help='Write the file here instead of the standard output.')

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)

    _setup_logging(args.verbose)

    if args.command == 'rubber' and args.export and len(args.cages) > 1:
        parser.error('--export takes a single cage')

    try:
        match args.command:
            case 'check':
                return _run_reports(_check, args.diagrams, args)
            case 'rubber':
                return _run_reports(_rubber, args.cages, args)
            case 'embroider':
                return _run_reports(_embroider, [args.tangle], args)
            case 'twist':
                return _run_reports(_twist, [args.diagram], args)
            case 'bounds':
                return _bounds(args)
            case 'export-pd':
                return _export_pd(args)
            case _:
                return _corpus(args)
    except AltCertError as e:
        logger.error('%s: %s', type(e).__name__, e.message)
    except OSError as e:
        logger.error('%s', e)

    return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
