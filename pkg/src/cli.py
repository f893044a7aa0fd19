from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
from argparse import ArgumentParser, Namespace
from sys import stderr

from NegCat.Core.Pipelines.RunConfig import RunConfig
from NegCat.Core.Pipelines.SnakeSuite import SnakeSuite
from NegCat.Core.Pipelines.FunctorLaws import FunctorLaws
from NegCat.Core.Manager.ReportManager import ReportManager
from NegCat.Core.Ambient.AmbientConfig import parse_indecomposable, format_indecomposable
from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Orbit.OrbitCategory import OrbitCategory
from NegCat.Core.Orbit.ARQuiver import ar_quiver, rows
from NegCat.Core.Abelian.SimpleMindedSystem import SimpleMindedSystem
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Snake.StarEquality import StarEquality
from NegCat.Core.Intermediate.IntermediateCategory import IntermediateCategory
from NegCat.Core.Monoid.LocalizationCheck import LocalizationCheck
from NegCat.Core.Utils.Visualizer.SvgRenderer import render_polygon, render_ar, subcategory_colors
from NegCat.Core.Utils.errors import VerificationError

SUCCESS, USAGE_ERROR, VERIFICATION_FAILURE = 0, 1, 2


class UsageParser(ArgumentParser):
    """
    ArgumentParser exiting with the usage error code of the commands.
    """

    def error(self, message: str):
        self.print_help(stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


class Session:

    def __init__(self, config: RunConfig, report: ReportManager):
        """
        Objects shared by the commands of a run, built on demand from the run configuration.
        """

        self.config: RunConfig = config
        self.report: ReportManager = report
        self.ambient: BaseAmbient = config.ambient_config.create_ambient()
        self.__structure: Optional[AbelianStructure] = None

    def label(self, x: Any) -> str:
        return format_indecomposable(self.ambient, x)

    def labels(self, xs) -> List[str]:
        return [self.label(x) for x in xs]

    def parse(self, tokens: Sequence[str], key: str) -> List[Any]:
        if len(tokens) == 0:
            raise ValueError(f"The command requires --{key}.")
        return [parse_indecomposable(self.ambient, token) for token in tokens]

    def simples(self) -> List[Any]:
        return self.parse(self.config.sms, 'sms')

    def fclass(self) -> List[Any]:
        return self.parse(self.config.fclass, 'fclass')

    def structure(self) -> AbelianStructure:
        if self.__structure is None:
            self.report.start('closure')
            subcategory = AbelianSubcategory.extension_closure(self.ambient, self.simples(),
                                                               verbose=self.config.verbose)
            self.report.stop('closure')
            self.__structure = AbelianStructure(subcategory)
        return self.__structure


# ############################################################################################################ #
#                                                   Commands                                                   #
# ############################################################################################################ #

def command_indecs(session: Session, args: Namespace) -> None:
    indecs = session.ambient.indecomposables()
    session.report.add_result('count', len(indecs))
    if args.count_only:
        print(len(indecs))
    else:
        session.report.add_result('indecomposables', session.labels(indecs))
    if isinstance(session.ambient, OrbitCategory):
        session.report.add_result('polygon', session.ambient.N)


def command_arquiver(session: Session, args: Namespace) -> None:
    graph = ar_quiver(session.ambient)
    session.report.add_result('vertices', graph.number_of_nodes())
    session.report.add_result('arrows', graph.number_of_edges())
    session.report.add_result('rows', [session.labels(row) for row in rows(graph)])
    session.report.add_assertion('at_most_two_successors', all(d <= 2 for _, d in graph.out_degree()))
    session.report.add_file('arquiver.svg', render_ar(graph, label=session.label))


def command_sms_check(session: Session, args: Namespace) -> None:
    simples = session.simples()
    sms = SimpleMindedSystem(session.ambient, simples)
    combinatorial = sms.combinatorial_check()
    session.report.add_result('combinatorial', combinatorial)
    algebraic = sms.algebraic_check() if all(combinatorial.values()) else {}
    session.report.add_result('algebraic', algebraic)
    if all(combinatorial.values()):
        session.report.add_result('proper_abelian', sms.generates_proper_abelian())
    session.report.add_assertion('sms', len(set(simples)) == len(simples) and all(combinatorial.values())
                                 and all(algebraic.values()))


def command_closure(session: Session, args: Namespace) -> None:
    subcategory = session.structure().subcategory
    session.report.add_result('indecomposables', session.labels(subcategory.indecomposables))
    session.report.add_result('class_vectors', {session.label(x): list(v)
                                                for x, v in subcategory.class_vectors.items()})
    session.report.add_assertion('extension_closed',
                                 subcategory.table.is_extension_closed(subcategory.indecomposables))


def command_e_check(session: Session, args: Namespace) -> None:
    subcategory = session.structure().subcategory
    conditions = {f"E_{m}": subcategory.satisfies_En(m) for m in range(1, args.max + 1)}
    session.report.add_result('conditions', conditions)
    session.report.add_assertion(f"E_{args.max}", conditions[f"E_{args.max}"])


def command_star_report(session: Session, args: Namespace) -> None:
    star = StarEquality(session.structure(), session.config.verbose).report(strict=False)
    conditions = {key: value for key, value in star.items() if key not in ('agree', 'mixed')}
    session.report.add_result('conditions', conditions)
    session.report.add_result('mixed', star['mixed'])
    session.report.add_assertion('conditions_agree', star['agree'])


def command_fg(session: Session, args: Namespace) -> None:
    structure = session.structure()
    ambient, functors = session.ambient, structure.functors
    decompositions = {}
    for z in IntermediateCategory(structure).sigma_a_star_a():
        d = functors.decompose(ambient.object_of(z))
        decompositions[session.label(z)] = {'F': session.labels(d.f_part), 'G': session.labels(d.g_part)}
    session.report.add_result('decompositions', decompositions)
    members = structure.subcategory.indecomposables
    fixed = all(functors.F(ambient.object_of(a)).is_zero() and
                functors.G(ambient.object_of(a)) == ambient.object_of(a) for a in members)
    shifted = all(functors.F(ambient.shift(ambient.object_of(a))) == ambient.object_of(a) and
                  functors.G(ambient.shift(ambient.object_of(a))).is_zero() for a in members)
    session.report.add_assertion('identity_on_A', fixed)
    session.report.add_assertion('desuspension_on_sigma_A', shifted)


def command_snake_suite(session: Session, args: Namespace) -> None:
    results = SnakeSuite(session.config).execute()
    session.report.add_result('snake', results)
    session.report.add_assertion('enough_triangles', results['triangles'] == results['requested'])
    session.report.add_assertion('exact', len(results['failures']) == 0)


def command_functor_laws(session: Session, args: Namespace) -> None:
    results = FunctorLaws(session.config).execute()
    session.report.add_result('laws', results)
    session.report.add_assertion('lawful', len(results['failures']) == 0)
    session.report.add_assertion('round_trips', len(results['round_trips']) == 0)


def command_torf_enum(session: Session, args: Namespace) -> None:
    intermediate = IntermediateCategory(session.structure(), session.config.verbose)
    classes = intermediate.torsion_free.enumerate()
    session.report.add_result('count', len(classes))
    session.report.add_result('torsion_free', [session.labels(f) for f in classes])


def command_intermediate(session: Session, args: Namespace) -> None:
    intermediate = IntermediateCategory(session.structure(), session.config.verbose)
    f = session.fclass()
    c = intermediate.induced_intermediate(f)
    session.report.add_result('torsion_free', session.labels(sorted(f)))
    session.report.add_result('intermediate', session.labels(c))
    session.report.add_result('count', len(c))
    session.report.add_assertion('is_intermediate', intermediate.is_intermediate(c))
    session.report.add_assertion('round_trip', intermediate.F_of(c) == tuple(sorted(set(f))))


def command_bijection(session: Session, args: Namespace) -> None:
    check = IntermediateCategory(session.structure(), session.config.verbose).bijection_check()
    session.report.add_result('bijection', check)
    if check['applicable']:
        session.report.add_assertion('bijection', check['bijection'])


def command_monoid(session: Session, args: Namespace) -> None:
    config = session.config
    check = LocalizationCheck(session.structure(), session.fclass(), config.monoid_bound, config.conflation_bound,
                              config.max_states, config.verbose).run()
    session.report.add_result('localization', check)
    session.report.add_assertion('isomorphism', check['isomorphism'])


def command_draw(session: Session, args: Namespace) -> None:
    ambient = session.ambient
    colors = {}
    if session.config.sms:
        structure = session.structure()
        members = structure.subcategory.indecomposables
        shifted, extra = [], []
        if session.config.fclass:
            f = session.fclass()
            c = IntermediateCategory(structure).induced_intermediate(f)
            shifted = [ambient.shift_data(x, 1)[0] for x in f]
            extra = [x for x in c if x not in structure.subcategory.members and x not in shifted]
        colors = subcategory_colors(members, shifted, extra)
    session.report.add_file('arquiver.svg', render_ar(ar_quiver(ambient), colors, session.label))
    if isinstance(ambient, OrbitCategory):
        simples = session.simples() if session.config.sms else []
        session.report.add_file('polygon.svg', render_polygon(ambient.N, highlights=simples))
    session.report.add_result('files', sorted(session.report.files))


COMMANDS: Dict[str, Tuple[Callable[[Session, Namespace], None], str]] = {
    'indecs': (command_indecs, "list the indecomposables of the ambient"),
    'arquiver': (command_arquiver, "compute the AR quiver of the ambient"),
    'sms-check': (command_sms_check, "check a simple-minded system"),
    'closure': (command_closure, "extension closure of a simple-minded system"),
    'e-check': (command_e_check, "check the E_n conditions"),
    'star-report': (command_star_report, "compare Sigma A * A with A * Sigma A"),
    'fg': (command_fg, "F and G parts of the indecomposables of Sigma A * A"),
    'snake-suite': (command_snake_suite, "snake sequences of random triangles"),
    'functor-laws': (command_functor_laws, "functor laws of F and G on random composable pairs"),
    'torf-enum': (command_torf_enum, "enumerate the torsion-free classes of A"),
    'intermediate': (command_intermediate, "intermediate category induced by a torsion-free class"),
    'bijection': (command_bijection, "torsion-free classes against intermediate categories"),
    'monoid': (command_monoid, "localization of Grothendieck monoids"),
    'draw': (command_draw, "SVG drawings of the polygon and of the AR quiver")}


# ############################################################################################################ #
#                                                    Parser                                                    #
# ############################################################################################################ #

def make_parser() -> UsageParser:

    common = UsageParser(add_help=False)
    common.add_argument('--config', type=str, help='TOML file of run parameters.', metavar='')
    common.add_argument('--ambient', choices=['orbit', 'derived'], help='ambient category.')
    common.add_argument('--w', type=int, help='Calabi-Yau parameter.', metavar='')
    common.add_argument('--n', type=int, help='number of vertices of A_n.', metavar='')
    common.add_argument('--prime', type=int, help='characteristic of the field.', metavar='')
    common.add_argument('--window-radius', dest='window_radius', type=int, metavar='')
    common.add_argument('--max-window-radius', dest='max_window_radius', type=int, metavar='')
    common.add_argument('--shift-window', dest='shift_window', type=int, nargs=2, metavar='')
    common.add_argument('--seed', type=int, metavar='')
    common.add_argument('--samples', type=int, help='number of random triangles.', metavar='')
    common.add_argument('--pairs', type=int, help='number of random composable pairs.', metavar='')
    common.add_argument('--conflation-bound', dest='conflation_bound', type=int, metavar='')
    common.add_argument('--max-states', dest='max_states', type=int, metavar='')
    common.add_argument('--sms', nargs='+', help='simple-minded system, e.g. 0,3 4,11 or P3 S2.', metavar='')
    common.add_argument('--fclass', nargs='+', help='torsion-free class.', metavar='')
    common.add_argument('--output-dir', dest='output_dir', type=str, metavar='')
    common.add_argument('--threads', type=int, metavar='')
    common.add_argument('--timings', action='store_const', const=True, help='embed timings in the report.')
    common.add_argument('--verbose', action='store_const', const=True, help='print the progress.')

    parser = UsageParser(prog='negcat', description="Proper abelian subcategories of D^b(kA_n) and of the "
                                                    "negative cluster categories.")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name, (_, help_text) in COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == 'indecs':
            sub.add_argument('--count-only', dest='count_only', action='store_true', help='only count.')
        elif name == 'e-check':
            sub.add_argument('--max', type=int, default=2, help='largest n of the E_n conditions.', metavar='')
        elif name == 'monoid':
            sub.add_argument('--bound', dest='monoid_bound', type=int, help='bound of the equality tests.',
                             metavar='')
    return parser


def run_config_of(args: Namespace) -> RunConfig:
    overrides = {key: getattr(args, key, None) for key in ('ambient', 'w', 'n', 'prime', 'window_radius',
                                                           'max_window_radius', 'shift_window', 'seed', 'samples',
                                                           'pairs', 'monoid_bound', 'conflation_bound', 'max_states',
                                                           'sms', 'fclass', 'output_dir', 'threads', 'timings',
                                                           'verbose')}
    return RunConfig.from_toml(args.config, **overrides)


def execute_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run a command, write its report and return the exit code: 0 when every assertion holds, 1 on usage errors and
    2 on verification failures.
    """

    args = make_parser().parse_args(argv)
    try:
        config = run_config_of(args)
        if args.command == 'e-check' and args.max < 1:
            raise ValueError(f"Wrong '--max' value: positive int required, get {args.max}")
        report = ReportManager(args.command, config.inputs(), config.output_dir, config.timings, config.verbose)
        session = Session(config, report)
    except (TypeError, ValueError) as error:
        print(f"negcat {args.command}: {error}", file=stderr)
        return USAGE_ERROR

    function = COMMANDS[args.command][0]
    report.start(args.command)
    try:
        function(session, args)
    except VerificationError as error:
        report.add_result('error', str(error))
        report.add_result('dump', error.dump)
        report.add_assertion('verified', False)
        report.write()
        print(f"negcat {args.command}: {error}", file=stderr)
        return VERIFICATION_FAILURE
    except (TypeError, ValueError) as error:
        print(f"negcat {args.command}: {error}", file=stderr)
        return USAGE_ERROR
    report.stop(args.command)
    directory = report.write()
    print(f"[negcat] {args.command}: {'passed' if report.passed else 'failed'}, report in {directory}")
    return SUCCESS if report.passed else VERIFICATION_FAILURE


if __name__ == '__main__':
    raise SystemExit(execute_cli())
