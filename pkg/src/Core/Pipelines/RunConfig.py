from typing import Any, Dict, Optional
from os import environ
from os.path import isfile
import tomllib

from NegCat.Core.Ambient.AmbientConfig import AmbientConfig
from NegCat.Core.Utils.configs import make_config, check_type, check_positive, namedtuple

# Parameters of a run, with their default values
DEFAULTS: Dict[str, Any] = {'ambient': 'orbit',
                            'w': 3,
                            'n': 4,
                            'prime': 2,
                            'window_radius': 2,
                            'max_window_radius': 8,
                            'shift_window': [-1, 2],
                            'seed': 0,
                            'samples': 200,
                            'pairs': 100,
                            'monoid_bound': 4,
                            'conflation_bound': 1,
                            'max_states': 200000,
                            'sms': [],
                            'fclass': [],
                            'output_dir': 'negcat_output',
                            'threads': 1,
                            'timings': False,
                            'verbose': False}

POSITIVE = ('samples', 'pairs', 'conflation_bound', 'max_states', 'threads')


class RunConfig:

    def __init__(self, **kwargs):
        """
        RunConfig gathers the parameters of a command-line run: the ambient category, the seed and sizes of the
        randomized suites, the bounds of the monoid check, the simple-minded system, the torsion-free class and the
        output directory. The thread count is capped by the NEGCAT_THREADS environment variable.

        :param kwargs: Any key of DEFAULTS, missing keys take their default value.
        """

        self.name: str = self.__class__.__name__
        unknown = sorted(set(kwargs) - set(DEFAULTS))
        if unknown:
            raise ValueError(f"[{self.name}] Unknown parameters: {', '.join(unknown)}")
        values = dict(DEFAULTS)
        values.update({key: value for key, value in kwargs.items() if value is not None})

        # Check types
        for key in ('seed', 'samples', 'pairs', 'monoid_bound', 'conflation_bound', 'max_states', 'threads'):
            check_type(self.name, key, values[key], int)
        for key in ('sms', 'fclass'):
            check_type(self.name, key, values[key], (list, tuple))
            for token in values[key]:
                check_type(self.name, key, token, str)
        check_type(self.name, 'output_dir', values['output_dir'], str)
        for key in ('timings', 'verbose'):
            check_type(self.name, key, values[key], bool)
        # Check values
        check_positive(self.name, ((key, values[key]) for key in POSITIVE))
        check_positive(self.name, [('monoid_bound', values['monoid_bound'])], strict=False)
        if 'NEGCAT_THREADS' in environ:
            cap = environ['NEGCAT_THREADS']
            if not cap.isdigit() or int(cap) < 1:
                raise ValueError(f"[{self.name}] Wrong NEGCAT_THREADS value: positive int required, get {cap}")
            values['threads'] = min(values['threads'], int(cap))

        self.ambient_config: AmbientConfig = AmbientConfig(ambient=values['ambient'],
                                                           w=values['w'],
                                                           n=values['n'],
                                                           prime=values['prime'],
                                                           window_radius=values['window_radius'],
                                                           max_window_radius=values['max_window_radius'],
                                                           shift_window=tuple(values['shift_window']),
                                                           verbose=values['verbose'])
        self.run_config: namedtuple = make_config(configuration_object=self,
                                                  configuration_name='run_config',
                                                  **{key: values[key] for key in DEFAULTS})

    @classmethod
    def from_toml(cls, path: Optional[str] = None, **overrides) -> 'RunConfig':
        """
        Load a run configuration from a TOML file of flat key-value pairs, then apply the command-line overrides.

        :param path: Path to the TOML file, None for the defaults only.
        :param overrides: Values given on the command line, None values are ignored.
        :return: RunConfig object.
        """

        values: Dict[str, Any] = {}
        if path is not None:
            if not isfile(path):
                raise ValueError(f"[{cls.__name__}] Configuration file not found: {path}")
            with open(path, 'rb') as file:
                values = tomllib.load(file)
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def __getattr__(self, item: str) -> Any:
        if item != 'run_config' and 'run_config' in self.__dict__ and item in DEFAULTS:
            return getattr(self.run_config, item)
        raise AttributeError(f"{self.__class__.__name__} has no attribute '{item}'")

    def inputs(self) -> Dict[str, Any]:
        """Parameters recorded in the reports, without the output settings."""
        skipped = ('output_dir', 'threads', 'timings', 'verbose')
        return {key: list(value) if isinstance(value, tuple) else value
                for key, value in sorted(self.run_config._asdict().items()) if key not in skipped}

    def __str__(self):

        description = "\n"
        description += f"{self.name}\n"
        for key, value in self.run_config._asdict().items():
            description += f"    {key}: {value}\n"
        return description