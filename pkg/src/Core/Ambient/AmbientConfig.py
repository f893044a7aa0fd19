from typing import Any, Tuple, Union
from re import fullmatch

from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Derived.DerivedCategory import DerivedCategory
from NegCat.Core.Orbit.OrbitCategory import OrbitCategory
from NegCat.Core.Orbit.Diagonal import Diagonal
from NegCat.Core.TypeA.Interval import Interval, projective, injective, simple
from NegCat.Core.Linalg.FiniteField import check_prime
from NegCat.Core.Utils.configs import make_config, check_type, namedtuple


class AmbientConfig:

    def __init__(self,
                 ambient: str = 'orbit',
                 w: int = 3,
                 n: int = 4,
                 prime: int = 2,
                 window_radius: int = 2,
                 max_window_radius: int = 8,
                 shift_window: Tuple[int, int] = (-1, 2),
                 verbose: bool = False):
        """
        AmbientConfig is a configuration class to parameterize and create the ambient triangulated category: the
        negative cluster category C_{-w}(A_n) ('orbit') or the bounded derived category D^b(kA_n) ('derived').

        :param ambient: Either 'orbit' or 'derived'.
        :param w: Calabi-Yau parameter of the orbit category, also the twist F = Sigma^{w+1} tau of the derived one.
        :param n: Number of vertices of the A_n quiver.
        :param prime: Characteristic of the ground field.
        :param window_radius: Initial number of F-copies on each side for orbit cones.
        :param max_window_radius: Largest window radius tried before the cone is declared unstable.
        :param shift_window: Range of shifts of the indecomposables enumerated in D^b(kA_n).
        :param verbose: If True, the ambient prints its progress.
        """

        self.name = self.__class__.__name__

        # Check ambient value
        if ambient not in ('orbit', 'derived'):
            raise ValueError(f"[{self.name}] Wrong 'ambient' value: 'orbit' or 'derived' required, get {ambient}")
        # Check integer parameters
        for key, value in (('w', w), ('n', n), ('prime', prime), ('window_radius', window_radius),
                           ('max_window_radius', max_window_radius)):
            check_type(self.name, key, value, int)
        if n < 1:
            raise ValueError(f"[{self.name}] The quiver needs at least one vertex, get n={n}")
        if w < 1 and ambient == 'orbit':
            raise ValueError(f"[{self.name}] The negative cluster category requires w >= 1, get w={w}")
        if w < 0:
            raise ValueError(f"[{self.name}] Wrong 'w' value: non-negative required, get {w}")
        check_prime(prime)
        if ambient == 'orbit' and prime != 2:
            raise ValueError(f"[{self.name}] The orbit ambient requires prime=2, get {prime}")
        if window_radius < 1 or max_window_radius <= window_radius:
            raise ValueError(f"[{self.name}] Window radii must satisfy 1 <= window_radius < max_window_radius, get "
                             f"{window_radius} and {max_window_radius}")
        # Check shift window
        if len(shift_window) != 2 or shift_window[0] > shift_window[1]:
            raise ValueError(f"[{self.name}] Wrong 'shift_window' value: (low, high) required, get {shift_window}")
        check_type(self.name, 'verbose', verbose, bool)

        self.ambient: str = ambient
        self.ambient_class = OrbitCategory if ambient == 'orbit' else DerivedCategory
        if ambient == 'orbit':
            self.ambient_config: namedtuple = make_config(configuration_object=self,
                                                          configuration_name='ambient_config',
                                                          n=n, w=w, prime=prime,
                                                          window_radius=window_radius,
                                                          max_window_radius=max_window_radius,
                                                          verbose=verbose)
        else:
            self.ambient_config: namedtuple = make_config(configuration_object=self,
                                                          configuration_name='ambient_config',
                                                          n=n, w=w, prime=prime,
                                                          shift_window=tuple(shift_window),
                                                          verbose=verbose)

    def create_ambient(self) -> Union[OrbitCategory, DerivedCategory]:
        """
        Create an instance of the ambient category with given parameters.

        :return: OrbitCategory or DerivedCategory object.
        """

        ambient = self.ambient_class(config=self.ambient_config)
        if not isinstance(ambient, BaseAmbient):
            raise TypeError(f"[{self.name}] The ambient class {self.ambient_class} must be a BaseAmbient.")
        return ambient

    def __str__(self):

        description = "\n"
        description += f"{self.name}\n"
        description += f"    Ambient: {self.ambient}\n"
        for key, value in self.ambient_config._asdict().items():
            description += f"    {key}: {value}\n"
        return description


def parse_indecomposable(ambient: BaseAmbient, token: str) -> Any:
    """
    Read an indecomposable from its command-line form: "a,b" for a diagonal of the orbit ambient, "P3", "I2", "S2",
    "2,3" for a module of D^b(kA_n), optionally followed by "@k" for its k-th shift.

    :param ambient: Ambient category the token refers to.
    :param token: Text form of the indecomposable.
    :return: Diagonal or ShiftedInterval.
    """

    token = token.strip().replace('(', '').replace(')', '').replace('[', '').replace(']', '')
    if isinstance(ambient, OrbitCategory):
        match = fullmatch(r'(-?\d+),(-?\d+)', token)
        if match is None:
            raise ValueError(f"[AmbientConfig] Wrong diagonal '{token}': 'a,b' required")
        return ambient.check_diagonal(Diagonal(int(match.group(1)), int(match.group(2))))
    match = fullmatch(r'(?:([PIS])(\d+)|(\d+),(\d+))(?:@(-?\d+))?', token)
    if match is None:
        raise ValueError(f"[AmbientConfig] Wrong object '{token}': 'P3', 'S2@1' or '2,3@-1' required")
    letter, i, lo, hi, shift = match.groups()
    n = ambient.n
    if letter is None:
        interval = Interval(int(lo), int(hi))
    else:
        interval = {'P': projective, 'I': injective, 'S': simple}[letter](int(i), n)
    return ambient.module(interval, 0 if shift is None else int(shift))


def format_indecomposable(ambient: BaseAmbient, x: Any) -> str:
    """Inverse of parse_indecomposable, used in the reports."""
    if isinstance(ambient, OrbitCategory):
        return f"{x.a},{x.b}"
    return x.label(ambient.n)
