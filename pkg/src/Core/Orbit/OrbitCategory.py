from typing import Any, Dict, List, Tuple, Iterable
from collections import namedtuple
from math import ceil
from numpy import ndarray, zeros, int64

from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Ambient.Morphism import Morphism, Triangle
from NegCat.Core.Derived.DerivedCategory import DerivedCategory
from NegCat.Core.Derived.DerivedObject import DerivedObject, ShiftedInterval
from NegCat.Core.Derived.ZACoordinates import to_mesh, from_mesh
from NegCat.Core.Orbit.Diagonal import Diagonal, OrbitObject, is_admissible
from NegCat.Core.Utils.configs import make_config


class OrbitCategory(BaseAmbient):

    def __init__(self, config: namedtuple):
        """
        OrbitCategory is the negative cluster category C_{-w}(A_n) = D^b(kA_n) / F with F = Sigma^{w+1} tau, modelled
        on the admissible diagonals of an N-gon, N = (w+1)(n+1) - 2. Every diagonal has a canonical lift to D^b, the
        one whose mesh column lies in [0, N). Hom spaces are orbit sums of derived Hom spaces and cones are computed
        upstairs on a finite window of F-copies.

        :param config: Namedtuple with fields n, w, prime, window_radius, max_window_radius and verbose.
        """

        BaseAmbient.__init__(self, config)
        if self.prime != 2:
            raise ValueError(f"[{self.name}] The orbit ambient transports canonical basis maps along F and requires "
                             f"the prime 2, get {self.prime}.")
        if self.w < 1:
            raise ValueError(f"[{self.name}] The negative cluster category requires w >= 1, get {self.w}.")
        self.N: int = (self.w + 1) * (self.n + 1) - 2
        self.window_radius: int = config.window_radius
        self.max_window_radius: int = config.max_window_radius
        self.upstairs_config = make_config(configuration_object=self,
                                           configuration_name='upstairs_config',
                                           n=self.n, w=self.w, prime=self.prime, shift_window=(0, 0),
                                           verbose=False)
        self.upstairs: DerivedCategory = DerivedCategory(self.upstairs_config)

        # Canonical lifts: one mesh vertex per diagonal in the fundamental domain 0 <= col < N
        self.__lifts: Dict[Diagonal, ShiftedInterval] = {}
        for col in range(self.N):
            for row in range(1, self.n + 1):
                if (col - row + 1) % 2 == 0:
                    self.__lifts[self.diagonal_at(col, row)] = from_mesh(col, row, self.n)
        self.__labels: Dict[Tuple[Diagonal, Diagonal], Tuple[int, ...]] = {}

    # ######################################################################################################## #
    #                                            Diagonal model                                                #
    # ######################################################################################################## #

    def diagonal_at(self, col: int, row: int) -> Diagonal:
        """
        Diagonal of the mesh vertex (col, row): a = (w+1)(col-row+1)/2 and b = a + (w+1)row - 1 modulo N.
        """

        a = (self.w + 1) * (col - row + 1) // 2
        return Diagonal.of(a, a + (self.w + 1) * row - 1, self.N)

    def make_object(self, summands: Iterable[Any] = ()) -> OrbitObject:
        return OrbitObject(summands)

    def indecomposables(self) -> List[Diagonal]:
        return sorted(self.__lifts)

    def all_indecomposables(self) -> List[Diagonal]:
        return self.indecomposables()

    def check_diagonal(self, d: Any) -> Diagonal:
        d = Diagonal(min(d), max(d))
        if not is_admissible(d, self.w, self.N) or d not in self.__lifts:
            raise ValueError(f"[{self.name}] {d} is not an admissible diagonal of the {self.N}-gon for w={self.w}.")
        return d

    def lift(self, d: Diagonal) -> ShiftedInterval:
        return self.__lifts[self.check_diagonal(d)]

    def lift_object(self, x: OrbitObject) -> DerivedObject:
        return DerivedObject(self.lift(d) for d in x.summands)

    def project(self, x: ShiftedInterval) -> Diagonal:
        col, row = to_mesh(x, self.n)
        return self.diagonal_at(col, row)

    def project_object(self, x: DerivedObject) -> OrbitObject:
        return OrbitObject(self.project(s) for s in x.summands)

    def twist_offset(self, x: ShiftedInterval) -> int:
        """The integer i with x = F^i lift(project(x))."""
        return to_mesh(x, self.n)[0] // self.N

    def is_canonical(self, x: ShiftedInterval) -> bool:
        return self.twist_offset(x) == 0

    def shift_indecomposable(self, d: Diagonal, m: int) -> Tuple[Diagonal, int]:
        shifted = self.lift(d).shifted(m)
        return self.project(shifted), -self.twist_offset(shifted)

    def shift_rotation(self, d: Diagonal, m: int = 1) -> Diagonal:
        """Sigma^m as the rotation of the polygon by m vertices."""
        return d.rotated(m, self.N)

    def serre(self, d: Diagonal) -> Diagonal:
        """Serre functor Sigma^-w."""
        return self.shift_indecomposable(d, -self.w)[0]

    def tau(self, d: Diagonal) -> Diagonal:
        return self.project(self.upstairs.tau(self.lift(d)))

    # ######################################################################################################## #
    #                                                   Hom                                                    #
    # ######################################################################################################## #

    def basis_labels(self, x: Diagonal, y: Diagonal) -> Tuple[int, ...]:
        """
        Twists k with Hom_D(lift x, F^k lift y) != 0. The window starts at ceil((shift span + n) / (w+1)) + 1 and grows
        until two empty layers are seen on both sides.
        """

        if (x, y) in self.__labels:
            return self.__labels[(x, y)]
        lx, ly = self.lift(x), self.lift(y)
        radius = ceil((abs(lx.shift - ly.shift) + self.n) / (self.w + 1)) + 1
        while True:
            if radius > 4 * (self.n + self.max_window_radius):
                raise ValueError(f"[{self.name}] Hom({x}, {y}) does not vanish away from a finite twist window.")
            border = [k for k in (-radius - 2, -radius - 1, radius + 1, radius + 2)
                      if self.upstairs.hom_dim_D(lx, self.upstairs.twist(ly, k))]
            if not border:
                break
            radius += 2
        labels = tuple(k for k in range(-radius, radius + 1) if self.upstairs.hom_dim_D(lx, self.upstairs.twist(ly, k)))
        self.__labels[(x, y)] = labels
        return labels

    def hom_dim_C(self, x: OrbitObject, y: OrbitObject) -> int:
        return self.hom_dim(x, y)

    def _composition_constant(self, x: Diagonal, k: int, y: Diagonal, l: int, z: Diagonal) -> int:
        up = self.upstairs
        return up.composition_constant(self.lift(x), 0, up.twist(self.lift(y), k), 0, up.twist(self.lift(z), k + l))

    def _shift_constant(self, x: Diagonal, y: Diagonal, k: int, m: int) -> int:
        # Over the prime 2 the unique nonzero map of a one-dimensional Hom space is sent to the unique one
        return 1

    # ######################################################################################################## #
    #                                                  Cones                                                   #
    # ######################################################################################################## #

    def cone(self, f: Morphism) -> Triangle:
        """
        Complete f: x -> y to a triangle of the orbit category. The F-periodized morphism is truncated to the copies
        F^i, |i| <= R, its cone is computed in D^b and the summands of the central period are kept. The computation is
        repeated with R + 1 and both results must agree.

        :param f: Morphism of the orbit category.
        :return: Triangle (x, y, z, f, g, h).
        """

        degenerate = self._degenerate_cone(f)
        if degenerate is not None:
            return degenerate
        support = max((abs(k) for k in f.components), default=0)
        radius = max(self.window_radius, support + 2)
        if radius + 1 > self.max_window_radius:
            raise ValueError(f"[{self.name}] The morphism needs a window radius {radius + 1} above the maximum "
                             f"{self.max_window_radius}.")
        previous = self.__windowed_cone(f, radius)
        while True:
            radius += 1
            current = self.__windowed_cone(f, radius)
            if current.z == previous.z and current.g == previous.g and current.h == previous.h:
                return current
            if radius + 1 > self.max_window_radius:
                raise ValueError(f"[{self.name}] The windowed cone of {f} is not stable up to the radius "
                                 f"{self.max_window_radius}.")
            if self.verbose:
                print(f"[{self.name}] Windowed cone unstable at radius {radius}, enlarging the window.")
            previous = current

    def __windowed_cone(self, f: Morphism, radius: int) -> Triangle:

        up = self.upstairs
        x, y = f.source, f.target
        copies = range(-radius, radius + 1)
        x_items = [(i, a, up.twist(self.lift(d), i)) for i in copies for a, d in enumerate(x.summands)]
        y_items = [(i, b, up.twist(self.lift(d), i)) for i in copies for b, d in enumerate(y.summands)]
        x_hat = DerivedObject(item[2] for item in x_items)
        y_hat = DerivedObject(item[2] for item in y_items)
        x_pos = x_hat.positions(item[2] for item in x_items)
        y_pos = y_hat.positions(item[2] for item in y_items)

        # Copy i of x_a maps to copy i' of y_b through the component f_{i'-i}
        m = zeros((len(y_hat), len(x_hat)), dtype=int64)
        for (i, a, _), pa in zip(x_items, x_pos):
            for (i2, b, _), pb in zip(y_items, y_pos):
                if i2 - i in f.components:
                    m[pb, pa] = f.components[i2 - i][b, a]
        t = up.cone(Morphism(x_hat, y_hat, {0: m}, self.prime))

        central = [l for l, s in enumerate(t.z.summands) if self.is_canonical(s)]
        z = OrbitObject(self.project(t.z.summands[l]) for l in central)
        z_pos = z.positions(self.project(t.z.summands[l]) for l in central)

        g_components: Dict[int, ndarray] = {}
        h_components: Dict[int, ndarray] = {}
        g_hat, h_hat = t.g.component(0), t.h.component(0)
        sx = self.shift(x)
        sx_data = [self.shift_data(d, 1) for d in x.summands]
        sx_pos = sx.positions(d for d, _ in sx_data)
        for l, zl in zip(central, z_pos):
            # g: the map from copy i of y_j to the central z_l is the twist -i component
            for (i, j, _), pj in zip(y_items, y_pos):
                if g_hat[l, pj]:
                    g_components.setdefault(-i, zeros((len(z), len(y)), dtype=int64))[zl, j] += g_hat[l, pj]
            # h: Sigma of copy i of x_a is F^{i - s_a} lift(Sigma x_a)
            for (i, a, _), pa in zip(x_items, x_pos):
                if h_hat[pa, l]:
                    k = i - sx_data[a][1]
                    h_components.setdefault(k, zeros((len(sx), len(z)), dtype=int64))[sx_pos[a], zl] += h_hat[pa, l]
        g = Morphism(y, z, g_components, self.prime)
        h = Morphism(z, sx, h_components, self.prime)
        return Triangle(x, y, z, f, g, h)

    def __str__(self) -> str:

        description = BaseAmbient.__str__(self)
        description += f"    Polygon: {self.N}-gon\n"
        description += f"    Indecomposables: {len(self.__lifts)}\n"
        description += f"    Window radius: {self.window_radius} (max {self.max_window_radius})\n"
        return description
