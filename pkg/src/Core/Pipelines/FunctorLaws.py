from typing import Any, Dict, List, Optional, Tuple
from vedo import ProgressBar

from NegCat.Core.Pipelines.BasePipeline import BasePipeline
from NegCat.Core.Pipelines.RunConfig import RunConfig
from NegCat.Core.Ambient.Morphism import Morphism
from NegCat.Core.Intermediate.IntermediateCategory import IntermediateCategory
from NegCat.Core.Utils.errors import VerificationError

ComposablePair = Tuple[Morphism, Morphism]


class FunctorLaws(BasePipeline):

    def __init__(self, run_config: RunConfig, round_trips: bool = True):
        """
        FunctorLaws checks on seeded composable pairs x -f-> y -g-> z of Sigma A * A that F and G preserve identities,
        sums and composites, and that F(Sigma F * A) = F for every torsion-free class F.

        :param run_config: Configuration object with the parameters of the run.
        :param round_trips: If True, also check the round trip on every torsion-free class.
        """

        BasePipeline.__init__(self, run_config=run_config, pipeline='functor_laws')
        self.pairs: int = run_config.pairs
        self.round_trips: bool = round_trips
        self.samples: List[ComposablePair] = []
        self.progress_bar: Optional[ProgressBar] = None

    def execute(self) -> Dict[str, Any]:

        if self.verbose:
            self.progress_bar = ProgressBar(start=0, stop=self.pairs, c='orange', title="Functor laws")
        while len(self.samples) < self.pairs:
            x, y, z = self.random_object(), self.random_object(), self.random_object()
            self.samples.append((self.random_morphism(x, y), self.random_morphism(y, z)))
            if self.progress_bar is not None:
                self.progress_bar.print()
        failures = [f for f in self.map_samples(self.check, self.samples) if f is not None]
        results = {'pairs': len(self.samples),
                   'lawful': len(self.samples) - len(failures),
                   'failures': failures}
        if self.round_trips:
            results['round_trips'] = self.round_trip_failures()
        if self.verbose:
            print(f"[{self.name}] {results['lawful']} lawful pairs over {len(self.samples)}.")
        return results

    def check(self, pair: ComposablePair) -> Optional[str]:
        """
        Functor laws on a composable pair.

        :return: None when every law holds, the first broken law otherwise.
        """

        f, g = pair
        ambient, functors = self.ambient, self.functors
        gf = ambient.compose(g, f)
        try:
            for functor, on_objects, on_maps in (('F', functors.F, functors.F_mor),
                                                 ('G', functors.G, functors.G_mor)):
                if on_maps(ambient.identity(f.source)) != ambient.identity(on_objects(f.source)):
                    return f"{functor} does not preserve the identity of {f.source}."
                if on_maps(gf) != ambient.compose(on_maps(g), on_maps(f)):
                    return f"{functor} does not preserve the composite {f.source} -> {f.target} -> {g.target}."
                if on_maps(f + f) != on_maps(f) + on_maps(f):
                    return f"{functor} is not additive on {f.source} -> {f.target}."
        except VerificationError as error:
            return str(error)
        return None

    def round_trip_failures(self) -> List[List[str]]:
        """Torsion-free classes F with F(Sigma F * A) != F."""
        intermediate = IntermediateCategory(self.structure, self.verbose)
        failures = []
        for f in intermediate.torsion_free.enumerate():
            if intermediate.F_of(intermediate.induced_intermediate(f)) != tuple(sorted(f)):
                failures.append([str(s) for s in f])
        return failures
