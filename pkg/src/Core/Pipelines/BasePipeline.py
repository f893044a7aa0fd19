from typing import Any, List, Optional
from concurrent.futures import ThreadPoolExecutor
from numpy.random import default_rng, Generator

from NegCat.Core.Pipelines.RunConfig import RunConfig
from NegCat.Core.Ambient.AmbientConfig import parse_indecomposable
from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Ambient.Morphism import Morphism
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Intermediate.IntermediateCategory import IntermediateCategory


class BasePipeline:

    def __init__(self,
                 run_config: RunConfig,
                 pipeline: str = ''):
        """
        Pipelines implement the seeded verification loops over random samples of an ambient category: they build the
        ambient and the abelian subcategory from the run configuration, draw objects and morphisms of
        Sigma A * A with a reproducible generator, and count the samples passing the checks.

        :param run_config: Configuration object with the parameters of the run.
        :param pipeline: Name of the Pipeline.
        """

        self.name: str = self.__class__.__name__

        # Check the configuration
        if not isinstance(run_config, RunConfig):
            raise TypeError(f"[{self.name}] The run configuration must be a RunConfig object.")
        if len(run_config.sms) == 0:
            raise ValueError(f"[{self.name}] The pipeline requires a simple-minded system, get an empty 'sms'.")

        # Configuration variables
        self.run_config: RunConfig = run_config
        self.type: str = pipeline
        self.verbose: bool = run_config.verbose
        self.rng: Generator = default_rng(run_config.seed)

        # Ambient and abelian structure
        self.ambient: BaseAmbient = run_config.ambient_config.create_ambient()
        simples = [parse_indecomposable(self.ambient, token) for token in run_config.sms]
        self.subcategory: AbelianSubcategory = AbelianSubcategory.extension_closure(self.ambient, simples)
        self.structure: AbelianStructure = AbelianStructure(self.subcategory)
        self.functors = self.structure.functors
        self.__pool: Optional[List[Any]] = None

    def execute(self):
        """
        Launch the Pipeline.
        """

        raise NotImplementedError

    # ######################################################################################################## #
    #                                               Random samples                                             #
    # ######################################################################################################## #

    def sigma_a_star_a(self) -> List[Any]:
        """Indecomposables of Sigma A * A, the pool the random objects are drawn from."""
        if self.__pool is None:
            self.__pool = IntermediateCategory(self.structure).sigma_a_star_a()
        return self.__pool

    def random_object(self, max_summands: int = 2) -> AmbientObject:
        pool = self.sigma_a_star_a()
        size = int(self.rng.integers(1, max_summands + 1))
        return self.ambient.make_object(pool[int(i)] for i in self.rng.integers(0, len(pool), size=size))

    def random_morphism(self, source: AmbientObject, target: AmbientObject) -> Morphism:
        dim = self.ambient.hom_dim(source, target)
        coordinates = self.rng.integers(0, self.ambient.prime, size=dim)
        return self.ambient.from_coordinates(source, target, coordinates)

    def map_samples(self, function, samples: List[Any]) -> List[Any]:
        """
        Apply a check to every sample, on 'threads' workers. Results keep the order of the samples.
        """

        if self.run_config.threads == 1 or len(samples) < 2:
            return [function(sample) for sample in samples]
        with ThreadPoolExecutor(max_workers=self.run_config.threads) as pool:
            return list(pool.map(function, samples))

    def __str__(self):

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    Pipeline type: {self.type}\n"
        description += f"    Ambient: {self.ambient.name} (w={self.ambient.w}, n={self.ambient.n})\n"
        description += f"    Simples: {', '.join(str(s) for s in self.subcategory.simples)}\n"
        description += f"    Seed: {self.run_config.seed}\n"
        return description
