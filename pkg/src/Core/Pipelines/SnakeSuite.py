from typing import Any, Dict, List, Optional
from vedo import ProgressBar

from NegCat.Core.Pipelines.BasePipeline import BasePipeline
from NegCat.Core.Pipelines.RunConfig import RunConfig
from NegCat.Core.Ambient.Morphism import Triangle
from NegCat.Core.Snake.SnakeLemma import snake
from NegCat.Core.Utils.errors import VerificationError

# Maximal number of drawn morphisms per requested triangle
ATTEMPTS_PER_SAMPLE = 50


class SnakeSuite(BasePipeline):

    def __init__(self, run_config: RunConfig):
        """
        SnakeSuite draws seeded random triangles with their three vertices in Sigma A * A and checks the exactness of
        their snake sequences. A triangle is the cone of a random morphism between random objects of Sigma A * A,
        kept when the cone lies in Sigma A * A.

        :param run_config: Configuration object with the parameters of the run.
        """

        BasePipeline.__init__(self, run_config=run_config, pipeline='snake_suite')

        # Sampling variables
        self.samples: int = run_config.samples
        self.max_attempts: int = ATTEMPTS_PER_SAMPLE * self.samples
        self.attempts: int = 0
        self.triangles: List[Triangle] = []
        self.results: Dict[str, Any] = {}
        self.progress_bar: Optional[ProgressBar] = None

    def execute(self) -> Dict[str, Any]:
        """
        Launch the snake suite.

        :return: Summary of the suite.
        """

        self.suite_begin()
        while self.sample_condition():
            self.sample_produce()
            self.sample_end()
        return self.suite_end()

    def suite_begin(self) -> None:
        if self.verbose:
            self.progress_bar = ProgressBar(start=0, stop=self.samples, c='orange', title="Snake suite")

    def sample_condition(self) -> bool:
        return len(self.triangles) < self.samples and self.attempts < self.max_attempts

    def sample_produce(self) -> None:
        """
        Draw morphisms until one of them has its cone in Sigma A * A.
        """

        while self.attempts < self.max_attempts:
            self.attempts += 1
            x, y = self.random_object(), self.random_object()
            t = self.ambient.cone(self.random_morphism(x, y))
            if self.functors.contains(t.z):
                self.triangles.append(t)
                return

    def sample_end(self) -> None:
        if self.progress_bar is not None:
            self.progress_bar.print()

    def check(self, t: Triangle) -> Optional[str]:
        """
        Snake sequence and long exact Hom sequence of a triangle.

        :return: None when both hold, a description of the failure otherwise.
        """

        try:
            snake(self.structure, t)
        except VerificationError as error:
            return str(error)
        if not self.ambient.hom_long_exact_check(t, self.sigma_a_star_a()):
            return f"The triangle {t.x} -> {t.y} -> {t.z} has no long exact Hom sequence."
        return None

    def suite_end(self) -> Dict[str, Any]:

        failures = [f for f in self.map_samples(self.check, self.triangles) if f is not None]
        self.results = {'requested': self.samples,
                        'triangles': len(self.triangles),
                        'attempts': self.attempts,
                        'exact': len(self.triangles) - len(failures),
                        'failures': failures}
        if self.verbose:
            print(f"[{self.name}] {self.results['exact']} exact snake sequences over {len(self.triangles)} triangles "
                  f"({self.attempts} draws).")
        return self.results

    def __str__(self):

        description = BasePipeline.__str__(self)
        description += f"    Number of triangles: {self.samples}\n"
        description += f"    Maximal number of draws: {self.max_attempts}\n"
        return description
