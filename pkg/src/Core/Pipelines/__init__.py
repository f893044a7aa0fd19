from NegCat.Core.Pipelines.RunConfig import RunConfig
from NegCat.Core.Pipelines.BasePipeline import BasePipeline
from NegCat.Core.Pipelines.FunctorLaws import FunctorLaws
from NegCat.Core.Pipelines.SnakeSuite import SnakeSuite

__all__ = ['RunConfig', 'BasePipeline', 'FunctorLaws', 'SnakeSuite']
