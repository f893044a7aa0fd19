from .tests_TorsionFree import TestTorsionFree
from .tests_IntermediateCategory import TestIntermediateCategory
