from .tests_FiniteField import TestFiniteField
